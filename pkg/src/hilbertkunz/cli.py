"""``hk``: command-line driver for Hilbert-Kunz computations.

A problem spec is a TOML or JSON file.  Semigroup specs::

    generators = [[1, 0], [1, 1], [1, 2]]
    ideal = [[1, 0], [1, 2]]      # optional, defaults to the generators
    primes = [2, 3]               # or prime = 3
    e_max = 3
    tasks = ["count", "bg"]

Hypersurface specs set ``kind = "hypersurface"`` and give ``p``, ``vars``
and ``f = [{exp = [..], c = ..}, ..]``.  Reports are JSON with rationals as
``"num/den"`` strings and large integers as decimal strings.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bg import BGError, bg_decomposition, volume_via_cells
from .catalog import example_specs
from .oracles import HypersurfacePresentation, InfeasibleSize, OracleError, hk_hypersurface, semigroup_bfs_hk
from .polycell import PolycellError, build_polycell, count_lattice_points, hilbert_samuel_multiplicity
from .quasipoly import (
    QuasiPolynomialError,
    emit_latex,
    ehrhart_quasipolynomial,
    format_rational,
    hk_coefficients,
    restrict_to_prime_powers,
)
from .render import emit_svg
from .semigroup import SemigroupError, monomial_ideal, new_semigroup

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

TASKS = ("count", "interpolate", "multiplicity", "bg", "oracle", "hs-multiplicity")
HYPERSURFACE_TASKS = ("oracle",)
JSON_SAFE_INT = 2**53

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE = 0, 2, 3


class SpecError(ValueError):
    """Malformed problem spec; ``field`` and ``line`` locate the problem."""

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        super().__init__(message)
        self.field = field
        self.line = line

    def __str__(self):
        where = []
        if self.field:
            where.append(f"field '{self.field}'")
        if self.line:
            where.append(f"line {self.line}")
        prefix = " ".join(where)
        return f"{prefix}: {self.args[0]}" if prefix else self.args[0]


@dataclass(frozen=True)
class ProblemSpec:
    kind: str
    tasks: tuple
    e_max: int
    primes: tuple = ()
    generators: tuple = ()
    ideal: tuple | None = None
    hypersurface: dict | None = None
    name: str = ""
    dimension: int | None = None
    source: str = field(default="", compare=False)

    def canonical(self) -> dict:
        """Deterministic echo of the spec, used for hashing and reports."""
        out = {"name": self.name, "kind": self.kind, "e_max": self.e_max, "tasks": list(self.tasks)}
        if self.kind == "semigroup":
            out["dimension"] = self.dimension
            out["generators"] = [list(g) for g in self.generators]
            out["ideal"] = None if self.ideal is None else [list(g) for g in self.ideal]
            out["primes"] = list(self.primes)
        else:
            out["hypersurface"] = self.hypersurface
        return out

    def content_hash(self) -> str:
        blob = json.dumps({"spec": self.canonical(), "version": __version__}, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _line_of(text: str, key: str) -> int | None:
    pat = re.compile(rf'(^|[\s{{,"]){re.escape(key)}"?\s*[=:]')
    for i, line in enumerate(text.splitlines(), 1):
        if pat.search(line):
            return i
    return None


def _int_vectors(value, name, text, allow_none=False):
    if value is None and allow_none:
        return None
    if not isinstance(value, list) or not value:
        raise SpecError("expected a nonempty list of integer vectors", name, _line_of(text, name))
    out = []
    for v in value:
        if not isinstance(v, list) or not v or not all(isinstance(a, int) and not isinstance(a, bool) for a in v):
            raise SpecError(f"entry {v!r} is not an integer vector", name, _line_of(text, name))
        out.append(tuple(v))
    if len({len(v) for v in out}) != 1:
        raise SpecError("vectors have different lengths", name, _line_of(text, name))
    return tuple(out)


def _positive_int(value, name, text):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise SpecError(f"expected a positive integer, got {value!r}", name, _line_of(text, name))
    return value


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


def load_text(text: str, fmt: str) -> dict:
    try:
        if fmt == "json":
            data = json.loads(text)
        else:
            data = tomllib.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, line=exc.lineno) from exc
    except tomllib.TOMLDecodeError as exc:
        m = re.search(r"line (\d+)", str(exc))
        raise SpecError(str(exc), line=int(m.group(1)) if m else None) from exc
    if not isinstance(data, dict):
        raise SpecError("top level must be a table/object")
    return data


def parse_spec(data: dict, text: str = "") -> ProblemSpec:
    """Validate a decoded spec and fill in defaults."""
    known = {"name", "kind", "dimension", "generators", "ideal", "primes", "prime",
             "e_max", "tasks", "p", "vars", "f"}
    for key in data:
        if key not in known:
            raise SpecError("unknown field", key, _line_of(text, key))
    kind = data.get("kind", "semigroup")
    if kind not in ("semigroup", "hypersurface"):
        raise SpecError(f"unknown kind {kind!r}", "kind", _line_of(text, "kind"))
    e_max = _positive_int(data.get("e_max", 3), "e_max", text)
    default_tasks = ["count"] if kind == "semigroup" else ["oracle"]
    tasks = data.get("tasks", default_tasks)
    allowed = TASKS if kind == "semigroup" else HYPERSURFACE_TASKS
    if not isinstance(tasks, list) or not tasks:
        raise SpecError("expected a nonempty list of task names", "tasks", _line_of(text, "tasks"))
    for t in tasks:
        if t not in allowed:
            raise SpecError(f"task {t!r} not available for kind {kind!r}", "tasks", _line_of(text, "tasks"))
    tasks = tuple(t for t in TASKS if t in tasks)
    name = str(data.get("name", ""))
    if kind == "hypersurface":
        hyper = {k: data.get(k) for k in ("p", "vars", "f")}
        p = _positive_int(hyper["p"], "p", text)
        if not _is_prime(p):
            raise SpecError(f"{p} is not prime", "p", _line_of(text, "p"))
        s = _positive_int(hyper["vars"], "vars", text)
        terms = hyper["f"]
        if not isinstance(terms, list) or not terms:
            raise SpecError("expected a nonempty list of terms", "f", _line_of(text, "f"))
        for t in terms:
            if not isinstance(t, dict) or set(t) != {"exp", "c"} or not isinstance(t["c"], int):
                raise SpecError(f"term {t!r} must have integer 'c' and vector 'exp'", "f", _line_of(text, "f"))
            exp = t["exp"]
            if not isinstance(exp, list) or len(exp) != s or not all(isinstance(a, int) and a >= 0 for a in exp):
                raise SpecError(f"exponent {exp!r} must be {s} nonnegative integers", "f", _line_of(text, "f"))
        hyper = {"p": p, "vars": s, "f": [{"exp": list(t["exp"]), "c": t["c"]} for t in terms]}
        return ProblemSpec(kind=kind, tasks=tasks, e_max=e_max, hypersurface=hyper, name=name, source=text)
    gens = _int_vectors(data.get("generators"), "generators", text)
    ideal = _int_vectors(data.get("ideal"), "ideal", text, allow_none=True)
    d = len(gens[0])
    dim = data.get("dimension", d)
    if dim != d:
        raise SpecError(f"dimension {dim!r} does not match generator length {d}", "dimension", _line_of(text, "dimension"))
    if ideal is not None and len(ideal[0]) != d:
        raise SpecError("ideal exponents have the wrong length", "ideal", _line_of(text, "ideal"))
    if "primes" in data and "prime" in data:
        raise SpecError("give either 'prime' or 'primes'", "primes", _line_of(text, "primes"))
    primes = data.get("primes", [data["prime"]] if "prime" in data else [2, 3])
    key = "primes" if "primes" in data else "prime"
    if not isinstance(primes, list) or not primes or not all(isinstance(p, int) and _is_prime(p) for p in primes):
        raise SpecError(f"expected prime integers, got {primes!r}", key, _line_of(text, key))
    return ProblemSpec(
        kind=kind,
        tasks=tasks,
        e_max=e_max,
        primes=tuple(sorted(set(primes))),
        generators=gens,
        ideal=ideal,
        name=name,
        dimension=d,
        source=text,
    )


def load_spec(path: str | Path) -> ProblemSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"cannot read spec: {exc.strerror}") from exc
    fmt = "json" if path.suffix.lower() == ".json" else "toml"
    return parse_spec(load_text(text, fmt), text)


def encode(value):
    """JSON-safe form: rationals as ``"num/den"``, big integers as strings."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > JSON_SAFE_INT else value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


class Problem:
    """A validated spec turned into library objects."""

    def __init__(self, spec: ProblemSpec):
        self.spec = spec
        self.M = self.I = self.P = self.f = None
        if spec.kind == "semigroup":
            try:
                self.M = new_semigroup(spec.generators, spec.dimension)
            except SemigroupError as exc:
                raise SpecError(str(exc), "generators", _line_of(spec.source, "generators")) from exc
            try:
                self.I = monomial_ideal(self.M, spec.ideal)
                self.P = build_polycell(self.M, self.I)
            except (SemigroupError, PolycellError) as exc:
                raise SpecError(str(exc), "ideal", _line_of(spec.source, "ideal")) from exc
        else:
            try:
                self.f = HypersurfacePresentation.from_json(spec.hypersurface)
            except OracleError as exc:
                raise SpecError(str(exc), "f", _line_of(spec.source, "f")) from exc

    def qs(self, p):
        return [p**e for e in range(1, self.spec.e_max + 1)]

    def task_count(self):
        return {str(p): [count_lattice_points(self.P, q) for q in self.qs(p)] for p in self.spec.primes}

    def task_interpolate(self):
        qp = ehrhart_quasipolynomial(self.P, extra=3)
        forms = {}
        for p in self.spec.primes:
            form = restrict_to_prime_powers(qp, p)
            for e in range(1, self.spec.e_max + 1):
                if form.value(e) != count_lattice_points(self.P, p**e):
                    raise QuasiPolynomialError(f"closed form disagrees with direct count at p={p}, e={e}")
            forms[str(p)] = form.to_json()
        return {"quasipolynomial": qp.to_json(), "latex": emit_latex(qp), "forms": forms}

    def task_multiplicity(self):
        qp = ehrhart_quasipolynomial(self.P)
        alpha, beta = hk_coefficients(qp)
        return {"e_HK": alpha, "beta": beta, "volume": volume_via_cells(self.P)}

    def task_bg(self):
        if not self.P.is_maximal:
            raise SpecError("BG decomposition defined for the maximal monomial ideal", "ideal",
                            _line_of(self.spec.source, "ideal"))
        dec = bg_decomposition(self.M)
        checks = {}
        for p in self.spec.primes:
            checks[str(p)] = [
                {"e": e, "bg": dec.hk(q), "direct": count_lattice_points(self.P, q)}
                for e, q in enumerate(self.qs(p), 1)
            ]
        consistent = all(c["bg"] == c["direct"] for rows in checks.values() for c in rows)
        return {"cells": len(dec.cells), "classes": dec.report(), "checks": checks, "consistent": consistent}

    def task_oracle(self):
        if self.f is not None:
            values = []
            for e in range(1, self.spec.e_max + 1):
                values.append(hk_hypersurface(self.f, e))
            return {"p": self.f.p, "values": values}
        rows = {}
        for p in self.spec.primes:
            rows[str(p)] = [
                {"e": e, "bfs": semigroup_bfs_hk(self.M, self.I, p, e), "direct": count_lattice_points(self.P, p**e)}
                for e in range(1, self.spec.e_max + 1)
            ]
        agrees = all(r["bfs"] == r["direct"] for v in rows.values() for r in v)
        return {"checks": rows, "agrees": agrees}

    def task_hs_multiplicity(self):
        return {"e": hilbert_samuel_multiplicity(self.M, self.I)}

    def run(self, tasks) -> tuple[dict, dict]:
        results, timing = {}, {}
        for t in tasks:
            start = time.perf_counter()
            results[t] = getattr(self, "task_" + t.replace("-", "_"))()
            timing[t + "_ms"] = round((time.perf_counter() - start) * 1000)
        return results, timing


def build_report(spec: ProblemSpec, tasks=None) -> dict:
    problem = Problem(spec)
    tasks = spec.tasks if tasks is None else tasks
    results, timing = problem.run(tasks)
    return encode({
        "tool": {"name": "hk", "version": __version__},
        "input": spec.canonical(),
        "input_hash": spec.content_hash(),
        "tasks": list(tasks),
        "results": results,
        "timing": timing,
    })


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def cache_dir() -> Path:
    env = os.environ.get("HK_CACHE_DIR")
    return Path(env) if env else Path.home() / ".cache" / "hilbertkunz"


def cache_key(spec: ProblemSpec, tasks) -> str:
    blob = json.dumps(
        {"spec": spec.canonical(), "tasks": list(tasks), "version": __version__},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def cached_report(spec: ProblemSpec, tasks, use_cache: bool = True) -> str:
    """Report text, read from or stored into the cache."""
    path = cache_dir() / f"{cache_key(spec, tasks)}.json"
    if use_cache and path.is_file():
        return path.read_text()
    text = dump_report(build_report(spec, tasks))
    if use_cache:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(text)
        tmp.replace(path)
    return text


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for k in value:
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        if isinstance(value, list):
            value = ", ".join(map(str, value))
        if isinstance(value, str) and "\n" in value:
            value = value.replace("\n", " ")
        out.append((prefix, value))


def format_table(report: dict) -> str:
    rows = [("name", report["input"].get("name", "")), ("input_hash", report["input_hash"][:12])]
    for task, res in report["results"].items():
        _flatten(task, res, rows)
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _write_svg(spec: ProblemSpec, path: str, dilation: int | None):
    problem = Problem(spec)
    n = dilation or 1
    dec = bg_decomposition(problem.M) if problem.P.is_maximal else None
    Path(path).write_text(emit_svg(problem.P, n, dec))


def _cmd_examples(args) -> int:
    specs = example_specs()
    if args.write:
        out = Path(args.write)
        out.mkdir(parents=True, exist_ok=True)
        for name, spec in specs.items():
            (out / f"{name}.json").write_text(json.dumps(spec, indent=2, sort_keys=True) + "\n")
        print(f"wrote {len(specs)} specs to {out}")
    elif args.name:
        if args.name not in specs:
            print(f"error: unknown example {args.name!r}", file=sys.stderr)
            return EXIT_INVALID
        print(json.dumps(specs[args.name], indent=2, sort_keys=True))
    else:
        for name, spec in specs.items():
            print(f"{name:14s} {spec['kind']}")
    return EXIT_OK


def _cmd_task(args) -> int:
    spec = load_spec(args.spec)
    if args.command == "render":
        if spec.kind != "semigroup":
            raise SpecError("render needs a semigroup spec", "kind", _line_of(spec.source, "kind"))
        if spec.dimension != 2:
            raise SpecError("SVG only for dimension 2", "generators", _line_of(spec.source, "generators"))
        path = args.svg or "polycell.svg"
        _write_svg(spec, path, args.dilation)
        print(f"wrote {path}")
        return EXIT_OK
    if args.command == "run":
        tasks = spec.tasks
    else:
        task = args.command
        allowed = TASKS if spec.kind == "semigroup" else HYPERSURFACE_TASKS
        if task not in allowed:
            raise SpecError(f"task {task!r} not available for kind {spec.kind!r}", "kind",
                            _line_of(spec.source, "kind"))
        tasks = (task,)
    text = cached_report(spec, tasks, use_cache=not args.no_cache)
    if args.out:
        Path(args.out).write_text(text)
    report = json.loads(text)
    sys.stdout.write(format_table(report) if args.format == "table" else text)
    if args.latex:
        latex = report["results"].get("interpolate", {}).get("latex")
        if latex is None:
            latex = Problem(spec).task_interpolate()["latex"] if spec.kind == "semigroup" else None
        if latex is not None:
            print(latex)
    if args.svg:
        if spec.kind != "semigroup" or spec.dimension != 2:
            raise SpecError("SVG only for dimension 2", "generators", _line_of(spec.source, "generators"))
        _write_svg(spec, args.svg, args.dilation)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hk", description="Hilbert-Kunz functions of normal affine semigroup rings.")
    parser.add_argument("--version", action="version", version=f"hk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("count", "interpolate", "multiplicity", "bg", "oracle", "hs-multiplicity", "render", "run"):
        p = sub.add_parser(name, help="run the spec's tasks" if name == "run" else f"{name} task")
        p.add_argument("--spec", required=True, help="problem spec (TOML or JSON)")
        p.add_argument("--out", help="write the JSON report here")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--latex", action="store_true", help="print the quasipolynomial in LaTeX")
        p.add_argument("--svg", metavar="PATH", help="write an SVG of the dilated polycell (d = 2)")
        p.add_argument("--dilation", type=int, default=None, help="dilation factor for the SVG (default 1)")
        p.add_argument("--no-cache", action="store_true", help="neither read nor write the report cache")
        p.set_defaults(handler=_cmd_task)
    ex = sub.add_parser("examples", help="list or write the bundled example specs")
    ex.add_argument("--write", metavar="DIR", help="write every example as DIR/<name>.json")
    ex.add_argument("name", nargs="?", help="print one example spec")
    ex.set_defaults(handler=_cmd_examples)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.handler(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InfeasibleSize as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (SemigroupError, PolycellError, BGError, OracleError, QuasiPolynomialError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
