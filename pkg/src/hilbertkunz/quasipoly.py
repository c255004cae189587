"""Quasipolynomials with periodic rational coefficients.

``table[k]`` holds the coefficients (constant term first) of the
polynomial used for ``n ≡ k (mod period)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import solve


class QuasiPolynomialError(ValueError):
    pass


def _divisors(r: int) -> list[int]:
    return [k for k in range(1, r + 1) if r % k == 0]


def _poly_eval(coeffs: Sequence[Fraction], n) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    return Fraction(str(s))


@dataclass(frozen=True)
class QuasiPolynomial:
    degree: int
    period: int
    table: tuple
    n_min: int = 1

    def __call__(self, n: int) -> Fraction:
        return evaluate(self, n)

    def coefficient(self, power: int, residue: int) -> Fraction:
        return self.table[residue % self.period][power]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "period": self.period,
            "n_min": self.n_min,
            "tables": [[format_rational(c) for c in row] for row in self.table],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuasiPolynomial":
        table = tuple(tuple(parse_rational(c) for c in row) for row in data["tables"])
        return cls(int(data["degree"]), int(data["period"]), table, int(data.get("n_min", 1)))


def evaluate(qp: QuasiPolynomial, n: int) -> Fraction:
    if n < qp.n_min:
        raise QuasiPolynomialError(f"n={n} is below the validity threshold {qp.n_min}")
    return _poly_eval(qp.table[n % qp.period], n)


def _fit(points: Sequence[tuple[int, int]], degree: int) -> tuple:
    a = [[Fraction(n) ** k for k in range(degree + 1)] for n, _ in points]
    b = [Fraction(v) for _, v in points]
    x = solve(a, b)
    if x is None:
        raise QuasiPolynomialError("singular interpolation system")
    return x


def interpolate(samples: Sequence[tuple[int, int]], degree: int, period_bound: int) -> QuasiPolynomial:
    """Fit a quasipolynomial of the given degree whose period divides ``period_bound``.

    Each residue class is fitted exactly from its first ``degree + 1``
    samples and must reproduce all its remaining samples.  The period is then
    shrunk to the smallest divisor of ``period_bound`` whose residue tables
    coincide.
    """
    r0 = period_bound
    by_res: dict[int, list] = {k: [] for k in range(r0)}
    for n, v in sorted(samples):
        by_res[n % r0].append((n, v))
    table = []
    for k in range(r0):
        pts = by_res[k]
        if len(pts) < degree + 2:
            raise QuasiPolynomialError(
                f"residue {k} mod {r0} has {len(pts)} samples, need {degree + 2}"
            )
        coeffs = _fit(pts[: degree + 1], degree)
        for n, v in pts[degree + 1:]:
            if _poly_eval(coeffs, n) != v:
                raise QuasiPolynomialError(f"inconsistent samples at n={n}")
        table.append(coeffs)
    for r in _divisors(r0):
        if all(table[k] == table[k % r] for k in range(r0)):
            return QuasiPolynomial(degree, r, tuple(table[:r]))
    raise AssertionError("unreachable: r0 divides itself")


def hk_coefficients(qp: QuasiPolynomial) -> tuple[Fraction, Fraction]:
    """Leading and second coefficients; both must be constant across residues."""
    lead = {row[qp.degree] for row in qp.table}
    if len(lead) != 1:
        raise QuasiPolynomialError("leading coefficient not constant")
    if qp.degree == 0:
        return lead.pop(), Fraction(0)
    second = {row[qp.degree - 1] for row in qp.table}
    if len(second) != 1:
        raise QuasiPolynomialError("second coefficient not constant")
    return lead.pop(), second.pop()


@dataclass(frozen=True)
class HKFunctionForm:
    """A Hilbert-Kunz function ``e -> hk(p^e)`` read off an Ehrhart quasipolynomial.

    ``cycle[k]`` is ``(p^e mod r, coefficients in q)`` for ``e = e_start + k``;
    exponents before ``e_start`` are listed in ``prefix`` the same way.
    """

    p: int
    quasipolynomial: QuasiPolynomial
    prefix: tuple
    cycle: tuple
    e_start: int
    alpha: Fraction
    beta: Fraction

    @property
    def rho(self) -> int:
        return len(self.cycle)

    def polynomial(self, e: int) -> tuple:
        if e < 1:
            raise ValueError("e must be positive")
        if e < self.e_start:
            return self.prefix[e - 1][1]
        return self.cycle[(e - self.e_start) % self.rho][1]

    def value(self, e: int) -> Fraction:
        return _poly_eval(self.polynomial(e), Fraction(self.p) ** e)

    def to_json(self) -> dict:
        def rows(items):
            return [
                {"residue": res, "coefficients": [format_rational(c) for c in coeffs]}
                for res, coeffs in items
            ]

        return {
            "p": self.p,
            "e_start": self.e_start,
            "e_period": self.rho,
            "prefix": rows(self.prefix),
            "cycle": rows(self.cycle),
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
        }


def restrict_to_prime_powers(qp: QuasiPolynomial, p: int) -> HKFunctionForm:
    """Specialize ``qp`` at ``q = p^e``, ``e >= 1``; the residues ``p^e mod r``
    are eventually periodic in ``e``."""
    r = qp.period
    seen: dict[int, int] = {}
    residues = []
    res = p % r
    e = 1
    while res not in seen:
        seen[res] = e
        residues.append(res)
        res = res * p % r
        e += 1
    e_start = seen[res]
    items = [(k, qp.table[k]) for k in residues]
    alpha, beta = hk_coefficients(qp)
    return HKFunctionForm(
        p=p,
        quasipolynomial=qp,
        prefix=tuple(items[: e_start - 1]),
        cycle=tuple(items[e_start - 1:]),
        e_start=e_start,
        alpha=alpha,
        beta=beta,
    )


def ehrhart_quasipolynomial(P, extra: int = 0) -> QuasiPolynomial:
    """Interpolate ``n -> #(n P ∩ Z^d)`` from counts at ``n = 1 .. r0 (d + 2)``.

    ``r0`` is the lcm of the vertex denominators, which bounds the period.
    """
    from .polycell import count_lattice_points, vertex_denominator_lcm

    r0 = vertex_denominator_lcm(P)
    d = P.dim
    ns = range(1, r0 * (d + 2) + extra + 1)
    samples = [(n, count_lattice_points(P, n)) for n in ns]
    return interpolate(samples, d, r0)


def hk_form(M, p: int, e_max: int, I=None) -> HKFunctionForm:
    """Closed form of the Hilbert-Kunz function of ``k[M]`` in characteristic ``p``.

    Checked against direct lattice counts for ``e <= e_max``.
    """
    from .polycell import build_polycell, count_lattice_points

    P = build_polycell(M, I)
    form = restrict_to_prime_powers(ehrhart_quasipolynomial(P), p)
    for e in range(1, e_max + 1):
        direct = count_lattice_points(P, p**e)
        if form.value(e) != direct:
            raise QuasiPolynomialError(
                f"closed form disagrees with direct count at p={p}, e={e}"
            )
    return form


def _latex_coefficient(c: Fraction, first: bool) -> tuple[str, str]:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    body = str(a.numerator) if a.denominator == 1 else rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
    return sign, body


def latex_polynomial(coeffs: Sequence[Fraction], var: str = "n") -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        sign, body = _latex_coefficient(c, not parts)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and body == "1":
            body = ""
        term = f"{body} {mono}".strip() if body and mono and body.startswith("\\") else body + mono
        if parts:
            parts.append(f" {sign} {term}")
        else:
            parts.append(f"{sign}{term}")
    return "".join(parts) if parts else "0"


def emit_latex(qp: QuasiPolynomial, var: str = "n") -> str:
    """LaTeX for ``qp``: a bare polynomial, or a ``cases`` display with equal
    branches merged."""
    groups: dict[tuple, list[int]] = {}
    for k, row in enumerate(qp.table):
        groups.setdefault(row, []).append(k)
    if len(groups) == 1:
        return latex_polynomial(qp.table[0], var)
    lines = []
    for row, residues in sorted(groups.items(), key=lambda kv: kv[1][0]):
        res = ", ".join(map(str, residues))
        lines.append(rf"{latex_polynomial(row, var)} & {var} \equiv {res} \pmod{{{qp.period}}}")
    return "\\begin{cases}\n" + " \\\\\n".join(lines) + "\n\\end{cases}"
