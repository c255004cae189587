"""Affine semigroups in ``Z^d`` and their monomial ideals."""

from __future__ import annotations

import itertools
import threading
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .cone import SupportHyperplanes, support_hyperplanes
from .lattice import dot, feasible_point, is_full_lattice


class SemigroupError(ValueError):
    """Raised when generators fail validation."""


def is_pointed(generators: Sequence[Sequence[int]]) -> bool:
    """True iff ``cone(generators) ∩ -cone(generators) = {0}``.

    Equivalently the dual cone has interior: some ``y`` is strictly positive
    on every generator.  Decided exactly by Fourier-Motzkin.
    """
    gens = [tuple(g) for g in generators if any(g)]
    if not gens:
        return True
    d = len(gens[0])
    cons = [(tuple(Fraction(-c) for c in g), Fraction(-1), False) for g in gens]
    return feasible_point(cons, d) is not None


@dataclass(frozen=True, eq=False)
class AffineSemigroup:
    """A pointed, full-lattice affine semigroup ``M`` generated in ``Z^d``.

    Build with :func:`new_semigroup`, which validates.  Generators are
    deduplicated and sorted so permuted inputs give identical objects.
    """

    dim: int
    generators: tuple
    _memo: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __eq__(self, other):
        return isinstance(other, AffineSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    @cached_property
    def hyperplanes(self) -> SupportHyperplanes:
        return support_hyperplanes(self)

    @cached_property
    def grading(self) -> tuple:
        return self.hyperplanes.grading()

    def contains(self, x) -> bool:
        return contains(self, x)


def new_semigroup(generators: Iterable[Sequence[int]], d: int | None = None) -> AffineSemigroup:
    gens = [tuple(int(c) for c in g) for g in generators]
    if not gens:
        raise SemigroupError("no generators")
    if d is None:
        d = len(gens[0])
    if any(len(g) != d for g in gens):
        raise SemigroupError(f"generators must all have arity {d}")
    if any(not any(g) for g in gens):
        raise SemigroupError("zero generator")
    gens = sorted(set(gens))
    if not is_pointed(gens):
        raise SemigroupError("not pointed")
    if not is_full_lattice(gens, d):
        raise SemigroupError("lattice not full")
    return AffineSemigroup(d, tuple(gens))


def contains(M: AffineSemigroup, x) -> bool:
    """Membership of ``x`` in ``M`` by memoized descent along generators.

    The grading ``w`` (sum of support normals) is positive on every
    generator, so ``w`` strictly drops along the descent and it terminates.
    """
    x = tuple(int(c) for c in x)
    w = M.grading
    gens = M.generators
    memo = M._memo
    with M._lock:
        if x in memo:
            return memo[x]
        stack = [x]
        while stack:
            y = stack[-1]
            if y in memo:
                stack.pop()
                continue
            wy = dot(w, y)
            if not any(y):
                memo[y] = True
                stack.pop()
                continue
            if wy <= 0:
                memo[y] = False
                stack.pop()
                continue
            children = [tuple(a - b for a, b in zip(y, g)) for g in gens]
            children = [c for c in children if dot(w, c) >= 0]
            if any(memo.get(c) is True for c in children):
                memo[y] = True
                stack.pop()
                continue
            pending = [c for c in children if c not in memo]
            if pending:
                stack.extend(pending)
            else:
                memo[y] = False
                stack.pop()
        return memo[x]


def _in_cone(M: AffineSemigroup, x) -> bool:
    return all(v >= 0 for v in M.hyperplanes.values(x))


def is_normal(M: AffineSemigroup) -> bool:
    """Zonotope test for ``ZM ∩ R_{>=0} M = M``.

    Every cone lattice point is a zonotope point plus an element of ``M``,
    so it suffices to check the cone lattice points in the bounding box of
    the half-open zonotope ``{sum t_i g_i : 0 <= t_i < 1}``.
    """
    d = M.dim
    ranges = []
    for k in range(d):
        lo = sum(min(0, g[k]) for g in M.generators)
        hi = sum(max(0, g[k]) for g in M.generators)
        ranges.append(range(lo, hi + 1))
    for x in itertools.product(*ranges):
        if _in_cone(M, x) and not contains(M, x):
            return False
    return True


def enumerate_below(M: AffineSemigroup, w: Sequence[int], bound: int) -> set:
    """All ``x in M`` with ``w . x <= bound``, by breadth-first closure from 0."""
    w = tuple(w)
    steps = [(g, dot(w, g)) for g in M.generators]
    if any(s <= 0 for _, s in steps):
        raise SemigroupError("grading must be strictly positive on every generator")
    zero = (0,) * M.dim
    seen = {zero}
    if bound < 0:
        return set()
    queue = deque([(zero, 0)])
    while queue:
        x, wx = queue.popleft()
        for g, s in steps:
            if wx + s > bound:
                continue
            y = tuple(a + b for a, b in zip(x, g))
            if y not in seen:
                seen.add(y)
                queue.append((y, wx + s))
    return seen


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of ``k[M]`` given by generator exponents in ``M``."""

    exponents: tuple

    @property
    def is_empty(self) -> bool:
        return not self.exponents


def monomial_ideal(M: AffineSemigroup, exponents: Iterable[Sequence[int]] | None = None) -> MonomialIdeal:
    """Validated ideal; ``None`` gives the maximal ideal generated by ``M``'s generators."""
    if exponents is None:
        return MonomialIdeal(M.generators)
    exps = sorted({tuple(int(c) for c in e) for e in exponents})
    if not exps:
        raise SemigroupError("ideal needs at least one generator")
    for e in exps:
        if len(e) != M.dim or not contains(M, e):
            raise SemigroupError(f"ideal exponent {list(e)} is not in the semigroup")
    return MonomialIdeal(tuple(exps))


def maximal_ideal(M: AffineSemigroup) -> MonomialIdeal:
    return MonomialIdeal(M.generators)
