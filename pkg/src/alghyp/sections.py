"""Section-domination checks for hyperplane classes on projective spaces.

Verifies, by an exact rank computation, that degree-d forms vanishing at
a point are generated by (point-vanishing linear form) x (degree d-1
form).  By homogeneity one point suffices, fixed at (1:0:...:0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb


@dataclass(frozen=True)
class MonomialSpace:
    """Degree-d monomials in n+1 variables, graded-lex ordered."""

    n: int
    d: int
    basis: tuple

    @classmethod
    def build(cls, n: int, d: int) -> "MonomialSpace":
        basis = tuple(
            sorted(_exponent_tuples(n + 1, d), reverse=True)
        )
        assert len(basis) == comb(n + d, d)
        return cls(n=n, d=d, basis=basis)


def _exponent_tuples(nvars: int, total: int):
    if nvars == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _exponent_tuples(nvars - 1, total - head):
            yield (head,) + tail


def _exact_rank(columns, nrows: int) -> int:
    """Rank of the column family over the rationals, by Gaussian elimination."""
    rows = [[Fraction(col[r]) for col in columns] for r in range(nrows)]
    rank = 0
    ncols = len(columns)
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * p for v, p in zip(rows[r], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass(frozen=True)
class SectionDominationResult:
    """Outcome of one projective-space check, with the rank certificate."""

    n: int
    d: int
    ok: bool
    rank: int
    target_dim: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "ok": self.ok,
            "rank": self.rank,
            "target_dim": self.target_dim,
        }


def check_projective_space(n: int, d: int) -> SectionDominationResult:
    """Check that point-vanishing degree-d forms on P^n are spanned by
    products x_j * (degree d-1 monomial), j >= 1.

    Builds the explicit matrix over the rationals (rows indexed by the
    target basis, all degree-d monomials except x_0^d) and compares its
    exact rank with the target dimension.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    space_d = MonomialSpace.build(n, d)
    space_prev = MonomialSpace.build(n, d - 1)
    x0_power = (d,) + (0,) * n
    target = [mono for mono in space_d.basis if mono != x0_power]
    index = {mono: r for r, mono in enumerate(target)}
    columns = []
    for j in range(1, n + 1):
        for mono in space_prev.basis:
            prod = tuple(e + (1 if i == j else 0) for i, e in enumerate(mono))
            assert prod != x0_power
            col = [0] * len(target)
            col[index[prod]] = 1
            columns.append(col)
    rank = _exact_rank(columns, len(target))
    return SectionDominationResult(
        n=n, d=d, ok=rank == len(target), rank=rank, target_dim=len(target)
    )


def check_product(factors) -> bool:
    """Product criterion: every factor (n_i, d_i) must pass on its own."""
    return all(check_projective_space(n, d).ok for n, d in factors)


def grid_report(n_max: int = 4, d_max: int = 6) -> list:
    """Results for the full desk-scale grid 1 <= n <= n_max, 1 <= d <= d_max."""
    return [
        check_projective_space(n, d)
        for n, d in itertools.product(range(1, n_max + 1), range(1, d_max + 1))
    ]
