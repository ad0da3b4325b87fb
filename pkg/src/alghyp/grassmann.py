"""Exact Schubert calculus in the Chow ring of the Grassmannian G(k, n).

Classes are indexed by partitions inside the k x (n-k) box.  Products are
computed by Jacobi-Trudi expansion into special classes followed by
iterated Pieri steps; an independent Schur-polynomial oracle lives in
`alghyp.schur`.  All coefficients are Python ints (arbitrary precision),
all values are immutable after construction, and every operation is a
pure function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class Partition:
    """Weakly decreasing tuple of nonnegative integers, trailing zeros trimmed.

    >>> Partition([3, 1, 0]).parts
    (3, 1)
    >>> Partition([3, 1]).conjugate().parts
    (2, 1, 1)
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """i-th part (0-based), 0 beyond the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))
        )

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(len(other)))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


@dataclass(frozen=True)
class RingContext:
    """The Grassmannian G(k, n) of k-planes in n-space; fixes the box."""

    k: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.n <= self.k:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def width(self) -> int:
        """Box width n - k (maximal part of a valid partition)."""
        return self.n - self.k

    @property
    def dim(self) -> int:
        """Dimension k(n-k) of the Grassmannian; the top grading degree."""
        return self.k * (self.n - self.k)

    @property
    def top(self) -> Partition:
        """The full-box partition indexing the point class."""
        return Partition((self.width,) * self.k)

    def fits(self, lam) -> bool:
        lam = _as_partition(lam)
        return len(lam) <= self.k and (not lam.parts or lam.parts[0] <= self.width)


def _term_key(lam: Partition):
    # canonical ordering: lexicographically descending partition tuples
    return lam.parts


class ChowElement:
    """Formal integer combination of Schubert classes of a fixed G(k, n).

    Stored terms never include zero coefficients or out-of-box partitions;
    instances are immutable.  Use `make_class` to build basis classes with
    the box-truncation convention.
    """

    __slots__ = ("context", "terms")

    def __init__(self, context: RingContext, terms=None):
        clean = {}
        for lam, c in (terms or {}).items():
            lam = _as_partition(lam)
            c = int(c)
            if c == 0:
                continue
            if not context.fits(lam):
                raise ValueError(f"{lam!r} does not fit the {context} box")
            clean[lam] = c
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ChowElement is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam) -> int:
        return self.terms.get(_as_partition(lam), 0)

    def degrees(self) -> set:
        """Set of grading degrees |lambda| occurring in the element."""
        return {lam.size for lam in self.terms}

    def sorted_terms(self):
        """Terms in canonical order (partitions lex descending)."""
        return sorted(self.terms.items(), key=lambda t: _term_key(t[0]), reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, ChowElement)
            and self.context == other.context
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check_context(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return ChowElement(self.context, out)

    def __neg__(self):
        return ChowElement(self.context, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar: int):
        if not isinstance(scalar, int):
            return NotImplemented
        return ChowElement(
            self.context, {lam: scalar * c for lam, c in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return multiply(self, other)

    def _check_context(self, other):
        if not isinstance(other, ChowElement):
            raise TypeError(f"expected ChowElement, got {type(other).__name__}")
        if self.context != other.context:
            raise ValueError(
                f"incompatible ring contexts {self.context} and {other.context}"
            )

    def to_text(self) -> str:
        """Render as e.g. '3*s[2,1] + 5*s[1,1,1]' in canonical term order."""
        if not self.terms:
            return "0"
        pieces = []
        for lam, c in self.sorted_terms():
            body = f"s[{','.join(str(p) for p in lam.parts)}]"
            if not pieces:
                pieces.append(f"{c}*{body}")
            elif c >= 0:
                pieces.append(f"+ {c}*{body}")
            else:
                pieces.append(f"- {-c}*{body}")
        return " ".join(pieces)

    def to_json_dict(self) -> dict:
        """JSON form with coefficients as decimal strings."""
        return {
            "k": self.context.k,
            "n": self.context.n,
            "terms": [
                {"partition": list(lam.parts), "coeff": str(c)}
                for lam, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ChowElement":
        ctx = RingContext(int(data["k"]), int(data["n"]))
        terms = {}
        for t in data["terms"]:
            lam = Partition(t["partition"])
            terms[lam] = terms.get(lam, 0) + int(t["coeff"])
        return cls(ctx, terms)

    def __repr__(self):
        return f"<{self.to_text()} in G({self.context.k},{self.context.n})>"


def zero(ctx: RingContext) -> ChowElement:
    return ChowElement(ctx, {})


def unit(ctx: RingContext) -> ChowElement:
    return ChowElement(ctx, {Partition(): 1})


def make_class(ctx: RingContext, lam) -> ChowElement:
    """Schubert class for `lam`, or zero if it does not fit the box."""
    lam = _as_partition(lam)
    if not ctx.fits(lam):
        return zero(ctx)
    return ChowElement(ctx, {lam: 1})


def _horizontal_strips(lam: Partition, p: int, k: int, width: int):
    """Partitions mu obtained from lam by adding a horizontal p-strip in the box.

    Interlacing: mu1 >= lam1 >= mu2 >= lam2 >= ..., with mu inside k x width.
    """
    rows = min(k, len(lam) + 1)

    def rec(i, remaining, prefix):
        if i == rows:
            if remaining == 0:
                yield Partition(prefix)
            return
        low = lam.part(i)
        high = width if i == 0 else lam.part(i - 1)
        high = min(high, low + remaining)
        for mu_i in range(low, high + 1):
            yield from rec(i + 1, remaining - (mu_i - low), prefix + (mu_i,))

    yield from rec(0, p, ())


def _vertical_strips(lam: Partition, p: int, k: int, width: int):
    """Partitions mu obtained from lam by adding a vertical p-strip in the box.

    Each row grows by at most one box; mu stays weakly decreasing.
    """
    rows = min(k, len(lam) + p)

    def rec(i, remaining, prev, prefix):
        if i == rows:
            if remaining == 0:
                yield Partition(prefix)
            return
        base = lam.part(i)
        for add in (0, 1):
            if add > remaining:
                continue
            mu_i = base + add
            if mu_i > prev or mu_i > width:
                continue
            yield from rec(i + 1, remaining - add, mu_i, prefix + (mu_i,))

    yield from rec(0, p, width, ())


def pieri(ctx: RingContext, p: int, x: ChowElement) -> ChowElement:
    """Multiply by the special class sigma_p via the horizontal-strip rule."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    if isinstance(x, ChowElement):
        if x.context != ctx:
            raise ValueError("element does not belong to the given ring context")
    else:
        x = make_class(ctx, x)
    if p == 0:
        return x
    if p > ctx.width:
        return zero(ctx)
    out = {}
    for lam, c in x.terms.items():
        for mu in _horizontal_strips(lam, p, ctx.k, ctx.width):
            out[mu] = out.get(mu, 0) + c
    return ChowElement(ctx, out)


def pieri_vertical(ctx: RingContext, p: int, x: ChowElement) -> ChowElement:
    """Multiply by sigma_{1^p} via the vertical-strip rule."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    if isinstance(x, ChowElement):
        if x.context != ctx:
            raise ValueError("element does not belong to the given ring context")
    else:
        x = make_class(ctx, x)
    if p == 0:
        return x
    if p > ctx.k:
        return zero(ctx)
    out = {}
    for lam, c in x.terms.items():
        for mu in _vertical_strips(lam, p, ctx.k, ctx.width):
            out[mu] = out.get(mu, 0) + c
    return ChowElement(ctx, out)


def _jacobi_trudi_terms(lam: Partition):
    """Signed special-class factorizations of sigma_lam.

    Expands det(h_{lam_i - i + j}) over permutations; yields (sign, ps)
    with ps the row degrees, entries < 0 dropped (those terms vanish).
    """
    ell = len(lam)
    if ell == 0:
        yield 1, ()
        return
    for perm in itertools.permutations(range(ell)):
        sign = 1
        for i in range(ell):
            for j in range(i + 1, ell):
                if perm[i] > perm[j]:
                    sign = -sign
        ps = []
        ok = True
        for i in range(ell):
            p = lam.part(i) - i + perm[i]
            if p < 0:
                ok = False
                break
            if p > 0:
                ps.append(p)
        if ok:
            yield sign, tuple(ps)


@lru_cache(maxsize=None)
def _basis_product(ctx: RingContext, lam_parts: tuple, mu_parts: tuple):
    """Product sigma_lam * sigma_mu as a tuple of (parts, coeff)."""
    lam, mu = Partition(lam_parts), Partition(mu_parts)
    # expand the shorter partition through Jacobi-Trudi
    if len(mu) > len(lam):
        lam, mu = mu, lam
    acc = {}
    for sign, ps in _jacobi_trudi_terms(mu):
        if any(p > ctx.width for p in ps):
            continue
        elem = make_class(ctx, lam)
        for p in ps:
            elem = pieri(ctx, p, elem)
            if elem.is_zero():
                break
        for nu, c in elem.terms.items():
            acc[nu] = acc.get(nu, 0) + sign * c
    return tuple((nu.parts, c) for nu, c in acc.items() if c != 0)


def multiply(x: ChowElement, y: ChowElement) -> ChowElement:
    """Chow ring product, via Giambelli expansion and iterated Pieri."""
    x._check_context(y)
    ctx = x.context
    out = {}
    for lam, cx in x.terms.items():
        for mu, cy in y.terms.items():
            for nu_parts, c in _basis_product(ctx, lam.parts, mu.parts):
                nu = Partition(nu_parts)
                out[nu] = out.get(nu, 0) + cx * cy * c
    return ChowElement(ctx, out)


def integrate(x: ChowElement) -> int:
    """Degree pairing: coefficient of the full-box point class."""
    return x.terms.get(x.context.top, 0)


def complement(ctx: RingContext, lam) -> Partition:
    """Partition pairing with lam to the point class under integration."""
    lam = _as_partition(lam)
    if not ctx.fits(lam):
        raise ValueError(f"{lam!r} does not fit the G({ctx.k},{ctx.n}) box")
    return Partition(tuple(ctx.width - lam.part(ctx.k - 1 - j) for j in range(ctx.k)))


def transpose_dual(ctx: RingContext, lam):
    """Conjugate partition in the dual Grassmannian G(n-k, n)."""
    lam = _as_partition(lam)
    if not ctx.fits(lam):
        raise ValueError(f"{lam!r} does not fit the G({ctx.k},{ctx.n}) box")
    return RingContext(ctx.n - ctx.k, ctx.n), lam.conjugate()


def dual_class_vanishes(d: int, N: int) -> bool:
    """Check that sigma_2 annihilates the transpose-dual of the two-row
    class (N-2, N-2-(d+1)) taken in G(2, N).

    This is the computational witness that lines in a family of that class
    pass through finitely many points; it requires d >= 2 (for d = 1 the
    geometric argument behind the check does not apply).
    """
    if d < 2:
        raise ValueError("the vanishing check requires d >= 2")
    if N < d + 3:
        raise ValueError("need N >= d + 3 so the two-row class fits the box")
    line_ctx = RingContext(2, N)
    dual_ctx, conj = transpose_dual(line_ctx, Partition((N - 2, N - 2 - (d + 1))))
    return pieri(dual_ctx, 2, make_class(dual_ctx, conj)).is_zero()
