"""Symbolic matrices and the ideal of entries of a matrix-vector product.

The central object is the ideal generated by the n entries of X*Y, where
X is an n-by-n matrix of indeterminates (generic, symmetric, or with a
prescribed zero pattern) and Y is the column vector (y_1, ..., y_n).  Each
generator is g_i = sum_j x_i_j * y_j, a quadric linear in the y block.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import GeneratorSet
from .poly_core import CoefficientField, Polynomial, RingContext

PATTERN_KINDS = ("generic", "symmetric", "zero_pattern")


@dataclass(frozen=True)
class MatrixPattern:
    """Shape of the matrix X: generic, symmetric, or entries zeroed by mask.

    ``mask`` is only meaningful for kind "zero_pattern": mask[i][j] == 1
    keeps entry (i+1, j+1), 0 forces it to zero.
    """

    n: int
    kind: str = "generic"
    mask: tuple[tuple[int, ...], ...] | None = field(default=None)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("matrix size n must be >= 1")
        if self.kind not in PATTERN_KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "zero_pattern":
            if self.mask is None:
                raise ValueError("zero_pattern requires a mask")
            if len(self.mask) != self.n or any(len(r) != self.n for r in self.mask):
                raise ValueError("mask must be an n-by-n matrix")
            if any(v not in (0, 1) for r in self.mask for v in r):
                raise ValueError("mask entries must be 0 or 1")
        elif self.mask is not None:
            raise ValueError(f"mask is only valid for zero_pattern, not {self.kind!r}")

    @classmethod
    def generic(cls, n: int) -> "MatrixPattern":
        return cls(n, "generic")

    @classmethod
    def symmetric(cls, n: int) -> "MatrixPattern":
        return cls(n, "symmetric")

    @classmethod
    def zero_pattern(cls, mask) -> "MatrixPattern":
        rows = tuple(tuple(int(v) for v in row) for row in mask)
        return cls(len(rows), "zero_pattern", rows)

    @classmethod
    def from_json_dict(cls, data: dict) -> "MatrixPattern":
        try:
            n = int(data["n"])
            kind = data["kind"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed pattern description: {exc}") from None
        mask = data.get("mask")
        if kind == "zero_pattern":
            if mask is None:
                raise ValueError("zero_pattern requires a mask")
            rows = tuple(tuple(int(v) for v in row) for row in mask)
            if len(rows) != n:
                raise ValueError("mask size disagrees with n")
            return cls(n, kind, rows)
        if mask is not None:
            raise ValueError(f"mask is only valid for zero_pattern, not {kind!r}")
        return cls(n, kind)

    def to_json_dict(self) -> dict:
        out: dict = {"n": self.n, "kind": self.kind}
        if self.kind == "zero_pattern":
            out["mask"] = [[bool(v) for v in row] for row in self.mask]
        return out

    def entry_is_zero(self, i: int, j: int) -> bool:
        """1-based query: is X[i][j] forced to zero by the pattern?"""
        if self.kind == "zero_pattern":
            return self.mask[i - 1][j - 1] == 0
        return False

    def keeps_diagonal(self) -> bool:
        """True when every diagonal entry of X survives the pattern."""
        return all(not self.entry_is_zero(i, i) for i in range(1, self.n + 1))

    def ring_context(self, fieldspec: CoefficientField | None = None) -> RingContext:
        return RingContext(self.n, symmetric=(self.kind == "symmetric"),
                           field=fieldspec)


class SymbolicMatrix:
    """An n-by-n matrix of polynomials, 1-based accessors."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx: RingContext, rows):
        rows = tuple(tuple(r) for r in rows)
        n = ctx.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix must be n-by-n")
        for r in rows:
            for f in r:
                if f.ctx != ctx:
                    raise ValueError("entry from a different ring context")
        self.ctx = ctx
        self.rows = rows

    def entry(self, i: int, j: int) -> Polynomial:
        return self.rows[i - 1][j - 1]

    def __repr__(self) -> str:
        return f"SymbolicMatrix(n={self.ctx.n})"


class SymbolicVector:
    """A length-n column vector of polynomials, 1-based accessors."""

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: RingContext, entries):
        entries = tuple(entries)
        if len(entries) != ctx.n:
            raise ValueError("vector must have length n")
        for f in entries:
            if f.ctx != ctx:
                raise ValueError("entry from a different ring context")
        self.ctx = ctx
        self.entries = entries

    def entry(self, j: int) -> Polynomial:
        return self.entries[j - 1]

    def __repr__(self) -> str:
        return f"SymbolicVector(n={self.ctx.n})"


def build_matrices(pattern: MatrixPattern,
                   ctx: RingContext | None = None
                   ) -> tuple[SymbolicMatrix, SymbolicVector]:
    """Construct X (shaped by the pattern) and Y = (y_1, ..., y_n)^T.

    For a symmetric pattern, entry (i, j) with i > j reuses the variable
    x_min(i,j)_max(i,j): X is literally equal to its transpose.
    """
    if ctx is None:
        ctx = pattern.ring_context()
    if ctx.n != pattern.n:
        raise ValueError("ring context size disagrees with pattern size")
    if ctx.symmetric != (pattern.kind == "symmetric"):
        raise ValueError("ring context symmetry flag disagrees with pattern kind")
    n = pattern.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if pattern.entry_is_zero(i, j):
                row.append(ctx.zero)
            elif pattern.kind == "symmetric":
                row.append(ctx.variable_poly(ctx.x(min(i, j), max(i, j))))
            else:
                row.append(ctx.variable_poly(ctx.x(i, j)))
        rows.append(row)
    X = SymbolicMatrix(ctx, rows)
    Y = SymbolicVector(ctx, [ctx.variable_poly(ctx.y(j)) for j in range(1, n + 1)])
    return X, Y


def product_generators(X: SymbolicMatrix, Y: SymbolicVector) -> list[Polynomial]:
    """Entries of X*Y in row order: g_i = sum_j X[i][j] * y_j.

    Always returns n polynomials; an all-zero row of a zero pattern
    contributes the zero polynomial.
    """
    if X.ctx != Y.ctx:
        raise ValueError("matrix and vector from different ring contexts")
    ctx = X.ctx
    gens = []
    for i in range(1, ctx.n + 1):
        g = ctx.zero
        for j in range(1, ctx.n + 1):
            g = g + X.entry(i, j) * Y.entry(j)
        gens.append(g)
    return gens


def matrix_product_ideal(pattern: MatrixPattern,
                         fieldspec: CoefficientField | None = None
                         ) -> tuple[RingContext, GeneratorSet]:
    """One-call construction: ring context plus the entry ideal of X*Y.

    Identically-zero entries of the product (possible for degenerate
    masks) are dropped by the GeneratorSet constructor.
    """
    ctx = pattern.ring_context(fieldspec)
    X, Y = build_matrices(pattern, ctx)
    return ctx, GeneratorSet(ctx, product_generators(X, Y))
