"""Exact sparse polynomial kernel with a diagonal-first block monomial order.

The ring has variables x_i_j (entries of an n-by-n matrix) and y_j (entries
of a length-n column vector), with coefficients in the rationals or in a
prime field GF(p).  Monomials compare by the exponents of the diagonal
variables x_1_1, ..., x_n_n lexicographically first; ties fall through to a
graded reverse-lexicographic comparison on the remaining variables.  As
single variables this gives

    x_1_1 > x_2_2 > ... > x_n_n  >  every off-diagonal x_i_j and every y_j,

and more strongly, any monomial containing a diagonal variable beats any
monomial free of them.  The tail tie-break ranks single variables as
x_1_2 < x_1_3 < ... < x_n_(n-1) < y_1 < ... < y_n (row-major off-diagonals
first), which pins a deterministic total order; downstream results do not
depend on this choice.

All values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping


class ContextMismatchError(ValueError):
    """Operands belong to different ring contexts."""


class ZeroPolynomialError(ValueError):
    """The operation needs a nonzero polynomial (e.g. a leading term)."""


@dataclass(frozen=True, slots=True)
class Variable:
    """A named indeterminate: x_i_j (matrix entry) or y_j (vector entry)."""

    kind: str
    i: int | None
    j: int

    def __post_init__(self) -> None:
        if self.kind not in ("x", "y"):
            raise ValueError(f"variable kind must be 'x' or 'y', got {self.kind!r}")
        if self.kind == "x" and (self.i is None or self.i < 1 or self.j < 1):
            raise ValueError("x variables need row and column indices >= 1")
        if self.kind == "y" and (self.i is not None or self.j < 1):
            raise ValueError("y variables carry a single column index >= 1")

    @staticmethod
    def x(i: int, j: int) -> "Variable":
        return Variable("x", i, j)

    @staticmethod
    def y(j: int) -> "Variable":
        return Variable("y", None, j)

    @property
    def is_diagonal(self) -> bool:
        return self.kind == "x" and self.i == self.j

    @property
    def name(self) -> str:
        if self.kind == "x":
            return f"x_{self.i}_{self.j}"
        return f"y_{self.j}"

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return self.name


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, slots=True)
class FpElement:
    """An element of GF(p), normalized to 0 <= residue < p."""

    residue: int
    p: int

    def _check(self, other: "FpElement") -> None:
        if not isinstance(other, FpElement) or other.p != self.p:
            raise ValueError("mixed prime-field arithmetic")

    def __add__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement((self.residue + other.residue) % self.p, self.p)

    def __sub__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement((self.residue - other.residue) % self.p, self.p)

    def __mul__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement((self.residue * other.residue) % self.p, self.p)

    def __truediv__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        if other.residue == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return self * FpElement(pow(other.residue, -1, self.p), self.p)

    def __neg__(self) -> "FpElement":
        return FpElement(-self.residue % self.p, self.p)

    def __bool__(self) -> bool:
        return self.residue != 0

    def __str__(self) -> str:
        return str(self.residue)


class CoefficientField:
    """Coefficient domain descriptor: exact rationals, or GF(p) for prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls(p)

    @property
    def name(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    def coerce(self, value) -> Fraction | FpElement:
        if self.p is None:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, str):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into QQ")
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise TypeError("element of a different prime field")
            return value
        if isinstance(value, int):
            return FpElement(value % self.p, self.p)
        if isinstance(value, str):
            return FpElement(int(value) % self.p, self.p)
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def __eq__(self, other) -> bool:
        return isinstance(other, CoefficientField) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("CoefficientField", self.p))

    def __repr__(self) -> str:
        return self.name


class RingContext:
    """The polynomial ring on x_i_j and y_j with its canonical monomial order.

    The generic ring carries all n*n + n variables.  With ``symmetric=True``
    the sub-diagonal x_i_j (i > j) are omitted, so symmetric-matrix
    computations happen in the ring actually generated by the matrix
    entries.
    """

    __slots__ = ("n", "symmetric", "field", "variables", "_position", "order", "_one")

    def __init__(self, n: int, *, symmetric: bool = False,
                 field: CoefficientField | None = None):
        if n < 1:
            raise ValueError("matrix size n must be >= 1")
        self.n = n
        self.symmetric = symmetric
        self.field = field if field is not None else CoefficientField.rationals()
        names: list[Variable] = []
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if symmetric and i > j:
                    continue
                names.append(Variable.x(i, j))
        for j in range(1, n + 1):
            names.append(Variable.y(j))
        self.variables: tuple[Variable, ...] = tuple(names)
        self._position = {v: k for k, v in enumerate(self.variables)}
        self.order = MonomialOrder(self)
        self._one = Monomial(self, ())

    def x(self, i: int, j: int) -> Variable:
        v = Variable.x(i, j)
        if v not in self._position:
            raise ValueError(f"{v.name} is not a variable of this ring")
        return v

    def y(self, j: int) -> Variable:
        v = Variable.y(j)
        if v not in self._position:
            raise ValueError(f"{v.name} is not a variable of this ring")
        return v

    def position(self, v: Variable) -> int:
        try:
            return self._position[v]
        except KeyError:
            raise ValueError(f"{v.name} is not a variable of this ring") from None

    @property
    def one(self) -> "Monomial":
        return self._one

    def monomial(self, exponents: Mapping[Variable, int]) -> "Monomial":
        pairs = []
        for v, e in exponents.items():
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            if e:
                pairs.append((self.position(v), e))
        pairs.sort()
        return Monomial(self, tuple(pairs))

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def polynomial(self, terms: Mapping["Monomial", object]) -> "Polynomial":
        acc: dict[Monomial, object] = {}
        for m, c in terms.items():
            if m.ctx != self:
                raise ContextMismatchError("monomial from a different ring context")
            c = self.field.coerce(c)
            prev = acc.get(m)
            c = c if prev is None else prev + c
            if c:
                acc[m] = c
            elif prev is not None:
                del acc[m]
        ordered = sorted(acc, key=self.order.sort_key, reverse=True)
        return Polynomial(self, tuple((acc[m], m) for m in ordered))

    def variable_poly(self, v: Variable) -> "Polynomial":
        return Polynomial(self, ((self.field.one, self.monomial({v: 1})),))

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if not c:
            return self.zero
        return Polynomial(self, ((c, self.one),))

    def __eq__(self, other) -> bool:
        return (isinstance(other, RingContext)
                and self.n == other.n
                and self.symmetric == other.symmetric
                and self.field == other.field)

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __hash__(self) -> int:
        return hash((self.n, self.symmetric, self.field))

    def __repr__(self) -> str:
        sym = ", symmetric" if self.symmetric else ""
        return f"RingContext(n={self.n}, field={self.field.name}{sym})"


class Monomial:
    """Sparse exponent vector over a ring context.

    Stored as (variable position, exponent) pairs with positive exponents,
    sorted by position; the empty tuple is the monomial 1.
    """

    __slots__ = ("ctx", "exps", "total_degree", "_key")

    def __init__(self, ctx: RingContext, exps: tuple[tuple[int, int], ...]):
        self.ctx = ctx
        self.exps = exps
        self.total_degree = sum(e for _, e in exps)
        self._key = None

    @property
    def is_one(self) -> bool:
        return not self.exps

    def exponent(self, v: Variable) -> int:
        pos = self.ctx.position(v)
        for p, e in self.exps:
            if p == pos:
                return e
        return 0

    def factors(self) -> Iterator[tuple[Variable, int]]:
        """Yield (variable, exponent) pairs in ring layout order."""
        for p, e in self.exps:
            yield self.ctx.variables[p], e

    def exponents(self) -> dict[Variable, int]:
        return {self.ctx.variables[p]: e for p, e in self.exps}

    def _require_same_ctx(self, other: "Monomial") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError("monomials from different ring contexts")

    def mul(self, other: "Monomial") -> "Monomial":
        self._require_same_ctx(other)
        merged = dict(self.exps)
        for p, e in other.exps:
            merged[p] = merged.get(p, 0) + e
        return Monomial(self.ctx, tuple(sorted(merged.items())))

    def divides(self, other: "Monomial") -> bool:
        self._require_same_ctx(other)
        d = dict(other.exps)
        return all(d.get(p, 0) >= e for p, e in self.exps)

    def div(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; raises if other does not divide self."""
        self._require_same_ctx(other)
        merged = dict(self.exps)
        for p, e in other.exps:
            r = merged.get(p, 0) - e
            if r < 0:
                raise ValueError("inexact monomial division")
            if r:
                merged[p] = r
            else:
                merged.pop(p, None)
        return Monomial(self.ctx, tuple(sorted(merged.items())))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._require_same_ctx(other)
        merged = dict(self.exps)
        for p, e in other.exps:
            merged[p] = max(merged.get(p, 0), e)
        return Monomial(self.ctx, tuple(sorted(merged.items())))

    def is_coprime_with(self, other: "Monomial") -> bool:
        self._require_same_ctx(other)
        mine = {p for p, _ in self.exps}
        return all(p not in mine for p, _ in other.exps)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Monomial)
                and self.exps == other.exps
                and self.ctx == other.ctx)

    def __hash__(self) -> int:
        return hash(self.exps)

    def to_json_dict(self) -> dict[str, int]:
        return {self.ctx.variables[p].name: e for p, e in self.exps}

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for p, e in self.exps:
            name = self.ctx.variables[p].name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return str(self)


class MonomialOrder:
    """Block order: lex on diagonal exponents, then grevlex on the tail.

    ``sort_key`` maps a monomial to a tuple that sorts ascending in the
    order, so ``max(monomials, key=order.sort_key)`` is the leading
    monomial.  The order is total, multiplicative, and has 1 as its
    minimum.
    """

    __slots__ = ("ctx", "diagonal_positions", "tail_positions")

    def __init__(self, ctx: RingContext):
        self.ctx = ctx
        self.diagonal_positions = tuple(
            ctx._position[Variable.x(i, i)] for i in range(1, ctx.n + 1))
        diag = set(self.diagonal_positions)
        # ascending significance: off-diagonals row-major, then y_1..y_n
        self.tail_positions = tuple(
            p for p in range(len(ctx.variables)) if p not in diag)

    def sort_key(self, m: Monomial) -> tuple:
        if m._key is None:
            exps = dict(m.exps)
            diag = tuple(exps.get(p, 0) for p in self.diagonal_positions)
            tail = tuple(-exps.get(p, 0) for p in self.tail_positions)
            tail_degree = m.total_degree - sum(diag)
            m._key = (diag, tail_degree, tail)
        return m._key

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Return -1, 0 or 1 as a <, =, > b in the order."""
        if a.ctx != self.ctx or b.ctx != self.ctx:
            raise ContextMismatchError("monomial from a different ring context")
        ka, kb = self.sort_key(a), self.sort_key(b)
        return (ka > kb) - (ka < kb)


def build_order(ctx: RingContext) -> MonomialOrder:
    """The canonical order of the ring context (deterministic for given n)."""
    return ctx.order


class Polynomial:
    """Immutable sparse polynomial; terms sorted strictly descending."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: RingContext, terms: tuple):
        self.ctx = ctx
        self.terms = terms  # tuple of (coefficient, Monomial), descending

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m.total_degree for _, m in self.terms)

    def coefficient(self, m: Monomial) -> object:
        for c, mm in self.terms:
            if mm == m:
                return c
        return self.ctx.field.zero

    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(m for _, m in self.terms)

    def leading_term(self) -> tuple[object, Monomial]:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[1]

    def leading_coefficient(self):
        return self.leading_term()[0]

    def _require_same_ctx(self, other: "Polynomial") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError("polynomials from different ring contexts")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_ctx(other)
        acc = {m: c for c, m in self.terms}
        for c, m in other.terms:
            s = acc.get(m)
            s = c if s is None else s + c
            if s:
                acc[m] = s
            elif m in acc:
                del acc[m]
        key = self.ctx.order.sort_key
        ordered = sorted(acc, key=key, reverse=True)
        return Polynomial(self.ctx, tuple((acc[m], m) for m in ordered))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ctx, tuple((-c, m) for c, m in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_ctx(other)
        acc: dict[Monomial, object] = {}
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                m = m1.mul(m2)
                s = acc.get(m)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    acc[m] = s
                elif m in acc:
                    del acc[m]
        key = self.ctx.order.sort_key
        ordered = sorted(acc, key=key, reverse=True)
        return Polynomial(self.ctx, tuple((acc[m], m) for m in ordered))

    def scale(self, c) -> "Polynomial":
        c = self.ctx.field.coerce(c)
        if not c:
            return self.ctx.zero
        return Polynomial(self.ctx, tuple((tc * c, m) for tc, m in self.terms))

    def mul_term(self, c, m: Monomial) -> "Polynomial":
        """Multiply by the single term c*m; order is preserved termwise."""
        c = self.ctx.field.coerce(c)
        if not c:
            return self.ctx.zero
        return Polynomial(self.ctx, tuple((tc * c, tm.mul(m)) for tc, tm in self.terms))

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0][0]
        one = self.ctx.field.one
        if lc == one:
            return self
        return Polynomial(self.ctx, tuple((c / lc, m) for c, m in self.terms))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial)
                and self.ctx == other.ctx
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash(self.terms)

    def to_json_list(self) -> list[dict]:
        return [{"c": str(c), "m": m.to_json_dict()} for c, m in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for c, m in self.terms:
            cs = str(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if m.is_one:
                body = mag
            elif mag == "1":
                body = str(m)
            else:
                body = f"{mag}*{m}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return str(self)


def variable_from_name(name: str) -> Variable:
    """Parse "x_2_3" or "y_1" back into a Variable."""
    parts = name.split("_")
    if parts[0] == "x" and len(parts) == 3:
        return Variable.x(int(parts[1]), int(parts[2]))
    if parts[0] == "y" and len(parts) == 2:
        return Variable.y(int(parts[1]))
    raise ValueError(f"unrecognized variable name {name!r}")


def polynomial_from_json(ctx: RingContext, data: Iterable[Mapping]) -> Polynomial:
    """Inverse of Polynomial.to_json_list for a known ring context."""
    terms: dict[Monomial, object] = {}
    for entry in data:
        exps = {variable_from_name(name): e for name, e in entry["m"].items()}
        m = ctx.monomial(exps)
        c = ctx.field.coerce(entry["c"])
        prev = terms.get(m)
        terms[m] = c if prev is None else prev + c
    return ctx.polynomial(terms)
