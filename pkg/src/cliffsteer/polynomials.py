"""Polynomials in commuting variables x_0..x_m with Clifford coefficients.

The variables commute with everything; the coefficients live in R_{0,m}
and multiply by the geometric product, so left and right actions of the
Dirac-type operators differ and both are provided.

A monomial is stored densely as a tuple of m+1 exponents.  ``var_scope``
declares which variables may appear at all (for example the y-only scope
{2..m} used for steering coefficients); it is metadata used for
validation, not a separate polynomial type.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .algebra import (
    Multivector,
    ScalarLike,
    coerce_fraction,
    parse_fraction,
)

Monomial = Tuple[int, ...]

CoefficientLike = Union[Multivector, int, Fraction]


def _monomial_key(exps: Monomial) -> Tuple[int, Monomial]:
    return (sum(exps), exps)


class CliffordPolynomial:
    """Immutable polynomial with Multivector coefficients.

    No zero coefficient is stored and every monomial uses only variables
    from ``var_scope``.  Equality compares the term mappings.
    """

    __slots__ = ("m", "var_scope", "_terms")

    def __init__(
        self,
        m: int,
        terms: Mapping[Monomial, CoefficientLike] | Iterable = (),
        var_scope: Iterable[int] | None = None,
    ):
        scope = frozenset(range(m + 1)) if var_scope is None else frozenset(var_scope)
        if not all(isinstance(i, int) and 0 <= i <= m for i in scope):
            raise ValueError(f"var_scope must be a subset of x0..x{m}")
        data: dict[Monomial, Multivector] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coef in items:
            key = tuple(exps)
            if len(key) != m + 1 or any(not isinstance(x, int) or x < 0 for x in key):
                raise ValueError(f"monomial {exps!r} must give {m + 1} nonnegative exponents")
            for i, x in enumerate(key):
                if x and i not in scope:
                    raise ValueError(f"monomial uses x{i} outside the declared variable scope")
            mv = coef if isinstance(coef, Multivector) else Multivector.scalar(m, coef)
            if mv.m != m:
                raise ValueError(f"coefficient dimension mismatch: m={mv.m} vs m={m}")
            acc = data[key] + mv if key in data else mv
            if acc:
                data[key] = acc
            else:
                data.pop(key, None)
        self.m = m
        self.var_scope = scope
        self._terms = {k: data[k] for k in sorted(data, key=_monomial_key)}

    @classmethod
    def _unsafe(
        cls, m: int, scope: frozenset, data: dict[Monomial, Multivector]
    ) -> "CliffordPolynomial":
        poly = object.__new__(cls)
        poly.m = m
        poly.var_scope = scope
        poly._terms = {k: data[k] for k in sorted(data, key=_monomial_key)}
        return poly

    @classmethod
    def zero(cls, m: int, var_scope: Iterable[int] | None = None) -> "CliffordPolynomial":
        return cls(m, (), var_scope)

    @classmethod
    def constant(
        cls, m: int, value: CoefficientLike, var_scope: Iterable[int] | None = None
    ) -> "CliffordPolynomial":
        return cls(m, {(0,) * (m + 1): value}, var_scope)

    @classmethod
    def variable(
        cls, m: int, index: int, var_scope: Iterable[int] | None = None
    ) -> "CliffordPolynomial":
        if not 0 <= index <= m:
            raise ValueError(f"variable index {index} out of range 0..{m}")
        exps = tuple(1 if i == index else 0 for i in range(m + 1))
        return cls(m, {exps: 1}, var_scope)

    @classmethod
    def monomial(
        cls,
        m: int,
        exponents: Mapping[int, int],
        coef: CoefficientLike = 1,
        var_scope: Iterable[int] | None = None,
    ) -> "CliffordPolynomial":
        exps = [0] * (m + 1)
        for i, e in exponents.items():
            if not 0 <= i <= m:
                raise ValueError(f"variable index {i} out of range 0..{m}")
            exps[i] = e
        return cls(m, {tuple(exps): coef}, var_scope)

    # -- access ----------------------------------------------------------------

    def items(self) -> Iterator[Tuple[Monomial, Multivector]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object):
        if isinstance(other, CliffordPolynomial):
            return self._terms == other._terms
        if isinstance(other, (Multivector, int, Fraction)):
            return self == CliffordPolynomial.constant(self.m, other)
        return NotImplemented

    __hash__ = None

    def constant_term(self) -> Multivector:
        return self._terms.get((0,) * (self.m + 1), Multivector.zero(self.m))

    def total_degree(self) -> int:
        """Largest monomial degree; zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def restrict_scope(self, scope: Iterable[int]) -> "CliffordPolynomial":
        """Re-declare the variable scope, failing if the content does not fit."""
        return CliffordPolynomial(self.m, self._terms, var_scope=scope)

    # -- ring structure ----------------------------------------------------------

    def _require_same_m(self, other) -> None:
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: m={self.m} vs m={other.m}")

    def __add__(self, other):
        if isinstance(other, (Multivector, int, Fraction)):
            other = CliffordPolynomial.constant(self.m, other)
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        self._require_same_m(other)
        data = dict(self._terms)
        for exps, mv in other._terms.items():
            acc = data[exps] + mv if exps in data else mv
            if acc:
                data[exps] = acc
            else:
                data.pop(exps, None)
        return CliffordPolynomial._unsafe(self.m, self.var_scope | other.var_scope, data)

    __radd__ = __add__

    def __neg__(self):
        return CliffordPolynomial._unsafe(
            self.m, self.var_scope, {k: -v for k, v in self._terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (Multivector, int, Fraction)):
            other = CliffordPolynomial.constant(self.m, other)
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = coerce_fraction(other)
            if not q:
                return CliffordPolynomial.zero(self.m, self.var_scope)
            return CliffordPolynomial._unsafe(
                self.m, self.var_scope, {k: v * q for k, v in self._terms.items()}
            )
        if isinstance(other, Multivector):
            # right-multiply every coefficient
            self._require_same_m(other)
            data = {}
            for exps, mv in self._terms.items():
                prod = mv * other
                if prod:
                    data[exps] = prod
            return CliffordPolynomial._unsafe(self.m, self.var_scope, data)
        if isinstance(other, CliffordPolynomial):
            self._require_same_m(other)
            data: dict[Monomial, Multivector] = {}
            for ea, ca in self._terms.items():
                for eb, cb in other._terms.items():
                    prod = ca * cb
                    if not prod:
                        continue
                    key = tuple(x + y for x, y in zip(ea, eb))
                    acc = data[key] + prod if key in data else prod
                    if acc:
                        data[key] = acc
                    else:
                        data.pop(key, None)
            return CliffordPolynomial._unsafe(self.m, self.var_scope | other.var_scope, data)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        if isinstance(other, Multivector):
            # left-multiply every coefficient
            self._require_same_m(other)
            data = {}
            for exps, mv in self._terms.items():
                prod = other * mv
                if prod:
                    data[exps] = prod
            return CliffordPolynomial._unsafe(self.m, self.var_scope, data)
        return NotImplemented

    def __truediv__(self, other):
        q = coerce_fraction(other)
        if not q:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / q)

    # -- differential operators ----------------------------------------------------

    def partial(self, index: int) -> "CliffordPolynomial":
        """Coefficient-wise formal partial derivative with respect to x_index."""
        if not 0 <= index <= self.m:
            raise ValueError(f"variable index {index} out of range 0..{self.m}")
        data: dict[Monomial, Multivector] = {}
        for exps, mv in self._terms.items():
            k = exps[index]
            if not k:
                continue
            key = exps[:index] + (k - 1,) + exps[index + 1 :]
            scaled = mv * k
            acc = data[key] + scaled if key in data else scaled
            if acc:
                data[key] = acc
            else:
                data.pop(key, None)
        return CliffordPolynomial._unsafe(self.m, self.var_scope, data)

    def dirac_y(self, side: str = "left") -> "CliffordPolynomial":
        """Dirac operator over the y variables x_2..x_m, acting on one side."""
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        total = CliffordPolynomial.zero(self.m, self.var_scope)
        for j in range(2, self.m + 1):
            d = self.partial(j)
            if not d:
                continue
            ej = Multivector.blade(self.m, (j,))
            total = total + (ej * d if side == "left" else d * ej)
        return total

    def cr_left(self) -> "CliffordPolynomial":
        """Generalized Cauchy-Riemann operator acting on the left."""
        total = self.partial(0)
        for j in range(1, self.m + 1):
            d = self.partial(j)
            if d:
                total = total + Multivector.blade(self.m, (j,)) * d
        return total

    def cr_right(self) -> "CliffordPolynomial":
        """Generalized Cauchy-Riemann operator acting on the right."""
        total = self.partial(0)
        for j in range(1, self.m + 1):
            d = self.partial(j)
            if d:
                total = total + d * Multivector.blade(self.m, (j,))
        return total

    def hypercomplex_d(self) -> "CliffordPolynomial":
        """(1/2)(d/dx_0 - sum_j e_j d/dx_j), the hypercomplex derivative."""
        total = self.partial(0)
        for j in range(1, self.m + 1):
            d = self.partial(j)
            if d:
                total = total - Multivector.blade(self.m, (j,)) * d
        return total * Fraction(1, 2)

    def laplacian(self, variables: Iterable[int] | None = None) -> "CliffordPolynomial":
        """Sum of second partials over ``variables`` (default: the var_scope)."""
        if variables is None:
            variables = self.var_scope
        total = CliffordPolynomial.zero(self.m, self.var_scope)
        for i in variables:
            if 0 <= i <= self.m:
                total = total + self.partial(i).partial(i)
        return total

    # -- serialization ----------------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "m": self.m,
            "vars": sorted(self.var_scope),
            "terms": [
                {
                    "monomial": {str(i): e for i, e in enumerate(exps) if e},
                    "coef": mv.to_obj(),
                }
                for exps, mv in self._terms.items()
            ],
        }

    @classmethod
    def from_obj(cls, obj: Mapping) -> "CliffordPolynomial":
        if not isinstance(obj, Mapping):
            raise TypeError("polynomial document must be a JSON object")
        m = obj["m"]
        if not isinstance(m, int):
            raise TypeError("polynomial field 'm' must be an integer")
        pairs = []
        for entry in obj.get("terms", []):
            exps = [0] * (m + 1)
            for raw_i, e in entry["monomial"].items():
                i = int(raw_i)
                if not 0 <= i <= m:
                    raise ValueError(f"variable index {i} out of range 0..{m}")
                exps[i] = e
            pairs.append((tuple(exps), Multivector.from_obj(entry["coef"])))
        return cls(m, pairs, var_scope=obj.get("vars"))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, mv in self._terms.items():
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
            )
            parts.append(f"[{mv}]{'*' + mono if mono else ''}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CliffordPolynomial(m={self.m}, {str(self)})"


def dirac_power(poly: CliffordPolynomial, k: int, side: str = "left") -> CliffordPolynomial:
    """Apply the y-Dirac operator k times on the given side."""
    out = poly
    for _ in range(k):
        out = out.dirac_y(side)
    return out


def paravector_power(m: int, k: int, conjugated: bool = False) -> CliffordPolynomial:
    """Expand (x_0 +/- sum_j x_j e_j)^k by repeated multiplication."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    sign = -1 if conjugated else 1
    terms: dict[Monomial, CoefficientLike] = {}
    unit = tuple(1 if i == 0 else 0 for i in range(m + 1))
    terms[unit] = 1
    for j in range(1, m + 1):
        exps = tuple(1 if i == j else 0 for i in range(m + 1))
        terms[exps] = Multivector.blade(m, (j,), sign)
    base = CliffordPolynomial(m, terms)
    out = CliffordPolynomial.constant(m, 1)
    for _ in range(k):
        out = out * base
    return out


def _homogeneous_exponents(count: int, degree: int) -> Iterator[Tuple[int, ...]]:
    # graded-lex listing: the earliest variable takes the largest exponent first
    if count == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _homogeneous_exponents(count - 1, degree - first):
            yield (first,) + rest


def _scalar_laplacian(
    poly: Mapping[Tuple[int, ...], Fraction]
) -> dict[Tuple[int, ...], Fraction]:
    out: dict[Tuple[int, ...], Fraction] = {}
    for exps, q in poly.items():
        for pos, e in enumerate(exps):
            if e < 2:
                continue
            key = exps[:pos] + (e - 2,) + exps[pos + 1 :]
            acc = out.get(key, Fraction(0)) + q * e * (e - 1)
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return out


def _nullspace(columns: Sequence[Sequence[Fraction]], nrows: int) -> list[list[Fraction]]:
    """Reduced-echelon kernel basis of the matrix whose columns are given."""
    ncols = len(columns)
    rows = [[columns[c][r] for c in range(ncols)] for r in range(nrows)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for pr, pc in enumerate(pivots):
            vec[pc] = -rows[pr][fc]
        basis.append(vec)
    return basis


def polyharmonic_basis(
    degree: int,
    order: int,
    m: int,
    yvars: Iterable[int] | None = None,
    value: CoefficientLike | None = None,
) -> list[CliffordPolynomial]:
    """Basis of homogeneous degree-``degree`` polynomials killed by laplacian^order.

    Computed by exact row reduction of the iterated-Laplacian matrix in the
    graded-lex monomial basis; the returned list is deterministic and
    linearly independent.  ``value`` scales every element by a constant
    multivector (default: the scalar 1).
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if order < 1:
        raise ValueError("order must be at least 1")
    variables = tuple(sorted(yvars)) if yvars is not None else tuple(range(2, m + 1))
    if not variables or not all(0 <= v <= m for v in variables):
        raise ValueError(f"yvars must be a nonempty subset of x0..x{m}")
    monos = list(_homogeneous_exponents(len(variables), degree))
    if degree - 2 * order < 0:
        vectors = []
        for i in range(len(monos)):
            vec = [Fraction(0)] * len(monos)
            vec[i] = Fraction(1)
            vectors.append(vec)
    else:
        targets = list(_homogeneous_exponents(len(variables), degree - 2 * order))
        index = {t: i for i, t in enumerate(targets)}
        cols = []
        for mono in monos:
            poly = {mono: Fraction(1)}
            for _ in range(order):
                poly = _scalar_laplacian(poly)
            col = [Fraction(0)] * len(targets)
            for t, q in poly.items():
                col[index[t]] = q
            cols.append(col)
        vectors = _nullspace(cols, len(targets))
    scope = frozenset(variables)
    if value is None:
        value_mv = Multivector.scalar(m, 1)
    elif isinstance(value, Multivector):
        value_mv = value
    else:
        value_mv = Multivector.scalar(m, value)
    out = []
    for vec in vectors:
        terms: dict[Monomial, Multivector] = {}
        for coef, mono in zip(vec, monos):
            if not coef:
                continue
            dense = [0] * (m + 1)
            for pos, v in enumerate(variables):
                dense[v] = mono[pos]
            terms[tuple(dense)] = value_mv * coef
        out.append(CliffordPolynomial(m, terms, var_scope=scope))
    return out
