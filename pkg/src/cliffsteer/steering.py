"""The steering-expression calculus.

A steering expression is a finite sum  F(X) = sum_phi phi(z) * G_phi(y)
where z = x_0 + x_1 e_1, y = x_2 e_2 + ... + x_m e_m, each phi comes from
a family of R_{0,1}-valued functions closed under conjugation and under
d/dz-bar (powers of z times exponentials, cosines, sines), and each
coefficient G_phi is a Clifford polynomial in the y variables only.

The single algebraic fact that makes the whole calculus work is the
commutation rule  e_j phi(z) = phi(z-bar) e_j  for j >= 2, while e_1
commutes with z.  Left multiplication by a blade therefore flips every
symbol's bar exactly when the blade contains an odd number of generators
of index >= 2; right multiplication never flips.  With that, applying the
Cauchy-Riemann operator, its right-handed version, or the hypercomplex
derivative keeps expressions inside the same closed symbol family.

This module also houses the constructors: exponential / trigonometric /
power-steering polymonogenic solutions, two-sided monogenic solutions,
hypercomplex-derivative eigenfunctions, and solutions of constant
coefficient equations in the hypercomplex derivative.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .algebra import (
    Multivector,
    ScalarLike,
    coerce_fraction,
    format_fraction,
    parse_fraction,
)
from .polynomials import CliffordPolynomial, dirac_power

KIND_POWEXP = "powexp"
KIND_COS = "cos"
KIND_SIN = "sin"

_KIND_ORDER = {KIND_POWEXP: 0, KIND_COS: 1, KIND_SIN: 2}

CoefficientLike = Union[CliffordPolynomial, Multivector, int, Fraction]


@dataclass(frozen=True)
class SteeringSymbol:
    """Canonical token for z^j*exp(r*z), cos(r*z), sin(r*z) and conjugates.

    ``bar`` marks that the argument is z-bar.  The constant function 1 is
    the unique power/exp symbol with power 0 and rate 0; its bar flag is
    forced to False so that it has a single representation.
    """

    kind: str
    bar: bool = False
    power: int = 0
    rate: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        rate = coerce_fraction(self.rate)
        object.__setattr__(self, "rate", rate)
        if not isinstance(self.power, int) or self.power < 0:
            raise ValueError("symbol power must be a nonnegative integer")
        if self.kind != KIND_POWEXP:
            if self.power:
                raise ValueError("trigonometric symbols carry no power")
            if not rate:
                raise ValueError("trigonometric symbols need a nonzero rate")
        elif self.power == 0 and not rate and self.bar:
            object.__setattr__(self, "bar", False)

    @classmethod
    def power_exp(
        cls, power: int = 0, rate: ScalarLike = 0, bar: bool = False
    ) -> "SteeringSymbol":
        return cls(KIND_POWEXP, bar=bar, power=power, rate=coerce_fraction(rate))

    @classmethod
    def cosine(cls, rate: ScalarLike, bar: bool = False) -> "SteeringSymbol":
        return cls(KIND_COS, bar=bar, rate=coerce_fraction(rate))

    @classmethod
    def sine(cls, rate: ScalarLike, bar: bool = False) -> "SteeringSymbol":
        return cls(KIND_SIN, bar=bar, rate=coerce_fraction(rate))

    @classmethod
    def constant(cls) -> "SteeringSymbol":
        return cls(KIND_POWEXP)

    def is_constant(self) -> bool:
        return self.kind == KIND_POWEXP and self.power == 0 and not self.rate

    def conjugate(self) -> "SteeringSymbol":
        if self.is_constant():
            return self
        return replace(self, bar=not self.bar)

    def value_at_origin(self) -> Fraction:
        if self.kind == KIND_SIN:
            return Fraction(0)
        if self.kind == KIND_COS:
            return Fraction(1)
        return Fraction(1) if self.power == 0 else Fraction(0)

    def _dz(self) -> Tuple[Tuple[Fraction, "SteeringSymbol"], ...]:
        # derivative with respect to the complex-like argument (z or z-bar)
        if self.kind == KIND_POWEXP:
            out = []
            if self.power:
                out.append(
                    (
                        Fraction(self.power),
                        SteeringSymbol.power_exp(self.power - 1, self.rate, self.bar),
                    )
                )
            if self.rate:
                out.append((self.rate, self))
            return tuple(out)
        if self.kind == KIND_COS:
            return ((-self.rate, SteeringSymbol.sine(self.rate, self.bar)),)
        return ((self.rate, SteeringSymbol.cosine(self.rate, self.bar)),)

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.rate, self.power, self.bar)

    def to_obj(self) -> dict:
        return {
            "bar": self.bar,
            "kind": self.kind,
            "power": self.power,
            "rate": format_fraction(self.rate),
        }

    @classmethod
    def from_obj(cls, obj: Mapping) -> "SteeringSymbol":
        return cls(
            obj["kind"],
            bar=bool(obj.get("bar", False)),
            power=obj.get("power", 0),
            rate=parse_fraction(obj.get("rate", 0)),
        )

    def __str__(self) -> str:
        arg = "zb" if self.bar else "z"
        if self.kind == KIND_COS:
            return f"cos({format_fraction(self.rate)}*{arg})"
        if self.kind == KIND_SIN:
            return f"sin({format_fraction(self.rate)}*{arg})"
        parts = []
        if self.power:
            parts.append(arg if self.power == 1 else f"{arg}^{self.power}")
        if self.rate:
            parts.append(f"exp({format_fraction(self.rate)}*{arg})")
        return "*".join(parts) if parts else "1"


def symbol_d(
    sym: SteeringSymbol, axis: int, m: int
) -> list[Tuple[Multivector, SteeringSymbol]]:
    """Exact x_0 or x_1 derivative of a symbol within its closed family.

    Returns (factor, symbol) pairs; the factors are scalars for axis 0 and
    e_1-multiples for axis 1 (with the sign flipped on barred symbols,
    since d(z-bar)/dx_1 = -e_1).
    """
    if axis not in (0, 1):
        raise ValueError("axis must be 0 or 1")
    out = []
    for q, dsym in sym._dz():
        if axis == 0:
            out.append((Multivector.scalar(m, q), dsym))
        else:
            out.append((Multivector.blade(m, (1,), -q if sym.bar else q), dsym))
    return out


class SteeringExpression:
    """Immutable finite sum of symbol * y-polynomial terms."""

    __slots__ = ("m", "_terms")

    def __init__(
        self,
        m: int,
        terms: Mapping[SteeringSymbol, CoefficientLike] | Iterable = (),
    ):
        data: dict[SteeringSymbol, CliffordPolynomial] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        y_scope = range(2, m + 1)
        for sym, coef in items:
            if not isinstance(sym, SteeringSymbol):
                raise TypeError(f"term keys must be SteeringSymbol, got {type(sym).__name__}")
            if isinstance(coef, CliffordPolynomial):
                poly = coef
            else:
                poly = CliffordPolynomial.constant(m, coef)
            if poly.m != m:
                raise ValueError(f"coefficient dimension mismatch: m={poly.m} vs m={m}")
            poly = poly.restrict_scope(y_scope)
            if not poly:
                continue
            acc = data[sym] + poly if sym in data else poly
            if acc:
                data[sym] = acc
            else:
                data.pop(sym, None)
        self.m = m
        self._terms = {s: data[s] for s in sorted(data, key=SteeringSymbol.sort_key)}

    @classmethod
    def zero(cls, m: int) -> "SteeringExpression":
        return cls(m)

    # -- access -----------------------------------------------------------------

    def items(self) -> Iterator[Tuple[SteeringSymbol, CliffordPolynomial]]:
        return iter(self._terms.items())

    def coefficient(self, sym: SteeringSymbol) -> CliffordPolynomial:
        return self._terms.get(sym, CliffordPolynomial.zero(self.m, range(2, self.m + 1)))

    def symbols(self) -> Tuple[SteeringSymbol, ...]:
        return tuple(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object):
        if isinstance(other, SteeringExpression):
            return self._terms == other._terms
        return NotImplemented

    __hash__ = None

    # -- linear structure ---------------------------------------------------------

    def _require_same_m(self, other) -> None:
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: m={self.m} vs m={other.m}")

    def __add__(self, other):
        if not isinstance(other, SteeringExpression):
            return NotImplemented
        self._require_same_m(other)
        merged: list = list(self._terms.items()) + list(other._terms.items())
        return SteeringExpression(self.m, merged)

    def __neg__(self):
        return self * Fraction(-1)

    def __sub__(self, other):
        if not isinstance(other, SteeringExpression):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = coerce_fraction(other)
            return SteeringExpression(
                self.m, [(s, poly * q) for s, poly in self._terms.items()]
            )
        if isinstance(other, Multivector):
            return self.rmul(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        if isinstance(other, Multivector):
            return self.lmul(other)
        return NotImplemented

    # -- blade multiplication -------------------------------------------------------

    def lmul(self, b: Multivector) -> "SteeringExpression":
        """Left multiplication by a multivector.

        Blades with an odd number of generators of index >= 2 flip every
        symbol's bar before landing on the coefficient; e_1 never flips.
        """
        self._require_same_m(b)
        out: list = []
        for mask, q in b.items():
            single = Multivector(self.m, {mask: q})
            flips = bool((mask & ~1).bit_count() & 1)
            for sym, poly in self._terms.items():
                key = sym.conjugate() if flips else sym
                out.append((key, single * poly))
        return SteeringExpression(self.m, out)

    def rmul(self, b: Multivector) -> "SteeringExpression":
        """Right multiplication by a multivector (no bar flips)."""
        self._require_same_m(b)
        return SteeringExpression(
            self.m, [(sym, poly * b) for sym, poly in self._terms.items()]
        )

    # -- differential operators -------------------------------------------------------

    def partial(self, index: int) -> "SteeringExpression":
        """d/dx_index: hits the symbols for index 0, 1 and the coefficients else."""
        if index in (0, 1):
            out = []
            for sym, poly in self._terms.items():
                for factor, dsym in symbol_d(sym, index, self.m):
                    out.append((dsym, factor * poly))
            return SteeringExpression(self.m, out)
        if not 2 <= index <= self.m:
            raise ValueError(f"variable index {index} out of range 0..{self.m}")
        return SteeringExpression(
            self.m, [(sym, poly.partial(index)) for sym, poly in self._terms.items()]
        )

    def cr_left(self) -> "SteeringExpression":
        """d/dx_0 + sum_j e_j d/dx_j applied on the left."""
        total = self.partial(0)
        for j in range(1, self.m + 1):
            d = self.partial(j)
            if d:
                total = total + d.lmul(Multivector.blade(self.m, (j,)))
        return total

    def cr_right(self) -> "SteeringExpression":
        """d/dx_0 + sum_j (d/dx_j)(.)e_j applied on the right."""
        total = self.partial(0)
        for j in range(1, self.m + 1):
            d = self.partial(j)
            if d:
                total = total + d.rmul(Multivector.blade(self.m, (j,)))
        return total

    def hypercomplex_d(self) -> "SteeringExpression":
        """(1/2)(d/dx_0 - sum_j e_j d/dx_j).

        The hypercomplex-derivative reading requires the input to be left
        monogenic; the operator itself is applied unconditionally.
        """
        total = self.partial(0)
        for j in range(1, self.m + 1):
            d = self.partial(j)
            if d:
                total = total - d.lmul(Multivector.blade(self.m, (j,)))
        return total * Fraction(1, 2)

    def at_origin(self) -> Multivector:
        """Value of the expression at X = 0."""
        total = Multivector.zero(self.m)
        for sym, poly in self._terms.items():
            v = sym.value_at_origin()
            if v:
                total = total + poly.constant_term() * v
        return total

    # -- serialization -----------------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "m": self.m,
            "terms": [
                {"symbol": sym.to_obj(), "coef": poly.to_obj()}
                for sym, poly in self._terms.items()
            ],
        }

    @classmethod
    def from_obj(cls, obj: Mapping) -> "SteeringExpression":
        if not isinstance(obj, Mapping):
            raise TypeError("steering expression document must be a JSON object")
        m = obj["m"]
        if not isinstance(m, int):
            raise TypeError("expression field 'm' must be an integer")
        pairs = []
        for entry in obj.get("terms", []):
            pairs.append(
                (
                    SteeringSymbol.from_obj(entry["symbol"]),
                    CliffordPolynomial.from_obj(entry["coef"]),
                )
            )
        return cls(m, pairs)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{sym}*({poly})" for sym, poly in self._terms.items())

    def __repr__(self) -> str:
        return f"SteeringExpression(m={self.m}, {str(self)})"


def blade_lmul(b: Multivector, expr: SteeringExpression) -> SteeringExpression:
    """Left-multiply a steering expression by a multivector."""
    return expr.lmul(b)


# ---------------------------------------------------------------------------
# coefficient tables
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _c(k: int) -> Fraction:
    # c_1 = -1/2;  c_k = -(1/2^k) sum_{j=1..k//2} sum_{i=1..j} C(k+1,2j+1) C(j,i) c_{k-i}
    if k < 1:
        raise ValueError("coefficient index starts at 1")
    if k == 1:
        return Fraction(-1, 2)
    acc = Fraction(0)
    for j in range(1, k // 2 + 1):
        top = comb(k + 1, 2 * j + 1)
        for i in range(1, j + 1):
            acc += top * comb(j, i) * _c(k - i)
    return -acc / (1 << k)


@dataclass(frozen=True)
class CoefficientTable:
    """The recursion coefficients scaling the z-bar side of exponential solutions."""

    n: int
    c: Tuple[Fraction, ...]

    def coefficient(self, k: int) -> Fraction:
        if not 1 <= k <= self.n:
            raise ValueError(f"coefficient index {k} out of range 1..{self.n}")
        return self.c[k - 1]

    def to_obj(self) -> dict:
        return {"n": self.n, "c": [format_fraction(q) for q in self.c]}

    @classmethod
    def from_obj(cls, obj: Mapping) -> "CoefficientTable":
        return cls(obj["n"], tuple(parse_fraction(q) for q in obj["c"]))


def ck_table(n: int) -> CoefficientTable:
    """Exact table c_1..c_n of the recursion coefficients."""
    if n < 1:
        raise ValueError("table length must be at least 1")
    return CoefficientTable(n, tuple(_c(k) for k in range(1, n + 1)))


def power_coefficient(j: int, k: int) -> Fraction:
    """Coefficient of the (2j-1)-th Dirac power in the k-th conjugate term
    of a power-steering solution: c_j / ((2j-1)! * C(k, k-2j+1))."""
    if j < 1 or k < 1 or k - 2 * j + 1 < 0:
        raise ValueError("need j >= 1 and k >= 2j - 1")
    return _c(j) / (factorial(2 * j - 1) * comb(k, k - 2 * j + 1))


IntPoly = Tuple[int, ...]


def tn_closed_form(n: int) -> Tuple[Tuple[IntPoly, IntPoly], Tuple[IntPoly, IntPoly]]:
    """Closed form of the n-th power of the 2x2 operator matrix [[0, x], [x, 2]].

    Entries are integer coefficient sequences (constant term first).  Must
    agree with the brute-force matrix power in the commutative ring Z[x].
    """
    if n < 2:
        raise ValueError("closed form is stated for n >= 2; n = 1 is the base matrix")

    def double_sum(binomial_top: int, power_offset: int, k_max: int) -> IntPoly:
        coeffs: dict[int, int] = {}
        for k in range(k_max + 1):
            top = comb(binomial_top, 2 * k + 1)
            if not top:
                continue
            for j in range(k + 1):
                deg = 2 * j + power_offset
                coeffs[deg] = coeffs.get(deg, 0) + top * comb(k, j)
        size = max(coeffs) + 1 if coeffs else 1
        out = [0] * size
        for d, c in coeffs.items():
            out[d] = c
        return tuple(out)

    top_left = double_sum(n - 1, 2, (n - 2) // 2)
    off_diag = double_sum(n, 1, (n - 1) // 2)
    bottom_right = double_sum(n + 1, 0, n // 2)
    return ((top_left, off_diag), (off_diag, bottom_right))


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _as_steering_seed(poly: CliffordPolynomial, what: str = "seed") -> CliffordPolynomial:
    if not isinstance(poly, CliffordPolynomial):
        raise TypeError(f"{what} must be a CliffordPolynomial")
    try:
        return poly.restrict_scope(range(2, poly.m + 1))
    except ValueError as exc:
        raise ValueError(f"{what} must depend on x2..x{poly.m} only ({exc})") from None


def _require_polyharmonic(seed: CliffordPolynomial, order: int, what: str = "seed") -> None:
    p = seed
    for _ in range(order):
        p = p.laplacian()
    if p:
        raise ValueError(f"{what} is not annihilated by laplacian^{order}")


def _require_right_monogenic(seed: CliffordPolynomial, what: str = "seed") -> None:
    if seed.dirac_y("right"):
        raise ValueError(f"{what} is not right monogenic in the y variables")


def _require_left_monogenic(seed: CliffordPolynomial, what: str = "seed") -> None:
    if seed.dirac_y("left"):
        raise ValueError(f"{what} is not left monogenic in the y variables")


def _exp_tail(seed: CliffordPolynomial, order: int, signs: int = 1) -> CliffordPolynomial:
    # sum_k signs^k * c_k * dirac^(2k-1)(seed); signs is +1 or -1
    table = ck_table(order).c
    d = seed.dirac_y("left")
    total = d * (table[0] * signs)
    factor = signs
    for k in range(2, order + 1):
        d = dirac_power(d, 2)
        factor *= signs
        total = total + d * (table[k - 1] * factor)
    return total


def construct_exp_left(seed: CliffordPolynomial, order: int) -> SteeringExpression:
    """exp(z)H + exp(zb) sum_k c_k dirac^(2k-1) H, left n-monogenic for
    every H with laplacian^n H = 0."""
    if order < 1:
        raise ValueError("order must be at least 1")
    h = _as_steering_seed(seed)
    _require_polyharmonic(h, order)
    tail = _exp_tail(h, order)
    one = Fraction(1)
    return SteeringExpression(
        h.m,
        [
            (SteeringSymbol.power_exp(0, one), h),
            (SteeringSymbol.power_exp(0, one, bar=True), tail),
        ],
    )


def construct_trig_left(
    seed_cos: CliffordPolynomial, seed_sin: CliffordPolynomial, order: int
) -> SteeringExpression:
    """cos(z)A1 + sin(z)B1 + cos(zb)A2 + sin(zb)B2 with the alternating-sign
    conjugate tails A2 = sum (-1)^k c_k dirac^(2k-1) B1 and
    B2 = sum (-1)^(k+1) c_k dirac^(2k-1) A1."""
    if order < 1:
        raise ValueError("order must be at least 1")
    a1 = _as_steering_seed(seed_cos, "cos seed")
    b1 = _as_steering_seed(seed_sin, "sin seed")
    if a1.m != b1.m:
        raise ValueError(f"dimension mismatch: m={a1.m} vs m={b1.m}")
    _require_polyharmonic(a1, order, "cos seed")
    _require_polyharmonic(b1, order, "sin seed")
    a2 = _exp_tail(b1, order, signs=-1)
    b2 = -_exp_tail(a1, order, signs=-1)
    one = Fraction(1)
    return SteeringExpression(
        a1.m,
        [
            (SteeringSymbol.cosine(one), a1),
            (SteeringSymbol.sine(one), b1),
            (SteeringSymbol.cosine(one, bar=True), a2),
            (SteeringSymbol.sine(one, bar=True), b2),
        ],
    )


def construct_power_left(
    seeds: Sequence[CliffordPolynomial], order: int
) -> SteeringExpression:
    """A0 + sum_k (z^k A_k + zb^k B_k) with
    B_k = sum_j c_j / ((2j-1)! C(k, k-2j+1)) dirac^(2j-1) A_{k-2j+1}.

    The conjugate series terminates on its own: seeds beyond the supplied
    list are zero, so every B_k with k > K + 2n - 1 vanishes.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if not seeds:
        raise ValueError("at least one seed is required")
    clean = [_as_steering_seed(s, f"seed {i}") for i, s in enumerate(seeds)]
    m = clean[0].m
    for i, s in enumerate(clean):
        if s.m != m:
            raise ValueError(f"dimension mismatch: m={s.m} vs m={m}")
        _require_polyharmonic(s, order, f"seed {i}")
    top = len(clean) - 1
    terms: list = [(SteeringSymbol.constant(), clean[0])]
    for k in range(1, top + 1):
        terms.append((SteeringSymbol.power_exp(k), clean[k]))
    for k in range(1, top + 2 * order):
        tail = CliffordPolynomial.zero(m, range(2, m + 1))
        for j in range(1, min(order, (k + 1) // 2) + 1):
            idx = k - 2 * j + 1
            if idx <= top and clean[idx]:
                tail = tail + dirac_power(clean[idx], 2 * j - 1) * power_coefficient(j, k)
        if tail:
            terms.append((SteeringSymbol.power_exp(k, bar=True), tail))
    return SteeringExpression(m, terms)


def _sandwich_difference(poly: CliffordPolynomial) -> CliffordPolynomial:
    e1 = Multivector.blade(poly.m, (1,))
    return poly - e1 * poly * e1


def construct_two_sided(family: str, seeds) -> SteeringExpression:
    """Two-sided monogenic solutions built from right monogenic seeds.

    ``family`` selects the steering family: "exp" takes a single seed M,
    "trig" a pair (M, N) and "power" a sequence (M_0, M_1, ...).  Every
    seed enters through the difference M - e1 M e1, whose left Dirac
    derivative supplies the conjugate-side coefficients.
    """
    half = Fraction(1, 2)
    one = Fraction(1)
    if family == "exp":
        seed = _as_steering_seed(seeds)
        _require_right_monogenic(seed)
        a = _sandwich_difference(seed)
        b = a.dirac_y("left") * -half
        return SteeringExpression(
            seed.m,
            [
                (SteeringSymbol.power_exp(0, one), a),
                (SteeringSymbol.power_exp(0, one, bar=True), b),
            ],
        )
    if family == "trig":
        seed_m, seed_n = seeds
        sm = _as_steering_seed(seed_m, "cos seed")
        sn = _as_steering_seed(seed_n, "sin seed")
        if sm.m != sn.m:
            raise ValueError(f"dimension mismatch: m={sm.m} vs m={sn.m}")
        _require_right_monogenic(sm, "cos seed")
        _require_right_monogenic(sn, "sin seed")
        a1 = _sandwich_difference(sm)
        b1 = _sandwich_difference(sn)
        return SteeringExpression(
            sm.m,
            [
                (SteeringSymbol.cosine(one), a1),
                (SteeringSymbol.sine(one), b1),
                (SteeringSymbol.cosine(one, bar=True), b1.dirac_y("left") * half),
                (SteeringSymbol.sine(one, bar=True), a1.dirac_y("left") * -half),
            ],
        )
    if family == "power":
        clean = [_as_steering_seed(s, f"seed {i}") for i, s in enumerate(seeds)]
        if not clean:
            raise ValueError("at least one seed is required")
        m = clean[0].m
        for i, s in enumerate(clean):
            if s.m != m:
                raise ValueError(f"dimension mismatch: m={s.m} vs m={m}")
            _require_right_monogenic(s, f"seed {i}")
        a = [_sandwich_difference(s) for s in clean]
        terms: list = [(SteeringSymbol.constant(), a[0])]
        for k in range(1, len(a)):
            terms.append((SteeringSymbol.power_exp(k), a[k]))
        for k in range(1, len(a) + 1):
            tail = a[k - 1].dirac_y("left") * Fraction(-1, 2 * k)
            if tail:
                terms.append((SteeringSymbol.power_exp(k, bar=True), tail))
        return SteeringExpression(m, terms)
    raise ValueError(f"unknown steering family {family!r}")


def construct_eigen(rate: ScalarLike, seed: CliffordPolynomial) -> SteeringExpression:
    """exp(r z)H - (1/2r) exp(r zb) dirac H: a left monogenic eigenfunction
    of the hypercomplex derivative with eigenvalue r."""
    r = coerce_fraction(rate)
    if not r:
        raise ValueError("eigenvalue rate must be nonzero")
    h = _as_steering_seed(seed)
    _require_polyharmonic(h, 1)
    tail = h.dirac_y("left") * (Fraction(-1, 2) / r)
    return SteeringExpression(
        h.m,
        [
            (SteeringSymbol.power_exp(0, r), h),
            (SteeringSymbol.power_exp(0, r, bar=True), tail),
        ],
    )


# ---------------------------------------------------------------------------
# constant coefficient equations in the hypercomplex derivative
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootSpec:
    """One declared root of the characteristic polynomial.

    A nonzero root may carry a harmonic seed H (the eigenfunction pair
    exp(r z)H - (1/2r)exp(r zb) dirac H) plus up to ``multiplicity``
    monogenic seeds M_k feeding z^k exp(r z) M_k terms.  The zero root
    carries monogenic seeds only, feeding plain z^k M_k terms.
    """

    value: Fraction
    multiplicity: int = 1
    harmonic_seed: CliffordPolynomial | None = None
    monogenic_seeds: Tuple[CliffordPolynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "value", coerce_fraction(self.value))
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise ValueError("multiplicity must be a positive integer")
        object.__setattr__(self, "monogenic_seeds", tuple(self.monogenic_seeds))


@dataclass(frozen=True)
class DSolveSpec:
    """Constant coefficients a_0..a_n plus declared, seed-carrying roots."""

    m: int
    coeffs: Tuple[Fraction, ...]
    roots: Tuple[RootSpec, ...]

    def __post_init__(self):
        coeffs = tuple(coerce_fraction(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError("need at least degree 1 (two coefficients)")
        if not coeffs[0]:
            raise ValueError("leading coefficient a0 must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "roots", tuple(self.roots))


def _synthetic_divide(
    coeffs: Sequence[Fraction], r: Fraction
) -> Tuple[Tuple[Fraction, ...], Fraction]:
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(out[-1] * r + c)
    return tuple(out[:-1]), out[-1]


def _verify_root(coeffs: Sequence[Fraction], r: Fraction, multiplicity: int) -> None:
    work: Sequence[Fraction] = coeffs
    for stage in range(multiplicity):
        if len(work) < 2:
            raise ValueError(
                f"root {r} with multiplicity {multiplicity} exceeds the polynomial degree"
            )
        work, remainder = _synthetic_divide(work, r)
        if remainder:
            raise ValueError(
                f"{r} is not a root of the characteristic polynomial to multiplicity "
                f"{multiplicity} (division fails at stage {stage + 1})"
            )


def dsolve(spec: DSolveSpec) -> SteeringExpression:
    """Steering-type solution of a_0 D^n f + ... + a_n f = 0.

    Every declared root is verified exactly against the characteristic
    polynomial before any term is built; every seed is checked against its
    own precondition (harmonic for eigen pairs, left monogenic in y for
    the z-power terms).
    """
    n = len(spec.coeffs) - 1
    total_multiplicity = sum(r.multiplicity for r in spec.roots)
    if total_multiplicity > n:
        raise ValueError(
            f"declared multiplicities sum to {total_multiplicity} > degree {n}"
        )
    seen = set()
    for root in spec.roots:
        if root.value in seen:
            raise ValueError(f"root {root.value} declared more than once")
        seen.add(root.value)
        _verify_root(spec.coeffs, root.value, root.multiplicity)

    solution = SteeringExpression.zero(spec.m)
    for root in spec.roots:
        r = root.value
        if len(root.monogenic_seeds) > root.multiplicity:
            raise ValueError(
                f"root {r}: {len(root.monogenic_seeds)} monogenic seeds exceed "
                f"multiplicity {root.multiplicity}"
            )
        if not r:
            if root.harmonic_seed is not None:
                raise ValueError(
                    "the zero root takes monogenic seeds only (the eigen pair needs 1/(2*rate))"
                )
            for k, seed in enumerate(root.monogenic_seeds):
                mk = _as_steering_seed(seed, f"root 0 seed {k}")
                if not mk:
                    continue
                _require_left_monogenic(mk, f"root 0 seed {k}")
                solution = solution + SteeringExpression(
                    spec.m, [(SteeringSymbol.power_exp(k), mk)]
                )
            continue
        if root.harmonic_seed is not None:
            h = _as_steering_seed(root.harmonic_seed, f"root {r} harmonic seed")
            if h:
                _require_polyharmonic(h, 1, f"root {r} harmonic seed")
                solution = solution + SteeringExpression(
                    spec.m,
                    [
                        (SteeringSymbol.power_exp(0, r), h),
                        (
                            SteeringSymbol.power_exp(0, r, bar=True),
                            h.dirac_y("left") * (Fraction(-1, 2) / r),
                        ),
                    ],
                )
        for k, seed in enumerate(root.monogenic_seeds):
            mk = _as_steering_seed(seed, f"root {r} seed {k}")
            if not mk:
                continue
            _require_left_monogenic(mk, f"root {r} seed {k}")
            solution = solution + SteeringExpression(
                spec.m, [(SteeringSymbol.power_exp(k, r), mk)]
            )
    return solution


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(coeffs: Sequence[ScalarLike]) -> list[Tuple[Fraction, int]]:
    """All rational roots (with multiplicity) of a_0 x^n + ... + a_n.

    Raises if a non-constant factor with no rational roots is left over,
    naming its coefficients: irrational and complex roots are out of scope
    and must not be silently approximated.
    """
    work = [coerce_fraction(c) for c in coeffs]
    if not work or not work[0]:
        raise ValueError("leading coefficient must be nonzero")
    den = 1
    for c in work:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in work]
    roots: list[Tuple[Fraction, int]] = []
    zero_mult = 0
    while len(ints) > 1 and ints[-1] == 0:
        ints.pop()
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    current = [Fraction(c) for c in ints]
    if len(current) > 1:
        candidates = sorted(
            {
                Fraction(sign * p, q)
                for p in _divisors(ints[-1])
                for q in _divisors(ints[0])
                for sign in (1, -1)
                if p
            }
        )
        for cand in candidates:
            mult = 0
            while len(current) > 1:
                quotient, remainder = _synthetic_divide(current, cand)
                if remainder:
                    break
                current = list(quotient)
                mult += 1
            if mult:
                roots.append((cand, mult))
        if len(current) > 1:
            left = ", ".join(format_fraction(c) for c in current)
            raise ValueError(
                f"characteristic polynomial has a factor with no rational roots: [{left}]"
            )
    return sorted(roots)
