"""Exact arithmetic in the universal real Clifford algebra R_{0,m}.

Generators e_1..e_m obey e_j^2 = -1 and e_i e_j = -e_j e_i for i != j.
A basis blade e_A = e_{j_1}...e_{j_k} (j_1 < ... < j_k) is stored as a bit
mask with bit j-1 standing for generator e_j; the empty mask is the scalar
unit.  Multiplying two blades costs O(m) word operations: the sign is the
parity of the transpositions needed to merge the two masks, plus one flip
per generator that squares away, and the resulting mask is the symmetric
difference of the inputs.

Coefficients are fractions.Fraction throughout; there is no floating point
mode.  Multivector values are immutable: every operation builds a new
object, so values can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

MIN_GENERATORS = 2
MAX_GENERATORS = 16

ScalarLike = Union[int, Fraction]

_ZERO = Fraction(0)


def coerce_fraction(value: ScalarLike) -> Fraction:
    """Return ``value`` as a Fraction, rejecting floats and other inexact types."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(
        f"expected an exact rational (int or Fraction), got {type(value).__name__}"
    )


def format_fraction(value: Fraction) -> str:
    """Canonical decimal-free encoding used by every JSON document."""
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(raw: object) -> Fraction:
    """Parse a "num/den" string (or bare integer) back into a Fraction."""
    if isinstance(raw, str):
        return Fraction(raw)
    if isinstance(raw, int) and not isinstance(raw, bool):
        return Fraction(raw)
    raise TypeError(f"fractions must be encoded as strings, got {type(raw).__name__}")


def blade_product(a: int, b: int) -> Tuple[int, int]:
    """Sign and mask of e_A * e_B for blade masks ``a`` and ``b``.

    The transposition count is sum over s >= 1 of popcount((a >> s) & b):
    each pair (j in A, i in B) with j > i is counted exactly once, at shift
    s = j - i.  Every generator common to both masks then squares to -1,
    flipping the sign once more.
    """
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    sign = -1 if (swaps + (a & b).bit_count()) & 1 else 1
    return sign, a ^ b


def conjugation_sign(mask: int) -> int:
    """(-1)^(k(k+1)/2) for a blade of grade k."""
    k = mask.bit_count()
    return -1 if (k * (k + 1) // 2) & 1 else 1


def mask_from_indices(indices: Iterable[int], m: int) -> int:
    mask = 0
    previous = 0
    for j in indices:
        if not isinstance(j, int) or not 1 <= j <= m:
            raise ValueError(f"generator index {j!r} outside 1..{m}")
        if j <= previous:
            raise ValueError("blade indices must be strictly increasing")
        mask |= 1 << (j - 1)
        previous = j
    return mask


def indices_from_mask(mask: int) -> Tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


class Multivector:
    """Immutable sparse element of R_{0,m}.

    ``terms`` maps blade masks to nonzero rational coefficients; the zero
    multivector has an empty mapping.  Two multivectors are equal exactly
    when their term mappings are equal.
    """

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Mapping[int, ScalarLike] | Iterable = ()):
        if not isinstance(m, int) or not MIN_GENERATORS <= m <= MAX_GENERATORS:
            raise ValueError(
                f"generator count must be in {MIN_GENERATORS}..{MAX_GENERATORS}, got {m!r}"
            )
        limit = 1 << m
        data: dict[int, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mask, coef in items:
            if not isinstance(mask, int) or not 0 <= mask < limit:
                raise ValueError(f"blade mask {mask!r} is not valid for m={m}")
            acc = data.get(mask, _ZERO) + coerce_fraction(coef)
            if acc:
                data[mask] = acc
            else:
                data.pop(mask, None)
        self.m = m
        self._terms = {mask: data[mask] for mask in sorted(data)}

    @classmethod
    def _unsafe(cls, m: int, data: dict[int, Fraction]) -> "Multivector":
        # data must already be validated and free of zero coefficients
        mv = object.__new__(cls)
        mv.m = m
        mv._terms = {mask: data[mask] for mask in sorted(data)}
        return mv

    @classmethod
    def zero(cls, m: int) -> "Multivector":
        return cls(m)

    @classmethod
    def scalar(cls, m: int, value: ScalarLike) -> "Multivector":
        return cls(m, {0: value})

    @classmethod
    def blade(cls, m: int, indices: Iterable[int], coef: ScalarLike = 1) -> "Multivector":
        return cls(m, {mask_from_indices(indices, m): coef})

    # -- container-ish access ------------------------------------------------

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, mask: int) -> Fraction:
        return self._terms.get(mask, _ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object):
        if isinstance(other, Multivector):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            q = coerce_fraction(other)
            return self._terms == ({0: q} if q else {})
        return NotImplemented

    __hash__ = None  # mutable mapping inside; value identity is by terms

    # -- ring structure ------------------------------------------------------

    def _require_same_m(self, other: "Multivector") -> None:
        if self.m != other.m:
            raise ValueError(f"dimension mismatch: m={self.m} vs m={other.m}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Multivector.scalar(self.m, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._require_same_m(other)
        data = dict(self._terms)
        for mask, q in other._terms.items():
            acc = data.get(mask, _ZERO) + q
            if acc:
                data[mask] = acc
            else:
                data.pop(mask, None)
        return Multivector._unsafe(self.m, data)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._unsafe(self.m, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, Multivector):
            return self + (-other)
        if isinstance(other, (int, Fraction)):
            return self + (-coerce_fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = coerce_fraction(other)
            if not q:
                return Multivector.zero(self.m)
            return Multivector._unsafe(self.m, {k: v * q for k, v in self._terms.items()})
        if isinstance(other, Multivector):
            self._require_same_m(other)
            data: dict[int, Fraction] = {}
            for ma, ca in self._terms.items():
                for mb, cb in other._terms.items():
                    sign, mask = blade_product(ma, mb)
                    q = ca * cb
                    if sign < 0:
                        q = -q
                    acc = data.get(mask, _ZERO) + q
                    if acc:
                        data[mask] = acc
                    else:
                        data.pop(mask, None)
            return Multivector._unsafe(self.m, data)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        q = coerce_fraction(other)
        if not q:
            raise ZeroDivisionError("division of a multivector by zero")
        return self * (Fraction(1) / q)

    # -- algebra operations ----------------------------------------------------

    def conjugate(self) -> "Multivector":
        """Anti-involution scaling each blade e_A by (-1)^(|A|(|A|+1)/2)."""
        return Multivector._unsafe(
            self.m,
            {
                mask: (q if conjugation_sign(mask) > 0 else -q)
                for mask, q in self._terms.items()
            },
        )

    def grade(self, k: int) -> "Multivector":
        """Projection onto the subspace of k-vectors."""
        if not 0 <= k <= self.m:
            raise ValueError(f"grade {k} out of range 0..{self.m}")
        return Multivector._unsafe(
            self.m, {mask: q for mask, q in self._terms.items() if mask.bit_count() == k}
        )

    def homogeneous_grade(self) -> int | None:
        """Common grade of all stored blades, or None when mixed or zero."""
        grades = {mask.bit_count() for mask in self._terms}
        if len(grades) == 1:
            return grades.pop()
        return None

    def scalar_part(self) -> Fraction:
        return self._terms.get(0, _ZERO)

    def norm_sq(self) -> Fraction:
        """Sum of squared coefficients; equals the scalar part of a*conj(a)."""
        total = _ZERO
        for q in self._terms.values():
            total += q * q
        return total

    # -- serialization ---------------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "m": self.m,
            "terms": [
                {"blades": list(indices_from_mask(mask)), "coef": format_fraction(q)}
                for mask, q in self._terms.items()
            ],
        }

    @classmethod
    def from_obj(cls, obj: Mapping) -> "Multivector":
        if not isinstance(obj, Mapping):
            raise TypeError("multivector document must be a JSON object")
        m = obj["m"]
        if not isinstance(m, int):
            raise TypeError("multivector field 'm' must be an integer")
        pairs = []
        for entry in obj.get("terms", []):
            pairs.append((mask_from_indices(entry["blades"], m), parse_fraction(entry["coef"])))
        return cls(m, pairs)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mask, q in self._terms.items():
            blade = "*".join(f"e{j}" for j in indices_from_mask(mask))
            parts.append(f"({format_fraction(q)}){'*' + blade if blade else ''}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Multivector(m={self.m}, {str(self)})"


def inner_outer(v: Multivector, f: Multivector) -> Tuple[Multivector, Multivector]:
    """Split v*f into its grade k-1 and grade k+1 parts.

    ``v`` must be a 1-vector and ``f`` grade-homogeneous of some grade k;
    the parts are (v*f - (-1)^k f*v)/2 and (v*f + (-1)^k f*v)/2 and sum
    back to the geometric product.
    """
    if v.m != f.m:
        raise ValueError(f"dimension mismatch: m={v.m} vs m={f.m}")
    if v and v.homogeneous_grade() != 1:
        raise ValueError("first argument must be a pure 1-vector")
    if not f:
        zero = Multivector.zero(v.m)
        return zero, zero
    k = f.homogeneous_grade()
    if k is None:
        raise ValueError("second argument must be grade-homogeneous")
    vf = v * f
    fv = f * v
    if k % 2:
        fv = -fv
    half = Fraction(1, 2)
    return (vf - fv) * half, (vf + fv) * half


def e1_sandwich(a: Multivector) -> Multivector:
    """e_1 * a * e_1; flips the sign of every blade that commutes with e_1."""
    e1 = Multivector.blade(a.m, (1,))
    return e1 * a * e1
