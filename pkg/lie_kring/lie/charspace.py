"""Sparse exact weight and character algebra.

A weight is a vector of exact rationals in an ambient Euclidean space. The character
monomial of the weight (c_1, ..., c_n) is u_1^{2c_1} ... u_n^{2c_n}, so integral,
half-integral and third-integral weights share one representation and no exponent
vectors are ever materialized.
"""

from collections import defaultdict
from fractions import Fraction
from math import comb
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from lie_kring.errors import (
    DimensionMismatchError,
    EffectivenessError,
    IntegralityError,
)

RationalLike = Union[int, Fraction, str]


def _fraction(value: RationalLike) -> Fraction:
    return value if type(value) is Fraction else Fraction(value)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Weight(tuple):
    """Exact rational coordinate vector of a torus weight."""

    __slots__ = ()

    def __new__(cls, coords: Iterable[RationalLike]):
        return tuple.__new__(cls, [_fraction(c) for c in coords])

    @classmethod
    def _make(cls, coords: Iterable[Fraction]) -> "Weight":
        # coordinates are already Fractions.
        return tuple.__new__(cls, coords)

    @classmethod
    def zero(cls, dim: int) -> "Weight":
        return cls._make([Fraction(0)] * dim)

    @classmethod
    def basis(cls, dim: int, index: int) -> "Weight":
        """Standard basis vector x_{index+1}."""
        coords = [Fraction(0)] * dim
        coords[index] = Fraction(1)
        return cls._make(coords)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse the canonical form "(c1,...,cn)"."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"Not a weight: {text!r}")
        return cls(c.strip() for c in body[1:-1].split(",") if c.strip())

    @property
    def dim(self) -> int:
        return len(self)

    def _check(self, other: "Weight"):
        if len(self) != len(other):
            raise DimensionMismatchError(
                f"Weights of dimension {len(self)} and {len(other)}"
            )

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._make([a + b for a, b in zip(self, other)])

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight._make([a - b for a, b in zip(self, other)])

    def __neg__(self) -> "Weight":
        return Weight._make([-a for a in self])

    def scale(self, k: RationalLike) -> "Weight":
        k = _fraction(k)
        return Weight._make([k * a for a in self])

    def dot(self, other: "Weight") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self) -> str:
        return f"Weight({self})"

    def __str__(self) -> str:
        return "(" + ",".join(format_rational(c) for c in self) + ")"


# exact rational matrix given as rows (target_dim rows of source_dim entries).
LinearMap = Tuple[Tuple[Fraction, ...], ...]


def linear_map(rows: Sequence[Sequence[RationalLike]]) -> LinearMap:
    return tuple(tuple(_fraction(c) for c in row) for row in rows)


def apply_map(matrix: LinearMap, weight: Weight) -> Weight:
    return Weight._make(
        [sum((a * c for a, c in zip(row, weight)), Fraction(0)) for row in matrix]
    )


class FormalCharacter:
    """Finitely supported map from weights to nonzero integer multiplicities.

    Values are immutable. Ring operations: `+`, `-`, `*` (tensor product) and
    integer scaling.
    """

    __slots__ = ("ambient_dim", "_terms")

    def __init__(
        self,
        ambient_dim: int,
        terms: Union[Mapping[Weight, int], Iterable[Tuple[Weight, int]]] = (),
    ):
        if ambient_dim < 1:
            raise ValueError(f"Ambient dimension must be positive: {ambient_dim}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected = defaultdict(int)
        for weight, mult in items:
            if not isinstance(weight, Weight):
                weight = Weight(weight)
            if len(weight) != ambient_dim:
                raise DimensionMismatchError(
                    f"Weight {weight} does not live in dimension {ambient_dim}"
                )
            if isinstance(mult, Fraction):
                if mult.denominator != 1:
                    raise IntegralityError(f"Non-integer multiplicity {mult} at {weight}")
                mult = mult.numerator
            collected[weight] += int(mult)
        self.ambient_dim = ambient_dim
        self._terms = MappingProxyType({w: m for w, m in collected.items() if m})

    @classmethod
    def _trusted(cls, ambient_dim: int, terms: dict) -> "FormalCharacter":
        # terms already validated and free of zero multiplicities.
        obj = object.__new__(cls)
        obj.ambient_dim = ambient_dim
        obj._terms = MappingProxyType(terms)
        return obj

    @classmethod
    def trivial(cls, ambient_dim: int, mult: int = 1) -> "FormalCharacter":
        return cls.monomial(Weight.zero(ambient_dim), mult)

    @classmethod
    def zero(cls, ambient_dim: int) -> "FormalCharacter":
        return cls._trusted(ambient_dim, {})

    @classmethod
    def monomial(cls, weight: Weight, mult: int = 1) -> "FormalCharacter":
        weight = weight if isinstance(weight, Weight) else Weight(weight)
        return cls(len(weight), {weight: mult})

    @classmethod
    def from_weights(cls, weights: Iterable[Weight], ambient_dim: int) -> "FormalCharacter":
        """Character of the multiset `weights`, each with multiplicity 1."""
        return cls(ambient_dim, ((w, 1) for w in weights))

    @property
    def terms(self) -> Mapping[Weight, int]:
        return self._terms

    def items(self):
        return self._terms.items()

    def weights(self) -> Iterator[Weight]:
        return iter(self._terms)

    def multiplicity(self, weight: Weight) -> int:
        return self._terms.get(weight, 0)

    @property
    def dimension(self) -> int:
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ambient_dim, frozenset(self._terms.items())))

    def _check(self, other: "FormalCharacter"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"Characters of ambient dimension {self.ambient_dim} and {other.ambient_dim}"
            )

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        if isinstance(other, int):
            other = FormalCharacter.trivial(self.ambient_dim, other)
        self._check(other)
        terms = dict(self._terms)
        for w, m in other.items():
            total = terms.get(w, 0) + m
            if total:
                terms[w] = total
            else:
                terms.pop(w, None)
        return FormalCharacter._trusted(self.ambient_dim, terms)

    __radd__ = __add__

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter._trusted(
            self.ambient_dim, {w: -m for w, m in self.items()}
        )

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        if isinstance(other, int):
            other = FormalCharacter.trivial(self.ambient_dim, other)
        return self + (-other)

    def __mul__(self, other) -> "FormalCharacter":
        if isinstance(other, int):
            if other == 0:
                return FormalCharacter.zero(self.ambient_dim)
            return FormalCharacter._trusted(
                self.ambient_dim, {w: other * m for w, m in self.items()}
            )
        return multiply(self, other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"FormalCharacter(ambient_dim={self.ambient_dim}, terms={len(self)}, dimension={self.dimension})"

    def sorted_items(self):
        return sorted(self._terms.items())

    def to_text(self) -> str:
        """Canonical serialization: one "mult * (c1,...,cn)" line per term, lexicographic."""
        return "\n".join(f"{m} * {w}" for w, m in self.sorted_items())

    @classmethod
    def from_text(cls, text: str, ambient_dim: int) -> "FormalCharacter":
        terms = []
        for line in text.splitlines():
            if not line.strip():
                continue
            mult, weight = line.split("*", 1)
            terms.append((Weight.parse(weight), int(mult)))
        return cls(ambient_dim, terms)


def multiply(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    """Tensor product: convolution of the weight multisets."""
    a._check(b)
    if len(a) > len(b):
        a, b = b, a
    terms = defaultdict(int)
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            terms[w1 + w2] += m1 * m2
    return FormalCharacter._trusted(
        a.ambient_dim, {w: m for w, m in terms.items() if m}
    )


def adams(k: int, chi: FormalCharacter) -> FormalCharacter:
    """Adams operation psi^k: every weight is scaled by k."""
    if k < 1:
        raise ValueError(f"Adams operations are defined for k >= 1, not {k}")
    if k == 1:
        return chi
    return FormalCharacter._trusted(
        chi.ambient_dim, {w.scale(k): m for w, m in chi.items()}
    )


def exterior_power(k: int, chi: FormalCharacter) -> FormalCharacter:
    """Lambda^k of an effective character via Newton's identity
    k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} psi^i."""
    if k < 0:
        raise ValueError(f"Exterior power degree must be nonnegative, not {k}")
    if not chi.is_effective():
        raise EffectivenessError("Exterior powers require an effective character")
    dim = chi.ambient_dim
    if k > chi.dimension:
        return FormalCharacter.zero(dim)
    elementary = [{Weight.zero(dim): 1}]
    power_sums = {}
    for n in range(1, k + 1):
        acc = defaultdict(int)
        for i in range(1, n + 1):
            if i not in power_sums:
                power_sums[i] = adams(i, chi).terms
            sign = 1 if i % 2 else -1
            for w1, m1 in elementary[n - i].items():
                for w2, m2 in power_sums[i].items():
                    acc[w1 + w2] += sign * m1 * m2
        e_n = {}
        for w, m in acc.items():
            value = Fraction(m, n)
            if value.denominator != 1:
                raise IntegralityError(
                    f"Newton identity produced multiplicity {value} at {w} for Lambda^{n}"
                )
            if value:
                e_n[w] = value.numerator
        elementary.append(e_n)
    result = FormalCharacter._trusted(dim, elementary[k])
    if result.dimension != comb(chi.dimension, k):
        raise IntegralityError(
            f"dim Lambda^{k} = {result.dimension}, expected C({chi.dimension},{k})"
        )
    return result


def conjugate(chi: FormalCharacter) -> FormalCharacter:
    """Complex conjugation: every weight is negated."""
    return FormalCharacter._trusted(chi.ambient_dim, {-w: m for w, m in chi.items()})


def project(chi: FormalCharacter, matrix: LinearMap) -> FormalCharacter:
    """Apply a linear map to every weight; colliding images are summed."""
    if not matrix or any(len(row) != chi.ambient_dim for row in matrix):
        raise DimensionMismatchError(
            f"Map with rows of length {[len(r) for r in matrix]} cannot act on dimension {chi.ambient_dim}"
        )
    terms = defaultdict(int)
    for w, m in chi.items():
        terms[apply_map(matrix, w)] += m
    return FormalCharacter._trusted(len(matrix), {w: m for w, m in terms.items() if m})
