"""Root systems E8, E6 and D5 in explicit coordinates, with Weyl group orbits and
the Weyl dimension formula."""

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cache, lru_cache
from itertools import combinations, product
from math import lcm
from typing import Dict, FrozenSet, Sequence, Set, Tuple, Union

from sympy import Matrix, Rational
from tqdm import tqdm

from lie_kring import logger
from lie_kring.errors import DomainError, IntegralityError, UnsupportedScaleError

from .charspace import FormalCharacter, Weight

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
SIXTH = Fraction(1, 6)



class RootSystemKind(str, Enum):
    E8 = "E8"
    E6 = "E6"
    D5 = "D5"


@dataclass(frozen=True, eq=False)
class RootSystem:
    kind: RootSystemKind
    ambient_dim: int
    simple_roots: Tuple[Weight, ...]
    all_roots: FrozenSet[Weight]
    # ordered by height, then lexicographically.
    positive_roots: Tuple[Weight, ...]
    fundamental_weights: Tuple[Weight, ...]
    weyl_vector: Weight

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @staticmethod
    def inner_product(a: Weight, b: Weight) -> Fraction:
        return a.dot(b)

    def fundamental_weight(self, i: int) -> Weight:
        """1-based fundamental weight."""
        return self.fundamental_weights[i - 1]

    def dynkin_labels(self, w: Weight) -> Tuple[Fraction, ...]:
        """Pairings <w, alpha_i^vee>. All roots have norm 2, so coroots are the roots."""
        return tuple(w.dot(a) for a in self.simple_roots)

    def is_dominant(self, w: Weight) -> bool:
        return all(w.dot(a) >= 0 for a in self.simple_roots)

    def height(self, w: Weight) -> Fraction:
        """<w, rho>, which is the usual height on the root lattice."""
        return w.dot(self.weyl_vector)

    def from_dynkin_labels(self, labels: Sequence[int]) -> Weight:
        w = Weight.zero(self.ambient_dim)
        for label, fw in zip(labels, self.fundamental_weights):
            if label:
                w = w + fw.scale(label)
        return w

    def label(self, w: Weight) -> str:
        """Human readable name of a weight in the fundamental weight basis, e.g. "ϖ1+ϖ6"."""
        symbol = "π" if self.kind is RootSystemKind.D5 else "ϖ"
        parts = []
        for i, c in enumerate(self.dynkin_labels(w), start=1):
            if not c:
                continue
            coef = "" if c == 1 else ("-" if c == -1 else str(c))
            parts.append(f"{coef}{symbol}{i}")
        return "+".join(parts).replace("+-", "-") or "0"

    def __repr__(self) -> str:
        return f"RootSystem({self.kind.value}, rank={self.rank}, roots={len(self.all_roots)})"


def _signed_pairs(dim: int, count: int):
    """Roots ±x_i±x_j with i < j < count inside dimension `dim`."""
    for i, j in combinations(range(count), 2):
        for si, sj in product((1, -1), repeat=2):
            coords = [0] * dim
            coords[i], coords[j] = si, sj
            yield Weight(coords)


def _e8_roots():
    roots = set(_signed_pairs(8, 8))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.add(Weight(HALF * s for s in signs))
    return roots


def _e6_roots():
    roots = set(_signed_pairs(8, 5))
    for head in product((1, -1), repeat=5):
        for tail in (1, -1):
            signs = head + (tail,) * 3
            if signs.count(-1) % 2 == 0:
                roots.add(Weight(HALF * s for s in signs))
    return roots


def _d5_roots():
    return set(_signed_pairs(5, 5))


_SIMPLE_ROOTS = {
    RootSystemKind.E8: (
        (HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF),
        (1, 1, 0, 0, 0, 0, 0, 0),
        (-1, 1, 0, 0, 0, 0, 0, 0),
        (0, -1, 1, 0, 0, 0, 0, 0),
        (0, 0, -1, 1, 0, 0, 0, 0),
        (0, 0, 0, -1, 1, 0, 0, 0),
        (0, 0, 0, 0, -1, 1, 0, 0),
        (0, 0, 0, 0, 0, -1, 1, 0),
    ),
    # node numbering: arm 1-2-4-3-6, node 5 attached to 4.
    RootSystemKind.E6: (
        (HALF, HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF),
        (0, -1, 1, 0, 0, 0, 0, 0),
        (0, 1, 1, 0, 0, 0, 0, 0),
        (0, 0, -1, 1, 0, 0, 0, 0),
        (0, 0, 0, -1, 1, 0, 0, 0),
        (HALF, -HALF, -HALF, -HALF, -HALF, HALF, HALF, HALF),
    ),
    RootSystemKind.D5: (
        (1, -1, 0, 0, 0),
        (0, 1, -1, 0, 0),
        (0, 0, 1, -1, 0),
        (0, 0, 0, 1, -1),
        (0, 0, 0, 1, 1),
    ),
}

# listed E6 fundamental weights; checked against the inverse Gram matrix at build time.
E6_FUNDAMENTAL_WEIGHTS = (
    (1, 0, 0, 0, 0, -THIRD, -THIRD, -THIRD),
    (3 * HALF, -HALF, HALF, HALF, HALF, -SIXTH, -SIXTH, -SIXTH),
    (3 * HALF, HALF, HALF, HALF, HALF, SIXTH, SIXTH, SIXTH),
    (2, 0, 0, 1, 1, 0, 0, 0),
    (1, 0, 0, 0, 1, 0, 0, 0),
    (1, 0, 0, 0, 0, THIRD, THIRD, THIRD),
)

_ROOT_SETS = {
    RootSystemKind.E8: _e8_roots,
    RootSystemKind.E6: _e6_roots,
    RootSystemKind.D5: _d5_roots,
}

_AMBIENT_DIMS = {RootSystemKind.E8: 8, RootSystemKind.E6: 8, RootSystemKind.D5: 5}


def _inverse_gram(simple_roots: Sequence[Weight]) -> Tuple[Tuple[Fraction, ...], ...]:
    gram = Matrix(
        [[Rational(str(a.dot(b))) for b in simple_roots] for a in simple_roots]
    )
    inverse = gram.inv()
    return tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(gram.cols))
        for i in range(gram.rows)
    )


@cache
def build_root_system(kind: Union[RootSystemKind, str]) -> RootSystem:
    kind = RootSystemKind(kind)
    dim = _AMBIENT_DIMS[kind]
    simple = tuple(Weight(r) for r in _SIMPLE_ROOTS[kind])
    roots = frozenset(_ROOT_SETS[kind]())
    inv_gram = _inverse_gram(simple)

    def coefficients(w: Weight):
        pairings = [w.dot(a) for a in simple]
        return [sum((g * p for g, p in zip(row, pairings)), Fraction(0)) for row in inv_gram]

    positive = []
    for r in roots:
        coefs = coefficients(r)
        if any(c.denominator != 1 for c in coefs):
            raise IntegralityError(f"Root {r} is not in the lattice of simple roots")
        if all(c >= 0 for c in coefs):
            positive.append((sum(coefs), r))
        elif not all(c <= 0 for c in coefs):
            raise IntegralityError(f"Root {r} has mixed-sign simple root coefficients")
    positive_roots = tuple(r for _, r in sorted(positive))

    # varpi_i = sum_j (G^-1)_{ij} alpha_j
    fundamental = []
    for row in inv_gram:
        w = Weight.zero(dim)
        for g, a in zip(row, simple):
            if g:
                w = w + a.scale(g)
        fundamental.append(w)
    if kind is RootSystemKind.E6:
        listed = tuple(Weight(w) for w in E6_FUNDAMENTAL_WEIGHTS)
        if tuple(fundamental) != listed:
            raise IntegralityError(
                f"E6 fundamental weights {fundamental} do not match the listed ones"
            )
    for i, w in enumerate(fundamental):
        for j, a in enumerate(simple):
            if w.dot(a) != (1 if i == j else 0):
                raise IntegralityError(f"<varpi_{i + 1}, alpha_{j + 1}> != delta")

    rho = Weight.zero(dim)
    for r in positive_roots:
        rho = rho + r
    rho = rho.scale(HALF)

    rs = RootSystem(
        kind=kind,
        ambient_dim=dim,
        simple_roots=simple,
        all_roots=roots,
        positive_roots=positive_roots,
        fundamental_weights=tuple(fundamental),
        weyl_vector=rho,
    )
    logger.debug("Built %r.", rs)
    return rs


@dataclass(frozen=True)
class DominantWeight:
    """A weight in the closed dominant chamber of `rs`."""

    rs: RootSystem
    coords: Weight

    def __post_init__(self):
        if not self.rs.is_dominant(self.coords):
            raise DomainError(
                f"{self.coords} is not dominant for {self.rs.kind.value}: labels {self.rs.dynkin_labels(self.coords)}"
            )

    @classmethod
    def fundamental(cls, rs: RootSystem, i: int) -> "DominantWeight":
        return cls(rs, rs.fundamental_weight(i))

    def __str__(self) -> str:
        return self.rs.label(self.coords)


def _coords(rs: RootSystem, weight: Union[DominantWeight, Weight]) -> Weight:
    if isinstance(weight, DominantWeight):
        return weight.coords
    weight = weight if isinstance(weight, Weight) else Weight(weight)
    DominantWeight(rs, weight)
    return weight


def weyl_dimension(rs: RootSystem, weight: Union[DominantWeight, Weight]) -> int:
    """dim V_lambda = prod over positive roots of <lambda+rho, alpha> / <rho, alpha>."""
    lam = _coords(rs, weight)
    shifted = lam + rs.weyl_vector
    value = Fraction(1)
    for alpha in rs.positive_roots:
        value *= shifted.dot(alpha) / rs.weyl_vector.dot(alpha)
    if value.denominator != 1:
        raise IntegralityError(f"Weyl dimension of {lam} is {value}")
    return value.numerator


def reflect(w: Weight, alpha: Weight) -> Weight:
    """s_alpha(w) = w - 2<w,alpha>/<alpha,alpha> alpha."""
    c = 2 * w.dot(alpha) / alpha.dot(alpha)
    if not c:
        return w
    return w - alpha.scale(c)


def _integral_pairings(rs: RootSystem, w: Weight) -> bool:
    return all((2 * w.dot(a) / a.dot(a)).denominator == 1 for a in rs.simple_roots)


def weyl_orbit(rs: RootSystem, w: Weight, progress: bool = False) -> Set[Weight]:
    """Closure of {w} under simple reflections, by breadth-first search."""
    w = w if isinstance(w, Weight) else Weight(w)
    if _integral_pairings(rs, w):
        # all reflection coefficients are integers: search in integer coordinates scaled by `scale`.
        scale = lcm(*(c.denominator for c in w), *(c.denominator for a in rs.simple_roots for c in a))
        roots = [
            (tuple(int(c * scale) for c in a), int(scale * scale * a.dot(a) / 2))
            for a in rs.simple_roots
        ]
        start = tuple(int(c * scale) for c in w)

        def reflections(v):
            for a, denom in roots:
                pairing = sum(x * y for x, y in zip(v, a))
                if pairing:
                    # integral by the pairing check; reflections preserve it.
                    c = pairing // denom
                    yield tuple(x - c * y for x, y in zip(v, a))

        orbit = _bfs(rs, start, reflections, progress)
        return {Weight._make(Fraction(c, scale) for c in v) for v in orbit}

    def fraction_reflections(v):
        for alpha in rs.simple_roots:
            yield reflect(v, alpha)

    return _bfs(rs, w, fraction_reflections, progress)


def _bfs(rs: RootSystem, start, neighbours, progress: bool) -> set:
    seen = {start}
    queue = deque([start])
    bar = tqdm(desc=f"{rs.kind.value} orbit", unit="weights") if progress else None
    while queue:
        v = queue.popleft()
        for image in neighbours(v):
            if image not in seen:
                seen.add(image)
                queue.append(image)
        if bar is not None:
            bar.update(1)
    if bar is not None:
        bar.close()
    return seen


def weyl_group_order(rs: RootSystem, allow_slow: bool = False) -> int:
    """|W| as the size of the orbit of the regular weight rho."""
    if rs.kind is RootSystemKind.E8 and not allow_slow:
        raise UnsupportedScaleError(
            "The E8 Weyl group has 696729600 elements; pass allow_slow to enumerate the orbit of rho."
        )
    return len(weyl_orbit(rs, rs.weyl_vector, progress=allow_slow))


@lru_cache(maxsize=None)
def dominant_representative(rs: RootSystem, w: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of `w`."""
    w = w if isinstance(w, Weight) else Weight(w)
    while True:
        for alpha in rs.simple_roots:
            if w.dot(alpha) < 0:
                w = reflect(w, alpha)
                break
        else:
            return w


def is_weyl_invariant(rs: RootSystem, chi: FormalCharacter) -> bool:
    """Multiplicities are constant along every simple reflection."""
    for w, m in chi.items():
        for alpha in rs.simple_roots:
            if chi.multiplicity(reflect(w, alpha)) != m:
                return False
    return True


def dominant_terms(rs: RootSystem, chi: FormalCharacter) -> Dict[Weight, int]:
    return {w: m for w, m in chi.items() if rs.is_dominant(w)}
