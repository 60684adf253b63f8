"""Homology of the Koszul complex 0 -> B -> B^2 -> B -> 0 over B = Z[t].

Basis X, Y of B^2 and X∧Y of the top term, with d(X) = xbar, d(Y) = ybar and
d(X∧Y) = d(X)·Y - d(Y)·X.
"""

from typing import Any, List, Optional

from pydantic import BaseModel, Field

from lie_kring import logger

from .polys import (
    Poly,
    ZModule,
    int_poly,
    is_unit,
    poly_gcd,
    poly_str,
    q_dimension,
    quotient_invariants,
)


class HomologyGroup(BaseModel):
    """A quotient of a free B-module: generators modulo relations (applied to every generator)."""

    generators: List[str]
    relations: List[str] = []
    # the relations as polynomials in t; not part of the report.
    relation_polys: List[Any] = Field(default=[], exclude=True, repr=False)
    # rank as a free B-module, None when not free.
    b_rank: Optional[int] = None
    z_module: ZModule
    # dimension after tensoring with Q, None when infinite.
    q_rank: Optional[int] = None

    def is_zero(self) -> bool:
        return not self.generators

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        gens = ", ".join(self.generators)
        if not self.relations:
            return f"B<{gens}>"
        return f"B<{gens}>/({', '.join(self.relations)})"


def _zero() -> HomologyGroup:
    return HomologyGroup(generators=[], z_module=ZModule(z_rank=0), q_rank=0)


def _free(generators: List[str]) -> HomologyGroup:
    return HomologyGroup(
        generators=generators,
        b_rank=len(generators),
        z_module=ZModule(z_rank=None),
    )


def _cyclic(generator: str, relations: List[Poly]) -> HomologyGroup:
    """B/(relations) on one generator."""
    relations = [p for p in relations if not p.is_zero]
    if any(is_unit(p) for p in relations):
        return _zero()
    z_module = quotient_invariants(relations)
    # the unit ideal need not have a unit generator, e.g. (2, 3).
    if z_module.is_zero():
        return _zero()
    return HomologyGroup(
        generators=[generator],
        relations=[poly_str(p) for p in relations],
        relation_polys=relations,
        b_rank=None if relations else 1,
        z_module=z_module,
        q_rank=q_dimension(relations),
    )


class TorPresentation(BaseModel):
    xbar: str
    ybar: str
    h0: HomologyGroup
    h1: HomologyGroup
    h2: HomologyGroup

    def euler_characteristic(self) -> Optional[int]:
        """rank H0 - rank H1 + rank H2 over Q, None if some rank is infinite."""
        ranks = [h.q_rank for h in (self.h0, self.h1, self.h2)]
        if any(r is None for r in ranks):
            return None
        return ranks[0] - ranks[1] + ranks[2]

    def z_ranks_match_q_ranks(self) -> bool:
        return all(
            h.z_module.z_rank == h.q_rank
            for h in (self.h0, self.h1, self.h2)
            if h.q_rank is not None
        )


def koszul_tor(xbar, ybar) -> TorPresentation:
    """Tor^{Z[x,y]}(B, Z) for the B-algebra structure x -> xbar, y -> ybar."""
    x, y = int_poly(xbar), int_poly(ybar)
    if x.is_zero and y.is_zero:
        h0, h1, h2 = _free(["1"]), _free(["X", "Y"]), _free(["X∧Y"])
    elif x.is_zero or y.is_zero:
        p = y if x.is_zero else x
        # the basis vector with zero differential is a cycle; d(X∧Y) = ±p times it.
        cycle = "X" if x.is_zero else "Y"
        h0 = _cyclic("1", [p])
        h1 = _cyclic(cycle, [p])
        h2 = _zero()
    else:
        g = poly_gcd(x, y)
        h0 = _cyclic("1", [x, y])
        # cycles are B·((ybar/g)X - (xbar/g)Y); boundaries are g times that.
        cycle = f"({poly_str(y.exquo(g))})·X - ({poly_str(x.exquo(g))})·Y"
        h1 = _cyclic(cycle, [g])
        h2 = _zero()
    tor = TorPresentation(xbar=poly_str(x), ybar=poly_str(y), h0=h0, h1=h1, h2=h2)
    logger.info("Koszul homology for (%s, %s): H0=%s, H1=%s, H2=%s.", tor.xbar, tor.ybar, h0, h1, h2)
    return tor
