"""Univariate integer polynomials in t = lambda_1 and Z-module invariants of quotients of Z[t]."""

from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

import sympy as sp
from pydantic import BaseModel
from sympy import ZZ, Matrix, Poly
from sympy.matrices.normalforms import smith_normal_form

from lie_kring.config import config
from lie_kring.errors import InconclusiveError

t, u = sp.symbols("t u")


def int_poly(expr: Union[sp.Expr, int, Poly]) -> Poly:
    if isinstance(expr, Poly):
        return Poly(expr.as_expr(), t, domain=ZZ)
    return Poly(expr, t, domain=ZZ)


def poly_str(p: Poly) -> str:
    return str(p.as_expr())


def is_unit(p: Poly) -> bool:
    return p.is_ground and abs(int(p.LC())) == 1


def is_monic_up_to_sign(p: Poly) -> bool:
    return not p.is_zero and abs(int(p.LC())) == 1


def normalize(p: Poly) -> Poly:
    """Associate with positive leading coefficient."""
    if not p.is_zero and p.LC() < 0:
        return -p
    return p


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """gcd in Z[t]: gcd of contents times gcd of primitive parts, positive leading coefficient."""
    if f.is_zero:
        return normalize(g)
    if g.is_zero:
        return normalize(f)
    cf, pf = f.primitive()
    cg, pg = g.primitive()
    content = gcd(int(cf), int(cg))
    _, primitive = pf.gcd(pg).primitive()
    return normalize(primitive).mul_ground(content)


def coefficient_vector(p: Poly, length: int) -> List[int]:
    """Coefficients of 1, t, ..., t^(length-1)."""
    coeffs = [int(c) for c in reversed(p.all_coeffs())] if not p.is_zero else []
    if len(coeffs) > length:
        raise ValueError(f"{p.as_expr()} does not fit in degree {length - 1}")
    return coeffs + [0] * (length - len(coeffs))


class ZModule(BaseModel):
    """Finitely generated abelian group Z^z_rank + sum Z/torsion_i.

    z_rank None means the module is not finitely generated (e.g. Z[t] itself).
    """

    z_rank: Optional[int]
    torsion: List[int] = []
    # False when the invariants come from a stabilized truncation.
    exact: bool = True

    def is_zero(self) -> bool:
        return self.z_rank == 0 and not self.torsion

    def __str__(self) -> str:
        if self.z_rank is None:
            return "Z[t]"
        parts = []
        if self.z_rank:
            parts.append("Z" if self.z_rank == 1 else f"Z^{self.z_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) or "0"


def lattice_invariants(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[int, List[int]]:
    """Free rank and torsion of Z^ncols modulo the row span, via Smith normal form."""
    if not rows:
        return ncols, []
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    nonzero = [d for d in diagonal if d]
    return ncols - len(nonzero), sorted(d for d in nonzero if d > 1)


def _truncated_invariants(relations: Sequence[Poly], degree: int) -> Tuple[int, List[int]]:
    rows = []
    for q in relations:
        for k in range(degree - q.degree() + 1):
            rows.append(coefficient_vector(q.mul(int_poly(t**k)), degree + 1))
    return lattice_invariants(rows, degree + 1)


def quotient_invariants(relations: Sequence[Poly]) -> ZModule:
    """Z-module structure of Z[t]/(relations)."""
    relations = [int_poly(p) for p in relations]
    relations = [p for p in relations if not p.is_zero]
    if not relations:
        return ZModule(z_rank=None)
    if any(is_unit(p) for p in relations):
        return ZModule(z_rank=0)
    monic = [p for p in relations if is_monic_up_to_sign(p)]
    if monic:
        # Z[t]/(p) is free on 1, t, ..., t^(d-1); the other relations act on that basis.
        p = min(monic, key=lambda q: q.degree())
        d = p.degree()
        rows = [
            coefficient_vector(q.mul(int_poly(t**k)).rem(p), d)
            for q in relations
            if q is not p
            for k in range(d)
        ]
        z_rank, torsion = lattice_invariants(rows, d)
        return ZModule(z_rank=z_rank, torsion=torsion)
    n = 2 * max(p.degree() for p in relations) + config.truncation_padding
    first = _truncated_invariants(relations, n)
    second = _truncated_invariants(relations, n + 1)
    if first != second:
        raise InconclusiveError(
            "Lattice truncation did not stabilize",
            {
                "relations": [poly_str(p) for p in relations],
                "degree": n,
                f"invariants at {n}": first,
                f"invariants at {n + 1}": second,
            },
        )
    return ZModule(z_rank=first[0], torsion=first[1], exact=False)


def q_dimension(relations: Sequence[Poly]) -> Optional[int]:
    """dim over Q of Q[t]/(relations): the degree of their gcd over Q, None if all vanish."""
    g = Poly(0, t, domain=ZZ)
    for p in relations:
        g = poly_gcd(g, int_poly(p))
    if g.is_zero:
        return None
    return g.degree()


def substitute_shift(p: Poly, shift: int = 10) -> Poly:
    """The polynomial in u obtained by t = u + shift."""
    return Poly(p.as_expr().subs(t, u + shift), u, domain=ZZ)
