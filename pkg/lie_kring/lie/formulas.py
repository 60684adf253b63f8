"""Right-hand sides of the branching formulas as sympy expressions over the Spin(10)
generators, and their evaluation in the character ring."""

from typing import Mapping

import sympy as sp

from lie_kring.errors import DimensionMismatchError

from .charspace import FormalCharacter

l1, l2, l3, l4 = sp.symbols("lambda1 lambda2 lambda3 lambda4")
dp, dm = sp.symbols("Delta_p Delta_m")
xi = sp.Symbol("xi")
# Lambda^2(lambda_2) has no expression in the generators of lower degree used here.
wedge2_l2 = sp.Symbol("Wedge2_lambda2")

# Proposition 4.2, as printed.
PROP_4_2 = {
    "i": 1 + l1 + dp,
    "ii": 1 + l1 + dm,
    "iii": 1 + l2 + dp + dm,
    "iv": l2 + l3 + l1 * dm + l1 + dm,
    "v": l2 + l3 + l1 * dp + l1 + dp,
    "vi": 1 + 2 * l2 + (1 + l2) * (dp + dm) + 2 * l3 + l1 * l3,
}

# xi-graded restrictions to Spin(10)·S^1.
V = l1 * xi**-2 + dm * xi + xi**4
V_PRIME = l1 * xi**2 + dp * xi**-1 + xi**-4
E6_ADJOINT = 1 + l2 + dp * xi**3 + dm * xi**-3
DELTA8_PLUS = dp * xi**3 + dm * xi**-3 + 3 * dp * xi**-1 + 3 * dm * xi
E8_ADJOINT = E6_ADJOINT + 8 + 3 * (V + V_PRIME)
WEDGE2_ALPHA = l2 * xi**-4 + l3 * xi**2 + l1 * dm * xi**-1 + l1 * xi**2 + dm * xi**5
WEDGE2_BETA = l2 * xi**4 + l3 * xi**-2 + l1 * dp * xi + l1 * xi**-2 + dp * xi**-5
WEDGE2_GAMMA = (
    l2
    + (1 + l2) * (dp * xi**3 + dm * xi**-3)
    + l3 * xi**6
    + l3 * xi**-6
    + wedge2_l2
    + dp * dm
)
# WEDGE2_GAMMA after Lemma 4.1 and the Clifford relation.
WEDGE2_GAMMA_REDUCED = (
    1
    + 2 * l2
    + (1 + l2) * (dp * xi**3 + dm * xi**-3)
    + l3 * xi**6
    + l3 * xi**-6
    + l1 * l3
)

SPIN10_DIMENSIONS = {l1: 10, l2: 45, l3: 120, l4: 210, dp: 16, dm: 16, wedge2_l2: 990}

HALF_SPIN_SWAP = {dp: dm, dm: dp}


def swap_half_spin(expr: sp.Expr) -> sp.Expr:
    """Apply the outer automorphism of Spin(10), which interchanges Delta+ and Delta-."""
    return expr.subs(HALF_SPIN_SWAP, simultaneous=True)


def forget_xi(expr: sp.Expr) -> sp.Expr:
    return sp.expand(expr.subs(xi, 1))


def evaluate(expr: sp.Expr, assignment: Mapping[sp.Symbol, FormalCharacter], ambient_dim: int) -> FormalCharacter:
    """Evaluate a Laurent polynomial expression in the character ring.

    Negative powers are only allowed on symbols bound to a single weight (e.g. xi).
    """
    expr = sp.sympify(expr)
    if expr.is_Integer:
        return FormalCharacter.trivial(ambient_dim, int(expr))
    if expr.is_Symbol:
        chi = assignment[expr]
        if chi.ambient_dim != ambient_dim:
            raise DimensionMismatchError(f"{expr} lives in dimension {chi.ambient_dim}, not {ambient_dim}")
        return chi
    if expr.is_Add:
        total = FormalCharacter.zero(ambient_dim)
        for arg in expr.args:
            total = total + evaluate(arg, assignment, ambient_dim)
        return total
    if expr.is_Mul:
        result = FormalCharacter.trivial(ambient_dim)
        for arg in expr.args:
            result = result * evaluate(arg, assignment, ambient_dim)
        return result
    if expr.is_Pow:
        base, exponent = expr.args
        if not exponent.is_Integer:
            raise ValueError(f"Non-integer exponent in {expr}")
        n = int(exponent)
        chi = evaluate(base, assignment, ambient_dim)
        if n < 0:
            if len(chi) != 1 or chi.dimension != 1:
                raise ValueError(f"{base} is not invertible in the character ring")
            ((w, _),) = chi.items()
            return FormalCharacter.monomial(w.scale(n))
        result = FormalCharacter.trivial(ambient_dim)
        for _ in range(n):
            result = result * chi
        return result
    raise ValueError(f"Cannot evaluate {expr!r} in the character ring")


def dimension_of(expr: sp.Expr, dims: Mapping[sp.Symbol, int] = SPIN10_DIMENSIONS) -> int:
    """Dimension of the right side: every generator by its dimension, xi by 1."""
    return int(sp.sympify(expr).subs({**dims, xi: 1}))
