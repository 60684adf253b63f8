from .koszul import TorPresentation, koszul_tor
from .polys import ZModule, int_poly, poly_gcd, quotient_invariants
from .presentation import BImages, derive_b_images, kring_presentation
from .tangent import verify_tangent_class
