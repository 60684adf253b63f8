from .charspace import (
    FormalCharacter,
    Weight,
    adams,
    conjugate,
    exterior_power,
    multiply,
    project,
)
from .rootdata import RootSystem, RootSystemKind, build_root_system
