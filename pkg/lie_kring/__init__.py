from quicklogs import get_logger

logger = get_logger("lie_kring")

REPORT_VERSION = "1"

from .common import Verdict
from .errors import (
    ClassificationError,
    DerivationError,
    DimensionMismatchError,
    DomainError,
    EffectivenessError,
    InconclusiveError,
    IntegralityError,
    InvarianceError,
    LieKringError,
    NonTerminationError,
    UnsupportedScaleError,
)
