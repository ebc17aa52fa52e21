from .version import *
from .exceptions import (
    AtlasError,
    NonHermitianInput,
    ConvergenceFailure,
    DimensionMismatch,
    InvalidDimension,
    InvalidQ,
    InvalidSubsystem,
    ConfigInvalid,
    DimsMismatch,
    StateFileError,
    InvalidState,
    ReportError,
    IOFailure,
    SampleFailure,
)
