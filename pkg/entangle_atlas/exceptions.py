class AtlasError(Exception):
    def __init__(self, message):
        self.message = message
        super(AtlasError, self).__init__(message)


class NonHermitianInput(AtlasError):
    pass


class ConvergenceFailure(AtlasError):
    pass


class DimensionMismatch(AtlasError):
    pass


class InvalidDimension(AtlasError):
    pass


class InvalidQ(AtlasError):
    pass


class InvalidSubsystem(AtlasError):
    pass


class ConfigInvalid(AtlasError):
    pass


class DimsMismatch(AtlasError):
    pass


class StateFileError(AtlasError):
    pass


class InvalidState(AtlasError):
    pass


class ReportError(AtlasError):
    pass


class IOFailure(AtlasError):
    pass


class SampleFailure(AtlasError):
    """A numeric failure on one sampled state, with the coordinates needed to replay it."""

    def __init__(self, message, dims=None, stream_id=None, index=None):
        self.reason = message
        self.dims = dims
        self.stream_id = stream_id
        self.index = index
        super(SampleFailure, self).__init__(f"{message} [dims={dims}, stream_id={stream_id}, index={index}]")

    def __reduce__(self):
        # Keeps the coordinates when the error crosses a process pool.
        return self.__class__, (self.reason, self.dims, self.stream_id, self.index)

    @property
    def replay_coordinates(self):
        return dict(dims=self.dims, stream_id=self.stream_id, index=self.index)
