"""Exception types shared across the toolkit."""


class ClearShapeError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(ClearShapeError):
    """Invalid configuration or scene description (CLI exit code 2)."""


class StageError(ClearShapeError):
    """A pipeline stage failed; carries the stage name for diagnosis."""

    def __init__(self, stage, cause):
        super().__init__(f"stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause


class DegenerateNeighborhood(ClearShapeError):
    """Normal estimation hit a rank-deficient (collinear) neighborhood."""


class EmptyIsoSurface(ClearShapeError):
    """Iso-level lies outside the range of the scalar field."""


class EmptyHull(ClearShapeError):
    """Space carving removed every voxel (bad calibration or bounds)."""


class NoValidNormal(ClearShapeError):
    """No surface normal can explain the given refraction pair."""


class DegenerateProjection(ClearShapeError):
    """Projected samples collapse to too few pixels to form a shape."""


class InsufficientPoints(ClearShapeError):
    """Too few points for a meaningful surface reconstruction."""


class InconsistentNormals(ClearShapeError):
    """Point-set normals disagree in orientation beyond tolerance."""


class NonFiniteEnergy(ClearShapeError):
    """An optimization objective evaluated to NaN or infinity."""
