from .visibility import VisibilityThresholds, check_visibility, place_labels
from .svg import render_vector, UnrenderableObjectError
from .raster import rasterize, scribe_labels, ResolutionTooSmallError, OutOfBoundsError

__all__ = [
    "VisibilityThresholds",
    "check_visibility",
    "place_labels",
    "render_vector",
    "rasterize",
    "scribe_labels",
    "UnrenderableObjectError",
    "ResolutionTooSmallError",
    "OutOfBoundsError",
]
