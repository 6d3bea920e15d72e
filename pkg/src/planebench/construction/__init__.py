from .engine import (
    ApplyFailed,
    ApplyOutcome,
    BuildConfig,
    BuildExhaustedError,
    ConstructionTrace,
    StepRecord,
    apply_rule,
    build_diagram,
    inject_prerequisites,
    sample_step_count,
)
from .registry import Registry, RuleSpec, Template, load_registry

__all__ = [
    "ApplyFailed",
    "ApplyOutcome",
    "BuildConfig",
    "BuildExhaustedError",
    "ConstructionTrace",
    "StepRecord",
    "Registry",
    "RuleSpec",
    "Template",
    "apply_rule",
    "build_diagram",
    "inject_prerequisites",
    "load_registry",
    "sample_step_count",
]
