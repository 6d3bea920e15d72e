"""Diagram construction loop: sample a rule, try to apply it on top of the
current scene, retry on failure, inject prerequisites for complex rules
without spending a step, and stop after the sampled number of steps.
"""
from __future__ import annotations

import random
import string
from dataclasses import dataclass, field, replace

from ..geom import DEFAULT_TOL, Tolerance
from ..predicates import binding_verdict
from ..render.visibility import VisibilityThresholds, check_visibility
from ..scene import Scene
from . import rules as rule_impls
from .registry import Registry, RuleSpec, load_registry
from .rules import Builder, LabelPool, RuleFailure


class BuildExhaustedError(Exception):
    """Total retries exceeded the global cap; the config is over-constrained."""


@dataclass(frozen=True)
class StepRecord:
    rule_id: str
    created_ids: tuple[str, ...]
    roles: tuple[tuple[str, str], ...]  # sorted (role, label) pairs

    def role_map(self) -> dict[str, str]:
        return dict(self.roles)


@dataclass(frozen=True)
class ConstructionTrace:
    steps: tuple[StepRecord, ...] = ()
    injected: tuple[str, ...] = ()


@dataclass(frozen=True)
class ApplyOutcome:
    scene: Scene
    trace: ConstructionTrace
    pool: LabelPool


@dataclass(frozen=True)
class ApplyFailed:
    reason: str


@dataclass(frozen=True)
class BuildConfig:
    seed: int = 0
    steps: int | None = None  # None: sample the 50/50 step-count mixture
    max_retries_per_step: int = 20
    global_retry_cap: int = 500
    tol: Tolerance = DEFAULT_TOL
    thresholds: VisibilityThresholds = field(default_factory=VisibilityThresholds)

    def __post_init__(self) -> None:
        if self.max_retries_per_step < 1:
            raise ValueError("max_retries_per_step must be >= 1")


_DEFAULT_REGISTRY: Registry | None = None


def default_registry() -> Registry:
    global _DEFAULT_REGISTRY
    if _DEFAULT_REGISTRY is None:
        _DEFAULT_REGISTRY = load_registry()
    return _DEFAULT_REGISTRY


def sample_step_count(rng: random.Random) -> int:
    """Half the diagrams get 1-3 steps, the other half 4-6."""
    if rng.random() < 0.5:
        return rng.randint(1, 3)
    return rng.randint(4, 6)


def _verify_statements(
    rule: RuleSpec, scene: Scene, roles: dict[str, str], tol: Tolerance
) -> bool:
    return all(
        binding_verdict(tpl.binding, scene, roles, tol) == "true" for tpl in rule.templates
    )


def apply_rule(
    scene: Scene,
    trace: ConstructionTrace,
    rule: RuleSpec,
    rng: random.Random,
    pool: LabelPool,
    *,
    tol: Tolerance = DEFAULT_TOL,
    thresholds: VisibilityThresholds | None = None,
) -> ApplyOutcome | ApplyFailed:
    """Try one rule application; failure is a value and leaves inputs untouched."""
    thresholds = thresholds or VisibilityThresholds()
    for req in rule.requirements:
        if not rule_impls.has_candidates(scene, req):
            return ApplyFailed(f"missing-requirements: {req}")
    builder = Builder(scene, rng, pool.clone())
    impl = rule_impls.RULE_IMPLS[rule.id]
    try:
        roles = impl(builder)
    except RuleFailure as failure:
        return ApplyFailed(str(failure))
    new_scene = builder.scene
    if not _verify_statements(rule, new_scene, roles, tol):
        return ApplyFailed("degenerate-sample: statement verification failed")
    if check_visibility(new_scene, thresholds):
        return ApplyFailed("visibility-violation")
    record = StepRecord(
        rule_id=rule.id,
        created_ids=tuple(builder.created_ids),
        roles=tuple(sorted(roles.items())),
    )
    new_trace = replace(trace, steps=trace.steps + (record,))
    return ApplyOutcome(new_scene, new_trace, builder.pool)


def inject_prerequisites(
    scene: Scene,
    trace: ConstructionTrace,
    rule: RuleSpec,
    rng: random.Random,
    pool: LabelPool,
    *,
    max_retries: int = 20,
    thresholds: VisibilityThresholds | None = None,
) -> tuple[Scene, ConstructionTrace, LabelPool]:
    """Add the minimal objects a rule needs without consuming a step."""
    thresholds = thresholds or VisibilityThresholds()
    new_scene, new_pool = scene, pool
    injected: list[str] = []
    for req in rule.requirements:
        if rule_impls.has_candidates(new_scene, req):
            continue
        for attempt in range(max_retries):
            builder = Builder(new_scene, rng, new_pool.clone())
            try:
                rule_impls.inject_requirement(builder, req)
            except RuleFailure:
                continue
            if check_visibility(builder.scene, thresholds):
                continue
            new_scene, new_pool = builder.scene, builder.pool
            injected.extend(builder.created_ids)
            break
        else:
            raise RuleFailure(f"injection-failure: {req}")
    new_trace = replace(trace, injected=trace.injected + tuple(injected))
    return new_scene, new_trace, new_pool


def build_diagram(
    config: BuildConfig, registry: Registry | None = None
) -> tuple[Scene, ConstructionTrace]:
    """Build one diagram; deterministic in (seed, config, registry)."""
    registry = registry or default_registry()
    if not registry.rules:
        raise ValueError("empty rule registry")
    rng = random.Random(f"build:{config.seed}")
    alphabet = list(string.ascii_uppercase)
    rng.shuffle(alphabet)
    pool = LabelPool(tuple(alphabet))
    scene = Scene()
    trace = ConstructionTrace()
    steps = config.steps if config.steps is not None else sample_step_count(rng)
    total_attempts = 0
    for _ in range(steps):
        applied = False
        for _ in range(config.max_retries_per_step):
            total_attempts += 1
            if total_attempts > config.global_retry_cap:
                raise BuildExhaustedError(
                    f"exceeded global retry cap ({config.global_retry_cap})"
                )
            rule = registry.rules[rng.randrange(len(registry.rules))]
            try:
                pre_scene, pre_trace, pre_pool = inject_prerequisites(
                    scene, trace, rule, rng, pool, thresholds=config.thresholds
                )
            except RuleFailure:
                continue
            outcome = apply_rule(
                pre_scene,
                pre_trace,
                rule,
                rng,
                pre_pool,
                tol=config.tol,
                thresholds=config.thresholds,
            )
            if isinstance(outcome, ApplyOutcome):
                scene, trace, pool = outcome.scene, outcome.trace, outcome.pool
                applied = True
                break
        if not applied:
            raise BuildExhaustedError(
                f"no rule applied within {config.max_retries_per_step} retries"
            )
    return scene, trace
