"""Rule catalog loading.

Each construction rule is described by one JSON file in ``catalog/``:

    {
      "id": "midpoint",
      "category": "derived-object",
      "requirements": ["segment"],
      "roles": ["A", "B", "M"],
      "templates": [{"text": "...", "binding": [...]}, ...],
      "twists": [{"M": "A", "A": "M"}],
      "fakes": [{"text": "...", "binding": [...]}]
    }

``templates`` are sentences true by construction; their ``binding`` is a
serialized predicate expression over the rule's roles (see
:mod:`planebench.predicates`). ``twists`` are role permutations that usually
break the sentence; ``fakes`` are ready-made wrong sentences. Both are only
ever emitted after their falsity is re-verified against the actual scene.

The apply procedures live in :mod:`planebench.construction.rules`, keyed by
rule id; loading validates that code and catalog agree.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

CATEGORIES = (
    "fundamental-object",
    "derived-object",
    "relation",
    "positional",
    "interaction",
)


class CatalogError(Exception):
    pass


@dataclass(frozen=True)
class Template:
    text: str
    binding: tuple  # nested tuples, frozen form of the JSON expression


@dataclass(frozen=True)
class RuleSpec:
    id: str
    category: str
    requirements: tuple[str, ...]
    roles: tuple[str, ...]
    templates: tuple[Template, ...]
    twists: tuple[tuple[tuple[str, str], ...], ...]
    fakes: tuple[Template, ...]

    def placeholder_check(self) -> None:
        import string

        fmt = string.Formatter()
        for tpl in self.templates + self.fakes:
            for _, field, _, _ in fmt.parse(tpl.text):
                if field is not None and field not in self.roles:
                    raise CatalogError(
                        f"rule {self.id}: placeholder {{{field}}} is not a declared role"
                    )


@dataclass(frozen=True)
class Registry:
    rules: tuple[RuleSpec, ...]

    def __post_init__(self) -> None:
        ids = [r.id for r in self.rules]
        if len(set(ids)) != len(ids):
            raise CatalogError("duplicate rule ids in catalog")

    def __len__(self) -> int:
        return len(self.rules)

    def by_id(self, rule_id: str) -> RuleSpec:
        for rule in self.rules:
            if rule.id == rule_id:
                return rule
        raise CatalogError(f"unknown rule id {rule_id!r}")

    def by_category(self, category: str) -> list[RuleSpec]:
        return [r for r in self.rules if r.category == category]


def _freeze(node):
    if isinstance(node, list):
        return tuple(_freeze(x) for x in node)
    return node


def _parse_rule(payload: dict, source: str) -> RuleSpec:
    try:
        rule = RuleSpec(
            id=payload["id"],
            category=payload["category"],
            requirements=tuple(payload.get("requirements", [])),
            roles=tuple(payload["roles"]),
            templates=tuple(
                Template(t["text"], _freeze(t["binding"])) for t in payload["templates"]
            ),
            twists=tuple(
                tuple(sorted(t.items())) for t in payload.get("twists", [])
            ),
            fakes=tuple(
                Template(t["text"], _freeze(t["binding"])) for t in payload.get("fakes", [])
            ),
        )
    except KeyError as exc:
        raise CatalogError(f"{source}: missing field {exc}") from None
    if rule.category not in CATEGORIES:
        raise CatalogError(f"{source}: unknown category {rule.category!r}")
    if not rule.templates:
        raise CatalogError(f"{source}: rule needs at least one statement template")
    rule.placeholder_check()
    return rule


def load_registry(catalog_dir=None) -> Registry:
    """Load every rule file, sorted by id, and check implementation coverage."""
    from . import rules as rule_impls

    specs = []
    if catalog_dir is None:
        root = resources.files("planebench.construction").joinpath("catalog")
        entries = sorted(
            (p for p in root.iterdir() if p.name.endswith(".json")),
            key=lambda p: p.name,
        )
        for entry in entries:
            specs.append(_parse_rule(json.loads(entry.read_text("utf-8")), entry.name))
    else:
        import pathlib

        for path in sorted(pathlib.Path(catalog_dir).glob("*.json")):
            specs.append(_parse_rule(json.loads(path.read_text("utf-8")), path.name))
    registry = Registry(tuple(sorted(specs, key=lambda r: r.id)))
    missing = [r.id for r in registry.rules if r.id not in rule_impls.RULE_IMPLS]
    if missing:
        raise CatalogError(f"catalog rules without implementation: {missing}")
    orphans = [rid for rid in rule_impls.RULE_IMPLS if not any(
        r.id == rid for r in registry.rules)]
    if orphans:
        raise CatalogError(f"implementations without catalog entry: {orphans}")
    return registry
