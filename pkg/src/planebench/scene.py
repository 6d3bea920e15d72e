"""Scene: an ordered, immutable collection of labeled primitives.

Updates return a new Scene; a failed construction step can therefore keep the
old value untouched. Object ids are deterministic counters per kind so that a
fixed seed replays to an identical scene.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

from .geom import Circle, LineLike, OpenCurve, Oval, Point, Polygon, Primitive

_ID_PREFIX = {
    Point: "pt",
    LineLike: "ln",
    Circle: "ci",
    Oval: "ov",
    OpenCurve: "cv",
    Polygon: "pg",
}


class SceneError(Exception):
    pass


@dataclass(frozen=True)
class Scene:
    objects: tuple[Primitive, ...] = ()
    _counter: int = 0

    def __iter__(self):
        return iter(self.objects)

    def __len__(self) -> int:
        return len(self.objects)

    def add(self, obj: Primitive, label: str | None = None) -> tuple[Scene, Primitive]:
        """Return (new scene, stored object) with a fresh id and optional label."""
        prefix = _ID_PREFIX[type(obj)]
        stored = dataclasses.replace(obj, id=f"{prefix}{self._counter}")
        if label is not None:
            stored = dataclasses.replace(stored, label=label)
        if stored.label is not None and stored.label in self.labels():
            raise SceneError(f"duplicate label {stored.label!r}")
        return (
            Scene(self.objects + (stored,), self._counter + 1),
            stored,
        )

    def add_all(
        self, objs: list[Primitive], labels: list[str | None] | None = None
    ) -> tuple[Scene, list[Primitive]]:
        scene = self
        stored = []
        labels = labels or [None] * len(objs)
        for obj, lab in zip(objs, labels):
            scene, s = scene.add(obj, lab)
            stored.append(s)
        return scene, stored

    def by_id(self, obj_id: str) -> Primitive:
        for obj in self.objects:
            if obj.id == obj_id:
                return obj
        raise SceneError(f"no object with id {obj_id!r}")

    def by_label(self, label: str) -> Primitive:
        for obj in self.objects:
            if obj.label == label:
                return obj
        raise SceneError(f"no object labeled {label!r}")

    def has_label(self, label: str) -> bool:
        return any(obj.label == label for obj in self.objects)

    def labels(self) -> list[str]:
        return [obj.label for obj in self.objects if obj.label is not None]

    def points(self) -> list[Point]:
        return [o for o in self.objects if isinstance(o, Point)]

    def of_kind(self, cls) -> list[Primitive]:
        return [o for o in self.objects if isinstance(o, cls)]

    def labeled_point(self, label: str) -> Point:
        obj = self.by_label(label)
        if not isinstance(obj, Point):
            raise SceneError(f"label {label!r} is not a point")
        return obj
