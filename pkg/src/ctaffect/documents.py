"""Load substrates, variables, tasks and (optionally) a medium from a YAML/JSON document.

Schema::

    states: [x0, x1, a+, a-]          # state labels
    attributes:                        # id -> member labels
      x0: [x0]
      x1: [x1]
    variables:                         # id -> attribute ids, in order
      X: [x0, x1]
    tasks:                             # id -> list of [input, output]
      NOT: [[x0, x1], [x1, x0]]
      CNOT: [[[x1, x0], [x1, x1]]]     # a list endpoint is a composite attribute
    medium:                            # optional
      kind: coherent                   # or classical
      vectors:                         # coherent only: label -> amplitudes
        x0: [1, 0]
        a+: ["0.7071067811865476", "0.7071067811865476"]

Amplitudes may be numbers or strings accepted by ``complex()`` (e.g. "0.5+0.5j").
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import yaml

from .errors import DocumentError
from .media import ClassicalMedium, CoherentMedium, MediumModel
from .task_algebra import Attribute, TaskSpec, Variable, pair_attribute


@dataclass(frozen=True)
class Document:
    states: tuple
    attributes: Mapping[str, Attribute]
    variables: Mapping[str, Variable]
    tasks: Mapping[str, TaskSpec]
    medium: Mapping[str, Any] = field(default_factory=dict)

    def build_medium(self) -> MediumModel:
        return medium_from_document(self)


def _read(source) -> Mapping:
    if isinstance(source, Mapping):
        return source
    path = Path(source)
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text) if path.suffix == ".json" else yaml.safe_load(text)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise DocumentError(f"{path}: {exc}") from None
    if not isinstance(data, Mapping):
        raise DocumentError(f"{path}: top level must be a mapping")
    return data


def load_document(source) -> Document:
    data = _read(source)
    unknown = set(data) - {"states", "attributes", "variables", "tasks", "medium"}
    if unknown:
        raise DocumentError(f"unknown keys {sorted(unknown)}")
    states = tuple(str(s) for s in data.get("states", ()))
    if len(set(states)) != len(states):
        raise DocumentError("duplicate state labels")
    known = set(states)

    attributes: dict[str, Attribute] = {}
    for aid, members in (data.get("attributes") or {}).items():
        members = [str(m) for m in (members or [])]
        bad = [m for m in members if m not in known]
        if bad:
            raise DocumentError(f"attribute {aid!r} uses undeclared states {bad}")
        if not members:
            raise DocumentError(f"attribute {aid!r} is empty")
        attributes[str(aid)] = Attribute(str(aid), frozenset(members))

    def attr(ref) -> Attribute:
        if isinstance(ref, (list, tuple)):
            if len(ref) < 2:
                raise DocumentError(f"composite endpoint {ref!r} needs at least two parts")
            out = attr(ref[0])
            for part in ref[1:]:
                out = pair_attribute(out, attr(part))
            return out
        try:
            return attributes[str(ref)]
        except KeyError:
            raise DocumentError(f"unknown attribute {ref!r}") from None

    variables: dict[str, Variable] = {}
    for vid, ids in (data.get("variables") or {}).items():
        try:
            variables[str(vid)] = Variable(str(vid), tuple(attr(i) for i in ids))
        except DocumentError:
            raise
        except ValueError as exc:
            raise DocumentError(f"variable {vid!r}: {exc}") from None

    tasks: dict[str, TaskSpec] = {}
    for tid, pairs in (data.get("tasks") or {}).items():
        try:
            tasks[str(tid)] = TaskSpec.from_pairs(((attr(i), attr(o)) for i, o in pairs), str(tid))
        except (TypeError, ValueError) as exc:
            if isinstance(exc, DocumentError):
                raise
            raise DocumentError(f"task {tid!r}: pairs must be [input, output]") from None

    return Document(states, attributes, variables, tasks, dict(data.get("medium") or {}))


def medium_from_document(doc: Document) -> MediumModel:
    cfg = doc.medium
    kind = cfg.get("kind", "classical")
    if kind == "classical":
        return ClassicalMedium(doc.states, doc.variables.values())
    if kind == "coherent":
        raw = cfg.get("vectors") or {}
        try:
            vectors = {str(k): [complex(x) for x in v] for k, v in raw.items()}
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"bad amplitude: {exc}") from None
        missing = [s for s in doc.states if s not in vectors]
        if missing:
            raise DocumentError(f"coherent medium lacks vectors for {missing}")
        try:
            return CoherentMedium(vectors, doc.variables.values())
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
    raise DocumentError(f"unknown medium kind {kind!r}")
