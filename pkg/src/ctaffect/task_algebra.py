"""Finite relations on attributes: the medium-independent part of the model.

States are opaque labels. An attribute is a set of labels, a variable a tuple
of pairwise disjoint attributes, and a task a finite relation between input and
output attributes. Composite substrates use tuple labels taken from the
cartesian product of the component label sets.

Serial composition follows operator order, so ``compose_serial(b, a)`` performs
``a`` first and ``compose_serial(w_tilde, f, w)`` reads like ``W~ F W``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .errors import ArityError, DomainMismatch, MultivaluedTranspose, TaskAlgebraError

Label = Hashable


@dataclass(frozen=True)
class Attribute:
    """A set of states sharing a property.

    Equality and hashing use the member set only; ``id`` is a display name.
    """

    id: str = field(compare=False)
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))

    @classmethod
    def single(cls, label: Label, id: str | None = None) -> "Attribute":
        return cls(str(label) if id is None else id, frozenset([label]))

    def __le__(self, other: "Attribute") -> bool:
        return self.members <= other.members

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"Attribute({self.id!r})"

    def sorted_members(self) -> list:
        return sorted(self.members, key=repr)

    def isdisjoint(self, other: "Attribute") -> bool:
        return self.members.isdisjoint(other.members)


def pair_attribute(a: Attribute, b: Attribute) -> Attribute:
    """Attribute of the composite substrate whose parts have attributes a and b."""
    return Attribute(f"({a.id},{b.id})", frozenset(itertools.product(a.members, b.members)))


@dataclass(frozen=True)
class Variable:
    id: str
    attributes: tuple[Attribute, ...]

    def __post_init__(self):
        attrs = tuple(self.attributes)
        object.__setattr__(self, "attributes", attrs)
        if not attrs:
            raise ArityError(f"variable {self.id!r} has no attributes")
        for a in attrs:
            if not a.members:
                raise ArityError(f"attribute {a.id!r} of {self.id!r} is empty")
        for a, b in itertools.combinations(attrs, 2):
            if not a.isdisjoint(b):
                raise ArityError(f"attributes {a.id!r} and {b.id!r} of {self.id!r} overlap")

    def __iter__(self):
        return iter(self.attributes)

    def __len__(self) -> int:
        return len(self.attributes)

    def __contains__(self, attr: Attribute) -> bool:
        return attr in self.attributes

    def __getitem__(self, key: int | str) -> Attribute:
        if isinstance(key, int):
            return self.attributes[key]
        for a in self.attributes:
            if a.id == key:
                return a
        raise KeyError(key)

    def index(self, attr: Attribute) -> int:
        return self.attributes.index(attr)

    @property
    def ids(self) -> list[str]:
        return [a.id for a in self.attributes]

    @property
    def is_binary(self) -> bool:
        return len(self.attributes) == 2

    def require_binary(self) -> None:
        if not self.is_binary:
            raise ArityError(f"variable {self.id!r} must be binary, has {len(self)} attributes")


def product_variable(v1: Variable, v2: Variable) -> Variable:
    """The variable X1 x X2 of a composite substrate."""
    attrs = [pair_attribute(a, b) for a in v1 for b in v2]
    return Variable(f"{v1.id}x{v2.id}", tuple(attrs))


@dataclass(frozen=True)
class TaskSpec:
    """A finite relation between input and output attributes."""

    pairs: frozenset = field(default_factory=frozenset)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.pairs, frozenset):
            object.__setattr__(self, "pairs", frozenset(self.pairs))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Attribute, Attribute]], name: str = "") -> "TaskSpec":
        return cls(frozenset(pairs), name)

    @property
    def inputs(self) -> frozenset:
        return frozenset(i for i, _ in self.pairs)

    @property
    def outputs(self) -> frozenset:
        return frozenset(o for _, o in self.pairs)

    @property
    def is_functional(self) -> bool:
        seen: dict[Attribute, Attribute] = {}
        for i, o in self.pairs:
            if seen.setdefault(i, o) != o:
                return False
        return True

    def image(self, attr: Attribute) -> frozenset:
        return frozenset(o for i, o in self.pairs if i == attr)

    def apply(self, attr: Attribute) -> Attribute:
        outs = self.image(attr)
        if not outs:
            raise DomainMismatch(f"{attr.id!r} is not an input of task {self.name or '<anon>'}")
        if len(outs) > 1:
            raise TaskAlgebraError(f"task {self.name or '<anon>'} is multivalued on {attr.id!r}")
        return next(iter(outs))

    __call__ = apply

    def sorted_pairs(self) -> list[tuple[Attribute, Attribute]]:
        return sorted(self.pairs, key=lambda p: (repr(p[0].sorted_members()), repr(p[1].sorted_members())))

    def as_id_pairs(self) -> list[tuple[str, str]]:
        return [(i.id, o.id) for i, o in self.sorted_pairs()]

    def __repr__(self) -> str:
        body = ", ".join(f"{i}->{o}" for i, o in self.as_id_pairs())
        return f"TaskSpec({self.name or ''}{{{body}}})"


def compose_serial(*tasks: TaskSpec) -> TaskSpec:
    """Serial composition in operator order: the rightmost task runs first.

    Raises DomainMismatch if some output of a task is not an input of the task
    applied after it.
    """
    if not tasks:
        raise TaskAlgebraError("compose_serial needs at least one task")
    result = tasks[-1]
    for nxt in reversed(tasks[:-1]):
        missing = result.outputs - nxt.inputs
        if missing:
            ids = sorted(a.id for a in missing)
            raise DomainMismatch(f"outputs {ids} of {result.name or '<anon>'} are not inputs of {nxt.name or '<anon>'}")
        composed = {(x, z) for x, y in result.pairs for y2, z in nxt.pairs if y == y2}
        name = f"{nxt.name}{result.name}" if nxt.name and result.name else ""
        result = TaskSpec(frozenset(composed), name)
    return result


def compose_parallel(a: TaskSpec, b: TaskSpec) -> TaskSpec:
    """Perform ``a`` on the first substrate and ``b`` on the second."""
    pairs = {
        (pair_attribute(x, y), pair_attribute(x2, y2))
        for x, x2 in a.pairs
        for y, y2 in b.pairs
    }
    name = f"{a.name}(x){b.name}" if a.name and b.name else ""
    return TaskSpec(frozenset(pairs), name)


def transpose(t: TaskSpec) -> TaskSpec:
    swapped = TaskSpec(frozenset((o, i) for i, o in t.pairs), f"{t.name}~" if t.name else "")
    if not swapped.is_functional:
        clash = sorted({o.id for i, o in t.pairs if len(swapped.image(o)) > 1})
        raise MultivaluedTranspose(f"transpose of {t.name or '<anon>'} is multivalued on {clash}")
    return swapped


# -- standard tasks ---------------------------------------------------------

def identity_task(v: Variable) -> TaskSpec:
    return TaskSpec(frozenset((x, x) for x in v), f"I[{v.id}]")


def permutation_task(v: Variable, perm: Sequence[int] | Mapping[str, str]) -> TaskSpec:
    """``perm`` is either target indices (``perm[i]`` is where attribute i goes) or an id map."""
    if len(v) < 2:
        raise ArityError("a permutation task needs at least two attributes")
    if isinstance(perm, Mapping):
        idx = [v.ids.index(perm.get(a.id, a.id)) for a in v]
    else:
        idx = list(perm)
    if sorted(idx) != list(range(len(v))):
        raise ArityError(f"{perm!r} is not a permutation of {len(v)} attributes")
    return TaskSpec(frozenset((v[i], v[j]) for i, j in enumerate(idx)), f"P[{v.id}]")


def not_task(v: Variable) -> TaskSpec:
    v.require_binary()
    t = permutation_task(v, [1, 0])
    return TaskSpec(t.pairs, "NOT")


def cloning_task(v: Variable, blank: Attribute | None = None) -> TaskSpec:
    """(x, blank) -> (x, x) for every x of v on the doubled substrate."""
    if len(v) < 2:
        raise ArityError("cloning needs a variable with at least two attributes")
    blank = v[0] if blank is None else blank
    pairs = {(pair_attribute(x, blank), pair_attribute(x, x)) for x in v}
    return TaskSpec(frozenset(pairs), f"R[{v.id}]")


def index_attribute(k: int, prefix: str = "i") -> Attribute:
    return Attribute(f"{prefix}{k}", frozenset([f"{prefix}:{k}"]))


def distinguishing_task(v: Variable, prefix: str = "i") -> TaskSpec:
    """x_k -> i_k, with the i_k sharp attributes of a fresh index register."""
    if len(v) < 2:
        raise ArityError("distinguishing needs at least two attributes")
    return TaskSpec(frozenset((x, index_attribute(k, prefix)) for k, x in enumerate(v)), f"D[{v.id}]")


RECORD_BLANK = Attribute("'_'", frozenset(["rec:_"]))


def record_attribute(x: Attribute) -> Attribute:
    """Outcome attribute 'x' written on the measurer's output register."""
    return Attribute(f"'{x.id}'", frozenset([f"rec:{x.id}"]))


def measuring_task(v: Variable, blank: Attribute = RECORD_BLANK) -> TaskSpec:
    """(x, blank) -> (x, 'x'): the source keeps x (non-perturbing) and the record reads 'x'."""
    if len(v) < 2:
        raise ArityError("measuring needs at least two attributes")
    pairs = {(pair_attribute(x, blank), pair_attribute(x, record_attribute(x))) for x in v}
    return TaskSpec(frozenset(pairs), f"M[{v.id}]")


ANCILLA_READY = Attribute("x0'", frozenset(["anc:ready"]))


def preparation_task(v: Variable, target: Attribute, receptive: Attribute = ANCILLA_READY) -> TaskSpec:
    """(receptive, psi) -> (theta_x, x) for every state psi of the substrate."""
    v.require_binary()
    if target not in v:
        raise ArityError(f"{target.id!r} is not an attribute of {v.id!r}")
    spent = Attribute(f"theta_{target.id}", frozenset([f"anc:theta:{target.id}"]))
    states = union_attribute(v).sorted_members()
    pairs = {(pair_attribute(receptive, Attribute.single(s)), pair_attribute(spent, target)) for s in states}
    return TaskSpec(frozenset(pairs), f"T[{target.id}]")


def conditional_task(control: Variable, inner: TaskSpec, target: Variable, active: int = 1) -> TaskSpec:
    """Identity on ``target`` when ``control`` is not ``control[active]``, else ``inner``."""
    control.require_binary()
    on = control[active]
    off = control[1 - active]
    pairs = {(pair_attribute(off, y), pair_attribute(off, y)) for y in target}
    pairs |= {(pair_attribute(on, i), pair_attribute(on, o)) for i, o in inner.pairs}
    return TaskSpec(frozenset(pairs), f"C{inner.name}" if inner.name else "")


_STANDARD = {
    "identity": identity_task,
    "permutation": permutation_task,
    "cloning": cloning_task,
    "distinguishing": distinguishing_task,
    "measuring": measuring_task,
    "preparation": preparation_task,
}


def make_standard_task(kind: str, v: Variable, *args, **kwargs) -> TaskSpec:
    """Dispatch to one of the standard constructors by name.

    ``make_standard_task("conditional", X2, control=X1, inner=not_task(X2))``
    builds the CNOT task.
    """
    if kind == "conditional":
        return conditional_task(kwargs.pop("control"), kwargs.pop("inner"), v, **kwargs)
    if kind == "not":
        return not_task(v)
    try:
        fn = _STANDARD[kind]
    except KeyError:
        raise TaskAlgebraError(f"unknown task kind {kind!r}") from None
    return fn(v, *args, **kwargs)


# -- attribute algebra ------------------------------------------------------

def union_attribute(v: Variable | Iterable[Attribute], id: str | None = None) -> Attribute:
    attrs = list(v)
    members = frozenset().union(*(a.members for a in attrs))
    if id is None:
        id = f"u_{v.id}" if isinstance(v, Variable) else "u"
    return Attribute(id, members)


def bar_attribute(
    x: Attribute,
    distinguishable: Callable[[Attribute, Attribute], bool],
    universe: Iterable[Attribute],
) -> Attribute:
    """Union of every attribute in ``universe`` distinguishable from ``x``.

    May be empty when nothing in the universe is distinguishable from ``x``.
    """
    members = frozenset().union(*(a.members for a in universe if distinguishable(a, x)))
    return Attribute(f"bar({x.id})", members)


# -- the two binary observables used throughout -----------------------------

X0 = Attribute.single("x0")
X1 = Attribute.single("x1")
A_PLUS = Attribute.single("a+")
A_MINUS = Attribute.single("a-")
X_VAR = Variable("X", (X0, X1))
A_VAR = Variable("A", (A_PLUS, A_MINUS))
