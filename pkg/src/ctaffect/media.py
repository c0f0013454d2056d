"""Medium models and the deciders built on them.

Two regimes are modelled. :class:`ClassicalMedium` holds weight distributions
over a finite label set; measuring never disturbs an already-sharp variable and
distinct attributes are always distinguishable. :class:`CoherentMedium` holds
unit vectors in a 2**n dimensional space; attributes are spans of named vectors
and distinguishability is orthogonality.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .errors import (
    ArityError,
    NonBinary,
    NotMeasurable,
    NotPreparable,
    PreconditionFailed,
)
from .task_algebra import (
    A_VAR,
    X_VAR,
    Attribute,
    Variable,
    bar_attribute,
)

ORTHO_TOL = 1e-9
PARTITION_TOL = 1e-9
SHARP_TOL = 1e-9


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based generator; the same seed always replays the same stream."""
    return np.random.Generator(np.random.Philox(int(seed)))


# -- states -----------------------------------------------------------------

@dataclass(frozen=True)
class ClassicalState:
    weights: Mapping = field(default_factory=dict)

    def __post_init__(self):
        w = {k: float(v) for k, v in dict(self.weights).items() if v != 0}
        if any(v < 0 or v > 1 + 1e-12 for v in w.values()):
            raise ValueError("classical weights must lie in [0, 1]")
        total = math.fsum(w.values())
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"classical weights sum to {total!r}, not 1")
        object.__setattr__(self, "weights", MappingProxyType(w))

    @classmethod
    def point(cls, label) -> "ClassicalState":
        return cls({label: 1.0})

    @classmethod
    def uniform(cls, labels: Iterable) -> "ClassicalState":
        labels = list(labels)
        return cls({l: 1.0 / len(labels) for l in labels}) if labels else cls()

    @property
    def support(self) -> frozenset:
        return frozenset(self.weights)

    def __eq__(self, other):
        return isinstance(other, ClassicalState) and dict(self.weights) == dict(other.weights)

    def __hash__(self):
        return hash(frozenset(self.weights.items()))

    @property
    def is_sharp(self) -> bool:
        return len(self.weights) == 1


@dataclass(frozen=True, eq=False)
class CoherentState:
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        d = amps.shape[0]
        if d < 2 or d & (d - 1):
            raise ValueError(f"coherent state dimension {d} is not a power of two >= 2")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > 1e-12:
            raise ValueError(f"coherent state has squared norm {norm2!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def normalized(cls, amps) -> "CoherentState":
        amps = np.asarray(amps, dtype=np.complex128).reshape(-1)
        return cls(amps / np.linalg.norm(amps))

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def same_ray(self, other: "CoherentState", tol: float = 1e-9) -> bool:
        """Equality up to an unobservable global factor."""
        return abs(abs(np.vdot(self.amplitudes, other.amplitudes)) - 1.0) <= tol

    def __repr__(self):
        return f"CoherentState({np.array2string(self.amplitudes, precision=4)})"


MediumState = ClassicalState | CoherentState


# -- partitions of unity ------------------------------------------------------

@dataclass(frozen=True)
class PartitionOfUnity:
    """Values f_x over the attributes of one variable; they sum to 1."""

    attributes: tuple
    values: tuple

    def __post_init__(self):
        attrs = tuple(self.attributes)
        vals = [float(v) for v in self.values]
        if len(attrs) != len(vals):
            raise ValueError("attributes and values differ in length")
        for v in vals:
            if not (-PARTITION_TOL <= v <= 1 + PARTITION_TOL) or math.isnan(v):
                raise ValueError(f"partition value {v!r} outside [0, 1]")
        if abs(math.fsum(vals) - 1.0) > PARTITION_TOL:
            raise ValueError(f"partition sums to {math.fsum(vals)!r}")
        vals = [min(max(v, 0.0), 1.0) for v in vals]
        object.__setattr__(self, "attributes", attrs)
        object.__setattr__(self, "values", tuple(vals))

    @classmethod
    def of(cls, variable: Variable, values: Sequence[float]) -> "PartitionOfUnity":
        return cls(variable.attributes, tuple(values))

    def __getitem__(self, key: Attribute | str | int) -> float:
        if isinstance(key, int):
            return self.values[key]
        for a, v in zip(self.attributes, self.values):
            if a == key or a.id == key:
                return v
        raise KeyError(key)

    def __len__(self):
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def as_dict(self) -> dict[str, float]:
        return {a.id: v for a, v in zip(self.attributes, self.values)}

    @property
    def is_sharp(self) -> bool:
        return max(self.values) >= 1.0 - SHARP_TOL

    def close_to(self, other: "PartitionOfUnity", tol: float = PARTITION_TOL) -> bool:
        return len(self) == len(other) and all(abs(a - b) <= tol for a, b in zip(self.values, other.values))


# -- medium models ------------------------------------------------------------

class MediumModel:
    """Operations every medium supports.

    Subclasses supply preparation, conditioning (the post-measurement update),
    exact partitions and the distinguishability relation; sampling-based
    measurement is shared.
    """

    kind = "abstract"

    def __init__(self, variables: Iterable[Variable] = ()):
        self.variables = {v.id: v for v in variables}

    # subclass hooks
    def prepare(self, attr: Attribute) -> MediumState:
        raise NotImplementedError

    def label_state(self, label) -> MediumState:
        raise NotImplementedError

    def condition(self, state: MediumState, attr: Attribute) -> MediumState:
        raise NotImplementedError

    def exact_partition(self, state: MediumState, v: Variable) -> PartitionOfUnity:
        raise NotImplementedError

    def distinguishable(self, a: Attribute, b: Attribute) -> bool:
        raise NotImplementedError

    def overlap(self, a: Attribute, b: Attribute) -> float:
        raise NotImplementedError

    def swap_action(self, m: Attribute, n: Attribute):
        raise NotImplementedError

    def contains(self, state: MediumState, attr: Attribute) -> bool:
        raise NotImplementedError

    def random_state(self, rng: np.random.Generator) -> MediumState:
        raise NotImplementedError

    @property
    def labels(self) -> tuple:
        raise NotImplementedError

    # shared behaviour
    @property
    def universe(self) -> list[Attribute]:
        return [Attribute.single(l) for l in self.labels]

    def bar(self, x: Attribute) -> Attribute:
        return bar_attribute(x, self.distinguishable, self.universe)

    def is_measurable(self, v: Variable) -> bool:
        raise NotImplementedError

    def clone_allowed(self, v: Variable) -> bool:
        return len(v) >= 2 and all(self.distinguishable(a, b) for a, b in itertools.combinations(v, 2))

    def permutation_allowed(self, v: Variable) -> bool:
        return len(v) >= 2

    def variable_of(self, attr: Attribute) -> Variable:
        for v in self.variables.values():
            if attr in v:
                return v
        raise NotMeasurable(f"{attr.id!r} belongs to no declared variable of this medium")

    def measure(self, state: MediumState, v: Variable, rng: np.random.Generator):
        """Sample one outcome; returns ``(attribute, post_state)``."""
        p = self.exact_partition(state, v)
        cdf = np.cumsum(p.as_array())
        u = rng.random()
        k = int(np.searchsorted(cdf, u, side="right"))
        k = min(k, len(v) - 1)
        outcome = v[k]
        return outcome, self.condition(state, outcome)

    def label_partition(self, label, v: Variable) -> PartitionOfUnity:
        return self.exact_partition(self.label_state(label), v)


class ClassicalMedium(MediumModel):
    kind = "classical"

    def __init__(self, labels: Iterable, variables: Iterable[Variable] = ()):
        self._labels = tuple(labels)
        if len(set(self._labels)) != len(self._labels):
            raise ValueError("duplicate state labels")
        super().__init__(variables)
        known = set(self._labels)
        for v in self.variables.values():
            for a in v:
                if not a.members <= known:
                    raise ValueError(f"attribute {a.id!r} uses undeclared labels")

    @classmethod
    def bit(cls) -> "ClassicalMedium":
        return cls(["x0", "x1"], [X_VAR])

    @classmethod
    def product(cls, *variables: Variable) -> "ClassicalMedium":
        """One substrate carrying several independent variables.

        Labels are tuples of component labels; each variable is lifted so
        that, for example, ``x0`` becomes every tuple whose first slot is in x0.
        Attribute ids are kept.
        """
        member_lists = [sorted(frozenset().union(*(a.members for a in v)), key=repr) for v in variables]
        labels = list(itertools.product(*member_lists))
        lifted = []
        for slot, v in enumerate(variables):
            attrs = [Attribute(a.id, frozenset(l for l in labels if l[slot] in a.members)) for a in v]
            lifted.append(Variable(v.id, tuple(attrs)))
        return cls(labels, lifted)

    @property
    def labels(self) -> tuple:
        return self._labels

    def _check_labels(self, attr: Attribute) -> None:
        if not attr.members or not attr.members <= set(self._labels):
            raise NotPreparable(f"{attr.id!r} is not an attribute of this medium")

    def prepare(self, attr: Attribute) -> ClassicalState:
        self._check_labels(attr)
        return ClassicalState.uniform(sorted(attr.members, key=repr))

    def label_state(self, label) -> ClassicalState:
        return ClassicalState.point(label)

    def condition(self, state: ClassicalState, attr: Attribute) -> ClassicalState:
        w = {l: p for l, p in state.weights.items() if l in attr.members}
        total = math.fsum(w.values())
        if total <= 0:
            raise NotPreparable(f"state has no weight on {attr.id!r}")
        return ClassicalState({l: p / total for l, p in w.items()})

    def is_measurable(self, v: Variable) -> bool:
        return all(a.members <= set(self._labels) for a in v)

    def exact_partition(self, state: ClassicalState, v: Variable) -> PartitionOfUnity:
        if not self.is_measurable(v):
            raise NotMeasurable(f"variable {v.id!r} is not defined on this medium")
        vals = [math.fsum(p for l, p in state.weights.items() if l in a.members) for a in v]
        if abs(math.fsum(vals) - 1.0) > PARTITION_TOL:
            raise NotMeasurable(f"state has weight outside every attribute of {v.id!r}")
        return PartitionOfUnity(v.attributes, tuple(vals))

    def distinguishable(self, a: Attribute, b: Attribute) -> bool:
        return a.isdisjoint(b)

    def overlap(self, a: Attribute, b: Attribute) -> float:
        """Fraction of a's members that are also in b (uniform preparation of a)."""
        return len(a.members & b.members) / len(a.members) if a.members else 0.0

    def swap_action(self, m: Attribute, n: Attribute):
        """Label permutation exchanging the members of m and n, paired in sorted order."""
        if not m.isdisjoint(n) or len(m) != len(n):
            raise ArityError(f"cannot swap {m.id!r} and {n.id!r}")
        ms, ns = m.sorted_members(), n.sorted_members()
        table = {**dict(zip(ms, ns)), **dict(zip(ns, ms))}

        def act(state: ClassicalState) -> ClassicalState:
            return ClassicalState({table.get(l, l): p for l, p in state.weights.items()})

        return act

    def contains(self, state: ClassicalState, attr: Attribute) -> bool:
        return state.support <= attr.members

    def random_state(self, rng: np.random.Generator) -> ClassicalState:
        w = rng.dirichlet(np.ones(len(self._labels)))
        w = w / math.fsum(w)
        return ClassicalState(dict(zip(self._labels, w.tolist())))


def _orthonormal_basis(vectors: Sequence[np.ndarray]) -> np.ndarray:
    """Columns spanning the given vectors."""
    m = np.column_stack(vectors)
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    rank = int(np.sum(s > ORTHO_TOL))
    return u[:, :rank]


class CoherentMedium(MediumModel):
    """Named unit vectors in C^(2**n); attributes are spans of named vectors."""

    kind = "coherent"

    def __init__(self, vectors: Mapping, variables: Iterable[Variable] = ()):
        vecs = {}
        dim = None
        for label, v in vectors.items():
            arr = np.asarray(v, dtype=np.complex128).reshape(-1)
            arr = arr / np.linalg.norm(arr)
            arr.setflags(write=False)
            if dim is None:
                dim = arr.shape[0]
            elif arr.shape[0] != dim:
                raise ValueError("named vectors differ in dimension")
            vecs[label] = arr
        if dim is None or dim < 2 or dim & (dim - 1):
            raise ValueError("coherent medium needs vectors of dimension 2**n >= 2")
        self.vectors = MappingProxyType(vecs)
        self.dim = dim
        super().__init__(variables)
        for v in self.variables.values():
            for a in v:
                if not a.members <= set(vecs):
                    raise ValueError(f"attribute {a.id!r} names unknown vectors")
        self._basis_cache: dict[Attribute, np.ndarray] = {}

    @classmethod
    def qubit(cls, basis_angle: float = math.pi / 2) -> "CoherentMedium":
        """One two-level system with X computational and A rotated by ``basis_angle``.

        ``basis_angle = pi/2`` gives the Hadamard basis.
        """
        c, s = math.cos(basis_angle / 2), math.sin(basis_angle / 2)
        vectors = {
            "x0": [1, 0],
            "x1": [0, 1],
            "a+": [c, s],
            "a-": [s, -c],
        }
        return cls(vectors, [X_VAR, A_VAR])

    @property
    def labels(self) -> tuple:
        return tuple(self.vectors)

    def basis(self, attr: Attribute) -> np.ndarray:
        if attr not in self._basis_cache:
            try:
                vecs = [self.vectors[l] for l in attr.sorted_members()]
            except KeyError as exc:
                raise NotPreparable(f"{attr.id!r} names an unknown vector {exc}") from None
            if not vecs:
                raise NotPreparable(f"{attr.id!r} is empty")
            self._basis_cache[attr] = _orthonormal_basis(vecs)
        return self._basis_cache[attr]

    def projector(self, attr: Attribute) -> np.ndarray:
        q = self.basis(attr)
        return q @ q.conj().T

    def prepare(self, attr: Attribute) -> CoherentState:
        if len(attr) != 1:
            raise NotPreparable(f"{attr.id!r} spans {len(attr)} vectors; prepare a single-vector attribute")
        return self.label_state(next(iter(attr.members)))

    def label_state(self, label) -> CoherentState:
        try:
            return CoherentState(self.vectors[label])
        except KeyError:
            raise NotPreparable(f"unknown vector {label!r}") from None

    def theta_state(self, theta: float, variable: Variable = X_VAR) -> CoherentState:
        """cos(theta/2)|v0> + sin(theta/2)|v1> for a binary variable of single vectors."""
        variable.require_binary()
        v0 = self.prepare(variable[0]).amplitudes
        v1 = self.prepare(variable[1]).amplitudes
        return CoherentState.normalized(math.cos(theta / 2) * v0 + math.sin(theta / 2) * v1)

    def condition(self, state: CoherentState, attr: Attribute) -> CoherentState:
        q = self.basis(attr)
        proj = q @ (q.conj().T @ state.amplitudes)
        norm = np.linalg.norm(proj)
        if norm <= 1e-12:
            if len(attr) == 1:
                return self.prepare(attr)
            raise NotPreparable(f"state has no component in {attr.id!r}")
        return CoherentState(proj / norm)

    def is_measurable(self, v: Variable) -> bool:
        try:
            bases = [self.basis(a) for a in v]
        except NotPreparable:
            return False
        for qa, qb in itertools.combinations(bases, 2):
            if np.max(np.abs(qa.conj().T @ qb), initial=0.0) > ORTHO_TOL:
                return False
        return sum(q.shape[1] for q in bases) == self.dim

    def exact_partition(self, state: CoherentState, v: Variable) -> PartitionOfUnity:
        if not self.is_measurable(v):
            raise NotMeasurable(f"variable {v.id!r} is not a complete set of orthogonal attributes")
        vals = []
        for a in v:
            q = self.basis(a)
            c = q.conj().T @ state.amplitudes
            vals.append(float(np.vdot(c, c).real))
        total = math.fsum(vals)
        return PartitionOfUnity(v.attributes, tuple(x / total for x in vals))

    def overlap(self, a: Attribute, b: Attribute) -> float:
        """Largest squared overlap between the two spans (``|<a|b>|^2`` for single vectors)."""
        s = np.linalg.svd(self.basis(a).conj().T @ self.basis(b), compute_uv=False)
        return float(s.max() ** 2) if s.size else 0.0

    def distinguishable(self, a: Attribute, b: Attribute) -> bool:
        return math.sqrt(self.overlap(a, b)) <= ORTHO_TOL

    def permutation_allowed(self, v: Variable) -> bool:
        """True iff every relabelling of the attributes preserves all pairwise overlaps."""
        if len(v) < 2:
            return False
        dims = {self.basis(a).shape[1] for a in v}
        if len(dims) != 1:
            return False
        g = np.array([[self.overlap(a, b) for b in v] for a in v])
        for i, j in itertools.combinations(range(len(v)), 2):
            p = list(range(len(v)))
            p[i], p[j] = j, i
            if not np.allclose(g[np.ix_(p, p)], g, atol=ORTHO_TOL):
                return False
        return True

    def swap_unitary(self, m: Attribute, n: Attribute) -> np.ndarray:
        """|n><m| + |m><n| plus the identity on the complement."""
        if len(m) != 1 or len(n) != 1 or not self.distinguishable(m, n):
            raise ArityError(f"cannot swap {m.id!r} and {n.id!r}: need two orthogonal vectors")
        vm = self.prepare(m).amplitudes
        vn = self.prepare(n).amplitudes
        eye = np.eye(self.dim, dtype=np.complex128)
        return (
            np.outer(vn, vm.conj())
            + np.outer(vm, vn.conj())
            + eye
            - np.outer(vm, vm.conj())
            - np.outer(vn, vn.conj())
        )

    def swap_action(self, m: Attribute, n: Attribute):
        u = self.swap_unitary(m, n)
        return lambda state: CoherentState(u @ state.amplitudes)

    def contains(self, state: CoherentState, attr: Attribute) -> bool:
        c = self.basis(attr).conj().T @ state.amplitudes
        return float(np.vdot(c, c).real) >= 1.0 - ORTHO_TOL

    def random_state(self, rng: np.random.Generator) -> CoherentState:
        z = rng.normal(size=self.dim) + 1j * rng.normal(size=self.dim)
        return CoherentState.normalized(z)

    def apply(self, unitary: np.ndarray, state: CoherentState) -> CoherentState:
        return CoherentState(np.asarray(unitary) @ state.amplitudes)


# -- operations ----------------------------------------------------------------

def counting_task(
    medium: MediumModel,
    state: MediumState,
    v: Variable,
    n: int | None,
    seed: int = 0,
    per_instance: bool = False,
) -> PartitionOfUnity:
    """Fraction of ``n`` independently measured copies of ``state`` giving each attribute.

    ``n=None`` returns the exact partition. The batch path draws one uniform
    per copy from the seeded stream and classifies them with the sampling
    kernel; ``per_instance=True`` calls ``medium.measure`` copy by copy and
    gives identical counts for the same seed.
    """
    exact = medium.exact_partition(state, v)
    if n is None:
        return exact
    if n < 1:
        raise ValueError("counting task needs n >= 1")
    rng = make_rng(seed)
    if per_instance:
        counts = np.zeros(len(v), dtype=np.int64)
        for _ in range(n):
            outcome, _post = medium.measure(state, v, rng)
            counts[v.index(outcome)] += 1
    else:
        cdf = np.cumsum(exact.as_array())
        counts = _kernels.sample_counts(cdf, rng.random(n))
    return PartitionOfUnity(v.attributes, tuple((counts / n).tolist()))


def partition_of_theta(theta: float, variable: Variable = X_VAR) -> PartitionOfUnity:
    if not variable.is_binary:
        raise NonBinary(f"variable {variable.id!r} is not binary")
    return PartitionOfUnity(variable.attributes, (math.cos(theta / 2) ** 2, math.sin(theta / 2) ** 2))


def theta_of_partition(p: PartitionOfUnity) -> float:
    """Canonical label in [0, pi]; theta and theta + pi share a partition."""
    if len(p) != 2:
        raise NonBinary(f"partition has {len(p)} entries")
    f0 = min(max(p.values[0], 0.0), 1.0)
    return 2.0 * math.acos(math.sqrt(f0))


def is_information_variable(medium: MediumModel, v: Variable) -> bool:
    return medium.permutation_allowed(v) and medium.clone_allowed(v)


def is_information_observable(medium: MediumModel, v: Variable) -> bool:
    return is_information_variable(medium, v) and medium.is_measurable(v)


@dataclass(frozen=True)
class SuperinformationResult:
    """Outcome of the superinformation decider.

    ``failing_pairs`` lists (attribute of v1, attribute of v2, overlap) for
    every pair that is neither jointly sharp nor distinguishable; any such
    pair stops the union from being cloned.
    """

    is_superinformation: bool
    failing_pairs: tuple = ()

    def __bool__(self):
        return self.is_superinformation

    @property
    def evidence(self):
        return self.failing_pairs[0] if self.failing_pairs else None

    def to_dict(self) -> dict:
        return {
            "is_superinformation": self.is_superinformation,
            "union_is_information_observable": not self.is_superinformation,
            "failing_pairs": [{"first": a.id, "second": b.id, "overlap": o} for a, b, o in self.failing_pairs],
        }


def detect_superinformation(medium: MediumModel, v1: Variable, v2: Variable) -> SuperinformationResult:
    for v in (v1, v2):
        if not is_information_observable(medium, v):
            raise PreconditionFailed(f"{v.id!r} is not an information observable of this medium")
    shared = set(v1.attributes) & set(v2.attributes)
    if shared:
        raise PreconditionFailed(f"{v1.id!r} and {v2.id!r} share attributes {sorted(a.id for a in shared)}")
    failing = []
    for p in v1:
        for q in v2:
            # attributes with a common state can be sharp together
            if p.isdisjoint(q) and not medium.distinguishable(p, q):
                failing.append((p, q, medium.overlap(p, q)))
    return SuperinformationResult(bool(failing), tuple(failing))


def is_generalized_mixture(medium: MediumModel, attr: Attribute, v: Variable) -> bool:
    """Every state of ``attr`` is non-sharp in ``v`` and they share one partition."""
    try:
        parts = [medium.label_partition(l, v) for l in attr.sorted_members()]
    except (NotMeasurable, NotPreparable):
        return False
    if not parts or any(p.is_sharp for p in parts):
        return False
    return all(p.close_to(parts[0]) for p in parts[1:])


@dataclass(frozen=True)
class DecisionConditionsReport:
    r1: bool
    r2: bool
    r3: bool
    evidence: Mapping = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return self.r1 and self.r2 and self.r3

    def to_dict(self) -> dict:
        return {"R1": self.r1, "R2": self.r2, "R3": self.r3, "evidence": dict(self.evidence)}


def _partition_list(medium, label, v):
    try:
        return list(medium.label_partition(label, v).values)
    except (NotMeasurable, NotPreparable):
        return None


def check_decision_conditions(medium: MediumModel, x: Variable, a: Variable) -> DecisionConditionsReport:
    """Evaluate the three symmetry requirements that let partitions act as probabilities."""
    x.require_binary()
    a.require_binary()
    evidence: dict[str, object] = {}

    r1 = all(is_generalized_mixture(medium, xi, a) for xi in x) and all(
        is_generalized_mixture(medium, aj, x) for aj in a
    )

    r2 = True
    for swapped, other in ((x, a), (a, x)):
        try:
            act = medium.swap_action(swapped[0], swapped[1])
        except ArityError:
            r2 = False
            evidence[f"S[{swapped.id}]"] = "swap not realizable"
            continue
        for attr in other:
            for label in attr.sorted_members():
                before = medium.label_state(label)
                after = act(before)
                evidence[f"{other.id}|S[{swapped.id}]({label})"] = _partition_list_state(medium, after, other)
                if not medium.contains(after, attr):
                    r2 = False

    r3 = True
    for v, w in ((x, a), (a, x)):
        for attr in v:
            for label in attr.sorted_members():
                p = _partition_list(medium, label, w)
                evidence[f"{w.id}|{label}"] = p
                if p is None or any(abs(f - 1.0 / len(w)) > PARTITION_TOL for f in p):
                    r3 = False
    return DecisionConditionsReport(r1, r2, r3, evidence)


def _partition_list_state(medium, state, v):
    try:
        return list(medium.exact_partition(state, v).values)
    except NotMeasurable:
        return None


def r4_candidate_state() -> tuple[CoherentState, dict]:
    """Two-level pair state (|x0 x0> + |x1 x1>)/sqrt(2) with its swap-closure checks.

    Offered as a hook only: the composite condition is not certified, since
    the attribute it asks for is not constructed anywhere.
    """
    psi = CoherentState.normalized([1, 0, 0, 1])
    xx = np.kron([[0, 1], [1, 0]], [[0, 1], [1, 0]])
    zz = np.kron(np.diag([1, -1]), np.diag([1, -1]))
    checks = {
        "invariant_under_X_swap": psi.same_ray(CoherentState(xx @ psi.amplitudes)),
        "invariant_under_A_swap": psi.same_ray(CoherentState(zz @ psi.amplitudes)),
        "certified": False,
    }
    return psi, checks
