"""Judged likelihoods and the checks that separate information from superinformation.

A judgement J(x) is the x entry of the partition of unity of a state, either
exact or estimated by the counting task. Conditioning on a sharp attribute
means preparing it: directly, or from a given state via the medium's
post-measurement update. A conjunction J(x, y) of two variables that cannot
be measured together is read as "measure the first, then the second on the
resulting state"; the check functions report both orders.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import EmptyReport, NotAMixture, NotMeasurable, NotPreparable, PreconditionFailed
from .media import (
    ClassicalState,
    CoherentState,
    MediumModel,
    MediumState,
    counting_task,
    detect_superinformation,
)
from .task_algebra import Attribute, Variable

EXACT_TOL = 1e-9


class Classification(str, enum.Enum):
    INFORMATION = "information"
    SUPERINFORMATION = "superinformation"


class Infusion(str, enum.Enum):
    LOW = "low"
    HIGH = "high"


_RELATIONS: dict[str, Callable[[float, float, float], bool]] = {
    "<=": lambda l, r, t: l <= r + t,
    "==": lambda l, r, t: abs(l - r) <= t,
    "!=": lambda l, r, t: abs(l - r) > t,
}


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: float
    rhs: float
    holds: bool
    relation: str = "<="

    @classmethod
    def check(cls, name: str, lhs: float, rhs: float, relation: str = "<=", tol: float = EXACT_TOL) -> "Inequality":
        if relation not in _RELATIONS:
            raise ValueError(f"unknown relation {relation!r}")
        return cls(name, float(lhs), float(rhs), _RELATIONS[relation](lhs, rhs, tol), relation)

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "relation": self.relation, "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class JudgementReport:
    values: Mapping[str, float] = field(default_factory=dict)
    inequalities: tuple = ()
    witness: Mapping | None = None
    classification: Classification | None = None

    def __post_init__(self):
        for k, v in self.values.items():
            if k.startswith("J(") and not (-EXACT_TOL <= v <= 1 + EXACT_TOL):
                raise ValueError(f"judgement {k} = {v} outside [0, 1]")
        object.__setattr__(self, "inequalities", tuple(self.inequalities))

    @property
    def is_empty(self) -> bool:
        return not self.values and not self.inequalities

    @property
    def violations(self) -> list[Inequality]:
        return [q for q in self.inequalities if not q.holds]

    def to_dict(self) -> dict:
        return {
            "classification": self.classification.value if self.classification else None,
            "inequalities": [q.to_dict() for q in self.inequalities],
            "values": dict(sorted(self.values.items())),
            "witness": dict(self.witness) if self.witness is not None else None,
        }


def describe_state(state: MediumState) -> dict:
    """JSON-friendly description of a state."""
    if isinstance(state, CoherentState):
        return {"amplitudes": [[float(z.real), float(z.imag)] for z in state.amplitudes]}
    if isinstance(state, ClassicalState):
        return {"weights": {_label_str(k): float(v) for k, v in sorted(state.weights.items(), key=lambda kv: repr(kv[0]))}}
    raise TypeError(type(state))


def _label_str(label) -> str:
    return "|".join(label) if isinstance(label, tuple) else str(label)


# -- judgements ------------------------------------------------------------------

def judge(
    medium: MediumModel,
    state: MediumState,
    x: Attribute,
    variable: Variable | None = None,
    *,
    n: int | None = None,
    seed: int = 0,
) -> float:
    """J(x): exact when ``n`` is None, otherwise the counting-task estimate from ``n`` copies."""
    v = variable if variable is not None else medium.variable_of(x)
    if x not in v:
        raise NotMeasurable(f"{x.id!r} is not an attribute of {v.id!r}")
    return counting_task(medium, state, v, n, seed)[x]


def judge_conditional(
    medium: MediumModel,
    prepared: Attribute,
    target: Attribute,
    state: MediumState | None = None,
) -> float:
    """J(target | prepared).

    Without ``state`` the medium prepares ``prepared`` from scratch; with one,
    ``state`` is updated as if ``prepared`` had just been observed.
    """
    s = medium.prepare(prepared) if state is None else medium.condition(state, prepared)
    return judge(medium, s, target)


def judge_sequential_conjunction(
    medium: MediumModel, state: MediumState, first: Attribute, second: Attribute
) -> float:
    p1 = judge(medium, state, first)
    if p1 <= 0.0:
        return 0.0
    post = medium.condition(state, first)
    return p1 * judge(medium, post, second)


def conjunction_check(
    medium: MediumModel,
    v1: Variable,
    v2: Variable,
    states: Sequence[MediumState],
    tol: float = EXACT_TOL,
) -> JudgementReport:
    """Check J(x, y) <= J(x) and J(x, y) <= J(y) over ``states`` in both measurement orders.

    Only violated inequalities are listed; with none, the tightest checked
    bound is listed instead so the report still shows the margin. The witness
    is the first violation found.
    """
    violated: list[Inequality] = []
    tightest: Inequality | None = None
    witness = None
    n_checked = 0
    max_excess = -math.inf
    for k, s in enumerate(states):
        single = {a: judge(medium, s, a) for a in itertools.chain(v1, v2)}
        for x, y in itertools.product(v1, v2):
            for first, second in ((x, y), (y, x)):
                joint = judge_sequential_conjunction(medium, s, first, second)
                for bound in (first, second):
                    q = Inequality.check(
                        f"s[{k}]: J({first.id} then {second.id}) <= J({bound.id})", joint, single[bound], "<=", tol
                    )
                    n_checked += 1
                    excess = q.lhs - q.rhs
                    if excess > max_excess:
                        max_excess = excess
                        tightest = q
                    if not q.holds:
                        violated.append(q)
                        if witness is None:
                            witness = {
                                "state_index": k,
                                "state": describe_state(s),
                                "first": first.id,
                                "second": second.id,
                                "joint": joint,
                                "bound_attribute": bound.id,
                                "bound": single[bound],
                            }
    values = {
        "n_states": float(len(states)),
        "n_checked": float(n_checked),
        "n_violated": float(len(violated)),
        "max_excess": float(max_excess) if n_checked else 0.0,
    }
    listed = violated if violated else ([tightest] if tightest is not None else [])
    cls = Classification.SUPERINFORMATION if violated else Classification.INFORMATION
    return JudgementReport(values, tuple(listed), witness, cls)


def independence_check(
    medium: MediumModel,
    x: Attribute,
    affect: Variable,
    z: MediumState,
    tol: float = EXACT_TOL,
) -> JudgementReport:
    """Test whether independence under every sharp affect state carries over to the mixture z.

    E2 holds when J(x|a) is the same for every a; that common value is the
    baseline J(x). E1 holds when J(x|z) differs from it. Both holding at once
    breaks the implication E2 => not E1, which an information medium cannot do.
    """
    pz = medium.exact_partition(z, affect)
    if pz.is_sharp:
        raise NotAMixture(f"state is sharp in {affect.id!r}")
    values: dict[str, float] = {}
    conditioned = []
    for a in affect:
        try:
            j = judge(medium, medium.condition(z, a), x)
        except NotPreparable:
            continue
        values[f"J({x.id}|{a.id})"] = j
        values[f"f_{a.id}(z)"] = pz[a]
        conditioned.append((a, j))
    if not conditioned:
        raise PreconditionFailed("no affect attribute can be conditioned on")
    j_z = judge(medium, z, x)
    baseline = conditioned[0][1]
    values[f"J({x.id}|z)"] = j_z
    values[f"J({x.id})"] = baseline

    inequalities = [
        Inequality.check(f"E2: J({x.id}|{a.id}) == J({x.id})", j, baseline, "==", tol) for a, j in conditioned
    ]
    e2 = all(q.holds for q in inequalities)
    e1_q = Inequality.check(f"E1: J({x.id}|z) != J({x.id})", j_z, baseline, "!=", tol)
    inequalities.append(e1_q)
    e1 = e1_q.holds
    implication = not (e1 and e2)
    values["E1"] = float(e1)
    values["E2"] = float(e2)
    values["implication_holds"] = float(implication)
    witness = None if implication else {"z": describe_state(z), "attribute": x.id}
    cls = Classification.INFORMATION if implication else Classification.SUPERINFORMATION
    return JudgementReport(values, tuple(inequalities), witness, cls)


def symmetry_check(
    medium: MediumModel,
    x: Attribute,
    a: Attribute,
    state: MediumState | None = None,
    tol: float = EXACT_TOL,
) -> JudgementReport:
    """Compare J(x|a) with J(a|x); equality marks the affect-as-information regime."""
    j_xa = judge_conditional(medium, a, x, state)
    j_ax = judge_conditional(medium, x, a, state)
    values = {f"J({x.id}|{a.id})": j_xa, f"J({a.id}|{x.id})": j_ax}
    inequalities = [Inequality.check(f"J({x.id}|{a.id}) == J({a.id}|{x.id})", j_xa, j_ax, "==", tol)]
    if state is not None:
        jx, ja = judge(medium, state, x), judge(medium, state, a)
        values[f"J({x.id})"] = jx
        values[f"J({a.id})"] = ja
        inequalities.append(Inequality.check(f"J({x.id}|{a.id})J({a.id}) == J({a.id}|{x.id})J({x.id})", j_xa * ja, j_ax * jx, "==", tol))
    values["symmetric"] = float(inequalities[0].holds)
    classification = None
    try:
        vx, va = medium.variable_of(x), medium.variable_of(a)
        if vx != va:
            sup = detect_superinformation(medium, vx, va)
            classification = Classification.SUPERINFORMATION if sup else Classification.INFORMATION
    except (NotMeasurable, PreconditionFailed):
        pass
    return JudgementReport(values, tuple(inequalities), None, classification)


def categorize(
    medium: MediumModel,
    state: MediumState,
    predicate: Callable[[Attribute], bool] | Mapping | Iterable[Attribute],
    variable: Variable | None = None,
) -> float:
    """Category judgement: total partition weight of the attributes the predicate accepts."""
    if isinstance(predicate, Mapping):
        keys = list(predicate)
        if variable is None:
            first = keys[0]
            variable = medium.variable_of(first if isinstance(first, Attribute) else _lookup(medium, first))
        table = {(k if isinstance(k, str) else k.id): bool(v) for k, v in predicate.items()}
        missing = [a.id for a in variable if a.id not in table]
        if missing:
            raise ValueError(f"predicate undefined on {missing}")
        chi = lambda a: table[a.id]
    elif callable(predicate):
        if variable is None:
            raise ValueError("a callable predicate needs an explicit variable")
        chi = predicate
    else:
        accepted = set(predicate)
        if variable is None:
            variable = medium.variable_of(next(iter(accepted)))
        chi = lambda a: a in accepted
    p = medium.exact_partition(state, variable)
    return math.fsum(f for a, f in zip(p.attributes, p.values) if chi(a))


def _lookup(medium: MediumModel, attr_id: str) -> Attribute:
    for v in medium.variables.values():
        for a in v:
            if a.id == attr_id:
                return a
    raise NotMeasurable(f"no attribute named {attr_id!r}")


def classify_infusion(report: JudgementReport) -> Infusion:
    """Low affect infusion for information-type reports, high for superinformation."""
    if report.is_empty or report.classification is None:
        raise EmptyReport("report carries no classification")
    return Infusion.LOW if report.classification == Classification.INFORMATION else Infusion.HIGH


def random_product_mixture(medium, x: Variable, affect: Variable, rng: np.random.Generator) -> ClassicalState:
    """Classical state with X independent of the affect variable and affect non-sharp."""
    px = rng.dirichlet(np.ones(len(x)))
    pa = rng.dirichlet(np.ones(len(affect)))
    weights: dict = {}
    for (xi, fx), (aj, fa) in itertools.product(zip(x, px), zip(affect, pa)):
        for label in xi.members & aj.members:
            weights[label] = weights.get(label, 0.0) + fx * fa / len(xi.members & aj.members)
    total = math.fsum(weights.values())
    return ClassicalState({k: v / total for k, v in weights.items()})
