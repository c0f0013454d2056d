"""W, its transpose, the classical coin task and the phase task F(phi).

Each task has a relation form (a TaskSpec over the named attributes) and,
where the coherent medium supports it, a 2x2 action on amplitudes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ClassicalMediumUnsupported, TaskAlgebraError
from .media import (
    ClassicalMedium,
    ClassicalState,
    CoherentMedium,
    CoherentState,
    MediumModel,
    PartitionOfUnity,
)
from .task_algebra import (
    A_MINUS,
    A_PLUS,
    A_VAR,
    X0,
    X1,
    X_VAR,
    Attribute,
    TaskSpec,
    compose_serial,
    identity_task,
    transpose,
)

TWO_PI = 2.0 * math.pi

#: Class label of the unique equal-weight classical mixture.
MU = Attribute("mu", frozenset(["mu"]))


@dataclass(frozen=True)
class PhaseParameter:
    phi: float

    def __post_init__(self):
        phi = float(self.phi)
        if not math.isfinite(phi):
            raise ValueError(f"phase must be finite, got {phi!r}")
        phi = math.fmod(phi, TWO_PI)
        if phi < 0:
            phi += TWO_PI
        if phi >= TWO_PI:
            phi = 0.0
        object.__setattr__(self, "phi", phi)

    def __float__(self):
        return self.phi


def _phi(phi) -> float:
    return phi.phi if isinstance(phi, PhaseParameter) else PhaseParameter(phi).phi


def w_task() -> TaskSpec:
    return TaskSpec(frozenset({(X0, A_PLUS), (X1, A_MINUS)}), "W")


def w_tilde_task() -> TaskSpec:
    t = transpose(w_task())
    return TaskSpec(t.pairs, "W~")


def w_unitary(medium: CoherentMedium | None = None) -> np.ndarray:
    """Matrix sending x0 to a+ and x1 to a- (columns are the A vectors in the X basis)."""
    medium = CoherentMedium.qubit() if medium is None else medium
    if not isinstance(medium, CoherentMedium):
        raise ClassicalMediumUnsupported("W has no coherent action on a classical medium")
    ap = medium.prepare(A_PLUS).amplitudes
    am = medium.prepare(A_MINUS).amplitudes
    x0 = medium.prepare(X0).amplitudes
    x1 = medium.prepare(X1).amplitudes
    return np.outer(ap, x0.conj()) + np.outer(am, x1.conj())


def w_tilde_unitary(medium: CoherentMedium | None = None) -> np.ndarray:
    return w_unitary(medium).conj().T


def coin_task() -> TaskSpec:
    """x0 -> mu, x1 -> mu on a classical medium; it has no transpose."""
    return TaskSpec(frozenset({(X0, MU), (X1, MU)}), "C")


def coin_action(state: ClassicalState, medium: ClassicalMedium | None = None) -> ClassicalState:
    """Send any state sharp in X to the equal-weight X mixture."""
    medium = ClassicalMedium.bit() if medium is None else medium
    x = medium.variables["X"]
    p = medium.exact_partition(state, x)
    if not p.is_sharp:
        raise TaskAlgebraError("the coin task is specified on sharp X states only")
    labels = sorted(x[0].members | x[1].members, key=repr)
    return ClassicalState.uniform(labels)


@dataclass(frozen=True)
class PhaseTask:
    """F(phi): relative factor e^{i phi} on x1 against x0."""

    phase: PhaseParameter

    @property
    def matrix(self) -> np.ndarray:
        return np.diag([1.0, np.exp(1j * self.phase.phi)]).astype(np.complex128)

    def apply(self, state: CoherentState) -> CoherentState:
        return CoherentState(self.matrix @ state.amplitudes)

    __call__ = apply

    @property
    def relation(self) -> TaskSpec:
        """Attribute-level relation; exists only where F maps named attributes to named attributes."""
        phi = self.phase.phi
        if phi == 0.0:
            return TaskSpec(identity_task(X_VAR).pairs | identity_task(A_VAR).pairs, "F")
        if math.isclose(phi, math.pi, rel_tol=0, abs_tol=1e-12):
            pairs = {(X0, X0), (X1, X1), (A_PLUS, A_MINUS), (A_MINUS, A_PLUS)}
            return TaskSpec(frozenset(pairs), "F")
        raise TaskAlgebraError(f"F({phi}) sends a+ outside the named attributes; use the coherent action")


def phase_task(phi, medium: MediumModel | None = None) -> PhaseTask:
    if isinstance(medium, ClassicalMedium):
        raise ClassicalMediumUnsupported(
            "on a classical medium only the identity and X permutations keep every X partition"
        )
    return PhaseTask(phi if isinstance(phi, PhaseParameter) else PhaseParameter(phi))


def wfw_unitary(phi, medium: CoherentMedium | None = None) -> np.ndarray:
    return w_tilde_unitary(medium) @ phase_task(phi).matrix @ w_unitary(medium)


def wfw_relation(phi) -> TaskSpec:
    """W~ F W as a task relation (phi = 0 or pi only)."""
    return compose_serial(w_tilde_task(), phase_task(phi).relation, w_task())


def compose_wfw(phi, input: Attribute, medium: CoherentMedium | None = None) -> PartitionOfUnity:
    """X partition of W~ F(phi) W applied to the sharp state ``input``."""
    medium = CoherentMedium.qubit() if medium is None else medium
    if input not in X_VAR:
        raise TaskAlgebraError(f"input must be x0 or x1, got {input.id!r}")
    out = medium.apply(wfw_unitary(phi, medium), medium.prepare(input))
    return medium.exact_partition(out, X_VAR)


def wfw_scan(phis, input: Attribute = X0) -> list[tuple[float, PartitionOfUnity]]:
    return [(float(p), compose_wfw(p, input)) for p in phis]
