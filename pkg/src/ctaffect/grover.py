"""Amplitude amplification with independent phases on the marked set and the prepared state.

One iteration is ``-I_gamma(theta) U^-1 I_tau(phi) U`` with U the W task on
every binary subsystem (a Walsh-Hadamard transform), ``I_tau(phi)`` the phase
e^{i phi} on marked items and ``I_gamma(theta)`` the phase e^{i theta} on the
prepared state. The global minus sign is dropped. ``run`` evolves the state
in the search frame, where the prepared state is uniform, using the compiled
kernel from :mod:`ctaffect._kernels`.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .errors import DimensionError, NoCongruentItems, ResourceLimit

MAX_ITEMS = 2**14
MAX_ITERATIONS = 10**4
MAX_DENSE_ITEMS = 2**10


@dataclass(frozen=True)
class GroverConfig:
    n_items: int
    marked: tuple
    theta_phase: float = math.pi
    phi_phase: float = math.pi
    iterations: int = 0
    seed: int = 0

    def __post_init__(self):
        n = int(self.n_items)
        if n < 2 or n & (n - 1):
            raise DimensionError(f"n_items={n} is not a power of two >= 2")
        marked = tuple(sorted({int(i) for i in self.marked}))
        if not marked:
            raise DimensionError("marked set is empty")
        if marked[0] < 0 or marked[-1] >= n:
            raise DimensionError(f"marked items must lie in [0, {n})")
        if len(marked) >= n:
            raise DimensionError("marked set must be a proper subset")
        if self.iterations < 0:
            raise DimensionError("iterations must be non-negative")
        object.__setattr__(self, "n_items", n)
        object.__setattr__(self, "marked", marked)

    @property
    def n_marked(self) -> int:
        return len(self.marked)

    @property
    def n_qubits(self) -> int:
        return self.n_items.bit_length() - 1

    def marked_mask(self) -> np.ndarray:
        mask = np.zeros(self.n_items, dtype=np.bool_)
        mask[list(self.marked)] = True
        return mask


@dataclass(frozen=True)
class GroverTrace:
    success_by_iteration: np.ndarray
    norms: np.ndarray = field(repr=False, default=None)

    @property
    def peak_iteration(self) -> int:
        return int(np.argmax(self.success_by_iteration))

    @property
    def peak_success(self) -> float:
        return float(self.success_by_iteration[self.peak_iteration])

    def rows(self) -> list[tuple[int, float]]:
        return [(j, float(p)) for j, p in enumerate(self.success_by_iteration)]

    def to_dict(self) -> dict:
        return {
            "peak_iteration": self.peak_iteration,
            "peak_success": self.peak_success,
            "success_by_iteration": [float(p) for p in self.success_by_iteration],
        }


def _hadamard_power(n_qubits: int) -> np.ndarray:
    h = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)
    u = np.ones((1, 1), dtype=np.complex128)
    for _ in range(n_qubits):
        u = np.kron(u, h)
    return u


@dataclass(frozen=True)
class GroverIteration:
    """One generalized Grover step as a coherent transformation."""

    config: GroverConfig

    def apply(self, state: np.ndarray) -> np.ndarray:
        """Apply the step to a search-frame amplitude vector."""
        cfg = self.config
        out = np.array(state, dtype=np.complex128)
        out[list(cfg.marked)] *= np.exp(1j * cfg.phi_phase)
        out = _kernels.fwht(out)
        out[0] *= np.exp(1j * cfg.theta_phase)
        return _kernels.fwht(out)

    __call__ = apply

    def matrix(self, frame: str = "search") -> np.ndarray:
        """Dense matrix of the step.

        ``frame="prepared"`` gives ``I_gamma(theta) U^-1 I_tau(phi) U`` with the
        prepared state |x0...x0>; ``frame="search"`` conjugates it by U, so the
        prepared state becomes the uniform superposition.
        """
        cfg = self.config
        if cfg.n_items > MAX_DENSE_ITEMS:
            raise DimensionError(f"dense matrix limited to {MAX_DENSE_ITEMS} items")
        u = _hadamard_power(cfg.n_qubits)
        i_tau = np.eye(cfg.n_items, dtype=np.complex128)
        i_tau[cfg.marked, cfg.marked] = np.exp(1j * cfg.phi_phase)
        i_gamma = np.eye(cfg.n_items, dtype=np.complex128)
        i_gamma[0, 0] = np.exp(1j * cfg.theta_phase)
        prepared = i_gamma @ u.conj().T @ i_tau @ u
        if frame == "prepared":
            return prepared
        if frame == "search":
            return u @ prepared @ u.conj().T
        raise ValueError(f"unknown frame {frame!r}")


def build_iteration_operator(cfg: GroverConfig) -> GroverIteration:
    return GroverIteration(cfg)


def uniform_state(n_items: int) -> np.ndarray:
    return np.full(n_items, 1.0 / math.sqrt(n_items), dtype=np.complex128)


def run(cfg: GroverConfig) -> GroverTrace:
    if cfg.n_items > MAX_ITEMS:
        raise ResourceLimit(f"n_items={cfg.n_items} exceeds {MAX_ITEMS}")
    if cfg.iterations > MAX_ITERATIONS:
        raise ResourceLimit(f"iterations={cfg.iterations} exceeds {MAX_ITERATIONS}")
    success, norms = _kernels.grover_trace(
        cfg.marked_mask(), float(cfg.theta_phase), float(cfg.phi_phase), int(cfg.iterations)
    )
    return GroverTrace(np.clip(success, 0.0, 1.0), norms)


def closed_form_success(n_items: int, n_marked: int, j) -> np.ndarray | float:
    """sin^2((2j+1) asin sqrt(M/N)): success of the standard (theta = phi = pi) search."""
    a = math.asin(math.sqrt(n_marked / n_items))
    return np.sin((2 * np.asarray(j) + 1) * a) ** 2


def optimal_iterations(n_items: int, n_marked: int) -> int:
    if not 0 < n_marked < n_items:
        raise DimensionError("need 0 < M < N")
    a = math.asin(math.sqrt(n_marked / n_items))
    js = np.arange(int(math.ceil(math.pi / (4 * a))) + 2)
    return int(np.argmax(closed_form_success(n_items, n_marked, js)))


@dataclass(frozen=True)
class ScanPoint:
    theta: float
    phi: float
    peak_success: float
    peak_iteration: int


def phase_grid(count: int = 11, stop: float = 2 * math.pi) -> list[float]:
    return [float(t) for t in np.linspace(0.0, stop, count)]


def phase_matching_scan(
    n_items: int,
    n_marked: int,
    grid: Sequence[tuple[float, float]],
    max_iterations: int | None = None,
    jobs: int = 1,
) -> list[ScanPoint]:
    """Peak success over iterations 0..4x optimal for each (theta, phi) on the grid."""
    grid = list(grid)
    if not grid:
        raise ValueError("scan grid is empty")
    iters = max_iterations if max_iterations is not None else 4 * max(optimal_iterations(n_items, n_marked), 1)
    marked = tuple(range(n_marked))

    def one(point):
        theta, phi = point
        tr = run(GroverConfig(n_items, marked, theta, phi, iters))
        return ScanPoint(float(theta), float(phi), tr.peak_success, tr.peak_iteration)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, grid))
    return [one(p) for p in grid]


@dataclass(frozen=True)
class MoodReport:
    mood: str
    congruent_items: tuple
    incongruent_items: tuple
    congruent_recall: tuple
    theta: float
    phi: float

    @property
    def incongruent_recall(self) -> tuple:
        return tuple(1.0 - p for p in self.congruent_recall)

    @property
    def peak_iteration(self) -> int:
        return int(np.argmax(self.congruent_recall))

    @property
    def peak_congruent_recall(self) -> float:
        return float(self.congruent_recall[self.peak_iteration])

    def to_dict(self) -> dict:
        return {
            "mood": self.mood,
            "theta": self.theta,
            "phi": self.phi,
            "congruent_items": list(self.congruent_items),
            "incongruent_items": list(self.incongruent_items),
            "congruent_recall": list(self.congruent_recall),
            "incongruent_recall": list(self.incongruent_recall),
            "peak_iteration": self.peak_iteration,
            "peak_congruent_recall": self.peak_congruent_recall,
        }


def mood_congruent_demo(
    n_items: int,
    valence_tags: Mapping[int, str],
    mood: str,
    theta: float = math.pi,
    phi: float = math.pi,
    iterations: int | None = None,
) -> MoodReport:
    """Recall of mood-congruent items when they form the marked set of the search."""
    if mood not in ("+", "-"):
        raise ValueError(f"mood must be '+' or '-', got {mood!r}")
    missing = [i for i in range(n_items) if i not in valence_tags]
    if missing:
        raise ValueError(f"items without a valence tag: {missing[:5]}")
    bad = {t for t in valence_tags.values() if t not in ("+", "-")}
    if bad:
        raise ValueError(f"unknown valence tags {sorted(bad)}")
    congruent = tuple(i for i in range(n_items) if valence_tags[i] == mood)
    incongruent = tuple(i for i in range(n_items) if valence_tags[i] != mood)
    if not congruent:
        raise NoCongruentItems(f"no item carries the {mood!r} tag")
    if n_items < 2 or n_items & (n_items - 1):
        raise DimensionError(f"n_items={n_items} is not a power of two >= 2")
    if iterations is None:
        iterations = optimal_iterations(n_items, len(congruent)) * 4 if incongruent else 0
    if iterations > MAX_ITERATIONS or n_items > MAX_ITEMS:
        raise ResourceLimit("mood demo exceeds simulation limits")
    mask = np.zeros(n_items, dtype=np.bool_)
    mask[list(congruent)] = True
    success, _ = _kernels.grover_trace(mask, float(theta), float(phi), int(iterations))
    recall = tuple(float(min(max(p, 0.0), 1.0)) for p in success)
    return MoodReport(mood, congruent, incongruent, recall, float(theta), float(phi))
