"""Named experiments. Each returns a list of artifacts to be written by the CLI."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from .errors import ConfigInvalid
from .grover import (
    GroverConfig,
    mood_congruent_demo,
    optimal_iterations,
    phase_grid,
    phase_matching_scan,
    run,
)
from .judgement import (
    classify_infusion,
    conjunction_check,
    describe_state,
    independence_check,
    random_product_mixture,
    symmetry_check,
)
from .media import (
    ClassicalMedium,
    ClassicalState,
    CoherentMedium,
    MediumModel,
    check_decision_conditions,
    detect_superinformation,
    is_information_observable,
    make_rng,
    theta_of_partition,
)
from .phase_tasks import compose_wfw
from .task_algebra import A_VAR, X0, X_VAR


@dataclass(frozen=True)
class Artifact:
    name: str
    format: str
    payload: Any


def build_medium(kind: str) -> MediumModel:
    if kind == "classical":
        return ClassicalMedium.product(X_VAR, A_VAR)
    if kind == "coherent":
        return CoherentMedium.qubit()
    raise ConfigInvalid(f"unknown medium {kind!r}")


def _need_seed(seed, what: str) -> int:
    if seed is None:
        raise ConfigInvalid(f"{what} draws random states: pass --seed or set CT_AFFECT_SEED")
    return int(seed)


def _named_states(m: MediumModel):
    x, a = m.variables["X"], m.variables["A"]
    return [m.prepare(attr) for attr in (*x, *a)]


def _default_mixture(m: MediumModel):
    if isinstance(m, CoherentMedium):
        return m.prepare(X0)
    x, a = m.variables["X"], m.variables["A"]
    px, pa = (0.3, 0.7), (0.4, 0.6)
    w = {}
    for xi, fx in zip(x, px):
        for aj, fa in zip(a, pa):
            (label,) = xi.members & aj.members
            w[label] = fx * fa
    return ClassicalState(w)


def classify_medium(medium: str = "coherent", **_) -> list[Artifact]:
    m = build_medium(medium)
    x, a = m.variables["X"], m.variables["A"]
    sup = detect_superinformation(m, x, a)
    conj = conjunction_check(m, x, a, _named_states(m))
    indep = independence_check(m, x[0], a, _default_mixture(m))
    report = {
        "experiment": "classify-medium",
        "medium": medium,
        "information_observables": {v.id: is_information_observable(m, v) for v in (x, a)},
        "superinformation": sup.to_dict(),
        "decision_conditions": check_decision_conditions(m, x, a).to_dict(),
        "conjunction": conj,
        "independence": indep,
        "classification": "superinformation" if sup else "information",
        "infusion": classify_infusion(conj).value,
    }
    return [Artifact("classify-medium", "json", report)]


def conjunction(medium: str = "coherent", states: int | None = None, seed: int | None = None, **_) -> list[Artifact]:
    m = build_medium(medium)
    x, a = m.variables["X"], m.variables["A"]
    sample = _named_states(m)
    n_random = states if states is not None else (1000 if medium == "classical" else 0)
    if n_random:
        rng = make_rng(_need_seed(seed, "conjunction"))
        sample += [m.random_state(rng) for _ in range(n_random)]
    rep = conjunction_check(m, x, a, sample)
    out = {
        "experiment": "conjunction",
        "medium": medium,
        "seed": seed if n_random else None,
        "report": rep,
        "infusion": classify_infusion(rep).value,
    }
    return [Artifact("conjunction", "json", out)]


def e1e2(medium: str = "coherent", mixtures: int | None = None, seed: int | None = None, **_) -> list[Artifact]:
    m = build_medium(medium)
    x, a = m.variables["X"], m.variables["A"]
    first = independence_check(m, x[0], a, _default_mixture(m))
    out: dict[str, Any] = {"experiment": "e1e2", "medium": medium, "report": first}
    k = mixtures if mixtures is not None else (1000 if medium == "classical" else 0)
    if k:
        rng = make_rng(_need_seed(seed, "e1e2"))
        violations = []
        e2_count = 0
        for i in range(k):
            # alternate independent and arbitrary (correlated) mixtures
            z = random_product_mixture(m, x, a, rng) if i % 2 == 0 else m.random_state(rng)
            if m.exact_partition(z, a).is_sharp:
                continue
            for xi in x:
                rep = independence_check(m, xi, a, z)
                e2_count += int(rep.values["E2"])
                if not rep.values["implication_holds"]:
                    violations.append({"index": i, "attribute": xi.id, "z": describe_state(z)})
        out.update(seed=seed, n_mixtures=k, n_e2_holds=e2_count, n_violations=len(violations),
                   violations=violations[:10])
    out["infusion"] = classify_infusion(first).value
    return [Artifact("e1e2", "json", out)]


def symmetry(medium: str = "coherent", jx: float = 0.3, ja: float = 0.5, jxa: float = 0.2, **_) -> list[Artifact]:
    m = build_medium(medium)
    x, a = m.variables["X"], m.variables["A"]
    if medium == "coherent":
        reports = {f"{xi.id},{aj.id}": symmetry_check(m, xi, aj) for xi in x for aj in a}
        state = None
    else:
        if not (0 <= jxa <= min(jx, ja) and jx + ja - jxa <= 1):
            raise ConfigInvalid("jx, ja, jxa do not define a joint distribution")
        w = {}
        joint = {(0, 0): jxa, (0, 1): jx - jxa, (1, 0): ja - jxa, (1, 1): 1 - jx - ja + jxa}
        for (i, j), p in joint.items():
            (label,) = x[i].members & a[j].members
            w[label] = p
        state = ClassicalState(w)
        reports = {f"{x[0].id},{a[0].id}": symmetry_check(m, x[0], a[0], state)}
    out = {
        "experiment": "symmetry",
        "medium": medium,
        "state": describe_state(state) if state is not None else None,
        "reports": reports,
        "all_symmetric": all(r.values["symmetric"] == 1.0 for r in reports.values()),
    }
    return [Artifact("symmetry", "json", out)]


def wfw_scan(phi_grid: Sequence[float] | None = None, **_) -> list[Artifact]:
    phis = list(phi_grid) if phi_grid is not None else phase_grid(9)
    rows = []
    for phi in phis:
        p = compose_wfw(phi, X0)
        rows.append([float(phi), p.values[0], p.values[1], theta_of_partition(p)])
    header = ["phi", "f_x0", "f_x1", "theta"]
    table = {"header": header, "rows": rows}
    summary = {"experiment": "wfw-scan", "input": "x0", "rows": [dict(zip(header, r)) for r in rows]}
    return [Artifact("wfw-scan", "json", summary), Artifact("wfw-scan", "csv", table)]


def _marked(N: int, M: int | None, marked: Sequence[int] | None) -> tuple:
    if marked:
        return tuple(marked)
    return tuple(range(M if M is not None else 1))


def grover(N: int = 4, M: int | None = None, marked=None, theta: float = math.pi, phi: float = math.pi,
           iters: int | None = None, **_) -> list[Artifact]:
    mk = _marked(N, M, marked)
    if iters is None:
        iters = optimal_iterations(N, len(mk)) if len(mk) < N else 0
    cfg = GroverConfig(N, mk, theta, phi, iters)
    trace = run(cfg)
    summary = {
        "experiment": "grover",
        "N": N,
        "marked": list(cfg.marked),
        "theta": theta,
        "phi": phi,
        "iterations": iters,
        "optimal_iterations": optimal_iterations(N, len(cfg.marked)),
        "trace": trace,
    }
    return [Artifact("grover", "json", summary), Artifact("grover", "csv", trace)]


def grover_scan(N: int = 64, M: int | None = None, theta_grid=None, phi_grid=None, grid_size: int = 11,
                jobs: int = 1, **_) -> list[Artifact]:
    thetas = list(theta_grid) if theta_grid is not None else phase_grid(grid_size)
    phis = list(phi_grid) if phi_grid is not None else phase_grid(grid_size)
    points = phase_matching_scan(N, M or 1, [(t, p) for t in thetas for p in phis], jobs=jobs)
    best = max(points, key=lambda p: p.peak_success)
    diag_best = max((p for p in points if abs(p.theta - p.phi) <= 1e-12), key=lambda p: p.peak_success, default=None)
    far = [p.peak_success for p in points if abs(p.theta - p.phi) >= math.pi / 2 - 1e-12]
    summary = {
        "experiment": "grover-scan",
        "N": N,
        "M": M or 1,
        "max": {"theta": best.theta, "phi": best.phi, "peakSuccess": best.peak_success},
        "max_on_diagonal": diag_best is not None and diag_best.peak_success >= best.peak_success,
        "max_far_off_diagonal": max(far) if far else None,
        "n_points": len(points),
    }
    return [Artifact("grover-scan", "json", summary), Artifact("grover-scan", "csv", points)]


def mood_demo(N: int = 16, tags: str | None = None, mood: str = "+", theta: float = math.pi,
              phi: float = math.pi, iters: int | None = None, **_) -> list[Artifact]:
    if tags is None:
        tags = "++" + "-" * (N - 2)
    if len(tags) != N:
        raise ConfigInvalid(f"--tags has {len(tags)} entries for N={N}")
    rep = mood_congruent_demo(N, dict(enumerate(tags)), mood, theta, phi, iters)
    summary = {"experiment": "mood-demo", "N": N, "tags": tags, "report": rep}
    return [Artifact("mood-demo", "json", summary), Artifact("mood-demo", "csv", rep)]


EXPERIMENTS: dict[str, Callable[..., list[Artifact]]] = {
    "classify-medium": classify_medium,
    "conjunction": conjunction,
    "e1e2": e1e2,
    "symmetry": symmetry,
    "wfw-scan": wfw_scan,
    "grover": grover,
    "grover-scan": grover_scan,
    "mood-demo": mood_demo,
}
