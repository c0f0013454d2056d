"""Constructor-theoretic judgement and affect simulations.

Submodules:

- ``task_algebra``: attributes, variables and tasks as finite relations
- ``media``: classical and coherent medium models, partitions of unity, deciders
- ``judgement``: judged likelihoods, conjunction/independence/symmetry checks
- ``phase_tasks``: W, the coin task, the phase task and W~ F W
- ``grover``: generalized amplitude amplification and phase-matching scans
- ``cli``: the ``ctaffect`` experiment harness
"""
__version__ = "0.1.0"

from ._kernels import BACKEND
from .errors import *  # noqa: F401,F403
from .media import (
    ClassicalMedium,
    ClassicalState,
    CoherentMedium,
    CoherentState,
    PartitionOfUnity,
    check_decision_conditions,
    counting_task,
    detect_superinformation,
    is_information_variable,
    partition_of_theta,
    theta_of_partition,
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
    Variable,
    compose_parallel,
    compose_serial,
    make_standard_task,
    transpose,
)
