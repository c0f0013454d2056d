import math
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctaffect import _kernels

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


def hadamard(n):
    h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    u = np.ones((1, 1))
    for _ in range(int(math.log2(n))):
        u = np.kron(u, h)
    return u


@pytest.mark.parametrize("n", [2, 8, 64])
def test_numpy_fwht_matches_dense(n):
    psi = np.random.default_rng(n).normal(size=n) + 0j
    assert np.allclose(_kernels.numpy_fwht(psi), hadamard(n) @ psi, atol=1e-12)


def test_sample_counts_edges():
    cdf = np.array([0.25, 1.0])
    u = np.array([0.0, 0.2499, 0.25, 0.9999])
    assert _kernels.numpy_sample_counts(cdf, u).tolist() == [2, 2]


@needs_numba
@settings(max_examples=30, deadline=None)
@given(nq=st.integers(1, 8), theta=st.floats(0, 7), phi=st.floats(0, 7), seed=st.integers(0, 2**31))
def test_backends_agree_on_grover(nq, theta, phi, seed):
    n = 2**nq
    rng = np.random.default_rng(seed)
    mask = rng.random(n) < 0.3
    if not mask.any() or mask.all():
        mask[:] = False
        mask[0] = True
    a, na = _kernels.numpy_grover_trace(mask, theta, phi, 20)
    b, nb = _kernels.numba_grover_trace(mask, theta, phi, 20)
    assert np.max(np.abs(a - b)) <= 1e-12
    assert np.max(np.abs(na - nb)) <= 1e-12


@needs_numba
@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**31), k=st.integers(1, 6))
def test_backends_agree_on_sampling(seed, k):
    rng = np.random.default_rng(seed)
    cdf = np.cumsum(rng.dirichlet(np.ones(k)))
    u = rng.random(1000)
    assert _kernels.numpy_sample_counts(cdf, u).tolist() == _kernels.numba_sample_counts(cdf, u).tolist()


@needs_numba
def test_backends_agree_on_fwht():
    psi = np.random.default_rng(1).normal(size=256) + 1j * np.random.default_rng(2).normal(size=256)
    assert np.allclose(_kernels.numpy_fwht(psi), _kernels.numba_fwht(psi), atol=1e-12)


def test_env_flag_selects_numpy():
    env = dict(os.environ, CT_AFFECT_JIT="0")
    out = subprocess.run(
        [sys.executable, "-c", "import ctaffect; print(ctaffect.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
