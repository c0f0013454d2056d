"""Hot loops, compiled with numba when available.

Set ``CT_AFFECT_JIT=0`` to force the pure-numpy path. Both paths are always
importable as ``numpy_*`` / ``numba_*`` so tests and benchmarks can compare them.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional
    numba = None

HAVE_NUMBA = numba is not None
USE_JIT = HAVE_NUMBA and os.environ.get("CT_AFFECT_JIT", "1").strip().lower() not in ("0", "false", "no", "off")
BACKEND = "numba" if USE_JIT else "numpy"


# -- numpy reference path ---------------------------------------------------

def numpy_sample_counts(cdf: np.ndarray, uniforms: np.ndarray) -> np.ndarray:
    """Outcome k is the first index with ``u < cdf[k]``; returns counts per outcome."""
    k = cdf.shape[0]
    idx = np.searchsorted(cdf, uniforms, side="right")
    np.minimum(idx, k - 1, out=idx)
    return np.bincount(idx, minlength=k).astype(np.int64)


def numpy_fwht(psi: np.ndarray) -> np.ndarray:
    """Normalized Walsh-Hadamard transform (one W per qubit); returns a new array."""
    n = psi.shape[0]
    out = psi.astype(np.complex128, copy=True)
    h = 1
    while h < n:
        blocks = out.reshape(-1, 2, h)
        a = blocks[:, 0, :].copy()
        b = blocks[:, 1, :]
        blocks[:, 0, :] = a + b
        blocks[:, 1, :] = a - b
        h *= 2
    out *= 1.0 / np.sqrt(n)
    return out


def numpy_grover_trace(marked: np.ndarray, theta: float, phi: float, iterations: int):
    """Success probability and norm after each generalized Grover iteration.

    Works in the search frame: the state starts uniform and each step applies
    the marked-set phase ``e^{i phi}`` followed by ``U I_0(theta) U^-1``.
    """
    n = marked.shape[0]
    state = np.full(n, 1.0 / np.sqrt(n), dtype=np.complex128)
    success = np.empty(iterations + 1)
    norms = np.empty(iterations + 1)
    mark_phase = np.exp(1j * phi)
    prep_phase = np.exp(1j * theta)
    success[0] = np.sum(np.abs(state[marked]) ** 2)
    norms[0] = np.sqrt(np.sum(np.abs(state) ** 2))
    for j in range(1, iterations + 1):
        state[marked] *= mark_phase
        state = numpy_fwht(state)
        state[0] *= prep_phase
        state = numpy_fwht(state)
        success[j] = np.sum(np.abs(state[marked]) ** 2)
        norms[j] = np.sqrt(np.sum(np.abs(state) ** 2))
    return success, norms


# -- numba path ---------------------------------------------------------------

if HAVE_NUMBA:

    @numba.njit(cache=True, nogil=True)
    def numba_sample_counts(cdf, uniforms):
        k = cdf.shape[0]
        counts = np.zeros(k, dtype=np.int64)
        for i in range(uniforms.shape[0]):
            u = uniforms[i]
            j = 0
            while j < k - 1 and u >= cdf[j]:
                j += 1
            counts[j] += 1
        return counts

    @numba.njit(cache=True, nogil=True)
    def _fwht_inplace(psi):
        n = psi.shape[0]
        h = 1
        while h < n:
            for start in range(0, n, 2 * h):
                for i in range(start, start + h):
                    a = psi[i]
                    b = psi[i + h]
                    psi[i] = a + b
                    psi[i + h] = a - b
            h *= 2
        scale = 1.0 / np.sqrt(n)
        for i in range(n):
            psi[i] *= scale

    @numba.njit(cache=True)
    def numba_fwht(psi):
        out = psi.astype(np.complex128).copy()
        _fwht_inplace(out)
        return out

    @numba.njit(cache=True, nogil=True)
    def numba_grover_trace(marked, theta, phi, iterations):
        n = marked.shape[0]
        state = np.empty(n, dtype=np.complex128)
        amp = 1.0 / np.sqrt(n)
        for i in range(n):
            state[i] = amp
        success = np.empty(iterations + 1)
        norms = np.empty(iterations + 1)
        mark_phase = np.exp(1j * phi)
        prep_phase = np.exp(1j * theta)
        s = 0.0
        for i in range(n):
            if marked[i]:
                s += state[i].real ** 2 + state[i].imag ** 2
        success[0] = s
        norms[0] = np.sqrt(n * amp * amp)
        for j in range(1, iterations + 1):
            for i in range(n):
                if marked[i]:
                    state[i] *= mark_phase
            _fwht_inplace(state)
            state[0] *= prep_phase
            _fwht_inplace(state)
            s = 0.0
            t = 0.0
            for i in range(n):
                p = state[i].real ** 2 + state[i].imag ** 2
                t += p
                if marked[i]:
                    s += p
            success[j] = s
            norms[j] = np.sqrt(t)
        return success, norms

else:  # pragma: no cover
    numba_sample_counts = numba_fwht = numba_grover_trace = None


if USE_JIT:
    sample_counts = numba_sample_counts
    fwht = numba_fwht
    grover_trace = numba_grover_trace
else:
    sample_counts = numpy_sample_counts
    fwht = numpy_fwht
    grover_trace = numpy_grover_trace
