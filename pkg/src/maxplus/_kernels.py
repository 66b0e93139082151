"""Dense tropical matrix-product kernels.

Matrices reach the kernels as a pair of arrays: ``vals`` (int64) and
``fin`` (bool, True where the entry is finite).  Entries with ``fin``
False are epsilon and their ``vals`` slot is ignored.

Two interchangeable implementations exist, a numba-compiled triple loop and
a chunked numpy broadcast.  Set ``MAXPLUS_DISABLE_JIT=1`` to force the
numpy path; it is also used when numba cannot be imported.  Both return
``(vals, fin, overflow)`` and never raise, the caller turns ``overflow``
into an exception.
"""
import os

import numpy as np

INT64_MIN = np.iinfo(np.int64).min
INT64_MAX = np.iinfo(np.int64).max

# elements of the (rows, n, p) temporary built per numpy chunk
_CHUNK_ELEMS = 1 << 22


def _env_flag(name):
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

HAVE_NUMBA = njit is not None
USE_JIT = HAVE_NUMBA and not _env_flag("MAXPLUS_DISABLE_JIT")


def matmul_numpy(av, af, bv, bf, maximize=True):
    m, n = av.shape
    p = bv.shape[1]
    out = np.zeros((m, p), dtype=np.int64)
    fin = np.zeros((m, p), dtype=np.bool_)
    if m == 0 or p == 0 or n == 0:
        return out, fin, False
    fill = INT64_MIN if maximize else INT64_MAX
    step = max(1, _CHUNK_ELEMS // (n * p))
    b = bv[None, :, :]
    bmask = bf[None, :, :]
    for lo in range(0, m, step):
        hi = min(m, lo + step)
        a = av[lo:hi, :, None]
        s = a + b  # int64 wraps silently; checked below
        mask = af[lo:hi, :, None] & bmask
        if np.any((((a ^ s) & (b ^ s)) < 0) & mask):
            return out, fin, True
        s = np.where(mask, s, fill)
        red = s.max(axis=1) if maximize else s.min(axis=1)
        any_fin = mask.any(axis=1)
        out[lo:hi] = np.where(any_fin, red, 0)
        fin[lo:hi] = any_fin
    return out, fin, False


def _matmul_loops(av, af, bv, bf, maximize):
    m, n = av.shape
    p = bv.shape[1]
    out = np.zeros((m, p), dtype=np.int64)
    fin = np.zeros((m, p), dtype=np.bool_)
    for i in range(m):
        for j in range(n):
            if not af[i, j]:
                continue
            x = av[i, j]
            for k in range(p):
                if not bf[j, k]:
                    continue
                y = bv[j, k]
                s = x + y
                if ((x ^ s) & (y ^ s)) < 0:
                    return out, fin, True
                if not fin[i, k]:
                    out[i, k] = s
                    fin[i, k] = True
                elif maximize:
                    if s > out[i, k]:
                        out[i, k] = s
                elif s < out[i, k]:
                    out[i, k] = s
    return out, fin, False


if HAVE_NUMBA:
    _matmul_jit = njit(cache=True, nogil=True)(_matmul_loops)

    def matmul_numba(av, af, bv, bf, maximize=True):
        return _matmul_jit(av, af, bv, bf, bool(maximize))
else:  # pragma: no cover
    matmul_numba = None


def matmul(av, af, bv, bf, maximize=True):
    """Tropical product of ``(av, af)`` by ``(bv, bf)`` on the active backend."""
    if USE_JIT:
        return matmul_numba(av, af, bv, bf, maximize)
    return matmul_numpy(av, af, bv, bf, maximize)


def backend():
    return "numba" if USE_JIT else "numpy"


def add_overflows(a, b, mask):
    """True if any masked ``a + b`` leaves int64."""
    s = a + b
    return bool(np.any((((a ^ s) & (b ^ s)) < 0) & mask))
