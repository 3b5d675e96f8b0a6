"""Hot numeric kernels, implemented twice.

Each kernel has a vectorized pure-numpy implementation and a numba @njit
implementation with explicit loops. `backend` decides which set is active;
both are exported (`numpy_kernels`, `numba_kernels`) so the parity tests and
the benchmark can compare them directly.

Kernels operate on plain complex128 arrays. Wrappers coerce inputs once so
the jitted code always sees contiguous, correctly typed data.
"""

from types import SimpleNamespace

import numpy as np

from . import backend

_TWO_PI_I = 2j * np.pi


# ---------------------------------------------------------------------------
# numpy implementations


def _resolvent_stack_np(nodes, weights, T):
    n = T.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    shifted = nodes[:, None, None] * eye - T
    inv = np.linalg.solve(shifted, np.broadcast_to(eye, shifted.shape))
    return (weights / _TWO_PI_I)[:, None, None] * inv


def _cauchy_combine_np(values, stack):
    return np.tensordot(values, stack, axes=1)


def _support_sweep_np(T, angles):
    rot = np.exp(-1j * angles)[:, None, None] * T
    herm = 0.5 * (rot + rot.conj().transpose(0, 2, 1))
    eigvals, eigvecs = np.linalg.eigh(herm)
    top = eigvecs[:, :, -1]
    points = np.einsum("ki,ij,kj->k", top.conj(), T, top)
    return eigvals[:, -1].real, points


def _blaschke_grid_np(zeros, phase, pts):
    if zeros.size == 0:
        return np.full(pts.shape, phase, dtype=np.complex128)
    num = pts[:, None] - zeros[None, :]
    den = 1.0 - zeros.conj()[None, :] * pts[:, None]
    return phase * np.prod(num / den, axis=1)


def _polyval_grid_np(coeffs, pts):
    out = np.full(pts.shape, coeffs[-1], dtype=np.complex128)
    for j in range(coeffs.size - 2, -1, -1):
        out = out * pts + coeffs[j]
    return out


def _spectral_norms_stack_np(stack):
    return np.linalg.svd(stack, compute_uv=False)[:, 0]


def _min_hermitian_eigs_np(stack):
    herm = 0.5 * (stack + stack.conj().transpose(0, 2, 1))
    return np.linalg.eigvalsh(herm)[:, 0]


def _combo_spectral_norms_np(coeffs, mats):
    k, n, _ = mats.shape
    combos = np.tensordot(coeffs, mats.reshape(k, n * n), axes=1)
    return _spectral_norms_stack_np(combos.reshape(-1, n, n))


numpy_kernels = SimpleNamespace(
    resolvent_stack=_resolvent_stack_np,
    cauchy_combine=_cauchy_combine_np,
    support_sweep=_support_sweep_np,
    blaschke_grid=_blaschke_grid_np,
    polyval_grid=_polyval_grid_np,
    spectral_norms_stack=_spectral_norms_stack_np,
    min_hermitian_eigs=_min_hermitian_eigs_np,
    combo_spectral_norms=_combo_spectral_norms_np,
)


# ---------------------------------------------------------------------------
# numba implementations

if backend.NUMBA_AVAILABLE:
    from numba import njit

    @njit(cache=True)
    def _resolvent_stack_nb(nodes, weights, T):
        m = nodes.shape[0]
        n = T.shape[0]
        eye = np.zeros((n, n), dtype=np.complex128)
        for i in range(n):
            eye[i, i] = 1.0
        out = np.empty((m, n, n), dtype=np.complex128)
        for k in range(m):
            shifted = nodes[k] * eye - T
            out[k] = (weights[k] / _TWO_PI_I) * np.linalg.solve(shifted, eye)
        return out

    @njit(cache=True)
    def _cauchy_combine_nb(values, stack):
        m, n, _ = stack.shape
        out = np.zeros((n, n), dtype=np.complex128)
        for k in range(m):
            out += values[k] * stack[k]
        return out

    @njit(cache=True)
    def _support_sweep_nb(T, angles):
        m = angles.shape[0]
        n = T.shape[0]
        support = np.empty(m, dtype=np.float64)
        points = np.empty(m, dtype=np.complex128)
        for k in range(m):
            rot = np.exp(-1j * angles[k]) * T
            herm = 0.5 * (rot + rot.conj().T)
            eigvals, eigvecs = np.linalg.eigh(herm)
            support[k] = eigvals[n - 1].real
            top = eigvecs[:, n - 1]
            acc = 0.0 + 0.0j
            for i in range(n):
                row = 0.0 + 0.0j
                for j in range(n):
                    row += T[i, j] * top[j]
                acc += np.conj(top[i]) * row
            points[k] = acc
        return support, points

    @njit(cache=True)
    def _blaschke_grid_nb(zeros, phase, pts):
        m = pts.shape[0]
        d = zeros.shape[0]
        out = np.empty(m, dtype=np.complex128)
        for k in range(m):
            acc = phase
            for j in range(d):
                acc *= (pts[k] - zeros[j]) / (1.0 - np.conj(zeros[j]) * pts[k])
            out[k] = acc
        return out

    @njit(cache=True)
    def _polyval_grid_nb(coeffs, pts):
        m = pts.shape[0]
        d = coeffs.shape[0]
        out = np.empty(m, dtype=np.complex128)
        for k in range(m):
            acc = coeffs[d - 1]
            for j in range(d - 2, -1, -1):
                acc = acc * pts[k] + coeffs[j]
            out[k] = acc
        return out

    @njit(cache=True)
    def _spectral_norms_stack_nb(stack):
        m = stack.shape[0]
        out = np.empty(m, dtype=np.float64)
        for k in range(m):
            s = np.linalg.svd(stack[k].copy())[1]
            out[k] = s[0]
        return out

    @njit(cache=True)
    def _min_hermitian_eigs_nb(stack):
        m = stack.shape[0]
        out = np.empty(m, dtype=np.float64)
        for k in range(m):
            herm = 0.5 * (stack[k] + stack[k].conj().T)
            out[k] = np.linalg.eigvalsh(herm)[0]
        return out

    @njit(cache=True)
    def _combo_spectral_norms_nb(coeffs, mats):
        m = coeffs.shape[0]
        kk, n, _ = mats.shape
        out = np.empty(m, dtype=np.float64)
        combo = np.empty((n, n), dtype=np.complex128)
        for idx in range(m):
            combo[:, :] = 0.0
            for j in range(kk):
                combo += coeffs[idx, j] * mats[j]
            s = np.linalg.svd(combo)[1]
            out[idx] = s[0]
        return out

    numba_kernels = SimpleNamespace(
        resolvent_stack=_resolvent_stack_nb,
        cauchy_combine=_cauchy_combine_nb,
        support_sweep=_support_sweep_nb,
        blaschke_grid=_blaschke_grid_nb,
        polyval_grid=_polyval_grid_nb,
        spectral_norms_stack=_spectral_norms_stack_nb,
        min_hermitian_eigs=_min_hermitian_eigs_nb,
        combo_spectral_norms=_combo_spectral_norms_nb,
    )
else:
    numba_kernels = None

_active = numba_kernels if backend.USE_NUMBA else numpy_kernels


def _c128(a):
    return np.ascontiguousarray(a, dtype=np.complex128)


def _f64(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def resolvent_stack(nodes, weights, T):
    """(weights_k / 2*pi*i) * (nodes_k I - T)^{-1}, shape (N, n, n)."""
    return _active.resolvent_stack(_c128(nodes), _c128(weights), _c128(T))


def cauchy_combine(values, stack):
    """sum_k values_k * stack_k."""
    return _active.cauchy_combine(_c128(values), _c128(stack))


def support_sweep(T, angles):
    """Support function values and support points of the numerical range.

    For each angle, the top eigenpair of the Hermitian part of e^{-i phi} T
    gives the support value (its eigenvalue) and the support point x* T x.
    """
    return _active.support_sweep(_c128(T), _f64(angles))


def blaschke_grid(zeros, phase, pts):
    """Finite Blaschke product at the given points."""
    return _active.blaschke_grid(_c128(zeros), complex(phase), _c128(pts))


def polyval_grid(coeffs, pts):
    """Polynomial with ascending coefficients, evaluated by Horner."""
    return _active.polyval_grid(_c128(coeffs), _c128(pts))


def spectral_norms_stack(stack):
    """Largest singular value of each slice of an (M, n, n) stack."""
    return _active.spectral_norms_stack(_c128(stack))


def min_hermitian_eigs(stack):
    """Smallest eigenvalue of the Hermitian part of each slice."""
    return _active.min_hermitian_eigs(_c128(stack))


def combo_spectral_norms(coeffs, mats):
    """Spectral norm of sum_j coeffs[m, j] * mats[j] for each row m."""
    return _active.combo_spectral_norms(_c128(coeffs), _c128(mats))
