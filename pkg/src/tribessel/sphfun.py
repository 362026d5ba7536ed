"""Spherical Bessel and related angular functions.

Real-argument spherical Bessel functions of the first (j_l) and second (n_l)
kind, spherical Hankel functions, Legendre polynomials, and the partial-wave
expansion of a plane wave. The j_l evaluator switches between a Taylor series
(small x), Miller-style downward recurrence (x below the order), and upward
recurrence (x above the order) so that all three regimes keep close to full
double precision.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

# Downward recurrence is renormalized whenever trial values exceed this.
_RESCALE_LIMIT = 1e250
_RESCALE_FACTOR = 1e-250

# Below this |sin x| the j_0 Miller normalization is ill-conditioned and the
# j_1 reference is used instead.
_J0_NORM_FLOOR = 0.1


def _check_order(l: int) -> int:
    if not isinstance(l, (int, np.integer)) or isinstance(l, bool):
        raise DomainError(f"order must be an integer, got {l!r}")
    if l < 0:
        raise DomainError(f"order must be >= 0, got {l}")
    return int(l)


def _check_positive_x(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"argument must be > 0, got {x!r}")
    return x


def _jl_series(l: int, x: np.ndarray) -> np.ndarray:
    """Taylor series j_l(x) = x^l/(2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...).

    Accurate for x^2 <= 2l+3; the leading factor is computed in log space so
    extreme orders underflow gracefully to 0 instead of overflowing the
    double-factorial.
    """
    # log((2l+1)!!) = lgamma(2l+2) - l*log(2) - lgamma(l+1)
    log_dfact = math.lgamma(2 * l + 2) - l * math.log(2.0) - math.lgamma(l + 1)
    with np.errstate(divide="ignore", over="ignore", under="ignore"):
        lead = np.exp(l * np.log(x) - log_dfact)
    total = np.ones_like(x)
    term = np.ones_like(x)
    x2 = x * x
    for k in range(1, 60):
        term = term * (-x2) / (2.0 * k * (2 * l + 2 * k + 1))
        total += term
        if np.all(np.abs(term) <= 1e-18 * np.abs(total)):
            break
    return lead * total


def _jl_upward(l: int, x: np.ndarray) -> np.ndarray:
    jm = np.sin(x) / x
    if l == 0:
        return jm
    jc = jm / x - np.cos(x) / x
    for lam in range(1, l):
        jm, jc = jc, (2 * lam + 1) / x * jc - jm
    return jc


def _jl_downward(l: int, x: np.ndarray) -> np.ndarray:
    """Miller's algorithm: recurse down from a padded start order, then scale
    the trial values against j_0 (or j_1 where j_0 is near a zero)."""
    l_start = l + math.isqrt(40 * l - 1) + 1 + 20  # l + ceil(sqrt(40 l)) + 20
    jp = np.zeros_like(x)
    jc = np.ones_like(x)
    out = None
    for lam in range(l_start, 0, -1):
        jm = (2 * lam + 1) / x * jc - jp
        jp, jc = jc, jm
        if lam - 1 == l:
            out = jm.copy()
        peak = np.max(np.abs(jc))
        if peak > _RESCALE_LIMIT:
            jp *= _RESCALE_FACTOR
            jc *= _RESCALE_FACTOR
            if out is not None:
                out *= _RESCALE_FACTOR
    sin_x = np.sin(x)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        ratio0 = (sin_x / x) / jc
        ratio1 = (sin_x / (x * x) - np.cos(x) / x) / jp
        scale = np.where(np.abs(sin_x) >= _J0_NORM_FLOOR, ratio0, ratio1)
    return out * scale


def _jl_vec(l: int, x: np.ndarray) -> np.ndarray:
    """j_l over a positive float array, selecting the stable regime per element."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    series_cut = math.sqrt(2 * l + 3)
    m_series = x <= series_cut
    m_up = (~m_series) & (x >= l + 2) if l >= 2 else ~m_series
    m_down = ~(m_series | m_up)
    if m_series.any():
        out[m_series] = _jl_series(l, x[m_series])
    if m_up.any():
        out[m_up] = _jl_upward(l, x[m_up])
    if m_down.any():
        out[m_down] = _jl_downward(l, x[m_down])
    return out


def _jl_all(l_max: int, x: float) -> np.ndarray:
    """j_0(x) .. j_{l_max}(x) in one pass (scalar x > 0)."""
    if x >= l_max + 2 or l_max <= 1:
        jm = math.sin(x) / x
        if l_max == 0:
            return np.array([jm])
        jc = jm / x - math.cos(x) / x
        vals = [jm, jc]
        for lam in range(1, l_max):
            jm, jc = jc, (2 * lam + 1) / x * jc - jm
            vals.append(jc)
        return np.array(vals)
    l_start = l_max + math.isqrt(40 * l_max - 1) + 1 + 20
    jp, jc = 0.0, 1.0
    out = np.zeros(l_max + 1)
    for lam in range(l_start, 0, -1):
        jm = (2 * lam + 1) / x * jc - jp
        jp, jc = jc, jm
        if lam - 1 <= l_max:
            out[lam - 1] = jm
        if abs(jc) > _RESCALE_LIMIT:
            jp *= _RESCALE_FACTOR
            jc *= _RESCALE_FACTOR
            out *= _RESCALE_FACTOR
    sin_x = math.sin(x)
    if abs(sin_x) >= _J0_NORM_FLOOR:
        scale = (sin_x / x) / jc
    else:
        scale = (sin_x / (x * x) - math.cos(x) / x) / jp
    return out * scale


def sph_bessel_j(l: int, x: float) -> float:
    """Spherical Bessel function of the first kind, j_l(x).

    Parameters
    ----------
    l : int
        Order, l >= 0.
    x : float
        Argument, x > 0. Use sph_bessel_j_at_zero for the x = 0 limit.
    """
    l = _check_order(l)
    x = _check_positive_x(x)
    return float(_jl_vec(l, np.array([x]))[0])


def sph_bessel_j_at_zero(l: int) -> float:
    """Limit value j_l(0): 1 for l = 0, exactly 0 for every l >= 1."""
    l = _check_order(l)
    return 1.0 if l == 0 else 0.0


def _nl_vec(l: int, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    nm = -np.cos(x) / x
    if l == 0:
        return nm
    nc = nm / x - np.sin(x) / x
    for lam in range(1, l):
        nm, nc = nc, (2 * lam + 1) / x * nc - nm
    return nc


def sph_bessel_n(l: int, x: float) -> float:
    """Spherical Bessel function of the second kind, n_l(x), with n_0 = -cos(x)/x.

    Upward recurrence is stable for n_l at every x > 0. Raises OverflowError
    when the value exceeds double range (tiny x at large order).
    """
    l = _check_order(l)
    x = _check_positive_x(x)
    val = float(_nl_vec(l, np.array([x]))[0])
    if not math.isfinite(val):
        raise OverflowError(f"n_{l}({x}) exceeds double-precision range")
    return val


def sph_hankel1(l: int, x: float) -> complex:
    """Spherical Hankel function h^(1)_l = j_l + i n_l."""
    return complex(sph_bessel_j(l, x), sph_bessel_n(l, x))


def sph_hankel2(l: int, x: float) -> complex:
    """Spherical Hankel function h^(2)_l = j_l - i n_l."""
    return complex(sph_bessel_j(l, x), -sph_bessel_n(l, x))


def _pl_all(l_max: int, u: float) -> np.ndarray:
    out = np.empty(l_max + 1)
    out[0] = 1.0
    if l_max == 0:
        return out
    out[1] = u
    for lam in range(1, l_max):
        out[lam + 1] = ((2 * lam + 1) * u * out[lam] - lam * out[lam - 1]) / (lam + 1)
    return out


def legendre_p(l: int, u: float) -> float:
    """Legendre polynomial P_l(u) on [-1, 1] by the three-term recurrence."""
    l = _check_order(l)
    u = float(u)
    if not -1.0 <= u <= 1.0:
        raise DomainError(f"Legendre argument must lie in [-1, 1], got {u}")
    return float(_pl_all(l, u)[l])


def plane_wave_partial_sum(kr: float, u: float, l_max: int) -> complex:
    """Partial sum sum_{l=0}^{l_max} (2l+1) i^l j_l(kr) P_l(u).

    Converges to exp(i * kr * u) as l_max grows; l_max >= ceil(kr) + 25 is
    enough for ~1e-8 absolute accuracy for kr <= 20.
    """
    l_max = _check_order(l_max)
    kr = float(kr)
    if kr < 0.0 or not math.isfinite(kr):
        raise DomainError(f"kr must be >= 0, got {kr!r}")
    u = float(u)
    if not -1.0 <= u <= 1.0:
        raise DomainError(f"direction cosine must lie in [-1, 1], got {u}")
    if kr == 0.0:
        return complex(1.0, 0.0)
    js = _jl_all(l_max, kr)
    ps = _pl_all(l_max, u)
    total = complex(0.0, 0.0)
    for lam in range(l_max + 1):
        total += (2 * lam + 1) * (1j ** lam) * js[lam] * ps[lam]
    return total
