"""Chebyshev polynomials and the alternation constants of the G0 problem.

The error function of the best degree-n interpolant is a multiple of
``T_{2n}(zeta * t)`` with ``zeta = cos(pi / (4n))``; its zeros in (0, 1)
are where the solvers pin the simplified error to zero.
"""

from dataclasses import dataclass
from functools import lru_cache

from .numeric import MP

SUPPORTED_DEGREES = (2, 3, 4)


def chebyshev_eval(m, t):
    """T_m(t) by the three-term recurrence."""
    if m < 0:
        raise ValueError(f"Chebyshev order must be nonnegative, got {m}")
    if m == 0:
        return t * 0 + 1
    prev, cur = t * 0 + 1, t
    for _ in range(m - 1):
        prev, cur = cur, 2 * t * cur - prev
    return cur


@dataclass(frozen=True)
class AlternationData:
    n: int
    zeta: object
    zeros_pos: tuple
    sigma: tuple = None

    @property
    def zeros_sq_product(self):
        """Product of the squared interior zeros, i.e. 1/(2^(2n-1) zeta^(2n))."""
        prod = MP.mpf(1)
        for z in self.zeros_pos:
            prod *= z * z
        return prod


def _closed_form_zeros(n):
    r2, r3 = MP.sqrt(2), MP.sqrt(3)
    if n == 2:
        return [r2 - 1]
    if n == 3:
        return [2 - r3, r3 - 1]
    q = MP.sqrt(2 + r2)
    return [1 + r2 - q, q - 1, MP.sqrt(2 * (2 + r2)) - 1 - r2]


@lru_cache(maxsize=None)
def alternation_data(n):
    if n not in SUPPORTED_DEGREES:
        raise ValueError(f"degree must be one of {SUPPORTED_DEGREES}, got {n}")
    zeros = tuple(sorted(_closed_form_zeros(n)))
    zeta = MP.cos(MP.pi / (4 * n))
    sigma = None
    if n == 4:
        w1, w2, w3 = (1 - z * z for z in zeros)
        sigma = (w1 + w2 + w3, w1 * w2 + w1 * w3 + w2 * w3, w1 * w2 * w3)
    return AlternationData(n=n, zeta=zeta, zeros_pos=zeros, sigma=sigma)


def scaled_chebyshev(n, t):
    """T_{2n}(zeta_n * t), the shape every optimal error curve takes."""
    return chebyshev_eval(2 * n, alternation_data(n).zeta * t)
