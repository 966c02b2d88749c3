"""Working-precision context shared by the solvers.

Optimal ripple amplitudes fall to ~1e-10 at small angles, so parameters
and error polynomials are carried in extended precision.  The context is
private to this package and configured once at import; nothing mutates it
afterwards, so it is safe to share between threads.
"""

import mpmath

WORKING_DPS = 40

MP = mpmath.MPContext()
MP.dps = WORKING_DPS


def mpf(x):
    return MP.mpf(x)


def is_mp(x):
    return isinstance(x, MP.mpf)
