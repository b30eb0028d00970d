# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Machine-precision inner loop for the character-weighted Farey sine scan.

Mirrors ``trigsum.rh._chi_sine_block_py`` exactly: same summation order,
same IEEE double operations, so the two kernels agree to the last few ulps.
Compiled without fast-math so the semantics stay bit-faithful.
"""

from libc.math cimport sin, M_PI


def chi_sine_block(long q):
    """chi(q) * sum over odd a in (0, q), gcd(a, q) = 1, of chi(a) sin(pi a / (2 q)).

    chi is the nonprincipal character mod 4.  Caller guarantees odd q >= 3.
    """
    cdef double acc = 0.0
    cdef double step = M_PI / (2.0 * q)
    cdef long a, x, y, t
    for a in range(1, q, 2):
        x = a
        y = q
        while y:
            t = x % y
            x = y
            y = t
        if x == 1:
            if a % 4 == 1:
                acc += sin(a * step)
            else:
                acc -= sin(a * step)
    if q % 4 == 1:
        return acc
    return -acc
