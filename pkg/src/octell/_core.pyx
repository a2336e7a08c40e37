# Compiled numeric kernels: AGM, joint wp/wp' evaluation, lattice sum.
# Algorithmically identical to _pycore; keep the two in lockstep.

from libc.math cimport sqrt, hypot, fabs, ceil, ldexp, nextafter, INFINITY

cdef enum:
    KMAX = 40

OK = 0
POLE = 1
HALF_RE = 2
HALF_IM = 3
HALF_BOTH = 4


def agm(double a, double b):
    """Arithmetic-geometric mean of positive a, b."""
    cdef int i
    cdef double an
    for i in range(64):
        if fabs(a - b) <= 4.0 * (nextafter(fabs(a), INFINITY) - fabs(a)):
            return a
        an = 0.5 * (a + b)
        b = sqrt(a * b)
        a = an
    raise RuntimeError("AGM did not converge within 64 iterations")


cdef inline double _round_half_to_zero(double x) nogil:
    cdef double r = ceil(fabs(x) - 0.5)
    return r if x >= 0.0 else -r


cdef void _laurent_coeffs(double g2, double g3, double *c) nogil:
    cdef int k, m
    cdef double s
    for k in range(KMAX + 1):
        c[k] = 0.0
    c[2] = g2 / 20.0
    c[3] = g3 / 28.0
    for k in range(4, KMAX + 1):
        s = 0.0
        for m in range(2, k - 1):
            s += c[m] * c[k - m]
        c[k] = 3.0 * s / ((2 * k + 1) * (k - 3))


cdef int _series(double complex u, double *c,
                 double complex *pout, double complex *dpout) nogil:
    cdef double complex u2 = u * u
    cdef double complex p = 1.0 / u2
    cdef double complex dp = -2.0 / (u2 * u)
    cdef double complex zpow = u2
    cdef double complex zpow_d = u
    cdef double complex t
    cdef int k
    for k in range(2, KMAX + 1):
        t = c[k] * zpow
        p = p + t
        dp = dp + (2 * k - 2) * c[k] * zpow_d
        if abs(t) <= 1e-18 * abs(p):
            break
        zpow = zpow * u2
        zpow_d = zpow_d * u2
    pout[0] = p
    dpout[0] = dp
    return 0


def wp_pair(double complex z, double w1, double w2i, double g2, double g3):
    """(wp(z), wp'(z), flag) for the rectangular lattice (2*w1, 2i*w2i)."""
    cdef double per_min = 2.0 * w1 if w1 <= w2i else 2.0 * w2i
    cdef double eps = 1e-12 * per_min
    cdef double x = z.real - 2.0 * w1 * _round_half_to_zero(z.real / (2.0 * w1))
    cdef double y = z.imag - 2.0 * w2i * _round_half_to_zero(z.imag / (2.0 * w2i))
    if hypot(x, y) <= eps:
        return 0j, 0j, POLE
    cdef double gx = w1 - fabs(x)
    cdef double gy = w2i - fabs(y)
    if hypot(gx, y) <= eps:
        return 0j, 0j, HALF_RE
    if hypot(x, gy) <= eps:
        return 0j, 0j, HALF_IM
    if hypot(gx, gy) <= eps:
        return 0j, 0j, HALF_BOTH

    cdef double r0 = 0.4 * per_min
    cdef double r = hypot(x, y)
    cdef int h = 0
    while r > r0:
        r *= 0.5
        h += 1
    cdef double complex u = (x + 1j * y) * ldexp(1.0, -h)
    cdef double coeffs[KMAX + 1]
    _laurent_coeffs(g2, g3, coeffs)
    cdef double complex p, dp, lam, pn
    _series(u, coeffs, &p, &dp)
    cdef int i
    for i in range(h):
        lam = (6.0 * p * p - 0.5 * g2) / (2.0 * dp)
        pn = lam * lam - 2.0 * p
        dp = lam * (6.0 * p - 2.0 * lam * lam) - dp
        p = pn
    return p, dp, OK


def lattice_sum(double complex z, double w1, double w2i, int cutoff):
    """Growing-shell Eisenstein-style sum; see _pycore.lattice_sum."""
    cdef double complex acc = 1.0 / (z * z)
    cdef double tw1 = 2.0 * w1
    cdef double tw2 = 2.0 * w2i
    cdef double complex ring, w, dz
    cdef int s, m, n
    for s in range(1, cutoff + 1):
        ring = 0
        for m in range(-s, s + 1):
            for n in range(2):
                w = tw1 * m + 1j * (tw2 * (s if n == 0 else -s))
                dz = z - w
                ring = ring + 1.0 / (dz * dz) - 1.0 / (w * w)
        for n in range(-(s - 1), s):
            for m in range(2):
                w = tw1 * (s if m == 0 else -s) + 1j * (tw2 * n)
                dz = z - w
                ring = ring + 1.0 / (dz * dz) - 1.0 / (w * w)
        acc = acc + ring
    return acc
