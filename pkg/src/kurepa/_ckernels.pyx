# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Statement-for-statement port of ``_kernels_py``; keep the two in step.
"""

from libc.math cimport atan2, cos, exp, fabs, log, pow, sin, sqrt
from libc.stdlib cimport free, malloc

NAME = "cython"

cdef double LANCZOS_G = 7.0
cdef double SQRT_2PI = 2.5066282746310002
cdef double EPMACH = 2.220446049250313e-16
cdef double UFLOW = 2.2250738585072014e-308
cdef double SERIES_EPS = 1e-17
cdef int SERIES_MAX_TERMS = 500

KIND_K = 0
KIND_K_SERIES = 1
KIND_K_ZERO = 2
KIND_D = 3
KIND_D_SERIES = 4
KIND_D_ZERO = 5

cdef double LCOEF[9]
LCOEF[:] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]

cdef double XGK[8]
XGK[:] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
]
cdef double WGK[8]
WGK[:] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
]
cdef double WG[4]
WG[:] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
]


def lanczos_gamma(double zr, double zi):
    cdef double wr = zr - 1.0
    cdef double wi = zi
    cdef double ar = LCOEF[0]
    cdef double ai = 0.0
    cdef double dr, den, tr, lr, li, er, ei, m, cr, ci
    cdef int k
    for k in range(1, 9):
        dr = wr + k
        den = dr * dr + wi * wi
        ar += LCOEF[k] * dr / den
        ai -= LCOEF[k] * wi / den
    tr = wr + LANCZOS_G + 0.5
    lr = 0.5 * log(tr * tr + wi * wi)
    li = atan2(wi, tr)
    er = (wr + 0.5) * lr - wi * li - tr
    ei = (wr + 0.5) * li + wi * lr - wi
    m = exp(er)
    cr = m * cos(ei)
    ci = m * sin(ei)
    return SQRT_2PI * (cr * ar - ci * ai), SQRT_2PI * (cr * ai + ci * ar)


def lanczos_log_gamma(double x):
    cdef double w = x - 1.0
    cdef double a = LCOEF[0]
    cdef double t
    cdef int k
    for k in range(1, 9):
        a += LCOEF[k] / (w + k)
    t = w + LANCZOS_G + 0.5
    return (w + 0.5) * log(t) - t + log(SQRT_2PI * a)


cdef inline void _k_direct(double zr, double zi, double t, double lt,
                           double* outr, double* outi) nogil:
    cdef double m = exp(zr * lt - t)
    cdef double ang = zi * lt
    cdef double d = t - 1.0
    outr[0] = (m * cos(ang) - exp(-t)) / d
    outi[0] = m * sin(ang) / d


cdef inline void _k_series(double zr, double zi, double t,
                           double* outr, double* outi) nogil:
    cdef double u = t - 1.0
    cdef double zabs = sqrt(zr * zr + zi * zi)
    cdef double tr = zr
    cdef double ti = zi
    cdef double sr = zr
    cdef double si = zi
    cdef double fr, fi, nr, ni, e
    cdef int k = 1
    while k < SERIES_MAX_TERMS:
        fr = (zr - k) * u
        fi = zi * u
        nr = (tr * fr - ti * fi) / (k + 1)
        ni = (tr * fi + ti * fr) / (k + 1)
        tr = nr
        ti = ni
        sr += tr
        si += ti
        if tr == 0.0 and ti == 0.0:
            break
        if k > 2.0 * zabs + 2.0 and fabs(tr) + fabs(ti) <= SERIES_EPS * (fabs(sr) + fabs(si)):
            break
        k += 1
    e = exp(-t)
    outr[0] = e * sr
    outi[0] = e * si


cdef inline void _d_direct(double zr, double zi, double t, double lt,
                           double* outr, double* outi) nogil:
    cdef double m = exp(zr * lt - t)
    cdef double ang = zi * lt
    cdef double q = lt / (t - 1.0)
    outr[0] = m * cos(ang) * q
    outi[0] = m * sin(ang) * q


cdef inline void _d_series(double zr, double zi, double t,
                           double* outr, double* outi) nogil:
    cdef double u = t - 1.0
    cdef double pw = 1.0
    cdef double s = 1.0
    cdef double term, lt, m, ang
    cdef int k = 1
    while k < SERIES_MAX_TERMS:
        pw = -pw * u
        term = pw / (k + 1)
        s += term
        if fabs(term) <= SERIES_EPS * fabs(s):
            break
        k += 1
    lt = log(t)
    m = exp(zr * lt - t) * s
    ang = zi * lt
    outr[0] = m * cos(ang)
    outi[0] = m * sin(ang)


cdef inline void _integrand(int kind, double zr, double zi, double c, double logc,
                            double x, double* outr, double* outi) nogil:
    cdef double t
    if kind == 0:
        _k_direct(zr, zi, x, log(x), outr, outi)
    elif kind == 1:
        _k_series(zr, zi, x, outr, outi)
    elif kind == 2:
        t = c * exp(-x)
        _k_direct(zr, zi, t, logc - x, outr, outi)
        outr[0] = outr[0] * t
        outi[0] = outi[0] * t
    elif kind == 3:
        _d_direct(zr, zi, x, log(x), outr, outi)
    elif kind == 4:
        _d_series(zr, zi, x, outr, outi)
    else:
        t = c * exp(-x)
        _d_direct(zr, zi, t, logc - x, outr, outi)
        outr[0] = outr[0] * t
        outi[0] = outi[0] * t


def integrand(int kind, double zr, double zi, double c, double logc, double x):
    if kind < 0 or kind > 5:
        raise ValueError(f"unknown integrand kind {kind}")
    cdef double r, i
    _integrand(kind, zr, zi, c, logc, x, &r, &i)
    return r, i


cdef inline double _mod(double re, double im) nogil:
    # scaled so squaring cannot overflow near the top of the double range
    cdef double a = fabs(re)
    cdef double b = fabs(im)
    cdef double r
    if a < b:
        a, b = b, a
    if a == 0.0:
        return 0.0
    r = b / a
    return a * sqrt(1.0 + r * r)


cdef void _gk15(int kind, double zr, double zi, double c, double logc,
                double a, double b, double* outr, double* outi, double* outerr) nogil:
    cdef double centr = 0.5 * (a + b)
    cdef double hlgth = 0.5 * (b - a)
    cdef double dhlgth = fabs(hlgth)
    cdef double fcr, fci, resgr, resgi, reskr, reski, resabs, resasc
    cdef double absc, ar, ai, br, bi, rhr, rhi, abserr
    cdef double f1r[7]
    cdef double f1i[7]
    cdef double f2r[7]
    cdef double f2i[7]
    cdef int j, jtw, jtwm1

    _integrand(kind, zr, zi, c, logc, centr, &fcr, &fci)
    resgr = fcr * WG[3]
    resgi = fci * WG[3]
    reskr = fcr * WGK[7]
    reski = fci * WGK[7]
    resabs = _mod(fcr, fci) * WGK[7]
    for j in range(3):
        jtw = 2 * j + 1
        absc = hlgth * XGK[jtw]
        _integrand(kind, zr, zi, c, logc, centr - absc, &ar, &ai)
        _integrand(kind, zr, zi, c, logc, centr + absc, &br, &bi)
        f1r[jtw] = ar
        f1i[jtw] = ai
        f2r[jtw] = br
        f2i[jtw] = bi
        resgr += WG[j] * (ar + br)
        resgi += WG[j] * (ai + bi)
        reskr += WGK[jtw] * (ar + br)
        reski += WGK[jtw] * (ai + bi)
        resabs += WGK[jtw] * (_mod(ar, ai) + _mod(br, bi))
    for j in range(4):
        jtwm1 = 2 * j
        absc = hlgth * XGK[jtwm1]
        _integrand(kind, zr, zi, c, logc, centr - absc, &ar, &ai)
        _integrand(kind, zr, zi, c, logc, centr + absc, &br, &bi)
        f1r[jtwm1] = ar
        f1i[jtwm1] = ai
        f2r[jtwm1] = br
        f2i[jtwm1] = bi
        reskr += WGK[jtwm1] * (ar + br)
        reski += WGK[jtwm1] * (ai + bi)
        resabs += WGK[jtwm1] * (_mod(ar, ai) + _mod(br, bi))

    rhr = reskr * 0.5
    rhi = reski * 0.5
    resasc = WGK[7] * _mod(fcr - rhr, fci - rhi)
    for j in range(7):
        resasc += WGK[j] * (_mod(f1r[j] - rhr, f1i[j] - rhi) + _mod(f2r[j] - rhr, f2i[j] - rhi))

    resabs *= dhlgth
    resasc *= dhlgth
    abserr = _mod((reskr - resgr) * hlgth, (reski - resgi) * hlgth)
    if resasc != 0.0 and abserr != 0.0:
        abserr = resasc * min(1.0, pow(200.0 * abserr / resasc, 1.5))
    if resabs > UFLOW / (50.0 * EPMACH):
        abserr = max(EPMACH * 50.0 * resabs, abserr)
    outr[0] = reskr * hlgth
    outi[0] = reski * hlgth
    outerr[0] = abserr


def gk15(int kind, double zr, double zi, double c, double logc, double a, double b):
    cdef double r, i, e
    _gk15(kind, zr, zi, c, logc, a, b, &r, &i, &e)
    return r, i, e


def adaptive_gk(int kind, double zr, double zi, double c, double a, double b,
                double tol, int max_sub, int nstart):
    if kind < 0 or kind > 5:
        raise ValueError(f"unknown integrand kind {kind}")
    cdef int cap = max_sub if max_sub > nstart else nstart
    cdef double logc = log(c)
    cdef double* lo = <double*> malloc(cap * sizeof(double))
    cdef double* hi = <double*> malloc(cap * sizeof(double))
    cdef double* vr = <double*> malloc(cap * sizeof(double))
    cdef double* vi = <double*> malloc(cap * sizeof(double))
    cdef double* er = <double*> malloc(cap * sizeof(double))
    cdef double left, right, mid, errsum, emax, r1, s1, e1, r2, s2, e2, rr, ri
    cdef int i, n, idx
    if lo == NULL or hi == NULL or vr == NULL or vi == NULL or er == NULL:
        free(lo); free(hi); free(vr); free(vi); free(er)
        raise MemoryError()
    try:
        with nogil:
            for i in range(nstart):
                left = a + (b - a) * i / nstart
                right = a + (b - a) * (i + 1) / nstart
                _gk15(kind, zr, zi, c, logc, left, right, &vr[i], &vi[i], &er[i])
                lo[i] = left
                hi[i] = right

            errsum = 0.0
            for i in range(nstart):
                errsum += er[i]
            n = nstart
            while errsum > tol and n < max_sub:
                idx = 0
                emax = er[0]
                for i in range(1, n):
                    if er[i] > emax:
                        emax = er[i]
                        idx = i
                left = lo[idx]
                right = hi[idx]
                mid = 0.5 * (left + right)
                if mid <= left or mid >= right:
                    break
                _gk15(kind, zr, zi, c, logc, left, mid, &r1, &s1, &e1)
                _gk15(kind, zr, zi, c, logc, mid, right, &r2, &s2, &e2)
                hi[idx] = mid
                vr[idx] = r1
                vi[idx] = s1
                er[idx] = e1
                lo[n] = mid
                hi[n] = right
                vr[n] = r2
                vi[n] = s2
                er[n] = e2
                n += 1
                errsum = 0.0
                for i in range(n):
                    errsum += er[i]

            rr = 0.0
            ri = 0.0
            for i in range(n):
                rr += vr[i]
                ri += vi[i]
    finally:
        free(lo); free(hi); free(vr); free(vi); free(er)
    return rr, ri, errsum, n, errsum <= tol


def ratio_forward(double rho, double x0, long steps):
    cdef long i
    for i in range(1, steps + 1):
        rho = (rho + 1.0) / (x0 + i)
    return rho
