"""Pure-Python numerical kernels.

This module is the reference for ``_ckernels.pyx``: both perform the same
floating-point operations in the same order so that results agree bit for
bit. Complex numbers travel as ``(re, im)`` pairs of floats; no Python
``complex`` arithmetic is used because its division algorithm differs from
the C one.
"""

from math import atan2, cos, exp, fabs, log, sin, sqrt

NAME = "python"

# Lanczos approximation, g = 7, n = 9.
LANCZOS_G = 7.0
LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
SQRT_2PI = 2.5066282746310002

# Integrand kinds understood by adaptive_gk.
KIND_K = 0          # e^-t (t^z - 1)/(t - 1)
KIND_K_SERIES = 1   # same, series in u = t - 1
KIND_K_ZERO = 2     # same, t = c e^-s, integrated over s
KIND_D = 3          # e^-t t^z log(t)/(t - 1)
KIND_D_SERIES = 4
KIND_D_ZERO = 5

# 7-point Gauss / 15-point Kronrod (QUADPACK qk15).
XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

EPMACH = 2.220446049250313e-16
UFLOW = 2.2250738585072014e-308
SERIES_EPS = 1e-17
SERIES_MAX_TERMS = 500


def lanczos_gamma(zr, zi):
    """Gamma(z) for Re z >= 0.5, returned as ``(re, im)``."""
    wr = zr - 1.0
    wi = zi
    ar = LANCZOS_COEF[0]
    ai = 0.0
    for k in range(1, 9):
        dr = wr + k
        den = dr * dr + wi * wi
        ar += LANCZOS_COEF[k] * dr / den
        ai -= LANCZOS_COEF[k] * wi / den
    tr = wr + LANCZOS_G + 0.5
    lr = 0.5 * log(tr * tr + wi * wi)
    li = atan2(wi, tr)
    er = (wr + 0.5) * lr - wi * li - tr
    ei = (wr + 0.5) * li + wi * lr - wi
    m = exp(er)
    cr = m * cos(ei)
    ci = m * sin(ei)
    return SQRT_2PI * (cr * ar - ci * ai), SQRT_2PI * (cr * ai + ci * ar)


def lanczos_log_gamma(x):
    """log Gamma(x) for real x >= 0.5."""
    w = x - 1.0
    a = LANCZOS_COEF[0]
    for k in range(1, 9):
        a += LANCZOS_COEF[k] / (w + k)
    t = w + LANCZOS_G + 0.5
    return (w + 0.5) * log(t) - t + log(SQRT_2PI * a)


def _k_direct(zr, zi, t, lt):
    m = exp(zr * lt - t)
    ang = zi * lt
    d = t - 1.0
    return (m * cos(ang) - exp(-t)) / d, m * sin(ang) / d


def _k_series(zr, zi, t):
    u = t - 1.0
    zabs = sqrt(zr * zr + zi * zi)
    tr = zr
    ti = zi
    sr = zr
    si = zi
    k = 1
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
        if k > 2.0 * zabs + 2.0 and abs(tr) + abs(ti) <= SERIES_EPS * (abs(sr) + abs(si)):
            break
        k += 1
    e = exp(-t)
    return e * sr, e * si


def _d_direct(zr, zi, t, lt):
    m = exp(zr * lt - t)
    ang = zi * lt
    q = lt / (t - 1.0)
    return m * cos(ang) * q, m * sin(ang) * q


def _d_series(zr, zi, t):
    u = t - 1.0
    pw = 1.0
    s = 1.0
    k = 1
    while k < SERIES_MAX_TERMS:
        pw = -pw * u
        term = pw / (k + 1)
        s += term
        if abs(term) <= SERIES_EPS * abs(s):
            break
        k += 1
    lt = log(t)
    m = exp(zr * lt - t) * s
    ang = zi * lt
    return m * cos(ang), m * sin(ang)


def integrand(kind, zr, zi, c, logc, x):
    """Evaluate integrand ``kind`` at abscissa ``x``; returns ``(re, im)``."""
    if kind == KIND_K:
        return _k_direct(zr, zi, x, log(x))
    if kind == KIND_K_SERIES:
        return _k_series(zr, zi, x)
    if kind == KIND_K_ZERO:
        t = c * exp(-x)
        fr, fi = _k_direct(zr, zi, t, logc - x)
        return fr * t, fi * t
    if kind == KIND_D:
        return _d_direct(zr, zi, x, log(x))
    if kind == KIND_D_SERIES:
        return _d_series(zr, zi, x)
    if kind == KIND_D_ZERO:
        t = c * exp(-x)
        fr, fi = _d_direct(zr, zi, t, logc - x)
        return fr * t, fi * t
    raise ValueError(f"unknown integrand kind {kind}")


def _mod(re, im):
    # scaled so squaring cannot overflow near the top of the double range
    a = fabs(re)
    b = fabs(im)
    if a < b:
        a, b = b, a
    if a == 0.0:
        return 0.0
    r = b / a
    return a * sqrt(1.0 + r * r)


def gk15(kind, zr, zi, c, logc, a, b):
    """One Gauss-Kronrod 7/15 panel: ``(re, im, abserr)``."""
    centr = 0.5 * (a + b)
    hlgth = 0.5 * (b - a)
    dhlgth = abs(hlgth)

    fcr, fci = integrand(kind, zr, zi, c, logc, centr)
    resgr = fcr * WG[3]
    resgi = fci * WG[3]
    reskr = fcr * WGK[7]
    reski = fci * WGK[7]
    resabs = _mod(fcr, fci) * WGK[7]
    f1r = [0.0] * 7
    f1i = [0.0] * 7
    f2r = [0.0] * 7
    f2i = [0.0] * 7
    for j in range(3):
        jtw = 2 * j + 1
        absc = hlgth * XGK[jtw]
        ar, ai = integrand(kind, zr, zi, c, logc, centr - absc)
        br, bi = integrand(kind, zr, zi, c, logc, centr + absc)
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
        ar, ai = integrand(kind, zr, zi, c, logc, centr - absc)
        br, bi = integrand(kind, zr, zi, c, logc, centr + absc)
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
        abserr = resasc * min(1.0, (200.0 * abserr / resasc) ** 1.5)
    if resabs > UFLOW / (50.0 * EPMACH):
        abserr = max(EPMACH * 50.0 * resabs, abserr)
    return reskr * hlgth, reski * hlgth, abserr


def adaptive_gk(kind, zr, zi, c, a, b, tol, max_sub, nstart):
    """Globally adaptive bisection of ``[a, b]`` with GK15 panels.

    Returns ``(re, im, abserr, n_intervals, converged)``.
    """
    logc = log(c)
    lo = []
    hi = []
    vr = []
    vi = []
    er = []
    for i in range(nstart):
        left = a + (b - a) * i / nstart
        right = a + (b - a) * (i + 1) / nstart
        r, s, e = gk15(kind, zr, zi, c, logc, left, right)
        lo.append(left)
        hi.append(right)
        vr.append(r)
        vi.append(s)
        er.append(e)

    errsum = 0.0
    for e in er:
        errsum += e
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
        r1, s1, e1 = gk15(kind, zr, zi, c, logc, left, mid)
        r2, s2, e2 = gk15(kind, zr, zi, c, logc, mid, right)
        hi[idx] = mid
        vr[idx] = r1
        vi[idx] = s1
        er[idx] = e1
        lo.append(mid)
        hi.append(right)
        vr.append(r2)
        vi.append(s2)
        er.append(e2)
        n += 1
        errsum = 0.0
        for e in er:
            errsum += e

    rr = 0.0
    ri = 0.0
    for i in range(n):
        rr += vr[i]
        ri += vi[i]
    return rr, ri, errsum, n, errsum <= tol


def ratio_forward(rho, x0, steps):
    """Iterate rho <- (rho + 1)/x from x0 + 1 up to x0 + steps."""
    for i in range(1, steps + 1):
        rho = (rho + 1.0) / (x0 + i)
    return rho
