# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Scalar numeric kernels, compiled backend.

Line-for-line transliteration of ``fthbi._kernels_py`` (see that module for
the algorithm notes).  Same constants, same summation order, same tie-break
rules; the build disables FP contraction so arithmetic matches the pure
backend bit-for-bit on conforming platforms.  Keep the two modules in
lockstep when editing.
"""

from libc cimport math as cm

OK = 0
PANEL_LIMIT = 1
DEPTH_LIMIT = 2
SERIES_CAP = 3
CANCELLATION = 4

SUB = 0
DRIFT = 1

cdef int C_OK = 0
cdef int C_PANEL_LIMIT = 1
cdef int C_DEPTH_LIMIT = 2
cdef int C_SERIES_CAP = 3
cdef int C_CANCELLATION = 4

cdef int C_SUB = 0

# ---------------------------------------------------------------------------
# elementary special functions
# ---------------------------------------------------------------------------

cdef double[9] _LANCZOS = [
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
cdef double _SQRT_TWO_PI = 2.5066282746310002


cdef double c_sinpi(double x) noexcept:
    cdef double m = cm.floor(x + 0.5)
    cdef double r = x - m
    cdef double s
    if r == 0.0:
        s = 0.0
    else:
        s = cm.sin(cm.M_PI * r)
    if cm.fmod(m, 2.0) != 0.0:
        s = -s
    return s


cdef double c_gamma_pos(double x) noexcept:
    cdef double z, acc, t
    cdef int i
    if x < 0.5:
        return cm.M_PI / (c_sinpi(x) * c_gamma_pos(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS[0]
    for i in range(1, 9):
        acc += _LANCZOS[i] / (z + i)
    t = z + 7.5
    return _SQRT_TWO_PI * cm.pow(t, z + 0.5) * cm.exp(-t) * acc


cdef double c_rgamma(double x) noexcept:
    cdef double s
    if x > 0.5:
        return 1.0 / c_gamma_pos(x)
    s = c_sinpi(x)
    if s == 0.0:
        return 0.0
    return s * c_gamma_pos(1.0 - x) / cm.M_PI


def sinpi(double x):
    return c_sinpi(x)


def gamma_pos(double x):
    return c_gamma_pos(x)


def rgamma(double x):
    return c_rgamma(x)


AIRY_AI0 = 0.3550280538878172
AIRY_NEG_AIP0 = 0.2588194037928068
cdef double _C_AI0 = 0.3550280538878172
cdef double _C_NEG_AIP0 = 0.2588194037928068
cdef int _AIRY_KMAX = 400


def airy_ai(double x):
    cdef double x3 = x * x * x
    cdef double tf = 1.0
    cdef double tg = x
    cdef double sf = 1.0
    cdef double sg = x
    cdef int k = 0
    while k < _AIRY_KMAX:
        tf *= x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0))
        tg *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0))
        sf += tf
        sg += tg
        k += 1
        if cm.fabs(tf) < 1e-17 * (cm.fabs(sf) + 1.0) and cm.fabs(tg) < 1e-17 * (cm.fabs(sg) + 1.0):
            return _C_AI0 * sf - _C_NEG_AIP0 * sg, OK
    return _C_AI0 * sf - _C_NEG_AIP0 * sg, SERIES_CAP


cdef int _MWRIGHT_KMAX = 250


def mwright(double nu, double z):
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double powk = 1.0
    cdef double largest = 0.0
    cdef int small_run = 0
    cdef int k = 0
    cdef double term, t, mag, total, bound
    while k < _MWRIGHT_KMAX:
        term = powk * c_rgamma(1.0 - nu - nu * k)
        t = s + term
        if cm.fabs(s) >= cm.fabs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        mag = cm.fabs(term)
        if mag > largest:
            largest = mag
        total = s + comp
        if not cm.isfinite(total):
            return total, cm.INFINITY, CANCELLATION
        if mag < 1e-16 * (cm.fabs(total) + 1.0):
            small_run += 1
            if small_run >= 2:
                bound = 1.1e-16 * largest + mag
                if 1.1e-16 * largest > 1e-9 * (cm.fabs(total) + 1.0):
                    return total, bound, CANCELLATION
                return total, bound, OK
        else:
            small_run = 0
        powk *= -z / (k + 1.0)
        k += 1
    return s + comp, 1.1e-16 * largest, SERIES_CAP


# ---------------------------------------------------------------------------
# adaptive Gauss-Kronrod 7/15 quadrature
# ---------------------------------------------------------------------------

cdef double[7] _XGK = [
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
]
cdef double[7] _WGK = [
    0.0229353220105292,
    0.0630920926299786,
    0.1047900103222502,
    0.1406532597155259,
    0.1690047266392679,
    0.1903505780647854,
    0.2044329400752989,
]
cdef double _WGK_CENTRE = 0.2094821410847278
cdef double[3] _WG = [0.1294849661688697, 0.2797053914892767, 0.3818300505051189]
cdef double _WG_CENTRE = 0.4179591836734694

cdef int _KIND_G = 0
cdef int _KIND_GPRIME = 1
cdef int _KIND_RLPOW = 2
cdef int _KIND_ESUB = 3
cdef int _KIND_EDRIFT = 4

cdef double _INNER_ABS = 1e-10
cdef double _INNER_REL = 1e-12
cdef int _INNER_PANELS = 256

FRONT_MIN_FRAC = 2.0 ** -42
cdef double _C_FRONT_MIN_FRAC = 2.0 ** -42
cdef double _PLAIN_MIN_FRAC = 2.0 ** -50

cdef enum:
    MAXP = 1024


cdef double c_integrand(int kind, double x, double* par) noexcept:
    cdef double p, mu, n, ratio, s, base, sp, beta, t, tau, lam, r
    if kind == _KIND_G:
        p = par[0]; mu = par[1]; n = par[2]; ratio = par[3]
        s = 1.0 - cm.pow(x, 1.0 / (1.0 - mu))
        if s <= 0.0:
            return 0.0
        base = 1.0 - ratio * cm.pow(s, -p)
        if base <= 0.0:
            return 0.0
        return cm.pow(base, n)
    if kind == _KIND_GPRIME:
        p = par[0]; mu = par[1]; n = par[2]; ratio = par[3]
        s = 1.0 - cm.pow(x, 1.0 / (1.0 - mu))
        if s <= 0.0:
            return 0.0
        sp = cm.pow(s, -p)
        base = 1.0 - ratio * sp
        if base <= 0.0:
            return 0.0
        return sp * cm.pow(base, n - 1.0)
    if kind == _KIND_RLPOW:
        mu = par[0]; beta = par[1]; t = par[2]
        tau = t - cm.pow(x, 1.0 / (1.0 - mu))
        if tau <= 0.0:
            return 0.0
        return cm.pow(tau, beta)
    if kind == _KIND_ESUB:
        mu = par[0]; n = par[1]; lam = par[2]
        r = c_residual_sub(mu, n, lam, x, _INNER_ABS, _INNER_REL)
        return r * r
    # _KIND_EDRIFT
    n = par[0]; lam = par[1]
    r = c_residual_drift(n, lam, x)
    return r * r


cdef void c_panel(int kind, double* par, double a, double b,
                  double* out_v, double* out_e) noexcept:
    cdef double c = 0.5 * (a + b)
    cdef double h = 0.5 * (b - a)
    cdef double fc = c_integrand(kind, c, par)
    cdef double k = _WGK_CENTRE * fc
    cdef double g = _WG_CENTRE * fc
    cdef double dx, fs
    cdef int i
    for i in range(7):
        dx = h * _XGK[i]
        fs = c_integrand(kind, c - dx, par) + c_integrand(kind, c + dx, par)
        k += _WGK[i] * fs
        if i == 1 or i == 3 or i == 5:
            g += _WG[i >> 1] * fs
    out_v[0] = h * k
    out_e[0] = cm.fabs(h * (k - g))


cdef int c_adaptive(int kind, double* par, double a, double b,
                    double abs_tol, double rel_tol, int max_panels,
                    double min_frac, double* out_v, double* out_e,
                    int* out_n) noexcept:
    cdef double[MAXP] pa
    cdef double[MAXP] pb
    cdef double[MAXP] pv
    cdef double[MAXP] pe
    cdef int count, worst, i, status
    cdef double total, err, wmax, min_width, mid, right
    cdef double v1, e1, v2, e2, final_v, final_e
    if b <= a:
        out_v[0] = 0.0
        out_e[0] = 0.0
        out_n[0] = 0
        return C_OK
    if max_panels > MAXP:
        max_panels = MAXP
    pa[0] = a
    pb[0] = b
    c_panel(kind, par, a, b, &pv[0], &pe[0])
    count = 1
    total = pv[0]
    err = pe[0]
    min_width = (b - a) * min_frac
    status = C_OK
    while err > abs_tol and err > rel_tol * cm.fabs(total):
        worst = -1
        wmax = -1.0
        for i in range(count):
            if pe[i] > wmax and (pb[i] - pa[i]) > min_width:
                wmax = pe[i]
                worst = i
        if worst < 0:
            status = C_DEPTH_LIMIT
            break
        if count >= max_panels:
            status = C_PANEL_LIMIT
            break
        mid = 0.5 * (pa[worst] + pb[worst])
        right = pb[worst]
        c_panel(kind, par, pa[worst], mid, &v1, &e1)
        c_panel(kind, par, mid, right, &v2, &e2)
        total += (v1 + v2) - pv[worst]
        err += (e1 + e2) - pe[worst]
        pb[worst] = mid
        pv[worst] = v1
        pe[worst] = e1
        pa[count] = mid
        pb[count] = right
        pv[count] = v2
        pe[count] = e2
        count += 1
    final_v = 0.0
    final_e = 0.0
    for i in range(count):
        final_v += pv[i]
        final_e += pe[i]
    out_v[0] = final_v
    out_e[0] = final_e
    out_n[0] = count
    return status


# ---------------------------------------------------------------------------
# self-similar fractional-derivative kernels
# ---------------------------------------------------------------------------


cdef double c_g_only(double p, double mu, double n, double lam, double eta,
                     double abs_tol, double rel_tol) noexcept:
    cdef double[4] par
    cdef double ratio, upper, raw, err
    cdef int npan
    if eta <= 0.0:
        return 1.0 / (1.0 - mu)
    if eta >= lam:
        return 0.0
    ratio = eta / lam
    upper = cm.pow(1.0 - cm.pow(ratio, 1.0 / p), 1.0 - mu)
    par[0] = p; par[1] = mu; par[2] = n; par[3] = ratio
    c_adaptive(_KIND_G, &par[0], 0.0, upper, abs_tol * (1.0 - mu), rel_tol,
               _INNER_PANELS, _PLAIN_MIN_FRAC, &raw, &err, &npan)
    return raw / (1.0 - mu)


cdef int c_g_pair(int kind, double mu, double n, double lam, double eta,
                  double abs_tol, double rel_tol,
                  double* out_g, double* out_gp, double* out_err) noexcept:
    cdef double[4] par
    cdef double p, ratio, raw_abs, upper, g, err_g, raw, err_gp, gp
    cdef double h, lo, hi, glo, ghi
    cdef int status_g, status_gp, npan, status
    p = 0.5 * mu if kind == C_SUB else mu
    if eta >= lam:
        out_g[0] = 0.0
        out_gp[0] = 0.0
        out_err[0] = 0.0
        return C_OK
    ratio = eta / lam
    raw_abs = abs_tol * (1.0 - mu)
    if eta == 0.0:
        # both members have exact Beta closed forms at the origin
        g = 1.0 / (1.0 - mu)
        gp = c_gamma_pos(1.0 - p) * c_gamma_pos(1.0 - mu) * c_rgamma(2.0 - p - mu)
        out_g[0] = g
        out_gp[0] = -(n / lam) * gp
        out_err[0] = 0.0
        return C_OK
    else:
        upper = cm.pow(1.0 - cm.pow(ratio, 1.0 / p), 1.0 - mu)
        par[0] = p; par[1] = mu; par[2] = n; par[3] = ratio
        status_g = c_adaptive(_KIND_G, &par[0], 0.0, upper, raw_abs, rel_tol,
                              _INNER_PANELS, _PLAIN_MIN_FRAC, &raw, &err_g, &npan)
        g = raw / (1.0 - mu)
        err_g /= 1.0 - mu

    if n <= 1.0 + 1e-6:
        h = 1e-5 * lam
        lo = eta - h
        hi = eta + h
        if lo < 0.0:
            lo = eta
        if hi > lam:
            hi = eta
        if hi <= lo:
            out_g[0] = g
            out_gp[0] = 0.0
            out_err[0] = err_g
            return status_g
        glo = c_g_only(p, mu, n, lam, lo, abs_tol, rel_tol)
        ghi = c_g_only(p, mu, n, lam, hi, abs_tol, rel_tol)
        out_g[0] = g
        out_gp[0] = (ghi - glo) / (hi - lo)
        out_err[0] = err_g
        return status_g

    par[0] = p; par[1] = mu; par[2] = n; par[3] = ratio
    status_gp = c_adaptive(_KIND_GPRIME, &par[0], 0.0, upper,
                           raw_abs, rel_tol, _INNER_PANELS, _PLAIN_MIN_FRAC,
                           &raw, &err_gp, &npan)
    gp = -(n / lam) * raw / (1.0 - mu)
    err_gp = (n / lam) * err_gp / (1.0 - mu)
    status = status_g if status_g != C_OK else status_gp
    out_g[0] = g
    out_gp[0] = gp
    out_err[0] = err_g + err_gp
    return status


cdef int c_d_value(int kind, double mu, double n, double lam, double eta,
                   double abs_tol, double rel_tol,
                   double* out_d, double* out_g, double* out_gp,
                   double* out_err) noexcept:
    cdef double p = 0.5 * mu if kind == C_SUB else mu
    cdef double g, gp, err, inv_gamma
    cdef int status
    status = c_g_pair(kind, mu, n, lam, eta, abs_tol, rel_tol, &g, &gp, &err)
    inv_gamma = c_rgamma(1.0 - mu)
    out_d[0] = ((1.0 - mu) * g - p * eta * gp) * inv_gamma
    out_g[0] = g
    out_gp[0] = gp
    out_err[0] = err * inv_gamma * (1.0 + p * eta)
    return status


cdef double c_residual_sub(double mu, double n, double lam, double eta,
                           double abs_tol, double rel_tol) noexcept:
    cdef double d, g, gp, err, base, curvature
    c_d_value(C_SUB, mu, n, lam, eta, abs_tol, rel_tol, &d, &g, &gp, &err)
    base = 1.0 - eta / lam
    if base <= 0.0:
        if n < 2.0:
            return -cm.INFINITY
        base = 0.0
    curvature = (n * (n - 1.0) / (lam * lam)) * cm.pow(base, n - 2.0)
    return d - curvature


cdef double c_residual_drift(double n, double lam, double eta) noexcept:
    cdef double base = 1.0 - eta / lam
    if base < 0.0:
        base = 0.0
    return (n / lam) * (1.0 - cm.pow(base, n - 1.0))


def g_pair(int kind, double mu, double n, double lam, double eta,
           double abs_tol, double rel_tol):
    cdef double g, gp, err
    cdef int status
    status = c_g_pair(kind, mu, n, lam, eta, abs_tol, rel_tol, &g, &gp, &err)
    return g, gp, err, status


def d_value(int kind, double mu, double n, double lam, double eta,
            double abs_tol, double rel_tol):
    cdef double d, g, gp, err
    cdef int status
    status = c_d_value(kind, mu, n, lam, eta, abs_tol, rel_tol,
                       &d, &g, &gp, &err)
    return d, g, gp, err, status


def residual_sub_value(double mu, double n, double lam, double eta,
                       double abs_tol, double rel_tol):
    return c_residual_sub(mu, n, lam, eta, abs_tol, rel_tol)


def residual_drift_closed(double n, double lam, double eta):
    return c_residual_drift(n, lam, eta)


def error_functional_sub_value(double mu, double n, double lam,
                               double abs_tol, double rel_tol, int max_panels):
    cdef double[3] par
    cdef double v, e
    cdef int npan, status
    par[0] = mu; par[1] = n; par[2] = lam
    status = c_adaptive(_KIND_ESUB, &par[0], 0.0, lam, abs_tol, rel_tol,
                        max_panels, _C_FRONT_MIN_FRAC, &v, &e, &npan)
    return v, e, status


def error_functional_drift_value(double n, double lam,
                                 double abs_tol, double rel_tol, int max_panels):
    cdef double[2] par
    cdef double v, e
    cdef int npan, status
    par[0] = n; par[1] = lam
    status = c_adaptive(_KIND_EDRIFT, &par[0], 0.0, lam, abs_tol, rel_tol,
                        max_panels, _C_FRONT_MIN_FRAC, &v, &e, &npan)
    return v, e, status


def rl_power_value(double mu, double beta, double t,
                   double abs_tol, double rel_tol):
    cdef double scale = 1.0 / (1.0 - mu)
    cdef double[3] par
    cdef double i_mid, e_mid, i_lo, e_lo, i_hi, e_hi
    cdef double q, deriv, rel
    cdef int s_mid, s_lo, s_hi, npan, status

    par[0] = mu; par[1] = beta; par[2] = t
    s_mid = c_adaptive(_KIND_RLPOW, &par[0], 0.0, cm.pow(t, 1.0 - mu),
                       abs_tol, rel_tol, 512, _PLAIN_MIN_FRAC,
                       &i_mid, &e_mid, &npan)
    par[2] = 0.5 * t
    s_lo = c_adaptive(_KIND_RLPOW, &par[0], 0.0, cm.pow(0.5 * t, 1.0 - mu),
                      abs_tol, rel_tol, 512, _PLAIN_MIN_FRAC,
                      &i_lo, &e_lo, &npan)
    par[2] = 1.5 * t
    s_hi = c_adaptive(_KIND_RLPOW, &par[0], 0.0, cm.pow(1.5 * t, 1.0 - mu),
                      abs_tol, rel_tol, 512, _PLAIN_MIN_FRAC,
                      &i_hi, &e_hi, &npan)
    i_mid *= scale; e_mid *= scale
    i_lo *= scale; e_lo *= scale
    i_hi *= scale; e_hi *= scale
    q = cm.log(i_hi / i_lo) / cm.log(3.0)
    deriv = q * i_mid / t * c_rgamma(1.0 - mu)
    status = s_mid
    if status == C_OK:
        status = s_lo
    if status == C_OK:
        status = s_hi
    rel = e_mid / cm.fabs(i_mid) + (e_lo / cm.fabs(i_lo) + e_hi / cm.fabs(i_hi)) / cm.log(3.0)
    return deriv, cm.fabs(deriv) * rel, status
