"""Independent exact oracle: Hankel determinants of the weight's moments.

For ``exp(-N (lambda**2/2 + t lambda**(2 nu)))`` the normalized moments are
power series in t with rational coefficients.  Ratios of Hankel determinants
give b_{n,N}**2, and at n = N each t-coefficient is a polynomial in 1/N, so
interpolation in N splits it by genus.  Nothing here touches the package.
"""

from fractions import Fraction
from math import factorial


def _dfact(k):
    out = 1
    for i in range(k, 0, -2):
        out *= i
    return out


def _mul(a, b, J):
    out = [Fraction(0)] * (J + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(J + 1 - i):
                out[i + j] += x * b[j]
    return out


def _inv(a, J):
    out = [Fraction(0)] * (J + 1)
    out[0] = 1 / a[0]
    for k in range(1, J + 1):
        out[k] = -sum(a[i] * out[k - i] for i in range(1, k + 1)) / a[0]
    return out


def _log(a, J):
    # a[0] == 1
    da = [k * a[k] for k in range(1, J + 1)] + [Fraction(0)]
    q = _mul(da, _inv(a, J), J)
    return [Fraction(0)] + [q[k - 1] / k for k in range(1, J + 1)]


def moment(nu, N, p, J):
    """Series in t of <lambda**p> for the weight, normalized by the Gaussian mass."""
    if p % 2:
        return [Fraction(0)] * (J + 1)
    out = []
    for m in range(J + 1):
        q = p + 2 * nu * m
        out.append(Fraction((-N) ** m, factorial(m)) * Fraction(_dfact(q - 1), N ** (q // 2)))
    return out


def hankel_dets(nu, N, size, J):
    """D_0..D_size as t-series."""
    mom = {p: moment(nu, N, p, J) for p in range(2 * size + 1)}
    dets = [[Fraction(1)] + [Fraction(0)] * J]
    for n in range(1, size + 1):
        m = [[list(mom[i + j]) for j in range(n)] for i in range(n)]
        det = [Fraction(1)] + [Fraction(0)] * J
        for c in range(n):
            piv = m[c][c]
            det = _mul(det, piv, J)
            ip = _inv(piv, J)
            for r in range(c + 1, n):
                f = _mul(m[r][c], ip, J)
                for k in range(c, n):
                    m[r][k] = [x - y for x, y in zip(m[r][k], _mul(f, m[c][k], J))]
        dets.append(det)
    return dets


def b2_series(nu, N, J):
    """b_{N,N}**2 as a t-series."""
    d = hankel_dets(nu, N, N + 1, J)
    return _mul(_mul(d[N + 1], d[N - 1], J), _inv(_mul(d[N], d[N], J), J), J)


def log_partition_series(nu, N, J):
    """log(D_N(t) / D_N(0)) as a t-series."""
    d = hankel_dets(nu, N, N, J)[N]
    return _log([x / d[0] for x in d], J)


def _interpolate(xs, ys):
    """Coefficients of the polynomial through (xs, ys), by Newton divided differences."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * n
        for k in range(n - 1):
            new[k + 1] += poly[k]
        for k in range(n):
            new[k] -= xs[i] * poly[k]
        new[0] += coef[i]
        poly = new
    return poly


def genus_split(series_at, nu, J, degree_of, shift):
    """[t^j] of a quantity as a polynomial in N, for j <= J.

    ``series_at(N)`` gives the t-series, ``degree_of(j)`` bounds the degree of
    ``N**shift(j)`` times the coefficient in N.  Returns {j: {power of N: coeff}}.
    """
    out = {}
    Ns = list(range(1, max(degree_of(j) for j in range(J + 1)) + 2))
    data = {N: series_at(N) for N in Ns}
    for j in range(J + 1):
        deg = degree_of(j)
        xs = [Fraction(N) for N in Ns[: deg + 1]]
        ys = [data[N][j] * Fraction(N) ** shift(j) for N in Ns[: deg + 1]]
        poly = _interpolate(xs, ys)
        out[j] = {k - shift(j): c for k, c in enumerate(poly) if c}
    return out


def z_series_by_genus(nu, J):
    """{g: [s^0..s^J] coefficients of z_g} from b_{N,N}**2."""
    split = genus_split(lambda N: b2_series(nu, N, J), nu, J,
                        lambda j: j * (nu - 1) + 1, lambda j: j * (nu - 1) + 1)
    return _by_genus(split, J, lambda p: -p // 2)


def e_series_by_genus(nu, J):
    """{g: [s^0..s^J] coefficients of e_g} from log D_N."""
    split = genus_split(lambda N: log_partition_series(nu, N, J), nu, J,
                        lambda j: j * (nu - 1) + 2, lambda j: j * (nu - 1))
    return _by_genus(split, J, lambda p: (2 - p) // 2)


def _by_genus(split, J, genus_of):
    out = {}
    for j, terms in split.items():
        for p, c in terms.items():
            g = genus_of(p)
            out.setdefault(g, [Fraction(0)] * (J + 1))
            out[g][j] = c * (-1) ** j  # t-series to s-series
    return out
