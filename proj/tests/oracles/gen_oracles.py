"""Regenerates oracle_values.hpp from straightforward numpy/scipy computations.

Run from this directory: python3 gen_oracles.py > oracle_values.hpp
"""
import numpy as np
from scipy import stats
from mpmath import mp, mpf, asin, pi, nsum, inf

mp.dps = 40


def tau_a(x, y):
    n = len(x)
    s = 0
    for i in range(n):
        for j in range(i + 1, n):
            s += np.sign(x[j] - x[i]) * np.sign(y[j] - y[i])
    return s / (n * (n - 1) / 2)


def hac(v, b, kernel):
    v = np.asarray(v, dtype=float)
    n = len(v)
    total = np.dot(v, v) / n
    for j in range(1, n):
        w = kernel(j / b)
        if w == 0.0:
            continue
        total += 2.0 * w * np.dot(v[:-j], v[j:]) / n
    return total


def quartic(u):
    return (1 - u * u) ** 2 if u < 1 else 0.0


def bandwidth(n):
    return int(np.floor(2 * n ** (1 / 3) + 1e-12))


def psi(x, y):
    n = len(x)
    joint = np.array([np.mean((x <= x[i]) & (y <= y[i])) for i in range(n)])
    fx = np.array([np.mean(x <= x[i]) for i in range(n)])
    fy = np.array([np.mean(y <= y[i]) for i in range(n)])
    t = tau_a(x, y)
    v = 2 * joint - fx - fy + (1 - t) / 2
    return v - v.mean()


def kendall_test(x, y):
    n = len(x)
    path = [tau_a(x[:k], y[:k]) for k in range(2, n + 1)]
    tn = max(k / np.sqrt(n) * abs(path[k - 2] - path[-1]) for k in range(2, n + 1))
    d = np.sqrt(hac(psi(x, y), bandwidth(n), quartic))
    stat = tn / (4 * d)
    return tn, d, stat, stats.kstwobign.sf(stat)


def pearson_test(x, y):
    n = len(x)
    path = [np.corrcoef(x[:k], y[:k])[0, 1] for k in range(2, n + 1)]
    tn = max(k / np.sqrt(n) * abs(path[k - 2] - path[-1]) for k in range(2, n + 1))
    xs = (x - x.mean()) / x.std()
    ys = (y - y.mean()) / y.std()
    rho = path[-1]
    v = xs * ys - rho * (xs ** 2 + ys ** 2) / 2
    v = v - v.mean()
    d = np.sqrt(hac(v, bandwidth(n), quartic))
    stat = tn / d
    return tn, d, stat, stats.kstwobign.sf(stat)


def copula_test(x, y):
    n = len(x)
    rx = stats.rankdata(x)
    ry = stats.rankdata(y)
    prod = rx * ry
    path = [12 / (k * n * n) * prod[:k].sum() - 3 - 12 / n for k in range(1, n + 1)]
    tn = max(k / np.sqrt(n) * abs(path[k - 1] - path[-1]) for k in range(1, n + 1))
    v = 12 * (rx / n) * (ry / n) - 3 - path[-1]
    v = v - v.mean()
    d = np.sqrt(hac(v, bandwidth(n), quartic))
    stat = tn / d
    return tn, d, stat, stats.kstwobign.sf(stat)


def arr(name, v):
    body = ", ".join(repr(float(a)) for a in v)
    return f"inline const std::vector<double> {name} = {{{body}}};"


def const(name, v):
    return f"inline constexpr double {name} = {float(v)!r};"


rng = np.random.default_rng(20240611)
n = 60
z = rng.standard_normal((n, 2))
rho = np.r_[np.full(30, 0.2), np.full(30, 0.8)]
tx = z[:, 0]
ty = rho * z[:, 0] + np.sqrt(1 - rho ** 2) * z[:, 1]
tx = np.round(tx, 12)
ty = np.round(ty, 12)

ties_x = np.array([3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9], dtype=float)
ties_y = np.array([2, 7, 1, 8, 2, 8, 1, 8, 2, 8, 4, 5, 9, 0, 4], dtype=float)

hac_v = np.round(rng.standard_normal(40), 12)

model2 = 1 / mpf(9) + 8 / pi ** 2 * nsum(lambda j: asin(mpf("0.8") ** j / 2) ** 2, [1, inf])
greiner = 2 / pi * (asin(mpf("0.8")) - asin(mpf("0.4")))

kt = kendall_test(tx, ty)
pt = pearson_test(tx, ty)
ct = copula_test(tx, ty)

print("// Generated by gen_oracles.py (numpy/scipy/mpmath). Do not edit.")
print("#pragma once\n\n#include <vector>\n\nnamespace oracle {\n")
print(arr("kSeriesX", tx))
print(arr("kSeriesY", ty))
print(const("kKendallTn", kt[0]))
print(const("kKendallD", kt[1]))
print(const("kKendallStat", kt[2]))
print(const("kKendallP", kt[3]))
print(const("kPearsonTn", pt[0]))
print(const("kPearsonD", pt[1]))
print(const("kPearsonStat", pt[2]))
print(const("kPearsonP", pt[3]))
print(const("kCopulaTn", ct[0]))
print(const("kCopulaD", ct[1]))
print(const("kCopulaStat", ct[2]))
print(const("kCopulaP", ct[3]))
print(const("kSeriesPearson", np.corrcoef(tx, ty)[0, 1]))
print(const("kSeriesSpearman", stats.spearmanr(tx, ty)[0]))
print()
print(arr("kTiesX", ties_x))
print(arr("kTiesY", ties_y))
print(const("kTiesTauA", tau_a(ties_x, ties_y)))
print()
print(arr("kHacValues", hac_v))
print(const("kHacQuarticB3", hac(hac_v, 3, quartic)))
print(const("kHacBartlettB5", hac(hac_v, 5, lambda u: max(1 - u, 0.0))))
print()
for x in (0.2, 0.5, 1.0, 1.3581, 2.0, 3.0):
    tag = str(x).replace(".", "_")
    print(const(f"kKolmogorovCdf_{tag}", stats.kstwobign.cdf(x)))
print(const("kKolmogorovSf_3_0", stats.kstwobign.sf(3.0)))
for p in (0.5, 0.9, 0.95, 0.99):
    tag = str(p).replace(".", "_")
    print(const(f"kKolmogorovQ_{tag}", stats.kstwobign.ppf(p)))
print()
print(const("kModel2Dsq", model2))
print(const("kGreinerDiff_04_08", greiner))
print("\n}  // namespace oracle")
