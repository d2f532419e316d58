"""Acceptance suite: one PASS/FAIL line per criterion, at the required tolerances."""

import math
import time

import numpy as np
import pytest

from strip_starlike.factory import coefficient_recursion, extremal, from_schwarz, koebe, q_of, schwarz_corpus
from strip_starlike.membership import (
    RegionPredicate,
    check_sharp_bounds,
    convolution_criterion,
    convolution_direct_form,
    convolution_hadamard_form,
    test_membership,
    theta_grid,
)
from strip_starlike.exceptions import BoundViolation
from strip_starlike.powerseries import (
    TruncatedSeries,
    derivative,
    div,
    exp_series,
    integrate,
    log_series,
    mul,
)
from strip_starlike.radius import ps_radius_equation, sl_radius_equation, ss_radius_equation, table1
from strip_starlike.strip_kernel import (
    image_disk,
    limits_check,
    mapping_series,
    mapping_series_from_logs,
    modulus_bound,
    modulus_lower_bound,
    strip_bounds,
)

HALF_PI = math.pi / 2
ANCHOR_ALPHAS = [HALF_PI, 1.8, 2.2, 2.6, math.pi - 1e-3]
TEN_ALPHAS = list(np.linspace(HALF_PI, math.pi - 1e-3, 10))
RADII = [0.1, 0.5, 0.9, 0.99]

# series orders: enough that truncation error is far below each tolerance
EXTREMAL_ORDER = 4096
CORPUS_ORDER = 512


@pytest.fixture(scope="module")
def corpus():
    return schwarz_corpus(50, seed=2024)


def test_01_table_reproduction(verdict):
    start = time.perf_counter()
    rows = table1()
    elapsed = time.perf_counter() - start
    expected = {"ss": 0.493918, "ps": 0.421547, "sl": 0.304506}
    errors = {r["kind"]: abs(r["radius"] - expected[r["kind"]]) for r in rows}
    ok_values = all(e <= 1e-4 for e in errors.values())
    ok_time = elapsed < 1.0
    radii = ", ".join(f"{r['kind']}={r['radius']:.6f}" for r in rows)
    verdict("1  table reproduction within 1e-4", ok_values, radii)
    verdict("1  table runtime < 1 s", ok_time, f"{elapsed:.3f} s")
    assert ok_values and ok_time


def test_02_anchor_points(verdict):
    worst = 0.0
    for a in ANCHOR_ALPHAS:
        for g in (0.1, 0.5, 0.9):
            worst = max(worst, abs(ss_radius_equation(0.0, a, g) + math.pi * g / 2))
        worst = max(worst, abs(ps_radius_equation(0.0, a) + 1))
        worst = max(worst, abs(sl_radius_equation(0.0, a, 1) + 1))
        worst = max(worst, abs(sl_radius_equation(0.0, a, -1) + 1))
    ok = worst <= 1e-12
    verdict("2  radius equations at r = 0 to 1e-12", ok, f"max error {worst:.2e}")
    assert ok


def test_03_identities_on_grid(verdict):
    start = time.perf_counter()
    # 50 equally spaced points on each of [0, 1) and [pi/2, pi)
    r, a = np.meshgrid(np.linspace(0, 1, 50, endpoint=False), np.linspace(HALF_PI, math.pi, 50, endpoint=False))
    lhs = (2 * r * np.sin(a)) ** 2 + (1 - r**2) ** 2
    rhs = 1 - 2 * r**2 * np.cos(2 * a) + r**4
    e_root = np.max(np.abs(lhs - rhs))
    # the disk degenerates to a point at r = 0
    e_power = max(abs(image_disk(ri, ai).power_of_origin - 1) for ri, ai in zip(r.ravel(), a.ravel()) if ri > 0)
    e_recip = np.max(np.abs(modulus_bound(r, a) * modulus_lower_bound(r, a) - 1))
    e_width = max(abs(strip_bounds(ai).width - math.pi / (2 * math.sin(ai))) for ai in a[:, 0])
    elapsed = time.perf_counter() - start
    results = {
        "radicand": e_root,
        "power of origin": e_power,
        "modulus product": e_recip,
        "strip width": e_width,
    }
    for name, err in results.items():
        verdict(f"3  {name} identity to 1e-10", err <= 1e-10, f"max error {err:.2e}")
    verdict("3  grid runtime < 1 s", elapsed < 1.0, f"{elapsed:.3f} s")
    assert all(err <= 1e-10 for err in results.values()) and elapsed < 1.0


def test_04_limit_identities(verdict):
    all_ok = True
    for a in ANCHOR_ALPHAS:
        lim = limits_check(a)
        near0 = max(
            abs(lim["arg_center_at_0"]["value"]),
            abs(lim["arg_spread_at_0"]["value"]),
            abs(lim["modulus_bound_at_0"]["value"] - 1),
        )
        c1 = lim["arg_center_at_1"]
        center_err = abs(c1["value"] - c1["expected"])
        spread_err = abs(lim["arg_spread_at_1"]["value"] - math.pi / 2)
        big = lim["modulus_bound_at_1"]["value"]
        checks = [
            (f"near 0, all three < 1e-6 (alpha={a:.4f})", near0 < 1e-6, f"{near0:.1e}"),
            (
                f"center angle -> 3pi/2 - alpha (alpha={a:.4f})",
                center_err < 1e-3,
                f"got {c1['value']:.6f}, expected {c1['expected']:.6f}",
            ),
            (f"spread angle -> pi/2 (alpha={a:.4f})", spread_err < 1e-3, f"{spread_err:.1e}"),
            (f"modulus bound > 1e6 (alpha={a:.4f})", big > 1e6, f"{big:.3e}"),
        ]
        for label, ok, detail in checks:
            verdict("4  " + label, ok, detail)
            all_ok &= ok
    assert all_ok


def test_05_dual_construction(verdict):
    worst = max(
        np.max(np.abs(mapping_series(a, 100).coeffs - mapping_series_from_logs(a, 100).coeffs)) for a in TEN_ALPHAS
    )
    ok = worst <= 1e-12
    verdict("5  closed-form vs log-series coefficients to 1e-12, n <= 100", ok, f"max error {worst:.2e}")
    assert ok


def test_06_coefficient_bound(verdict, corpus):
    worst_excess = -np.inf
    worst_roundtrip = 0.0
    for a in TEN_ALPHAS:
        for w in corpus:
            f = from_schwarz(a, w, 50)
            coeffs = f.coefficients
            worst_excess = max(worst_excess, np.max(np.abs(coeffs)) - 1)
            rebuilt = coefficient_recursion(q_of(f).coeffs[1:])
            worst_roundtrip = max(worst_roundtrip, np.max(np.abs(rebuilt - coeffs[1:])))
    ok_bound = worst_excess <= 1e-9
    ok_trip = worst_roundtrip <= 1e-9
    verdict("6  |a_n| <= 1 + 1e-9 for n <= 50 on 50 x 10 members", ok_bound, f"max |a_n| - 1 = {worst_excess:.2e}")
    verdict("6  coefficient recursion round-trip to 1e-9", ok_trip, f"max error {worst_roundtrip:.2e}")
    assert ok_bound and ok_trip


def test_07_sharp_bounds(verdict, corpus):
    failures = []
    for a in ANCHOR_ALPHAS:
        members = [("extremal", extremal(a, EXTREMAL_ORDER))]
        members += [(f"corpus[{i}]", from_schwarz(a, w, CORPUS_ORDER)) for i, w in enumerate(corpus)]
        for name, f in members:
            for r in RADII:
                try:
                    check_sharp_bounds(f, a, r, slack=1e-9)
                except BoundViolation as exc:
                    failures.append(f"{name} alpha={a:.4f} r={r}: {exc}")
    ok = not failures
    verdict(
        "7  sharp bounds hold at r in {0.1, 0.5, 0.9, 0.99}, slack 1e-9",
        ok,
        failures[0] if failures else f"{len(ANCHOR_ALPHAS) * 51 * len(RADII)} checks",
    )
    rep = check_sharp_bounds(extremal(HALF_PI, EXTREMAL_ORDER), HALF_PI, 0.5)
    ok_im = rep.im_max_attained <= math.log(3) / 2 + 1e-9
    verdict("7  max |Im q| <= log(3)/2 + 1e-9 at alpha = pi/2, r = 0.5", ok_im, f"{rep.im_max_attained:.12f}")
    assert ok and ok_im


def test_08_convolution(verdict, corpus):
    worst_min = np.inf
    for a in ANCHOR_ALPHAS:
        thetas = theta_grid(a, 360)
        rep = convolution_criterion(extremal(a, CORPUS_ORDER), a, thetas, 0.95)
        worst_min = min(worst_min, rep.min_modulus)
    ok_min = worst_min > 1e-6
    verdict("8  convolution expression nonvanishing, 360 angles, r = 0.95", ok_min, f"min modulus {worst_min:.3e}")

    z = 0.95 * np.exp(1j * np.linspace(0, 2 * np.pi, 24, endpoint=False))
    worst_gap = 0.0
    for a in ANCHOR_ALPHAS:
        thetas = theta_grid(a, 12)
        for w in corpus:
            f = from_schwarz(a, w, CORPUS_ORDER)
            for th in thetas:
                gap = np.max(np.abs(convolution_hadamard_form(f, a, th, z) - convolution_direct_form(f, a, th, z)))
                worst_gap = max(worst_gap, gap)
    ok_gap = worst_gap <= 1e-10
    verdict("8  Hadamard and direct forms agree to 1e-10 on the corpus", ok_gap, f"max gap {worst_gap:.2e}")
    assert ok_min and ok_gap


def test_09_koebe_negative_control(verdict):
    f = koebe(CORPUS_ORDER)
    rep = test_membership(f, RegionPredicate.strip(HALF_PI), 0.9)
    ok_margin = rep.worst_margin <= -0.1
    verdict(
        "9  Koebe fails the strip at r = 0.9 with worst margin <= -0.1",
        ok_margin,
        f"worst margin {rep.worst_margin:.4f} at z = {rep.witness.real:+.4f}{rep.witness.imag:+.4f}i",
    )
    # the lower edge of the strip is crossed near z = -0.9
    lower = test_membership(f, RegionPredicate.starlike(strip_bounds(HALF_PI).lower), 0.9)
    ok_lower = lower.worst_margin <= -0.1 and abs(lower.witness + 0.9) < 1e-2
    verdict(
        "9  lower-edge violation with witness near z = -0.9",
        ok_lower,
        f"margin {lower.worst_margin:.4f} at z = {lower.witness.real:+.4f}{lower.witness.imag:+.4f}i",
    )
    assert ok_margin and ok_lower


def _random_series(rng, order, c0):
    c = (rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1)) * 0.3 ** np.arange(order + 1)
    c[0] = c0
    return TruncatedSeries(c)


def _gap(x, y):
    scale = max(np.max(np.abs(x.coeffs)), np.max(np.abs(y.coeffs)), 1.0)
    return np.max(np.abs(x.coeffs - y.coeffs)) / scale


def test_10_powerseries_properties(verdict):
    rng = np.random.default_rng(10)
    worst_explog = worst_divmul = 0.0
    exact = True
    for _ in range(1000):
        order = int(rng.integers(1, 41))
        a = _random_series(rng, order, 1.0)
        worst_explog = max(worst_explog, _gap(exp_series(log_series(a)), a), _gap(log_series(exp_series(a)), a))
        b = _random_series(rng, order, 1.0)
        num = _random_series(rng, order, rng.normal())
        worst_divmul = max(worst_divmul, _gap(mul(b, div(num, b)), num), _gap(div(mul(num, b), b), num))
        z0 = _random_series(rng, order, 0.0)
        back = derivative(integrate(z0)).coeffs
        exact &= bool(np.all(np.abs(back - z0.coeffs) <= 4 * np.finfo(float).eps * np.abs(z0.coeffs)))
    ok_el = worst_explog <= 1e-10
    ok_dm = worst_divmul <= 1e-10
    verdict("10 exp/log round-trips to 1e-10 over 1000 series", ok_el, f"max error {worst_explog:.2e}")
    verdict("10 div/mul round-trips to 1e-10 over 1000 series", ok_dm, f"max error {worst_divmul:.2e}")
    verdict("10 derivative of integral exact to float rounding", exact, "rtol 4 eps")
    assert ok_el and ok_dm and exact
