import math
import random

import pytest

from toughcert import (
    Cubic,
    DomainError,
    JoinCliqueSpec,
    build_extremal,
    build_join_cliques,
    complete,
    complete_split_radius,
    disjoint_union,
    empty,
    gap_bound,
    gap_factor,
    join,
    quotient_cubic,
    threshold,
    threshold_cubic,
)

from oracles import cubic_roots, eig_radius

# frozen from the companion-matrix oracle (numpy.roots)
ETA_1_4 = 2.170086486626035
ETA_2_8 = 5.069517991915755


def test_cubic_evaluation_and_derivative():
    c = Cubic(1.0, -1.0, -3.0, 1.0)
    assert c(0.0) == 1.0
    assert c(1.0) == -2.0
    assert c.derivative(0.0) == -3.0
    assert c.derivative(2.0) == 12.0 - 4.0 - 3.0
    assert c.coefficients() == (1.0, -1.0, -3.0, 1.0)


def test_cubic_largest_root_against_roots_oracle():
    rng = random.Random(23)
    for _ in range(200):
        # distinct prescribed roots, separated enough for the scan grid
        r0 = rng.uniform(-10, 0)
        r1 = r0 + rng.uniform(0.5, 5.0)
        r2 = r1 + rng.uniform(0.5, 5.0)
        c = Cubic(
            1.0,
            -(r0 + r1 + r2),
            r0 * r1 + r0 * r2 + r1 * r2,
            -(r0 * r1 * r2),
        )
        hi = r2 + rng.uniform(0.5, 5.0)
        root, bracket = c.largest_root_in(r0 - 1.0, hi)
        assert abs(root - r2) <= 1e-9 * max(1.0, abs(r2))
        assert bracket[0] <= root <= bracket[1]


def test_cubic_root_bracket_errors():
    c = Cubic(1.0, 0.0, 0.0, -8.0)  # root at 2
    with pytest.raises(DomainError):
        c.largest_root_in(0.0, 1.5)  # negative at the upper end
    with pytest.raises(DomainError):
        c.largest_root_in(3.0, 3.0)
    c_pos = Cubic(1.0, 0.0, 1.0, 1.0)  # no root in [0, 5]
    with pytest.raises(DomainError):
        c_pos.largest_root_in(0.0, 5.0)


def test_cubic_exact_zero_at_upper_end():
    c = Cubic(1.0, 0.0, 0.0, -8.0)
    root, bracket = c.largest_root_in(0.0, 2.0)
    assert root == 2.0 and bracket == (2.0, 2.0)


def test_threshold_cubic_coefficients():
    assert threshold_cubic(1, 4).coefficients() == (1.0, -1.0, -3.0, 1.0)
    assert threshold_cubic(2, 8).coefficients() == (1.0, -4.0, -7.0, 8.0)
    # minimal order collapses the cubic to x^3 - (t+1) x
    for t in range(1, 6):
        assert threshold_cubic(t, t + 2).coefficients() == (
            1.0, 0.0, -float(t + 1), 0.0)
    with pytest.raises(DomainError):
        threshold_cubic(0, 5)
    with pytest.raises(DomainError):
        threshold_cubic(2, 3)


def test_threshold_known_values():
    res = threshold(1, 4)
    assert abs(res.value - ETA_1_4) <= 1e-11
    assert res.bracket[0] <= res.value <= res.bracket[1]
    assert abs(threshold(2, 8).value - ETA_2_8) <= 1e-11
    # at the minimal order the threshold is sqrt(t + 1) (star value)
    for t in range(1, 8):
        assert abs(threshold(t, t + 2).value - math.sqrt(t + 1)) <= 1e-11


def test_threshold_matches_roots_oracle_on_grid():
    for t in range(1, 6):
        for n in range(t + 2, 30):
            top = cubic_roots(threshold_cubic(t, n).coefficients())[-1]
            assert abs(threshold(t, n).value - top) <= 1e-9


def test_threshold_is_extremal_radius():
    for t, n in [(1, 4), (1, 9), (2, 8), (3, 7), (4, 12)]:
        lam = eig_radius(build_extremal(t, n))
        assert abs(threshold(t, n).value - lam) <= 1e-9


def test_threshold_monotone_in_order():
    for t in range(1, 6):
        prev = threshold(t, t + 2).value
        for n in range(t + 3, 40):
            cur = threshold(t, n).value
            assert cur > prev
            prev = cur


def test_threshold_residual_is_tiny():
    for t, n in [(1, 4), (2, 10), (5, 40), (3, 25)]:
        cubic = threshold_cubic(t, n)
        res = threshold(t, n)
        assert abs(cubic(res.value)) <= 1e-10 * max(
            1.0, *(abs(c) for c in cubic.coefficients()))


def test_quotient_cubic_reduces_to_threshold_cubic_at_s1():
    for t in range(1, 5):
        for n in range(t + 2, 16):
            assert quotient_cubic(1, t, n).coefficients() == threshold_cubic(
                t, n).coefficients()
    with pytest.raises(DomainError):
        quotient_cubic(2, 2, 6)  # needs n >= ts + s + 1 = 7
    with pytest.raises(DomainError):
        quotient_cubic(0, 1, 5)


def test_quotient_cubic_root_is_join_family_radius():
    for s, t, n in [(2, 1, 8), (3, 2, 12), (2, 2, 9), (4, 1, 10)]:
        shape = (n - t * s - s,) + (1,) * (t * s)
        lam = eig_radius(build_join_cliques(JoinCliqueSpec(s, shape)))
        root, _ = quotient_cubic(s, t, n).largest_root_in(0.0, float(n - 1))
        assert abs(root - lam) <= 1e-9


def test_complete_split_radius():
    assert abs(complete_split_radius(1, 1) - math.sqrt(2)) <= 1e-12
    assert complete_split_radius(2, 1) == 3.0  # discriminant 25
    for s in range(1, 5):
        for t in range(1, 5):
            x = complete_split_radius(s, t)
            # positive root of x^2 - (s-1)x - s(ts+1)
            assert abs(x * x - (s - 1) * x - s * (t * s + 1)) <= 1e-9
            g = join(complete(s), empty(t * s + 1))
            assert abs(x - eig_radius(g)) <= 1e-9
    with pytest.raises(DomainError):
        complete_split_radius(0, 1)


def test_gap_factor_identity():
    # certification cubic minus quotient cubic factors through gap_factor
    rng = random.Random(29)
    for s, t, n in [(1, 1, 5), (2, 1, 8), (3, 2, 14), (5, 3, 30), (6, 5, 40)]:
        cert = threshold_cubic(t, n)
        quot = quotient_cubic(s, t, n)
        for _ in range(100):
            x = rng.uniform(-2.0, n)
            lhs = cert(x) - quot(x)
            rhs = (s - 1) * gap_factor(s, t, n, x)
            assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs), abs(rhs))


def test_gap_factor_bounded_once_order_is_minimal():
    rng = random.Random(31)
    for _ in range(300):
        s = rng.randint(1, 6)
        t = rng.randint(1, 5)
        n = rng.randint(t * s + s + 1, 60)
        x = rng.uniform(-5.0, 60.0)
        assert gap_factor(s, t, n, x) <= gap_bound(s, t, x) + 1e-9
        # equality exactly at the minimal order
        assert abs(
            gap_factor(s, t, t * s + s + 1, x) - gap_bound(s, t, x)
        ) <= 1e-9 * max(1.0, abs(gap_bound(s, t, x)))


def test_gap_bound_vertex_value():
    # the quadratic peaks at x = s/2 with value ts^2/4 + t^2 + t
    for s in range(1, 7):
        for t in range(1, 6):
            peak = t * s * s / 4.0 + t * t + t
            assert abs(gap_bound(s, t, s / 2.0) - peak) <= 1e-12
            assert gap_bound(s, t, s / 2.0 + 1.7) < peak


def test_build_extremal_shapes():
    paw = build_extremal(1, 4)
    assert sorted(paw.edges()) == [(0, 1), (0, 2), (0, 3), (1, 2)]
    star = build_extremal(2, 4)
    assert star.degrees() == (3, 1, 1, 1)
    g = build_extremal(3, 9)
    assert g.degrees() == (8,) + (5,) * 5 + (1,) * 3
    with pytest.raises(DomainError):
        build_extremal(1, 2)


def test_build_join_cliques():
    spec = JoinCliqueSpec(1, (2, 1))
    assert build_join_cliques(spec) == build_extremal(1, 4)
    for t, n in [(1, 5), (2, 7), (3, 8)]:
        spec = JoinCliqueSpec(1, (n - t - 1,) + (1,) * t)
        assert build_join_cliques(spec) == build_extremal(t, n)
    g = build_join_cliques(JoinCliqueSpec(2, (3, 2)))
    assert g.n == 7
    assert g.edge_count() == 1 + 3 + 1 + 2 * 5
    with pytest.raises(DomainError):
        JoinCliqueSpec(1, (1, 2))  # increasing parts
    with pytest.raises(DomainError):
        JoinCliqueSpec(1, ())
    with pytest.raises(DomainError):
        JoinCliqueSpec(0, (2,))
    with pytest.raises(DomainError):
        JoinCliqueSpec(1, (2, 0))


def test_join_cliques_order_property():
    assert JoinCliqueSpec(2, (3, 1, 1)).order == 7
