import cmath
import math
import random

import pytest

from expcircle.moebius import (
    BoundaryPoint,
    MoebiusMap,
    apply_boundary,
    apply_interior,
    compose,
    frame,
    gamma,
    gamma_frame_action,
    identity,
    norm_angle,
    sigma,
    tau,
    tau_frame_action,
)


def rand_map(rng):
    while True:
        a, b, c, d = (rng.uniform(-3, 3) for _ in range(4))
        if a * d - b * c > 0.1:
            return MoebiusMap(a, b, c, d)


def test_construction_rejects_nonpositive_det():
    with pytest.raises(ValueError):
        MoebiusMap(1, 0, 0, -1)
    with pytest.raises(ValueError):
        MoebiusMap(1, 2, 2, 4)


def test_normalization_is_unique():
    m = MoebiusMap(-2, 0, 0, -2)
    assert m.approx_eq(identity())
    # sign canonicalization: first nonzero entry positive
    t = MoebiusMap(0, -3, 3, 0)
    assert t.c < 0 < t.b  # canonical rep of tau has entries (0, 1, -1, 0)


def test_compose_identity_bit_identical():
    rng = random.Random(7)
    for _ in range(50):
        t = rand_map(rng)
        u = compose(t, identity())
        assert u.entries() == t.entries()


def test_compose_examples():
    t = MoebiusMap(2, 1, 1, 1)
    assert compose(identity(), t).approx_eq(t)
    g = gamma()
    assert compose(g, compose(g, g)).approx_eq(identity())
    assert compose(tau(), tau()).approx_eq(identity())


def test_inverse():
    rng = random.Random(11)
    for _ in range(100):
        t = rand_map(rng)
        assert compose(t, t.inverse()).approx_eq(identity(), tol=1e-12)


def test_associativity():
    rng = random.Random(13)
    for _ in range(100):
        a, b, c = rand_map(rng), rand_map(rng), rand_map(rng)
        assert compose(a, compose(b, c)).approx_eq(compose(compose(a, b), c), tol=1e-9)


def test_gamma_on_boundary():
    g = gamma()
    one = BoundaryPoint.from_real(1.0)
    zero = BoundaryPoint.from_real(0.0)
    inf = BoundaryPoint.infinity()
    assert apply_boundary(g, one).approx_eq(zero)
    assert apply_boundary(g, inf).approx_eq(one)
    assert apply_boundary(g, zero).approx_eq(inf)


def test_apply_interior():
    assert apply_interior(identity(), 1j) == 1j
    assert abs(apply_interior(sigma(2.0), 1j) - 2j) < 1e-12
    fixed = cmath.exp(1j * math.pi / 3)
    assert abs(apply_interior(gamma(), fixed) - fixed) < 1e-12
    with pytest.raises(ValueError):
        apply_interior(gamma(), 1.0 - 0.5j)


def test_frame_examples():
    f = frame(identity())
    assert abs(f.z - 1j) < 1e-12 and f.theta == 0.0
    # tau(i) = i and tau'(i) = 1/i^2 = -1
    f = frame(tau())
    assert abs(f.z - 1j) < 1e-12 and abs(f.theta - math.pi) < 1e-12
    # sigma_2(i) = 2i with positive real derivative
    f = frame(sigma(2.0))
    assert abs(f.z - 2j) < 1e-12 and f.theta < 1e-12


def test_named_element_relations():
    assert sigma(1.0).approx_eq(identity())
    lam = 3.0
    lhs = compose(tau(), compose(sigma(lam), tau()))
    assert lhs.approx_eq(sigma(1.0 / lam), tol=1e-12)
    assert compose(sigma(2.0), sigma(5.0)).approx_eq(sigma(10.0), tol=1e-12)
    with pytest.raises(ValueError):
        sigma(0.0)
    with pytest.raises(ValueError):
        sigma(-2.0)


def test_scaling_relations_random():
    rng = random.Random(17)
    for _ in range(1000):
        lam = math.exp(rng.uniform(math.log(1e-3), math.log(1e3)))
        mu = math.exp(rng.uniform(math.log(1e-3), math.log(1e3)))
        assert compose(tau(), compose(sigma(lam), tau())).approx_eq(sigma(1.0 / lam), tol=1e-12)
        assert compose(sigma(lam), sigma(mu)).approx_eq(sigma(lam * mu), tol=1e-12)
    assert compose(tau(), tau()).approx_eq(identity(), tol=1e-12)


def test_frame_equivariance_gamma():
    rng = random.Random(19)
    for _ in range(200):
        t = rand_map(rng)
        f = frame(t)
        lhs = frame(compose(gamma(), t))
        rhs = gamma_frame_action(f)
        assert abs(lhs.z - rhs.z) < 1e-9
        assert abs(norm_angle(lhs.theta - rhs.theta + math.pi) - math.pi) < 1e-9


def test_frame_equivariance_tau():
    rng = random.Random(23)
    for _ in range(200):
        t = rand_map(rng)
        f = frame(t)
        lhs = frame(compose(tau(), t))
        rhs = tau_frame_action(f)
        assert abs(lhs.z - rhs.z) < 1e-9
        assert abs(norm_angle(lhs.theta - rhs.theta + math.pi) - math.pi) < 1e-9


def test_gamma_is_double_reflection():
    # gamma acts on the half-plane as inversion in |z| = 1 followed by
    # reflection about Re z = 1/2, i.e. a rotation by 4pi/3 about e^{i pi/3}
    rng = random.Random(29)
    for _ in range(1000):
        z = complex(rng.uniform(-5, 5), math.exp(rng.uniform(-2, 2)))
        r2 = z / (abs(z) ** 2)
        r1 = 1 - r2.conjugate()
        assert abs(apply_interior(gamma(), z) - r1) < 1e-12


def test_boundary_point_normal_form():
    p = BoundaryPoint(-2.0, -2.0)
    assert p.a > 0 and abs(p.a**2 + p.b**2 - 1.0) < 1e-12
    with pytest.raises(ValueError):
        BoundaryPoint(0.0, 0.0)
    assert BoundaryPoint.infinity().is_infinity()
    assert BoundaryPoint.from_real(0.5).value() == pytest.approx(0.5)
    with pytest.raises(ValueError):
        BoundaryPoint.infinity().value()
