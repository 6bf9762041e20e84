import math
import random
from fractions import Fraction as F

import pytest

from ringgroups.geometry import (
    DEGENERATE, LINKED, UNLINKED, Circle, GeometryError, NotGeneric, PairDegenerate, PairLinked,
    RingConfig, canonical_shrink, complexity, crossing_parity, disks_disjoint, format_config,
    format_trajectory, generic_unlink_certificate, is_wicket, linked, microcosms_meet,
    parse_config, point_disk_distance, reduce_complexity, validate, wicket,
)

import oracles

Z = (0.0, 0.0, 1.0)
Y = (0.0, 1.0, 0.0)
HOPF = (Circle((0, 0, 0), 1.0, Z), Circle((1, 0, 0), 1.0, Y))


def coaxial(count=3, gap=3.0):
    return RingConfig(tuple(Circle((0.0, 0.0, gap * k), 1.0, Z) for k in range(count)))


def test_circle_validation():
    with pytest.raises(GeometryError):
        Circle((0, 0, 0), 0.0, Z)
    with pytest.raises(GeometryError):
        Circle((0, 0, 0), 1.0, (1, 1, 0))
    assert Circle.from_normal((0, 0, 0), 1, (0, 0, 5)).normal == Z


def test_linked_examples():
    assert linked(*HOPF) == LINKED
    assert linked(Circle((0, 0, 0), 1.0, Z), Circle((3, 0, 0), 1.0, Z)) == UNLINKED
    assert linked(Circle((0, 0, 0), 1.0, Z), Circle((0, 0, 0), 2.0, Z)) == UNLINKED
    assert crossing_parity(*HOPF) == 1
    assert oracles.sampled_crossings(*HOPF) == 1


def test_linked_degenerate_cases():
    c = Circle((0, 0, 0), 1.0, Z)
    assert linked(c, c) == DEGENERATE
    # circles meeting at a point
    assert linked(c, Circle((2, 0, 0), 1.0, Y)) == DEGENERATE
    # c1 tangent to the plane of c2 inside its disk
    assert linked(Circle((0, 0, 1), 1.0, Y), Circle((0, 0, 0), 3.0, Z)) == DEGENERATE


def test_tangent_outside_disk_is_unlinked():
    assert linked(Circle((5, 0, 1), 1.0, Y), Circle((0, 0, 0), 1.0, Z)) == UNLINKED


def test_linked_agrees_with_sampling_and_is_symmetric():
    rng = random.Random(41)
    counts = {LINKED: 0, UNLINKED: 0}
    while sum(counts.values()) < 100:
        c1 = oracles.random_circle(rng, box=1.2, rmin=0.5, rmax=1.5)
        c2 = oracles.random_circle(rng, box=1.2, rmin=0.5, rmax=1.5)
        v = linked(c1, c2)
        if v == DEGENERATE:
            continue
        counts[v] += 1
        assert linked(c2, c1) == v
        assert (oracles.sampled_crossings(c1, c2) % 2 == 1) == (v == LINKED)
    assert counts[LINKED] and counts[UNLINKED]


def test_exact_mode():
    a = Circle((F(0), F(0), F(0)), F(1), (F(0), F(0), F(1)))
    b = Circle((F(1), F(0), F(0)), F(1), (F(0), F(1), F(0)))
    assert a.exact and linked(a, b) == LINKED
    c = Circle((F(3), F(0), F(0)), F(1), (F(3, 5), F(4, 5), F(0)))
    assert linked(a, c) == UNLINKED
    assert linked(a, a) == DEGENERATE
    # exactly tangent at a single point: the exact path sees it
    d = Circle((F(2), F(0), F(0)), F(1), (F(0), F(1), F(0)))
    assert linked(a, d) == DEGENERATE
    with pytest.raises(GeometryError):
        Circle((F(0), F(0), F(0)), F(1), (F(1), F(1), F(0)))


def test_exact_matches_float():
    rng = random.Random(42)
    normals = [(F(3, 5), F(4, 5), F(0)), (F(0), F(0), F(1)), (F(2, 3), F(1, 3), F(2, 3)),
               (F(0), F(-12, 13), F(5, 13)), (F(1), F(0), F(0))]
    checked = 0
    for _ in range(300):
        cs = [Circle(tuple(F(rng.randint(-6, 6), 4) for _ in range(3)), F(rng.randint(2, 8), 4),
                     rng.choice(normals)) for _ in range(2)]
        exact = linked(*cs, exact=True)
        if exact == DEGENERATE:
            continue
        floats = [Circle(tuple(map(float, c.center)), float(c.radius),
                         tuple(map(float, c.normal))) for c in cs]
        assert linked(*floats) == exact
        checked += 1
    assert checked > 100


def test_complexity_examples():
    two = lambda d, r1=1.0, r2=1.0: RingConfig((Circle((0, 0, 0), r1, Z), Circle((d, 0, 0), r2, Z)))
    assert complexity(two(5)) == 0
    assert complexity(RingConfig((Circle((0, 0, 0), 1.0, Z), Circle((0, 0, 3), 1.0, Z)))) == 1
    assert complexity(two(11, 1.0, 4.0)) == 0
    assert complexity(two(10, 1.0, 4.0)) == 0.25
    assert microcosms_meet(Circle((0, 0, 0), 1.0, Z), Circle((10, 0, 0), 4.0, Z))


def test_complexity_upper_semicontinuous():
    rng = random.Random(43)
    for _ in range(100):
        cfg = oracles.random_config(rng, 3, box=4.0, generic=False)
        base = complexity(cfg)
        moved = RingConfig(tuple(Circle(tuple(x + rng.uniform(-1e-6, 1e-6) for x in c.center),
                                        c.radius, c.normal) for c in cfg))
        assert complexity(moved) <= base + 1e-5 or any(
            abs(math.dist(a.center, b.center) - 2 * (a.radius + b.radius)) < 1e-5
            for a in cfg for b in cfg if a is not b)


def test_shrink_examples():
    cfg = RingConfig((Circle((1, 2, 3), 5.0, Z),))
    out = canonical_shrink(cfg, 3.0)
    assert out.circles[0].radius == pytest.approx(4.0)
    assert out.circles[0].center == (1, 2, 3) and out.circles[0].normal == Z
    assert canonical_shrink(cfg, 0) == cfg
    assert len(canonical_shrink(cfg, 5.0)) == 0
    with pytest.raises(GeometryError):
        canonical_shrink(cfg, -1)


def test_shrink_semigroup_law():
    rng = random.Random(44)
    for _ in range(100):
        cfg = oracles.random_config(rng, rng.randint(1, 4), generic=False)
        u, v = rng.uniform(0, 1.5), rng.uniform(0, 1.5)
        a = canonical_shrink(canonical_shrink(cfg, u), v)
        b = canonical_shrink(cfg, math.hypot(u, v))
        assert len(a) == len(b)
        for x, y in zip(a, b):
            assert abs(x.radius - y.radius) <= 1e-12


def test_shrink_preserves_unlinkedness():
    rng = random.Random(45)
    for _ in range(100):
        cfg = oracles.random_config(rng, rng.randint(2, 4), generic=False, tangle=0.7)
        for u in (0.1, 0.3, 0.6, 1.0, 1.5):
            validate(canonical_shrink(cfg, u))


def test_wickets_stay_wickets():
    rng = random.Random(46)
    cs = []
    while len(cs) < 4:
        c = wicket(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0.3, 1.5),
                   rng.uniform(0, math.pi))
        try:
            validate(cs + [c])
        except GeometryError:
            continue
        cs.append(c)
    cfg = validate(cs)
    for u in (0.0, 0.2, 0.5, 1.0):
        assert all(is_wicket(c) for c in canonical_shrink(cfg, u))


def test_disks_disjoint_examples():
    assert not disks_disjoint(Circle((0, 0, 0), 1.0, Z), Circle((0, 0, 0), 2.0, Z))
    assert disks_disjoint(Circle((0, 0, 0), 1.0, Z), Circle((0, 0, 1), 1.0, Z))
    assert not disks_disjoint(*HOPF)
    assert oracles.sampled_disks_meet(*HOPF)


def test_disks_disjoint_against_sampling():
    rng = random.Random(47)
    for _ in range(150):
        c1, c2 = oracles.random_circle(rng, 1.5), oracles.random_circle(rng, 1.5)
        verdict = disks_disjoint(c1, c2)
        if verdict:
            assert not oracles.sampled_disks_meet(c1, c2, tol=1e-6)
        else:
            assert oracles.sampled_disks_meet(c1, c2, tol=0.05)


def test_validate_examples():
    assert validate(coaxial()).validated
    with pytest.raises(PairLinked) as err:
        validate(HOPF)
    assert err.value.pair == (1, 2)
    c = Circle((0, 0, 0), 1.0, Z)
    with pytest.raises(PairDegenerate):
        validate([c, c])


def test_certificate_coaxial():
    cert = generic_unlink_certificate(validate(coaxial()))
    assert cert.disks_disjoint()
    # nothing needs to shrink, so the final radii stay 1 three apart
    assert complexity(cert.final) == 1
    assert complexity(reduce_complexity(cert.final, 0.01)) == 0


def test_certificate_key_chain():
    big = Circle((0, 0, 0), 4.0, Z)
    small = Circle((2, 0, 1.2), 1.0, (1.0, 0.0, 0.0))
    cfg = validate([big, small])
    cert = generic_unlink_certificate(cfg, grid=(0.5,))
    assert cert.disks_disjoint()
    delta = cert.frozen_radii[1]
    assert delta > 0
    assert delta == pytest.approx(0.5 * oracles.sampled_disk_min_distance(small.center, big), abs=1e-3)
    assert [u for u, _ in cert.trajectory] == [0.0, 0.5, 1.0, 4.0]


def test_certificate_separates_pierced_disk():
    # small ring dips through the big disk twice: unlinked, but disks meet
    big = Circle((0, 0, 0), 4.0, Z)
    small = Circle((2, 0, 0.5), 1.0, (1.0, 0.0, 0.0))
    cfg = validate([big, small])
    assert not disks_disjoint(big, small)
    cert = generic_unlink_certificate(cfg)
    assert cert.frozen_radii[1] == pytest.approx(0.25)
    assert cert.disks_disjoint()


def test_certificate_needs_generic_position():
    big = Circle((0, 0, 0), 4.0, Z)
    on_disk = Circle((1, 0, 0), 0.5, (1.0, 0.0, 0.0))
    with pytest.raises(NotGeneric):
        generic_unlink_certificate(validate([big, on_disk]))


def test_certificate_random_configs():
    rng = random.Random(48)
    for _ in range(20):
        cfg = oracles.random_config(rng, rng.randint(2, 5), tangle=0.7)
        cert = generic_unlink_certificate(cfg)
        assert cert.disks_disjoint()
        for k, c in enumerate(cfg):
            near = min(oracles.sampled_disk_min_distance(c.center, o) for o in cfg if o is not c)
            assert cert.frozen_radii[k] <= 0.5 * near + 1e-2
        assert complexity(reduce_complexity(cert.final, 0.01)) < 0.01


def test_point_disk_distance():
    c = Circle((0, 0, 0), 2.0, Z)
    assert point_disk_distance((1, 0, 3), c) == pytest.approx(3)
    assert point_disk_distance((5, 0, 4), c) == pytest.approx(5)


def test_config_text_round_trip():
    cfg = coaxial()
    text = format_config(cfg)
    assert text.splitlines()[1] == "0.0 0.0 3.0 1.0 0.0 0.0 1.0"
    assert parse_config(text) == cfg
    exact = parse_config("0 0 0 1 0 0 1\n1/2 0 0 1/3 3/5 4/5 0\n", exact=True)
    assert exact.circles[1].center[0] == F(1, 2) and exact.circles[1].exact
    assert format_trajectory([(0.5, cfg)]).startswith("u=0.5\n")
    with pytest.raises(GeometryError):
        parse_config("0 0 0 1 0 0\n")
