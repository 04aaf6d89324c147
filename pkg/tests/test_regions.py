"""Region membership predicates: cells, composites, the two Theta variants,
and the registered inequality systems."""

import random
from fractions import Fraction

import pytest

from stabq import engine, harness, regions
from stabq.exact import Gaussian
from stabq.triples import FAMILY_IDS, family_triple, shift_set_members


def _std():
    return engine.standard_heart_point(
        (Gaussian.of(-1, 1), Gaussian.of(0, 1), Gaussian.of(1, 1))
    )


def test_standard_heart_classification():
    got = regions.classify(_std())
    assert ("cell", "F8", 0) in got
    assert ("region", "MidM") in got
    assert ("region", "St") in got


def test_classify_consistent_with_membership():
    rng = random.Random(21)
    for _ in range(10):
        pt = harness.sample_sigma(
            (rng.choice(list(FAMILY_IDS)), rng.randint(-1, 1)), rng=rng, bound=16
        )
        got = regions.classify(pt, window=4)
        for tag in got:
            if tag[0] == "cell":
                assert regions.in_named_cell(pt, tag[1], tag[2])
            else:
                assert regions.in_composite(pt, tag[1], window=4)


def test_cells_imply_stability_region():
    rng = random.Random(7)
    hits = 0
    for _ in range(30):
        pt = harness.sample_sigma(
            (rng.choice(list(FAMILY_IDS)), rng.randint(-1, 1)), rng=rng, bound=16
        )
        got = regions.classify(pt, window=4)
        if any(tag[0] == "cell" for tag in got):
            hits += 1
            assert ("region", "St") in got
    assert hits > 0


def test_Ta_Tb_disjoint():
    rng = random.Random(13)
    seen = {"Ta": 0, "Tb": 0}
    for _ in range(60):
        pt = harness.sample_sigma(
            (rng.choice(list(FAMILY_IDS)), rng.randint(-1, 1)), rng=rng, bound=16
        )
        try:
            ta = regions.in_Ta(pt, window=4)
            tb = regions.in_Tb(pt, window=4)
        except regions.Undecidable:
            continue
        assert not (ta and tb)
        seen["Ta"] += ta
        seen["Tb"] += tb
    assert seen["Ta"] > 0 and seen["Tb"] > 0


def test_theta_iff_shifted_theta_prime():
    rng = random.Random(3)
    decided = 0
    for _ in range(40):
        fid = rng.choice(list(FAMILY_IDS))
        pt = harness.sample_sigma((fid, rng.randint(-1, 1)), rng=rng, bound=16)
        t = family_triple(fid, pt.m)
        try:
            lhs = regions.in_theta(pt, t)
            rhs = any(
                regions.in_theta_prime(pt, t.shifted(p))
                for p in shift_set_members(t, depth=6)
            )
        except regions.Undecidable:
            continue
        assert lhs == rhs, (fid, pt)
        decided += 1
    assert decided > 0


def test_anchor_triple_in_theta_prime():
    pt = _std()
    t = family_triple("F8", 0)
    assert regions.in_theta_prime(pt, t.shifted(pt.shift))
    assert regions.in_theta(pt, t)


def test_intersection_systems_evaluate():
    rng = random.Random(17)
    kw_by_id = {
        "(_,_,X)0": dict(kind="a", m=0),
        "(X,_,_)0": dict(kind="b", m=0),
        "T12Zcap(E_1)": dict(m=0),
        "T43Zcap(E_1)": dict(m=0),
        "middle M cap left M'": dict(p=0),
        "middle M cap left M": dict(p=0),
        "middle M cap left right M": dict(p=0),
        "middle M' cap left M": dict(p=0),
        "middle M' cap left M'": dict(p=0),
        "middle M' cap left right middle M": dict(p=0),
        "Theta_E n=2 3": dict(fid="F8", m=0),
        "Theta_E n=2 6": dict(fid="F8", m=0),
    }
    assert set(kw_by_id) == set(regions.SYSTEM_IDS)
    for _ in range(5):
        pt = harness.sample_sigma(
            (rng.choice(list(FAMILY_IDS)), 0), rng=rng, bound=16
        )
        for sys_id in regions.SYSTEM_IDS:
            try:
                got = regions.in_intersection_system(pt, sys_id, **kw_by_id[sys_id])
            except regions.Undecidable:
                continue
            assert got in (True, False)
    with pytest.raises(ValueError):
        regions.in_intersection_system(_std(), "no-such-system")


def test_undecidable_is_soft_error():
    assert issubclass(regions.Undecidable, ValueError)
    # classify must swallow undecidability rather than raise
    rng = random.Random(29)
    for _ in range(10):
        pt = harness.sample_sigma(
            (rng.choice(list(FAMILY_IDS)), rng.randint(-1, 1)), rng=rng, bound=16
        )
        regions.classify(pt, window=4)


def test_union_membership_beyond_the_scan_block():
    # a point whose only (b^j, b^{j+1}, M') cells sit around j = -20: the
    # finite block scan misses them, the tail certificate triggers the
    # widened rescan, and the union still decides True
    F = Fraction
    pt = engine.StabilityPoint(
        "F8",
        2,
        (0, 0, -1),
        (
            Gaussian.of(F(-26, 5), F(29, 21)),
            Gaussian.of(F(-7, 12), F(3, 10)),
            Gaussian.of(F(-12, 25), F(28, 25)),
        ),
    )
    hit, _ = regions.scan_cells(pt, regions.COMPOSITES["RightMp"])
    assert not hit
    assert regions.in_composite(pt, "RightMp") is True
    # while the a-side tails are certified empty
    assert regions.in_composite(pt, "Ta") is False


def test_union_false_certified_when_far_objects_dead():
    # both chains stop being semistable well inside the block; the hom
    # brackets against the anchors empty out the tails, so the unions are a
    # decided False rather than Undecidable
    pt = engine.StabilityPoint.from_json(
        {
            "anchor": {"family": "F7", "m": 1, "shift": [0, -1, -3]},
            "charges": [
                {"re": "-1/6", "im": "0"},
                {"re": "-11/12", "im": "7/11"},
                {"re": "-1/5", "im": "28/15"},
            ],
            "global_shift": 0,
        }
    )
    assert regions.in_composite(pt, "Ta") is False
    assert regions.in_composite(pt, "Tb") is False
