"""Reference data for the hom oracle and the K-group identities.

The tables below were tabulated independently of the implementation (the
degrees and dimensions follow from the known classification of the
indecomposables of the quiver) and serve as a frozen cross-check of
``catalog.hom_dims`` and ``catalog.kclass``.
"""

from stabq.catalog import ExcObject, family_dim, hom_dims
from stabq.quiver import DELTA, Vec3

M = ExcObject("M", 0, 0)
Mp = ExcObject("Mp", 0, 0)


def a(m, s=0):
    return ExcObject("a", m, s)


def b(m, s=0):
    return ExcObject("b", m, s)


def check_hom_table(lo: int = -10, hi: int = 10) -> int:
    """Assert the seven reference nonvanishing groups on the index range;
    returns the number of pairs checked."""
    checked = 0

    def expect(x, y, degree):
        nonlocal checked
        checked += 1
        h = hom_dims(x, y)
        assert h is not None and h[0] == degree, (str(x), str(y), h, degree)

    def expect_zero(x, y):
        nonlocal checked
        checked += 1
        assert hom_dims(x, y) is None, (str(x), str(y))

    for m in range(lo, hi + 1):
        # group 1: hom(M', a^m), hom(M, b^m) in degree 0; hom*(a^m, M') = 0
        expect(Mp, a(m), 0)
        expect(M, b(m), 0)
        expect_zero(a(m), Mp)
        # group 2: hom^1(a^m, M), hom^1(b^m, M'); hom*(b^m, M) = 0
        expect(a(m), M, 1)
        expect(b(m), Mp, 1)
        expect_zero(b(m), M)
        # group 3 / 4 boundary vanishings
        expect_zero(b(m + 1), a(m))
        expect_zero(a(m), b(m))
        # group 5 / 6 boundary vanishings
        expect_zero(a(m), a(m - 1))
        expect_zero(b(m), b(m - 1))
        for n in range(lo, hi + 1):
            # group 3: b-to-a chain homs
            if m > n:
                expect(b(m + 1), a(n), 1)
            else:
                expect(b(m), a(n), 0)
            # group 4: a-to-b chain homs
            if m > n:
                expect(a(m), b(n), 1)
            else:
                expect(a(m), b(n + 1), 0)
            # groups 5 and 6: the chains themselves
            if m <= n:
                expect(a(m), a(n), 0)
                expect(b(m), b(n), 0)
            elif m > n + 1:
                expect(a(m), a(n), 1)
                expect(b(m), b(n), 1)
    # group 7
    expect(M, Mp, 1)
    expect(Mp, M, 1)
    return checked


def check_kronecker_dims(lo: int = -10, hi: int = 10) -> int:
    """Hom dimension is exactly 2 on the chain-neighbor orbits and exactly 1
    on the rank-one mixed pairs."""
    checked = 0
    for m in range(lo, hi + 1):
        for kind in ("a", "b"):
            x, y = ExcObject(kind, m, 0), ExcObject(kind, m + 1, -1)
            h = hom_dims(x, y)
            assert h == (1, 2), (str(x), str(y), h)
            checked += 1
        for x, y in ((Mp, a(m, -1)), (M, b(m, -1))):
            h = hom_dims(x, y)
            assert h == (1, 1), (str(x), str(y), h)
            checked += 1
    return checked


def check_k_identities(max_m: int = 10) -> int:
    """The reference identities in the K-group, expressed on the dimension
    vectors of the four representation families and M, M'."""
    e1 = lambda m: family_dim("E1", m)
    e2 = lambda m: family_dim("E2", m)
    e3 = lambda m: family_dim("E3", m)
    e4 = lambda m: family_dim("E4", m)
    kM, kMp = Vec3(0, 1, 0), Vec3(1, 0, 1)
    checked = 0

    assert DELTA == e1(0) + e3(0) + kM
    assert DELTA == e1(0) + e2(0)
    assert DELTA == e3(0) + e4(0)
    assert DELTA == kM + kMp
    checked += 4
    for m in range(0, max_m + 1):
        assert e1(m) == DELTA.scale(m) + e1(0)
        assert e1(m) == DELTA.scale(m + 1) - e2(0)
        assert e2(m) == DELTA.scale(m) + e2(0)
        assert e2(m) == DELTA.scale(m + 1) - e1(0)
        assert e3(m) == DELTA.scale(m) + e3(0)
        assert e3(m) == DELTA.scale(m + 1) - e4(0)
        assert e4(m) == DELTA.scale(m) + e4(0)
        assert e4(m) == DELTA.scale(m + 1) - e3(0)
        assert e1(m) + kM == e4(m)
        assert e3(m) + kM == e2(m)
        assert e4(m) + kMp == e1(m + 1)
        assert e2(m) + kMp == e3(m + 1)
        checked += 12
    return checked


# ---------------------------------------------------------------------------
# rejection sampler for the angular sets


def sample_angular_members(set_id, count, seed=0, budget=20000):
    """Deterministic members of one of the angular sets Ugt / Ult / U2,
    found by rejection sampling of rational phase triples."""
    import random
    from fractions import Fraction

    from stabq.exact import ExactError, Gaussian, Phase, window_arg
    from stabq.polyhedra import appendix_member

    rng = random.Random(repr((set_id, seed)))

    def charge(upper=False):
        while True:
            re = Fraction(rng.randint(-8, 8), rng.randint(1, 8))
            im = Fraction(rng.randint(1 if upper else -8, 8), rng.randint(1, 8))
            z = Gaussian(re, im)
            if not z.is_zero() and (not upper or z.in_upper_branch()):
                return z

    def warg(z, low):
        try:
            return window_arg(z, low)
        except ExactError:
            return None

    out = []
    for _ in range(budget):
        if len(out) >= count:
            break
        p0 = Phase(0, charge(upper=True))
        w1, w2 = charge(), charge()
        if set_id in ("Ugt", "Ult"):
            p1 = warg(w1, p0)
            p2 = warg(w2, p0)
            if p1 is None or p2 is None:
                continue
            pt = (p0, p1, p2)
        elif set_id == "U2":
            p2 = warg(w2, p0.plus(-1))
            if p2 is None:
                continue
            p1 = warg(w1, p2)
            if p1 is None or not p1 < p0:
                continue
            pt = (p0, p1, p2)
        else:
            raise ValueError(set_id)
        if appendix_member(pt, set_id):
            out.append(pt)
    if len(out) < count:
        raise RuntimeError("sampling budget exhausted for %s" % set_id)
    return out
