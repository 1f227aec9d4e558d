from fractions import Fraction

import pytest

from orbifold_hkr.groups import conjugacy_classes, generate
from orbifold_hkr.hkr import (BasisTooLarge, brute_force_invariants, full_report,
                              oracle_verdict, sector_hh_series,
                              sector_hhcoh_series)
from orbifold_hkr.sectors import build_sector

from conftest import MINUS_I2, ROT4, S3_PERM, SIGN_1D, m

F = Fraction


def _sectors(G):
    return [build_sector(G, cls) for cls in conjugacy_classes(G)]


def _trivial_group(n):
    return generate((tuple(tuple(F(1 if i == j else 0) for j in range(n))
                           for i in range(n)),), 10)


# homology sectors ---------------------------------------------------------------

def test_trivial_group_line():
    G = _trivial_group(1)
    s = sector_hh_series(_sectors(G)[0], 5)
    # (1 + u t) / (1 - t)
    assert s.row(0) == (F(1),) * 6
    assert s.row(1) == (F(0),) + (F(1),) * 5


def test_sign_action_untwisted_sector():
    G = generate(SIGN_1D, 100)
    e, tw = _sectors(G)
    s = sector_hh_series(e, 6)
    assert s.row(0) == (F(1), F(0), F(1), F(0), F(1), F(0), F(1))
    # x^odd dx has even total weight and is invariant: 1/2[(1+ut)/(1-t) +
    # (1-ut)/(1+t)] = (1 + u t^2)/(1 - t^2), so the p = 1 row lives in
    # even weights >= 2 (the brute-force oracle agrees cell by cell)
    assert s.row(1) == (F(0), F(0), F(1), F(0), F(1), F(0), F(1))
    st = sector_hh_series(tw, 6)
    assert st.row(0) == (F(1),) + (F(0),) * 6


def test_sign_action_twisted_sector_is_point():
    G = generate(SIGN_1D, 100)
    tw = _sectors(G)[1]
    s = sector_hh_series(tw, 3)
    assert s.u_max == 0
    assert s.coeff(0, 0) == 1


# cohomology sectors --------------------------------------------------------------

def test_trivial_group_cohomology_rows():
    G = _trivial_group(1)
    s = sector_hhcoh_series(_sectors(G)[0], 5)
    assert s.row(0) == (F(1),) * 6
    assert s.row(1) == (F(1),) * 6  # x^m d/dx, one per Sym degree m


def test_minus_identity_cohomology_degree_two():
    G = generate(MINUS_I2, 100)
    secs = _sectors(G)
    tw = [s for s in secs if s.fixed_dim == 0][0]
    s = sector_hhcoh_series(tw, 3)
    assert s.coeff(2, 0) == 1


def test_sign_twisted_cohomology_vanishes_at_weight_zero():
    G = generate(SIGN_1D, 100)
    tw = [s for s in _sectors(G) if s.fixed_dim == 0][0]
    s = sector_hhcoh_series(tw, 3)
    # the sign character averages to zero against the trivial Sym factor
    assert s.coeff(1, 0) == 0
    assert s.row(1) == (F(0),) * 4


def test_sign_untwisted_cohomology_polyvector_row():
    G = generate(SIGN_1D, 100)
    e = [s for s in _sectors(G) if s.fixed_dim == 1][0]
    s = sector_hhcoh_series(e, 3)
    # x^m d/dx survives averaging at odd m only
    assert s.row(1) == (F(0), F(1), F(0), F(1))


# brute-force oracle ---------------------------------------------------------------

def test_oracle_trivial_group():
    G = _trivial_group(1)
    sec = _sectors(G)[0]
    assert brute_force_invariants(sec, 0, 5, "forms") == 1


def test_oracle_sign_action_form_cell():
    G = generate(SIGN_1D, 100)
    e = _sectors(G)[0]
    # x dx picks up (-1)(-1) = +1, so the weight-2 one-form line is invariant
    assert brute_force_invariants(e, 1, 2, "forms") == 1
    assert brute_force_invariants(e, 1, 1, "forms") == 0


def test_oracle_s3_quadrics():
    G = generate(S3_PERM, 100000)
    e = _sectors(G)[0]
    assert brute_force_invariants(e, 0, 2, "forms") == 2


def test_oracle_guard():
    G = _trivial_group(8)
    sec = _sectors(G)[0]
    with pytest.raises(BasisTooLarge):
        brute_force_invariants(sec, 4, 16, "forms")


def test_oracle_rejects_unknown_mode():
    G = _trivial_group(1)
    with pytest.raises(ValueError):
        brute_force_invariants(_sectors(G)[0], 0, 0, "nope")


# full reports ----------------------------------------------------------------------

def test_full_report_trivial_line():
    G = _trivial_group(1)
    rep = full_report(G, 4, "homology")
    assert len(rep.sectors) == 1
    assert rep.total.row(0) == (F(1),) * 5
    assert rep.total.row(1) == (F(0),) + (F(1),) * 4


def test_full_report_sign_action_hh0():
    G = generate(SIGN_1D, 100)
    rep = full_report(G, 4, "homology")
    assert len(rep.sectors) == 2
    assert rep.total.coeff(0, 0) == 2


def test_full_report_cyclic4_sector_count():
    G = generate(ROT4, 100)
    rep = full_report(G, 4, "homology")
    assert len(rep.sectors) == 4
    dims = sorted(sec.fixed_dim for sec, _ in rep.sectors)
    assert dims == [0, 0, 0, 2]
    assert rep.total.coeff(0, 0) == 4


def test_full_report_rejects_unknown_mode():
    G = _trivial_group(1)
    with pytest.raises(ValueError):
        full_report(G, 3, "middle")


def test_report_entries_integral_nonnegative(zoo_groups):
    for G in zoo_groups.values():
        for mode in ("homology", "cohomology"):
            rep = full_report(G, 5, mode)
            for row in rep.total.rows:
                for v in row:
                    assert v.denominator == 1
                    assert v >= 0


def test_abelian_centralizers_are_whole_group(zoo_groups):
    G = zoo_groups["C4 rotation on A2"]
    for cls in conjugacy_classes(G):
        assert len(cls.centralizer) == G.order


def test_s3_invariant_ring_dimensions():
    G = generate(S3_PERM, 100000)
    e = _sectors(G)[0]
    s = sector_hh_series(e, 5)
    assert s.row(0) == (F(1), F(1), F(2), F(3), F(4), F(5))


def test_oracle_verdict_smoke():
    G = generate(SIGN_1D, 100)
    assert oracle_verdict(G, 4) is None
