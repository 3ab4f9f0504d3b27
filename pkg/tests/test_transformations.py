import cmath

import pytest

from src.polys import ParamSet
from src.qcore import ConstraintViolated, Divergent, QBase
from src.qseries import check_2phi1_2phi2, check_3phi2_sum, check_6w5_split
from src.qseries.transformations import six_w_five_lhs, six_w_five_outer_ratio, six_w_five_rhs
from src.verify.registry import SuiteContext, default_registry
from src.verify.sampling import MAX_OUTER_RATIO, sample_6w5_point

U = cmath.exp(0.3j)
V = cmath.exp(-0.2j)


def test_expansion_at_t_zero(lam, policy):
    parts = six_w_five_rhs(U, V, 0.0, lam, policy)
    assert parts == (1, 0, 0)
    assert six_w_five_lhs(U, V, 0.0, lam, policy) == 1


def test_six_w_five_split_at_standard_point(lam, policy):
    report = check_6w5_split(U, V, 0.3, lam, policy=policy)
    assert report.passed, report
    assert report.identity_id == "check_6w5_split"
    assert report.witness["lambda"] == list(lam.values)


def test_six_w_five_split_needs_four_parameters(policy):
    with pytest.raises(ConstraintViolated):
        check_6w5_split(U, V, 0.3, ParamSet(values=(0.4, 0.3, 0.2), q=0.5), policy=policy)


def test_six_w_five_split_rejects_other_base(lam):
    with pytest.raises(ConstraintViolated):
        check_6w5_split(U, V, 0.3, lam, q=QBase(q=0.4))


def test_six_w_five_split_rejects_large_t(lam):
    with pytest.raises(ConstraintViolated):
        check_6w5_split(U, V, 1.2, lam)


def test_expansion_diverges_when_inner_sums_outgrow_q(policy):
    # eps / ad = 6, so the outer terms grow like (3)^k
    lam = ParamSet(values=(0.1, 0.6, 0.6, 0.1), q=0.5)
    assert six_w_five_outer_ratio(lam) == pytest.approx(3.0)
    with pytest.raises(Divergent):
        six_w_five_rhs(U, V, 0.3, lam, policy)


def test_sampled_points_converge_geometrically():
    rng = SuiteContext(seed=42).rng("check_6w5_split")
    for _ in range(100):
        point = sample_6w5_point(rng)
        assert six_w_five_outer_ratio(point["lam"]) <= MAX_OUTER_RATIO


@pytest.mark.slow
def test_six_w_five_split_over_seeded_sample():
    entry = next(check for check in default_registry() if check.name == "check_6w5_split")
    reports = entry.run(SuiteContext(seed=42, samples=100))
    assert len(reports) == 101
    failed = [(r.observed_error, r.witness) for r in reports if not r.passed]
    assert not failed, failed


@pytest.mark.parametrize("t", [0.0, 0.3, -0.45, 0.2 + 0.3j])
def test_two_phi_one_to_two_phi_two(t):
    report = check_2phi1_2phi2(U, V, t, 0.3, 0.2, 0.5)
    assert report.passed, report


@pytest.mark.parametrize("phi_angle", [0.4, 1.3, 2.7])
def test_three_phi_two_summation(phi_angle):
    report = check_3phi2_sum(0.32, 0.24, 0.125, phi_angle, 0.5)
    assert report.passed, report


def test_report_tolerance_is_carried():
    report = check_3phi2_sum(0.32, 0.24, 0.125, 1.0, 0.5, tol=0.0)
    assert report.tolerance == 0.0
    assert report.passed == (report.observed_error == 0.0)
