"""Para-complex axioms, associated metrics, eigenbundle splitting."""

from fractions import Fraction

import pytest

from parakahler import numeric
from parakahler.expressions import ExprMatrix
from parakahler.structures import (
    Metric,
    MetricAsymmetryError,
    RankMismatchError,
    SingularMetricError,
    check_involution,
    check_metric_compat,
    check_omega_compat,
    eigen_split,
    metric_from,
    nijenhuis,
    omega_from,
    signature_at,
)

from conftest import make_algebra, make_form

DIAG_PP_MM = ExprMatrix.from_rows(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
)
DIAG_PM_PM = ExprMatrix.from_rows(
    [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]
)
# Darboux pairing e1<->e3, e2<->e4; makes the two diagonal J's above
# compatible/incompatible respectively.
OMEGA_13_24 = [(1, 3, 1), (2, 4, 1)]

J22_R2R2 = ExprMatrix.from_rows(
    [
        ["a+1", "b", "c-1", "b"],
        ["-a*(a+2)/b", "-a-1", "-(c-1)*a/b", "-a"],
        ["a", "b", "c", "b"],
        ["-(c-1)*a/b", "1-c", "-(c^2-1)/b", "-c"],
    ]
)

J3_RR3M1 = ExprMatrix.from_rows(
    [
        ["-a", 0, 0, "-(a^2-1)/b"],
        [0, -1, 0, 0],
        [0, 0, 1, 0],
        ["b", 0, 0, "a"],
    ]
)
G3_RR3M1 = ExprMatrix.from_rows(
    [
        ["b", 0, 0, "a"],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        ["a", 0, 0, "(a^2-1)/b"],
    ]
)


def test_involution_block_diagonal():
    assert check_involution(DIAG_PP_MM).ok


def test_involution_identity_fails_trace():
    report = check_involution(ExprMatrix.identity(4))
    assert not report.ok
    assert any(issue.where == "trace(J)" for issue in report.issues)


def test_involution_parametric_j22():
    assert check_involution(J22_R2R2).ok


def test_omega_compat_diagonal_pass():
    omega = make_form(4, OMEGA_13_24)
    assert check_omega_compat(omega, DIAG_PP_MM).ok


def test_omega_compat_diagonal_fail():
    omega = make_form(4, OMEGA_13_24)
    report = check_omega_compat(omega, DIAG_PM_PM)
    assert not report.ok
    # direct expansion: omega(J e1, e3) + omega(e1, J e3) = 2 omega(e1, e3) = 2
    assert report.issues[0].residual == "2"


def test_omega_compat_rr3m1_j3():
    omega = make_form(4, [(1, 4, 1), (2, 3, 1)])
    assert check_omega_compat(omega, J3_RR3M1).ok


def test_nijenhuis_abelian_always_zero():
    rn4 = make_algebra("rn4")
    j = ExprMatrix.from_rows(
        [[1, "a", 0, 0], [0, -1, "b", 0], [0, 0, 1, "c"], [0, 0, 0, -1]]
    )
    assert nijenhuis(rn4, j).is_zero


def test_nijenhuis_r2r2_family_integrable():
    r2r2 = make_algebra("r2r2")
    j11 = ExprMatrix.from_rows(
        [[-1, 0, 0, 0], ["a", 1, 0, 0], [0, 0, 1, 0], [0, 0, "b", -1]]
    )
    assert nijenhuis(r2r2, j11).is_zero


NON_INTEGRABLE_J = ExprMatrix.from_rows(
    # J^2 = Id, trace 0, but the +1 eigenspace span(e1, e2+e4) is not a
    # subalgebra of r2r2, so the Nijenhuis tensor cannot vanish.
    [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0]]
)


def test_nijenhuis_detects_non_integrable():
    r2r2 = make_algebra("r2r2")
    assert check_involution(NON_INTEGRABLE_J).ok
    tensor = nijenhuis(r2r2, NON_INTEGRABLE_J)
    assert not tensor.is_zero
    point = {name: Fraction(0) for name in ("a", "b", "c", "d", "lam", "alpha", "beta")}
    oracle = numeric.nijenhuis(
        r2r2.structure_eval(point), NON_INTEGRABLE_J.eval_at(point)
    )
    i, j, k, value = tensor.first_nonzero()
    assert oracle[i - 1][j - 1][k - 1] == value.eval(point)
    assert any(
        oracle[x][y][z] != 0 for x in range(4) for y in range(4) for z in range(4)
    )


def test_nijenhuis_matches_numeric_oracle_on_parametric_j():
    rh3 = make_algebra("rh3")
    j1 = ExprMatrix.from_rows(
        [
            ["a", "-b", 0, 0],
            ["(a^2-1)/b", "-a", 0, 0],
            ["d", "c", "a", "b"],
            ["-(c*a^2+2*d*a*b-c)/b^2", "d", "-(a^2-1)/b", "-a"],
        ]
    )
    tensor = nijenhuis(rh3, j1)
    point = {
        "a": Fraction(2),
        "b": Fraction(3),
        "c": Fraction(-1),
        "d": Fraction(5, 2),
        "lam": Fraction(0),
        "alpha": Fraction(0),
        "beta": Fraction(0),
    }
    oracle = numeric.nijenhuis(rh3.structure_eval(point), j1.eval_at(point))
    for x in range(4):
        for y in range(4):
            for z in range(4):
                assert tensor.component(x, y, z).eval(point) == oracle[x][y][z]
    assert tensor.is_zero


def test_metric_from_reproduces_rr3m1_g3():
    omega = make_form(4, [(1, 4, 1), (2, 3, 1)])
    assert metric_from(omega, J3_RR3M1).matrix == G3_RR3M1


def test_metric_from_reproduces_r2p_g3():
    omega = make_form(4, [(1, 4, 1), (2, 3, 1)])
    j3 = ExprMatrix.from_rows(
        [[-1, 0, 0, 0], [0, -1, 0, 0], ["a", "b", 1, 0], ["-b", "a", 0, 1]]
    )
    g3 = ExprMatrix.from_rows(
        [["-b", "a", 0, 1], ["a", "b", 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
    )
    assert metric_from(omega, j3).matrix == g3


def test_metric_from_diagonal_j_oracle():
    # oracle: g_ij = omega(e_i, J e_j) expanded by hand for the Darboux pairing
    omega = make_form(4, OMEGA_13_24)
    g = metric_from(omega, DIAG_PP_MM)
    expected = ExprMatrix.from_rows(
        [[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    )
    assert g.matrix == expected


def test_metric_from_incompatible_raises():
    omega = make_form(4, [(1, 2, 1), (3, 4, 1)])
    with pytest.raises(MetricAsymmetryError):
        metric_from(omega, DIAG_PP_MM)


def test_metric_compat_of_derived_metrics():
    omega = make_form(4, [(1, 4, 1), (2, 3, 1)])
    g = metric_from(omega, J3_RR3M1)
    assert check_metric_compat(g, J3_RR3M1).ok


def test_metric_compat_failure():
    g = Metric(ExprMatrix.identity(4))
    assert not check_metric_compat(g, DIAG_PP_MM).ok


def test_metric_compat_rh3_j2():
    omega = make_form(4, [(1, 4, 1), (2, 3, 1)])
    j2 = ExprMatrix.from_rows(
        [
            [1, "-b", 0, 0],
            [0, -1, 0, 0],
            ["-b*d/2", "c", 1, "b"],
            ["d", "-b*d/2", 0, -1],
        ]
    )
    g = metric_from(omega, j2)
    assert check_metric_compat(g, j2).ok


def test_omega_round_trip():
    omega = make_form(4, [(1, 4, 1), (2, 3, 1)])
    g = metric_from(omega, J3_RR3M1)
    assert omega_from(g, J3_RR3M1) == omega


def test_sign_flip_preserves_axioms():
    r2r2 = make_algebra("r2r2")
    omega = make_form(4, [(1, 2, 1), (1, 3, "lam"), (3, 4, 1)])
    j11 = ExprMatrix.from_rows(
        [[-1, 0, 0, 0], ["a", 1, 0, 0], [0, 0, 1, 0], [0, 0, "b", -1]]
    )
    for j in (j11, -j11):
        assert check_involution(j).ok
        assert check_omega_compat(omega, j).ok
        assert nijenhuis(r2r2, j).is_zero


def test_signature_diagonal():
    g = Metric(DIAG_PP_MM)
    assert signature_at(g, {}) == (2, 2)


def test_signature_g3_sample():
    g = Metric(G3_RR3M1)
    assert signature_at(g, {"a": Fraction(0), "b": Fraction(1)}) == (2, 2)


def test_signature_singular():
    g = Metric(ExprMatrix.zero(4, 4))
    with pytest.raises(SingularMetricError):
        signature_at(g, {})


def test_eigen_split_diagonal():
    rn4 = make_algebra("rn4")
    split = eigen_split(rn4, DIAG_PP_MM, {})
    assert split.plus_basis == ((1, 0, 0, 0), (0, 1, 0, 0))
    assert split.minus_basis == ((0, 0, 1, 0), (0, 0, 0, 1))
    assert split.plus_closed and split.minus_closed


def test_eigen_split_r2r2_at_origin():
    r2r2 = make_algebra("r2r2")
    j11 = ExprMatrix.from_rows(
        [[-1, 0, 0, 0], ["a", 1, 0, 0], [0, 0, 1, 0], [0, 0, "b", -1]]
    )
    point = {"a": Fraction(0), "b": Fraction(0)}
    split = eigen_split(r2r2, j11, point)
    assert split.plus_basis == ((0, 1, 0, 0), (0, 0, 1, 0))
    assert split.minus_basis == ((1, 0, 0, 0), (0, 0, 0, 1))
    assert split.plus_closed and split.minus_closed


def test_eigen_split_rank_mismatch():
    rn4 = make_algebra("rn4")
    with pytest.raises(RankMismatchError):
        eigen_split(rn4, ExprMatrix.identity(4), {})


def test_eigen_split_across_catalog():
    # both eigenspaces have dimension 2 and are bracket-closed for every
    # builtin structure, at every sampled parameter point
    from parakahler.catalog import builtin_catalog
    from parakahler.sampling import DeterministicRng, sample_point
    from parakahler.verify import collect_avoid_polynomials

    catalog = builtin_catalog()
    for entry in catalog.entries:
        algebra = catalog.algebra_of(entry)
        form = catalog.form_of(entry)
        avoid = collect_avoid_polynomials(algebra, form, entry)
        rng = DeterministicRng(23)
        for _ in range(2):
            point = sample_point(rng, catalog.domains_of(entry), avoid)
            split = eigen_split(algebra, entry.j_matrix, point)
            assert len(split.plus_basis) == 2 and len(split.minus_basis) == 2
            assert split.plus_closed and split.minus_closed, entry.entry_id


def test_sign_flip_invariance_across_catalog():
    # J and -J satisfy the same axioms; checked on 5 seeded catalog picks
    # plus the stored opposite-sign pair
    from parakahler.catalog import builtin_catalog
    from parakahler.sampling import DeterministicRng

    catalog = builtin_catalog()
    rng = DeterministicRng(5)
    picks = {catalog.entries[rng.randint(0, len(catalog.entries) - 1)].entry_id
             for _ in range(5)}
    for entry in catalog.entries:
        if entry.entry_id not in picks:
            continue
        algebra = catalog.algebra_of(entry)
        form = catalog.form_of(entry)
        for j in (entry.j_matrix, -entry.j_matrix):
            assert check_involution(j).ok, entry.entry_id
            assert check_omega_compat(form, j).ok, entry.entry_id
            assert nijenhuis(algebra, j).is_zero, entry.entry_id


def test_stored_sign_pair_consistency():
    # the catalog keeps one pair (J, -J) attached to opposite-sign forms
    from parakahler.catalog import builtin_catalog

    catalog = builtin_catalog()
    jp = next(e for e in catalog.entries if e.entry_id == "r40.omegap.Jp")
    jm = next(e for e in catalog.entries if e.entry_id == "r40.omegam.Jm")
    assert jm.j_matrix == -jp.j_matrix
    wp, wm = catalog.form_of(jp), catalog.form_of(jm)
    assert wp != wm
    assert wp(0, 3) == wm(0, 3) and wp(1, 2) == -wm(1, 2)
