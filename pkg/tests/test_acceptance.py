"""Acceptance suite: every criterion at its stated scale.

Each test prints one pass/fail line; run with `pytest -s` to see them
stream. All checks are exact (no tolerances anywhere).
"""

import time

from skewaffine.algebra import Algebra
from skewaffine.suites import (SuiteConfig, check_anti_automorphism_tables,
                               check_central_ratio_lines,
                               check_commutative_oracle,
                               check_decomposition_round_trip,
                               check_dimension_comparison,
                               check_dimension_preservation,
                               check_echelon_dimension,
                               check_intersection_trichotomy,
                               check_negative_controls, check_plane_chain,
                               check_single_right_line,
                               check_two_sided_standard_form)

QUAT = Algebra.quaternions()


def _config(trials, dim=3, height=8, seed=20240):
    return SuiteConfig(seed=seed, trials=trials, height=height, dim=dim,
                       algebra=QUAT)


def _report(number, description, result):
    status = "PASS" if result.ok else "FAIL"
    print(f"criterion {number:2d} [{status}] {description}")
    assert result.ok, (description, result.witness, result.note)


def test_criterion_01_echelon_dimension():
    result = check_echelon_dimension(_config(200, dim=5))
    _report(1, "echelon dimension = ambient - complement, x4 = rational rank "
               "(200 matrices, n<=5, height 8)", result)


def test_criterion_02_dimension_comparison():
    result = check_dimension_comparison(_config(200, dim=4))
    _report(2, "opposite-side inclusions compare dimensions, strictly when "
               "proper (200 pairs)", result)


def test_criterion_03_central_ratio_lines():
    result = check_central_ratio_lines(_config(500))
    _report(3, "two-sided line <=> central coordinate ratio (500 samples)",
            result)


def test_criterion_04_single_right_line():
    result = check_single_right_line(_config(100, dim=3))
    _report(4, "purely left planes hold at most one right line "
               "(100 planes)", result)


def test_criterion_05_intersection_trichotomy():
    result = check_intersection_trichotomy(_config(100),
                                           lines_per_subspace=20)
    _report(5, "line-intersection trichotomy on two-sided subspaces, "
               "witnesses on purely one-sided ones (100 x 20)", result)


def test_criterion_06_two_sided_standard_form():
    result = check_two_sided_standard_form(_config(100), samples=20)
    _report(6, "standardizing maps commute with both actions and hit the "
               "leading block (100 subspaces x 20 samples)", result)


def test_criterion_07_plane_chain():
    result = check_plane_chain(_config(100, dim=4))
    _report(7, "plane chains connect with line intersections "
               "(100 pairs in dims 3 and 4)", result)


def test_criterion_08_dimension_preservation():
    result = check_dimension_preservation(_config(100))
    _report(8, "built forms preserve dimension along flags "
               "(100 forms, dims 0..3)", result)


def test_criterion_09_decomposition_round_trip():
    start = time.time()
    result = check_decomposition_round_trip(_config(200), opaque=True)
    elapsed = time.time() - start
    _report(9, f"decompose(build(F)) = F and opaque pipeline succeeds "
               f"(200 forms, n=3, both modes, {elapsed:.0f}s)", result)
    assert elapsed < 120, "round-trip suite exceeded its time budget"


def test_criterion_10_anti_automorphism_tables():
    result = check_anti_automorphism_tables(_config(100), pairs=50)
    _report(10, "scaling-map tables coincide, reverse products and are "
                "realized by conjugation (100 plane forms x 50 pairs)",
            result)


def test_criterion_11_negative_controls():
    result = check_negative_controls(_config(40), matrices=20)
    _report(11, "coordinate shear and 20 non-factorable matrices rejected "
                "with re-checkable witnesses", result)


def test_criterion_12_commutative_oracle():
    result = check_commutative_oracle(_config(500))
    _report(12, "commutative echelon/dim/membership match classical "
                "elimination (500 instances)", result)
