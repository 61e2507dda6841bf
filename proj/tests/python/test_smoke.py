"""Smoke tests for the python bindings.

These only cross-check a few pinned values; the exhaustive verification lives
in the C++ test suite under ctest.
"""

import pytest

adsfam = pytest.importorskip("adsfam")


def test_coefficients_pinned():
    assert adsfam.coefficients(5, 2) == ["-2 - 2*L", "1"]
    assert adsfam.coefficients(4, 2) == ["-1 - 2*L", "1"]
    assert adsfam.coefficients(5, 3) == ["-2/3*L", "1"]


def test_coefficients_precondition():
    with pytest.raises(ValueError):
        adsfam.coefficients(3, 2)


def test_family_word_expansion():
    # order 1 is the transverse generator itself, Y_{n-2}^- of the big algebra
    assert adsfam.family(4, 1) == "(1)*Y-2"


def test_asymptotic_coefficients():
    # A_2 = 1/(2(n-3-2L)); n = 5 gives 1/(4(1-L))
    a = adsfam.asymptotic_coefficients(5, 2)
    assert a[0] == "1"
    assert a[1] == "(-1/4)/(-1 + L)"


def test_coincidence_constant():
    assert adsfam.coincidence_constant(4, 1) == "1"
    assert adsfam.coincidence_constant(4, 3) == "(-1/4)/(-1/2 + L)"


def test_run_suite():
    names = adsfam.suite_names()
    assert "equivariance" in names
    rep = adsfam.run_suite("equivariance", n=4, degree=2)
    assert rep["status"] == "pass"
    rep = adsfam.run_suite("geometry", n=5)
    assert rep["status"] == "pass"
