import pytest

import vectdeform as vd


def test_scalars():
    assert vd.normalize("(lambda-mu)^2") == "lambda^2 - 2*lambda*mu + mu^2"
    assert vd.universal_coefficient(k=1) == "1/2*lambda^2 - 1/2*mu^2"
    assert vd.formal_coefficient(k=2) == "-1/2*lambda^2 + 1/2"
    assert vd.integrability_lhs() == "6*c0^3*c2 - 3*c0^2*c1^2 - 18*c0*c1*c2 + 8*c1^3 + 9*c2^2"
    assert vd.casimir() == "-mu^2"
    assert vd.gelfand_fuks(1, -1) == "i"
    assert vd.gelfand_fuks(2, 1) == "0"


def test_universal_family_is_a_homomorphism():
    r = vd.verify_homomorphism(map="universal", symbolic=True, window=2, floor=-6)
    assert r["verdict"] == "pass"
    assert r["details"]["pairs_checked"] == 25


def test_table_without_p3_fails():
    rules = [{"grade": 1, "derivative": 0, "coefficient": "1"},
             {"grade": 0, "derivative": 1, "coefficient": "1"},
             {"grade": -1, "derivative": 2, "coefficient": "1/2"},
             {"grade": -2, "derivative": 3, "coefficient": "1/6"},
             {"grade": -4, "derivative": 5, "coefficient": "1/120"}]
    r = vd.verify_homomorphism(map="table", table={"rules": rules, "floor": -4}, floor=-4)
    assert r["verdict"] == "fail"
    assert r["details"]["first_bad_grade"] == -3


def test_recursion_and_formal_obstructions():
    r = vd.solve_recursion(symbolic=True, K=5)
    assert vd.EXIT_CODES[r["verdict"]] == 3
    assert r["details"]["obstructions"][0]["primitive"] == vd.integrability_lhs()
    assert vd.solve_recursion(symbolic=True, universal="plus", K=8)["verdict"] == "pass"
    f = vd.formal_solve(symbolic=True, order=3)
    assert f["verdict"] == "obstruction"
    assert vd.formal_solve(symbolic=True, lambda_family=True, order=4)["verdict"] == "pass"


def test_cohomology_and_errata():
    assert vd.cocycle_report(window=3)["verdict"] == "pass"
    assert vd.coboundary_search(which=2, window=3)["details"]["trivial_within_window"] is False
    assert vd.moment_map(symbolic=True)["verdict"] == "erratum_detected"
    assert vd.central_extension(symbolic=True)["verdict"] == "erratum_detected"
    assert len(vd.report_errata()["details"]["entries"]) == 5


def test_errors():
    with pytest.raises(vd.UsageError):
        vd.verify_homomorphism(map="nonsense")
    with pytest.raises(ValueError):
        vd.solve_recursion()
    with pytest.raises(vd.UsageError):
        vd.normalize("lambda +")
    shallow = {"rules": [{"grade": 1, "derivative": 0, "coefficient": "1"}], "floor": -2}
    with pytest.raises(vd.InsufficientDepth):
        vd.verify_homomorphism(map="table", table=shallow, floor=-6)


def test_module_location():
    # Under ctest the package must come from the fresh build tree.
    import os

    expected = os.environ.get("VECTDEFORM_EXPECT_BUILD_TREE")
    if expected:
        assert os.path.realpath(vd.__file__).startswith(os.path.realpath(expected))
    assert vd.engine_version.startswith("vectdeform ")
