import json
import os
from fractions import Fraction

import pytest

import casson

FIXTURES = os.environ.get(
    "CASSON_FIXTURE_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"),
)


def test_trefoil_invariants():
    k = casson.preset("right-trefoil")
    assert casson.alexander_polynomial(k) == {-1: 1, 0: -1, 1: 1}
    assert casson.alexander_string(k) == "t - 1 + t^-1"
    assert casson.tl_signature(k, 1, 2) == -2
    assert casson.arf_invariant(k) is True
    assert casson.tl_signature(casson.mirror(k), 1, 2) == 2


def test_torus_knots():
    k = casson.torus_knot_seifert(3, 5)
    assert casson.tl_signature(k, 1, 2) == -8
    assert casson.mubar_double_branched(k) == Fraction(-1)
    assert casson.rohlin_double_branched(k) is True
    assert casson.equivariant_casson_branched(2, 0, casson.signature_spectrum(k, 2)) == -1


def test_poincare_sphere():
    steps = [(casson.preset("left-trefoil"), -1)]
    assert casson.casson(steps) == -1
    assert casson.rohlin(steps) is True
    assert casson.casson([]) == 0


def test_free_quotient_is_fraction():
    value = casson.equivariant_casson_free(2, 1, 0, casson.preset("right-trefoil"))
    assert value == Fraction(3, 4)


def test_floer():
    cork = [0, 1, 0, 1, 0, 1, 0, 1]
    assert casson.lefschetz(cork, "-id") == 4
    assert casson.deduce_sign_pattern(cork, 4) == [0, -1, 0, -1, 0, -1, 0, -1]
    assert casson.lefschetz([0, 1, 0, 0, 0, 1, 0, 0]) == -2


def test_homology_tori():
    assert casson.det4("T4") is True
    assert casson.det4("S1x#3(S1xS2)") is False
    assert casson.four_orbit_count("T4", 1) == 1
    assert casson.donaldson_mod2("T4", 1) is True
    assert casson.admissible("T4", 33) is False


def test_circle_bundles():
    assert casson.circle_bundle_rho(casson.preset("whitehead-type")) == 0
    assert casson.circle_bundle_furuta_ohta(casson.preset("unknot")) == 0


def test_errors_raise():
    with pytest.raises(casson.CassonError):
        casson.circle_bundle_rho(casson.preset("right-trefoil"))
    with pytest.raises(ValueError):
        casson.preset("granny")


def test_cli_round_trip():
    code, out, err = casson.run_cli(
        ["mapping-torus", "--input", os.path.join(FIXTURES, "cork.json"), "--format", "json"]
    )
    assert code == 0, err
    report = json.loads(out)
    assert report["schema"] == "casson-report/1"
    assert report["invariants"]["lambda_fo"] == "2"
    code, _, _ = casson.run_cli(["frobnicate"])
    assert code == 1
