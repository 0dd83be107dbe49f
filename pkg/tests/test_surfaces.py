from fractions import Fraction

import pytest

from delpezzo import surfaces as S
from delpezzo.lattice import parse_config


def parse(text, **params):
    return S.parse_poly(text, {k: Fraction(v) for k, v in params.items()})


class TestParsePoly:
    def test_basic(self):
        f = parse("vars X:1 Y:1 Z:2 W:3\nW^2 + Z^3 + X^5*Y")
        assert list(f.names) == ["X", "Y", "Z", "W"]
        assert list(f.weights) == [1, 1, 2, 3]
        assert f.terms[(0, 0, 0, 2)] == 1
        assert f.terms[(5, 1, 0, 0)] == 1

    def test_parameters_and_coefficients(self):
        f = parse("vars X:1 Y:1\nX^2 - 3/2*X*Y + a*Y^2", a="5")
        assert f.terms[(1, 1)] == Fraction(-3, 2)
        assert f.terms[(0, 2)] == 5

    def test_zero_parameter_drops_term(self):
        f = parse("vars X:1 Z:2\nZ + a*X^2", a="0")
        assert (2, 0) not in f.terms

    def test_errors(self):
        with pytest.raises(ValueError):
            parse("no header here")
        with pytest.raises(ValueError):
            parse("vars X:1\nX + Q^2")
        with pytest.raises(ValueError):
            parse("vars X:1\nX + b*X")  # unbound parameter


class TestQuasiHomogeneity:
    def test_za_surface(self):
        for a in (0, 1):
            f = S.za_surface(Fraction(a))
            qh, deg = S.is_quasi_homogeneous(f)
            assert qh and deg == 6

    def test_inhomogeneous(self):
        f = parse("vars X:1 Y:1\nX^2 + Y^3")
        qh, _ = S.is_quasi_homogeneous(f)
        assert not qh


class TestUnivariate:
    def test_rational_roots(self):
        # (2t - 1)(t + 3) = 2t^2 + 5t - 3
        roots = S.rational_roots([Fraction(-3), Fraction(5), Fraction(2)])
        assert set(roots) == {Fraction(1, 2), Fraction(-3)}

    def test_cyclotomic_roots(self):
        # t^2 + t + 1 has the primitive cube roots
        roots = S.univariate_roots([Fraction(1), Fraction(1), Fraction(1)])
        assert len(roots) == 2

    def test_resultant_detects_common_root(self):
        # p = x^2 - y^2 and q = x - y share the line x = y
        p = {(2, 0): Fraction(1), (0, 2): Fraction(-1)}
        q = {(1, 0): Fraction(1), (0, 1): Fraction(-1)}
        res = S.sylvester_resultant(p, q, 0, 2)
        assert all(c == 0 for c in res.values())


class TestSingularPoints:
    def test_za_cone(self):
        for a in (0, 1):
            pts = S.cone_singular_points(S.za_surface(Fraction(a)))
            assert [[str(c) for c in p] for p in pts] == [["0", "1", "0", "0"]]

    def test_smooth_conic_cone(self):
        f = parse("vars X:1 Y:1 Z:1\nX*Y - Z^2")
        assert S.cone_singular_points(f) == []

    def test_nodal_cubic_cone(self):
        f = parse("vars X:1 Y:1 Z:1\nX*Y*Z")
        pts = S.cone_singular_points(f)
        keys = {tuple(str(c) for c in p) for p in pts}
        assert keys == {("1", "0", "0"), ("0", "1", "0"), ("0", "0", "1")}


class TestGerms:
    def test_node(self):
        f = {(1, 1): Fraction(1)}
        assert S.germ_classify(f, (Fraction(0), Fraction(0))) == S.GERM_NODE

    def test_cusp(self):
        f = {(0, 2): Fraction(1), (3, 0): Fraction(1)}
        assert S.germ_classify(f, (Fraction(0), Fraction(0))) == S.GERM_CUSP

    def test_smooth(self):
        f = {(1, 0): Fraction(1), (0, 2): Fraction(1)}
        assert S.germ_classify(f, (Fraction(0), Fraction(0))) == S.GERM_SMOOTH

    def test_translated_cusp(self):
        # cusp moved to (1, 2)
        f = {(0, 2): Fraction(1), (0, 1): Fraction(-4), (0, 0): Fraction(4),
             (3, 0): Fraction(1), (2, 0): Fraction(-3),
             (1, 0): Fraction(3)}
        f[(0, 0)] = f[(0, 0)] - 1
        assert S.germ_classify(f, (Fraction(1), Fraction(2))) == S.GERM_CUSP

    def test_point_not_on_curve(self):
        f = {(0, 0): Fraction(1)}
        with pytest.raises(ValueError):
            S.germ_classify(f, (Fraction(0), Fraction(0)))


class TestKodaira:
    def test_euler_numbers(self):
        assert S.kodaira_euler("I1") == 1
        assert S.kodaira_euler("I0*") == 6
        assert S.kodaira_euler("II*") == 10
        assert S.kodaira_euler("IV*") == 8
        assert S.kodaira_euler("III") == 3

    def test_reducibility(self):
        assert not S.kodaira_reducible("I1")
        assert not S.kodaira_reducible("II")
        assert S.kodaira_reducible("I2")
        assert S.kodaira_reducible("III")

    def test_fiber_configurations(self):
        configs = {tuple(c) for c in S.fiber_configurations()}
        assert configs == {("II*", "II"), ("II*", "I1", "I1")}

    def test_unknown_type(self):
        with pytest.raises(ValueError):
            S.kodaira_euler("V")


def test_noether_check():
    for d, cfg in [(8, "A1"), (6, "A1+A2"), (3, "3A2"), (1, "4A2")]:
        out = S.noether_check(d, parse_config(cfg))
        assert out["pass"], (d, cfg, out)
    assert not S.noether_check(3, parse_config("A1"))["pass"]
