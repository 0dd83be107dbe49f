import json

import pytest

from delpezzo.cyclotomic import CyclotomicNumber, RootOfUnity
from delpezzo.lattice import A, D
from delpezzo.plane_action import (
    ActionError,
    GroupCapExceeded,
    Line,
    MonomialMatrix,
    NonGorensteinCyclic,
    ProjectivePoint,
    SMOOTH,
    builtin_actions,
    classify_stabilizer,
    close_group,
    fixed_locus,
    hj_normalize,
    parse_action,
    quotient_profile,
    tangent_eigenvalues,
)


def mono(perm, scalars):
    return MonomialMatrix(tuple(perm),
                          tuple(RootOfUnity.parse(s) for s in scalars))


def pt(*coords):
    return ProjectivePoint([CyclotomicNumber.from_rational(c) for c in coords])


class TestMonomialMatrix:
    def test_identity_and_inverse(self):
        g = mono((1, 2, 0), ("1/3", "0", "1/2"))
        assert (g * g.inverse()).is_identity()
        assert (g.inverse() * g).is_identity()

    def test_associativity(self):
        a = mono((1, 0, 2), ("1/4", "0", "0"))
        b = mono((0, 2, 1), ("0", "1/3", "0"))
        c = mono((2, 1, 0), ("1/2", "0", "1/5"))
        assert ((a * b) * c).canonical() == (a * (b * c)).canonical()

    def test_apply_matches_multiplication(self):
        a = mono((1, 2, 0), ("1/3", "0", "1/2"))
        b = mono((0, 2, 1), ("0", "1/4", "0"))
        p = pt(2, 3, 5)
        assert p.transformed(b).transformed(a) == p.transformed(a * b)

    def test_projective_order(self):
        g = mono((0, 1, 2), ("0", "1/3", "2/3"))
        assert g.order() == 3
        # projectively trivial scalar matrix
        s = mono((0, 1, 2), ("1/3", "1/3", "1/3"))
        assert s.is_identity()

    def test_bad_perm_rejected(self):
        with pytest.raises(ActionError):
            mono((0, 0, 2), ("0", "0", "0"))


class TestParseAction:
    def test_bare_list(self):
        gens = parse_action('[{"perm": [0, 1, 2], "scalars": ["0", "1/3", "2/3"]}]')
        assert len(gens) == 1
        assert gens[0].order() == 3

    def test_object_with_generators(self):
        text = json.dumps({"generators": [
            {"perm": [1, 2, 0], "scalars": ["0", "0", "0"]}]})
        assert parse_action(text)[0].order() == 3

    def test_errors(self):
        with pytest.raises(ActionError):
            parse_action("not json")
        with pytest.raises(ActionError):
            parse_action('{"nope": []}')
        with pytest.raises(ActionError):
            parse_action('[{"perm": [0, 1], "scalars": ["0"]}]')


class TestCloseGroup:
    def test_builtin_orders(self):
        expected = {"z2_cone": 2, "z6": 6, "z3": 3, "z3xz3": 9,
                    "z4": 4, "quaternion8": 8}
        for name, gens in builtin_actions().items():
            assert close_group(gens).order == expected[name], name

    def test_cap(self):
        gens = builtin_actions()["z3xz3"]
        with pytest.raises(GroupCapExceeded):
            close_group(gens, cap=4)


class TestFixedLocus:
    def test_distinct_eigenvalues(self):
        g = mono((0, 1, 2), ("0", "1/3", "2/3"))
        loc = fixed_locus(g)
        assert loc.line is None
        assert set(loc.points) == {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}

    def test_pseudo_reflection_line(self):
        g = mono((0, 1, 2), ("0", "0", "1/2"))
        loc = fixed_locus(g)
        assert loc.line is not None
        assert loc.points == [pt(0, 0, 1)]
        assert loc.line.contains(pt(1, 0, 0))
        assert loc.line.contains(pt(1, 5, 0))
        assert not loc.line.contains(pt(0, 0, 1))

    def test_permutation_fixed_points(self):
        g = mono((1, 2, 0), ("0", "0", "0"))
        loc = fixed_locus(g)
        assert pt(1, 1, 1) in loc.points

    def test_identity_rejected(self):
        with pytest.raises(ActionError):
            fixed_locus(MonomialMatrix.identity())

    def test_fixed_points_are_fixed(self):
        for gens in builtin_actions().values():
            for g in close_group(gens).non_identity():
                loc = fixed_locus(g)
                for p in loc.points:
                    assert p.transformed(g) == p
                if loc.line is not None:
                    assert loc.line.transformed(g) == loc.line


class TestTangent:
    def test_diagonal_case(self):
        g = mono((0, 1, 2), ("0", "1/3", "2/3"))
        t1, t2 = tangent_eigenvalues(g, pt(1, 0, 0))
        assert {t1.exponent, t2.exponent} == {RootOfUnity.parse("1/3").exponent,
                                              RootOfUnity.parse("2/3").exponent}

    def test_unfixed_point_rejected(self):
        g = mono((0, 1, 2), ("0", "1/3", "2/3"))
        with pytest.raises(ActionError):
            tangent_eigenvalues(g, pt(1, 1, 1))


class TestHJ:
    def test_smooth_cases(self):
        assert hj_normalize(1, 0, 0) == (1, 0, 0)
        assert hj_normalize(2, 0, 1) == (1, 0, 0)      # pseudo-reflection
        assert hj_normalize(6, 2, 3) == (1, 0, 0)

    def test_du_val_cases(self):
        assert hj_normalize(2, 1, 1) == (2, 1, 1)
        assert hj_normalize(4, 1, 3) == (4, 1, 3)

    def test_symmetry(self):
        for (r, a, b) in [(12, 5, 8), (7, 2, 3), (9, 4, 6)]:
            ra, aa, ba = hj_normalize(r, a, b)
            rb, ab, bb = hj_normalize(r, b, a)
            assert ra == rb and {aa, ba} == {ab, bb}

    def test_non_faithful_rejected(self):
        with pytest.raises(ValueError):
            hj_normalize(4, 2, 2)


class TestClassifyStabilizer:
    def test_a2_point(self):
        group = close_group(builtin_actions()["z3"])
        assert classify_stabilizer(group, pt(0, 0, 1)) == A(2)

    def test_smooth_point_in_z6(self):
        group = close_group(builtin_actions()["z6"])
        # full stabilizer but reflections reduce the germ to a smooth one
        assert classify_stabilizer(group, pt(1, 0, 0)) == SMOOTH

    def test_d4_point(self):
        group = close_group(builtin_actions()["quaternion8"])
        assert classify_stabilizer(group, pt(1, 0, 0)) == D(4)

    def test_non_gorenstein(self):
        g = mono((0, 1, 2), ("0", "1/3", "1/3"))
        group = close_group([g])
        out = classify_stabilizer(group, pt(1, 0, 0))
        assert out == NonGorensteinCyclic(3, 1, 1)

    def test_trivial_stabilizer_rejected(self):
        group = close_group(builtin_actions()["z3"])
        with pytest.raises(ActionError):
            classify_stabilizer(group, pt(1, 2, 3))


PROFILES = {
    "z2_cone": (2, 8, "A1"),
    "z6": (6, 6, "A1+A2"),
    "z3": (3, 3, "3A2"),
    "z3xz3": (9, 1, "4A2"),
    "z4": (4, 4, "2A1+A3"),
    "quaternion8": (8, 2, "3A1+D4"),
}


@pytest.mark.parametrize("name", sorted(PROFILES))
def test_builtin_quotient_profiles(name):
    from delpezzo.lattice import config_str

    profile = quotient_profile(close_group(builtin_actions()[name]))
    order, k2, config = PROFILES[name]
    assert profile.group_order == order
    assert profile.k2 == k2
    assert config_str(profile.config) == config
    assert profile.euler_check["pass"]
    for orbit in profile.orbits:
        assert profile.group_order % orbit.size == 0
        assert orbit.size * orbit.stabilizer_order == profile.group_order


def test_unsupported_action_raises():
    # Z/3 acting with a non-Gorenstein isolated fixed point
    g = mono((0, 1, 2), ("0", "1/3", "1/3"))
    with pytest.raises(ActionError):
        quotient_profile(close_group([g]))


def test_line_meet():
    l1 = Line([CyclotomicNumber.from_rational(c) for c in (1, 0, 0)])
    l2 = Line([CyclotomicNumber.from_rational(c) for c in (0, 1, 0)])
    assert l1.meet(l2) == pt(0, 0, 1)
