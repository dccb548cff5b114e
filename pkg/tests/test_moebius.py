import pytest

from fuchsdecomp.errors import (DeterminantNotOne, IdentityHasNoCircle,
                                NonHomotheticUpperTriangular)
from fuchsdecomp.moebius import (HomothetyCircle, MoebiusMap, Side, StandardCircle, Strip,
                                 StripSide, UHPoint, circle_side, isometry_circle,
                                 mob_invert, mob_is_homothety, parse_point, strip_side)
from fuchsdecomp.qfield import FieldSpec

K = FieldSpec(2, 3)
r2, r3 = K.sqrt_m(), K.sqrt_n()
BETA = MoebiusMap(r2, K.one(), K.one(), r2)


def pt(x, y):
    return UHPoint(K(x) if not hasattr(x, "spec") else x, K(y) if not hasattr(y, "spec") else y)


def test_determinant_checked():
    with pytest.raises(DeterminantNotOne):
        MoebiusMap(K(2), K.zero(), K.zero(), K(1))
    MoebiusMap(K(2), K.zero(), K.zero(), K(1), check=False)


def test_action_formula():
    z = pt(0, 1)
    w = BETA(z)
    # (r2 i + 1)/(i + r2) = (2 r2 + i)/3
    assert w.x == 2 * r2 / 3 and w.y == K(1) / 3


def test_composition_and_inverse():
    g = BETA @ BETA
    assert g @ mob_invert(g) == MoebiusMap.identity(K)
    z = pt(1, 2)
    assert g(z) == BETA(BETA(z))
    assert (BETA ** -2) @ g == MoebiusMap.identity(K)


def test_upper_half_plane_required():
    with pytest.raises(ValueError):
        pt(0, 0)
    assert parse_point("r2;1", K) == pt(r2, 1)


def test_isometry_circle_of_beta():
    c = isometry_circle(BETA)
    assert isinstance(c, StandardCircle)
    assert c.center == -r2 and c.radius == 1
    assert isometry_circle(mob_invert(BETA)).center == r2


def test_homothety_circle():
    lam = (r2 + K.sqrt_mn()) / 2
    a = MoebiusMap(lam, K.zero(), K.zero(), lam.inverse())
    assert mob_is_homothety(a) == lam
    assert mob_is_homothety(mob_invert(a)) == lam
    c = isometry_circle(a)
    assert isinstance(c, HomothetyCircle) and c.radius == lam.inverse()
    assert isometry_circle(mob_invert(a)).radius == lam


def test_circle_errors():
    with pytest.raises(IdentityHasNoCircle):
        isometry_circle(MoebiusMap.identity(K))
    with pytest.raises(NonHomotheticUpperTriangular):
        isometry_circle(MoebiusMap(K.one(), K.one(), K.zero(), K.one()))


def test_sides():
    c = StandardCircle(r2, K.one())
    assert circle_side(c, pt(r2, 1)) is Side.BOUNDARY
    assert circle_side(c, pt(r2, K(1) / 2)) is Side.INTERIOR
    assert circle_side(c, pt(0, 1)) is Side.EXTERIOR
    s = Strip(r2)
    assert strip_side(s, pt(0, 1)) is StripSide.INSIDE
    assert strip_side(s, pt(0, r2)) is StripSide.INSIDE
    assert strip_side(s, pt(0, 2)) is StripSide.ABOVE
    assert strip_side(s, pt(0, K(1) / 2)) is StripSide.BELOW
