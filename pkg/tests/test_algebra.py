import random
from fractions import Fraction

import pytest

from anomcancel.algebra import (AlgebraError, GradedPolynomial, QI_I, gauss,
                                newton_convert)
from anomcancel.genus import build_generator_table


def table4():
    return build_generator_table(4, 2, True, 4)


def test_scalar_field_ops():
    assert gauss(Fraction(1, 2)) + gauss(Fraction(1, 3)) == gauss(Fraction(5, 6))
    assert QI_I * QI_I == gauss(-1)
    assert gauss(1, 1) / gauss(1, -1) == QI_I
    assert gauss(2, 3).conjugate().conjugate() == gauss(2, 3)
    with pytest.raises(AlgebraError):
        gauss(1) / gauss(0)


def test_scalar_text_forms():
    assert gauss(Fraction(3, 4)).to_text() == "3/4"
    assert gauss(Fraction(1, 2), Fraction(-1, 3)).to_text() == "1/2-1/3*i"
    assert gauss(0, 1).to_text() == "0+1*i"


def test_gp_product_and_truncation():
    t = table4()
    one = GradedPolynomial.one(t, 4)
    n1 = GradedPolynomial.generator("nM1", t, 4)
    assert (one + n1) * (one - n1) == one - n1 * n1
    # weight-4 product dies at truncation 2
    n1w2 = GradedPolynomial.generator("nM1", t, 2)
    assert not (n1w2 * n1w2)
    assert n1.scale(2 ** 5) == n1.scale(32)


def test_gp_component():
    t = table4()
    n1 = GradedPolynomial.generator("nM1", t, 4)
    p = GradedPolynomial.one(t, 4) + n1 + n1 * n1
    assert p.component(2) == n1
    assert p.component(0) == GradedPolynomial.one(t, 4)
    u = GradedPolynomial.generator("u", t, 4)
    q = u ** 3 + u
    assert q.component(3) == u ** 3


def test_substitute_examples():
    t = table4()
    W = 4
    nm = GradedPolynomial.generator("nM1", t, W)
    nv = GradedPolynomial.generator("nV1", t, W)
    u = GradedPolynomial.generator("u", t, W)
    zero = GradedPolynomial.zero(t, W)
    assert (nv * nm).substitute("nV1", zero) == zero
    repl = u * u + nv
    assert nm.substitute("nM1", repl) == repl
    expanded = (nm * nm).substitute("nM1", repl)
    assert expanded == u ** 4 + (u * u * nv).scale(2) + nv * nv
    with pytest.raises(AlgebraError):
        nm.substitute("nM1", u)  # weight 1 != 2


def test_standard_basis_map_and_roundtrip():
    t = table4()
    n1 = GradedPolynomial.generator("nM1", t, 4)
    std = n1.to_standard_basis()
    assert std.to_text() == "-1/4*pM1"
    n2 = GradedPolynomial.generator("nM2", t, 4)
    assert n2.to_standard_basis().to_text() == "1/16*pM2"
    u2 = GradedPolynomial.generator("u", t, 4, power=2)
    assert u2.to_standard_basis().to_text() == "-1/4*c^2"
    rng = random.Random(7)
    for _ in range(20):
        p = _random_poly(t, 4, rng)
        assert p.to_standard_basis().from_standard_basis(t) == p


def _random_poly(t, W, rng, n_terms=5):
    p = GradedPolynomial.zero(t, W)
    names = [g.name for g in t.gens]
    for _ in range(n_terms):
        g = GradedPolynomial.scalar(gauss(Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                                          Fraction(rng.randint(-3, 3), 2)), t, W)
        for _ in range(rng.randint(0, 2)):
            g = g * GradedPolynomial.generator(rng.choice(names), t, W)
        p = p + g
    return p


def test_ring_axioms_randomized():
    t = table4()
    rng = random.Random(11)
    for _ in range(15):
        a, b, c = (_random_poly(t, 4, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_substitute_is_homomorphism():
    t = table4()
    rng = random.Random(13)
    u = GradedPolynomial.generator("u", t, 4)
    nv = GradedPolynomial.generator("nV1", t, 4)
    repl = u * u + nv.scale(3)
    for _ in range(10):
        f, g = _random_poly(t, 4, rng), _random_poly(t, 4, rng)
        lhs = (f * g).substitute("nM1", repl)
        rhs = f.substitute("nM1", repl) * g.substitute("nM1", repl)
        assert lhs == rhs


def test_newton_convert():
    # s1 -> e1, s2 -> e1^2 - 2 e2 checked on numeric instances
    e = newton_convert([gauss(3), gauss(5)], 4, "powersum->elementary")
    assert e[0] == gauss(3)
    assert e[1] == gauss(2)  # (s1^2 - s2)/2 = (9-5)/2
    s = newton_convert(e, 4, "elementary->powersum")
    assert s == [gauss(3), gauss(5)]
    # single root: e2 forced to zero, s2 = e1^2
    e1 = newton_convert([gauss(2), gauss(4)], 1, "powersum->elementary")
    assert e1[1] == gauss(0)
    s1 = newton_convert([gauss(2), gauss(0)], 1, "elementary->powersum")
    assert s1 == [gauss(2), gauss(4)]


def test_newton_roundtrip_randomized():
    rng = random.Random(3)
    for n_roots in (3, 5):
        for _ in range(10):
            s = [gauss(rng.randint(-9, 9)) for _ in range(3)]
            e = newton_convert(s, n_roots, "powersum->elementary")
            assert newton_convert(e, n_roots, "elementary->powersum") == s
