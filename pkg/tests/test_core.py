import itertools
import random

import pytest
from hypothesis import given, strategies as st

from a1weyl.core import (
    EPS, IsotropicRootError, NullityMismatchError, RootVector, WeylElement,
    act, canonical_word, conjugate, evaluate_word, identity_element, inverse,
    is_alternating, multiply, pairing, power, reflection, root, word_epsilon_T,
)

import oracles
from strategies import elements, roots_of


def vec(alpha):
    return [alpha.k, *alpha.sigma]


def element_matrix(w):
    """Matrix of ``w`` built column by column from ``act`` on the fixed basis."""
    nu = w.nu
    cols = [vec(act(w, RootVector(1, (0,) * nu)))]
    for i in range(nu):
        e = tuple(int(i == j) for j in range(nu))
        cols.append(vec(act(w, RootVector(0, e))))
    return [[cols[j][i] for j in range(nu + 1)] for i in range(nu + 1)]


S1, S2 = (1, 0), (0, 1)


# -- pairing -----------------------------------------------------------------

def test_pairing_examples():
    assert pairing(EPS(1), EPS(1)) == 2
    assert pairing(root(0, (1,)), EPS(1)) == 0
    a, b = root(1, S1), root(-1, S2)
    assert pairing(a, b) == -2
    assert oracles.coroot_pairing(vec(a), vec(b)) == -2


def test_pairing_nullity_mismatch():
    with pytest.raises(NullityMismatchError):
        pairing(EPS(1), EPS(2))


# -- reflection ----------------------------------------------------------------

def test_reflection_examples():
    assert reflection(EPS(2)) == WeylElement(-1, (0, 0))
    assert reflection(root(1, S1)) == WeylElement(-1, S1)
    assert reflection(root(-1, S2)) == WeylElement(-1, (0, -1))


@pytest.mark.parametrize("alpha", [root(1, S1), root(-1, S2), root(1, (3, -2))])
def test_reflection_matches_matrix(alpha):
    assert element_matrix(reflection(alpha)) == oracles.reflection_matrix(vec(alpha))


def test_reflection_of_eps_plus_sigma_on_eps():
    w = reflection(root(1, S1))
    assert act(w, EPS(2)) == root(-1, (-2, 0))
    assert oracles.apply(oracles.reflection_matrix([1, 1, 0]), [1, 0, 0]) == [-1, -2, 0]


def test_reflection_isotropic_rejected():
    with pytest.raises(IsotropicRootError):
        reflection(root(0, S1))


# -- identity, multiply, inverse, conjugate ------------------------------------

def test_identity():
    e = identity_element(3)
    assert e == WeylElement(1, (0, 0, 0))
    w = WeylElement(-1, (1, 2, 3))
    assert multiply(e, w) == w == multiply(w, e)
    assert inverse(e) == e


def test_multiply_examples():
    r1, r2 = WeylElement(-1, S1), WeylElement(-1, S2)
    assert multiply(r1, r1) == identity_element(2)
    assert multiply(r1, r2) == WeylElement(1, (-1, 1))
    m = oracles.matmul(oracles.reflection_matrix([1, 1, 0]), oracles.reflection_matrix([1, 0, 1]))
    assert element_matrix(multiply(r1, r2)) == m
    assert multiply(WeylElement(1, (2, -1)), WeylElement(1, (3, 5))) == WeylElement(1, (5, 4))


def test_multiply_nullity_mismatch():
    with pytest.raises(NullityMismatchError):
        multiply(identity_element(1), identity_element(2))


def test_inverse_examples():
    assert inverse(WeylElement(1, (2, -3))) == WeylElement(1, (-2, 3))
    assert inverse(WeylElement(-1, (2, -3))) == WeylElement(-1, (2, -3))


def test_conjugate_examples():
    w = WeylElement(-1, (4, 1))
    e = identity_element(2)
    assert conjugate(e, w) == w
    assert conjugate(w, w) == w
    assert conjugate(WeylElement(-1, (0,)), WeylElement(-1, (1,))) == WeylElement(-1, (-1,))
    # w w_alpha w^-1 = w_(w alpha)
    assert act(WeylElement(-1, (0,)), root(1, (1,))) == root(-1, (1,))
    assert reflection(root(-1, (1,))) == WeylElement(-1, (-1,))


def test_power():
    w = WeylElement(1, (1, -2))
    assert power(w, 3) == WeylElement(1, (3, -6))
    assert power(w, -2) == WeylElement(1, (-2, 4))
    assert power(WeylElement(-1, (5,)), 7) == WeylElement(-1, (5,))


# -- act -------------------------------------------------------------------------

def test_act_examples():
    assert act(WeylElement(-1, (0,)), EPS(1)) == root(-1, (0,))
    sigma = root(0, (3, -7))
    assert act(WeylElement(-1, (5, 5)), sigma) == sigma
    assert act(WeylElement(-1, (1,)), EPS(1)) == root(-1, (-2,))


# -- words -----------------------------------------------------------------------

def test_evaluate_word_examples():
    assert evaluate_word([], nu=2) == identity_element(2)
    assert evaluate_word([EPS(2), EPS(2)]) == identity_element(2)
    w = evaluate_word([EPS(1), root(-1, (1,)), EPS(1)])
    assert w == reflection(root(1, (1,)))


def test_evaluate_word_errors():
    with pytest.raises(IsotropicRootError):
        evaluate_word([EPS(1), root(0, (1,))])
    with pytest.raises(ValueError):
        evaluate_word([])
    with pytest.raises(NullityMismatchError):
        evaluate_word([EPS(1), EPS(2)])


def test_word_epsilon_T_examples():
    assert word_epsilon_T([root(1, (1, 0))]) == (-1, (1, 0))
    assert word_epsilon_T([EPS(2), root(1, S1)]) == (1, S1)
    assert word_epsilon_T([root(-1, S1), root(1, S2)]) == (1, (1, 1))
    assert word_epsilon_T([], nu=2) == (1, (0, 0))
    with pytest.raises(IsotropicRootError):
        word_epsilon_T([root(0, S1)])


def test_T_is_not_injective_but_pairs_are():
    # T(w_(-eps+s1) w_(eps+s2)) = s1 + s2 = T(w_(eps+s1+s2)), but the elements differ
    a = evaluate_word([root(-1, S1), root(1, S2)])
    b = evaluate_word([root(1, (1, 1))])
    assert a.t == b.t and a != b


def test_canonical_word_examples():
    assert canonical_word(identity_element(1)) == []
    assert canonical_word(WeylElement(-1, (1,))) == [root(1, (1,))]
    assert canonical_word(WeylElement(1, (1,))) == [EPS(1), root(1, (1,))]


def test_is_alternating_examples():
    a = root(1, (2, -1))
    assert is_alternating([a, a])
    bad = [root(1, (1,)), EPS(1), root(1, (1,)), EPS(1)]
    assert not is_alternating(bad)
    assert evaluate_word(bad) == WeylElement(1, (-2,))
    good = [root(1, (1,)), EPS(1), EPS(1), root(1, (1,))]
    assert is_alternating(good)
    assert evaluate_word(good) == identity_element(1)
    assert not is_alternating([EPS(1)])


# -- serialization ---------------------------------------------------------------

def test_json_round_trip():
    w = WeylElement(-1, (3, -4))
    assert w.to_json() == {"eps": -1, "t": [3, -4]}
    assert WeylElement.from_json(w.to_json()) == w
    a = root(-1, (0, 2))
    assert a.to_json() == {"k": -1, "sigma": [0, 2]}
    assert RootVector.from_json(a.to_json()) == a


def test_invalid_values():
    with pytest.raises(ValueError):
        WeylElement(0, (1,))
    with pytest.raises(ValueError):
        RootVector(2, (1,))
    with pytest.raises(ValueError):
        WeylElement(1, ())


# -- properties ------------------------------------------------------------------

@pytest.mark.parametrize("nu", [1, 2, 3])
def test_group_axioms_exhaustive(nu):
    elems = [WeylElement(p, t) for p in (-1, 1) for t in oracles.box(nu, 2 if nu < 3 else 1)]
    e = identity_element(nu)
    for w in elems:
        assert multiply(w, inverse(w)) == e == multiply(inverse(w), w)
        assert multiply(e, w) == w
    rng = random.Random(nu)
    for _ in range(2000):
        a, b, c = rng.choices(elems, k=3)
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_matrix_representation_is_faithful_homomorphism():
    rng = random.Random(7)
    for _ in range(300):
        nu = rng.randint(1, 3)
        letters = [RootVector(rng.choice((-1, 1)), tuple(rng.randint(-4, 4) for _ in range(nu)))
                   for _ in range(rng.randint(1, 8))]
        w = evaluate_word(letters)
        assert element_matrix(w) == oracles.word_matrix([vec(a) for a in letters])


@given(elements(), st.data())
def test_canonical_word_faithful(w, data):
    assert evaluate_word(canonical_word(w), nu=w.nu) == w
    assert len(canonical_word(w)) <= 2


@given(st.integers(1, 4).flatmap(
    lambda nu: st.lists(roots_of(nu, nonisotropic=True, bound=6), min_size=1, max_size=12)))
def test_word_epsilon_T_well_defined(word):
    w = evaluate_word(word)
    assert word_epsilon_T(word) == (w.parity, w.t)
    assert is_alternating(word) == (w == identity_element(w.nu))


@given(st.integers(1, 4).flatmap(lambda nu: st.tuples(
    elements(nu), roots_of(nu), roots_of(nu))))
def test_action_preserves_pairing_and_roots(args):
    w, a, b = args
    wa, wb = act(w, a), act(w, b)
    assert pairing(wa, wb) == pairing(a, b)
    assert wa.k in (-1, 0, 1)


@given(st.integers(1, 4).flatmap(lambda nu: st.tuples(
    elements(nu), elements(nu), roots_of(nu))))
def test_action_is_homomorphism(args):
    w1, w2, a = args
    assert act(multiply(w1, w2), a) == act(w1, act(w2, a))


@given(st.integers(1, 4).flatmap(lambda nu: st.tuples(
    elements(nu), roots_of(nu, nonisotropic=True))))
def test_conjugation_of_reflection(args):
    w, a = args
    assert conjugate(w, reflection(a)) == reflection(act(w, a))


@given(st.integers(1, 3).flatmap(lambda nu: st.tuples(
    roots_of(nu, True, 8), roots_of(nu, True, 8), roots_of(nu, True, 8))))
def test_triple_products_square_to_one(args):
    w = evaluate_word(list(args))
    assert multiply(w, w) == identity_element(w.nu)


@given(st.integers(1, 4).flatmap(lambda nu: st.tuples(
    elements(nu), elements(nu))))
def test_even_part_translation_is_additive(args):
    a, b = (WeylElement(1, w.t) for w in args)
    assert multiply(a, b).t == tuple(x + y for x, y in zip(a.t, b.t))


@pytest.mark.parametrize("nu", [1, 2])
def test_sign_translation_map_is_bijection_on_box(nu):
    image = {}
    for p in (-1, 1):
        for t in oracles.box(nu, 3):
            w = WeylElement(p, t)
            key = (p, tuple(p * x for x in t))  # p * (eps + t)
            assert key not in image
            image[key] = w
    # surjective onto pm eps + box
    assert set(image) == {(k, s) for k in (-1, 1) for s in oracles.box(nu, 3)}


@given(st.integers(1, 3).flatmap(lambda nu: st.tuples(
    roots_of(nu, True, 6), roots_of(nu, bound=6).map(lambda r: r.sigma))),
    st.integers(-5, 5))
def test_power_identity_of_translations(args, k):
    alpha, sigma = args
    shifted = RootVector(alpha.k, tuple(a + k * s for a, s in zip(alpha.sigma, sigma)))
    once = RootVector(alpha.k, tuple(a + s for a, s in zip(alpha.sigma, sigma)))
    assert evaluate_word([shifted, alpha]) == power(evaluate_word([once, alpha]), k)


def test_sum_identity_of_translations():
    # w_(a+s+d) = w_(a+s) w_a w_(a+d)
    rng = random.Random(3)
    for _ in range(500):
        nu = rng.randint(1, 3)
        a = RootVector(rng.choice((-1, 1)), tuple(rng.randint(-5, 5) for _ in range(nu)))
        s = [rng.randint(-5, 5) for _ in range(nu)]
        d = [rng.randint(-5, 5) for _ in range(nu)]
        add = lambda *vs: tuple(map(sum, zip(*vs)))
        lhs = reflection(RootVector(a.k, add(a.sigma, s, d)))
        rhs = evaluate_word([RootVector(a.k, add(a.sigma, s)), a, RootVector(a.k, add(a.sigma, d))])
        assert lhs == rhs


def test_inverse_and_conjugate_closed_forms():
    # w^-1 and w1 w2 w1^-1 through the unique expression
    for p1, p2 in itertools.product((-1, 1), repeat=2):
        for t1 in oracles.box(2, 2):
            w1 = WeylElement(p1, t1)
            inv = evaluate_word(([EPS(2)] if p1 == 1 else []) +
                                [RootVector(1, tuple(-p1 * x for x in t1))])
            assert inverse(w1) == inv
            for t2 in [(1, -2), (0, 3)]:
                w2 = WeylElement(p2, t2)
                tau = tuple(p1 * (b + (p2 - 1) * a) for a, b in zip(t1, t2))
                expected = evaluate_word(([EPS(2)] if p2 == 1 else []) + [RootVector(1, tau)])
                assert conjugate(w1, w2) == expected
