import numpy as np
import pytest

from pcgroups import BudgetError, corpus
from pcgroups.collector import Group
from pcgroups.presentation import PcPresentation, Word, parse, word

HEISENBERG = PcPresentation(3, ["a", "b", "c"], [1, 1, 1],
                            comm_rels={(2, 1): Word(((3, 1),))})

C27_TEXT = """
p = 3
gens g1 g2
orders g1:9 g2:3
rel g1^9 = g2
"""


def test_heisenberg_basic_products():
    g = Group(HEISENBERG)
    a, b = g.generator("a"), g.generator("b")
    assert (b * a).to_tuple() == (1, 1, 1)
    assert (a * b).to_tuple() == (1, 1, 0)
    assert g.commutator(b, a).to_tuple() == (0, 0, 1)
    assert ((a * b) ** 3).is_identity()


def test_heisenberg_matches_closed_form():
    # with [b,a] = c central: a^x1 b^y1 c^z1 * a^x2 b^y2 c^z2
    # = a^(x1+x2) b^(y1+y2) c^(z1+z2+y1*x2), all mod 3
    g = Group(HEISENBERG)
    for u in range(27):
        x1, y1, z1 = u % 3, (u // 3) % 3, u // 9
        for v in range(27):
            x2, y2, z2 = v % 3, (v // 3) % 3, v // 9
            got = (g.element([x1, y1, z1]) * g.element([x2, y2, z2])).to_tuple()
            assert got == ((x1 + x2) % 3, (y1 + y2) % 3, (z1 + z2 + y1 * x2) % 3)


def test_cyclic_27_through_power_relation():
    g = Group(parse(C27_TEXT))
    x = g.generator("g1")
    assert g.order == 27
    assert (x ** 9).to_tuple() == (0, 1)
    assert (x ** 27).is_identity()
    assert x.order() == 27 and x.order_log() == 3
    assert x.inverse().to_tuple() == (8, 2)
    assert (x * x.inverse()).is_identity()
    # the whole group is one cycle
    seen = set()
    e = g.identity
    for _ in range(27):
        seen.add(e.to_tuple())
        e = e * x
    assert len(seen) == 27 and e.is_identity()


@pytest.mark.parametrize("name", ["example1(3)", "example2", "family(3,2,2,3,1)",
                                  "abelian(2,[3,3,5])"])
def test_associativity_and_inverse_laws(name):
    g = Group(corpus.get(name))
    rng = np.random.default_rng(7)
    vecs = rng.integers(0, g.q, size=(3, 400, g.n), dtype=np.int64)
    for xv, yv, zv in zip(*vecs):
        x, y, z = g.element(xv), g.element(yv), g.element(zv)
        assert (x * y) * z == x * (y * z)
        assert (x * x.inverse()).is_identity()
        assert (x.inverse() * x).is_identity()
        assert ((x * y).inverse()) == y.inverse() * x.inverse()


@pytest.mark.parametrize("name", ["example1(3)", "example1(5)", "abelian(3,[3,2])",
                                  "family(2,2,2,3,2)"])
def test_all_elements_is_a_bijection(name):
    g = Group(corpus.get(name))
    mat = g.all_elements()
    assert mat.shape == (g.order, g.n)
    assert ((mat >= 0) & (mat < g.q)).all()
    assert len({tuple(r) for r in mat}) == g.order


def test_element_reduces_arbitrary_exponents():
    g = Group(corpus.example1(3))
    a, b, c = g.generators()
    assert g.element([4, -1, 11]) == (a ** 4) * (b ** -1) * (c ** 11)
    assert g.element([0, 0, 9]).is_identity()
    assert g.element([3, 0, 0]).is_identity()


def test_evaluate_words_and_negative_exponents():
    g = Group(corpus.example1(3))
    a, b, c = g.generators()
    assert g.evaluate(word((2, 1), (1, 1))) == b * a
    assert g.evaluate(word((1, -2))) == (a ** -2) == (a.inverse() ** 2)
    assert g.evaluate(Word()) == g.identity
    assert g.normal_form(word((2, 1), (1, 1))) == g.evaluate(word((2, 1), (1, 1)))


def test_powers_match_repeated_multiplication():
    g = Group(corpus.example2())
    rng = np.random.default_rng(11)
    for v in rng.integers(0, g.q, size=(20, g.n), dtype=np.int64):
        x = g.element(v)
        acc = g.identity
        for k in range(8):
            assert x ** k == acc
            assert x ** (-k) == acc.inverse()
            acc = acc * x


def test_orders_divide_group_order():
    g = Group(corpus.get("family(3,2,2,3,1)"))
    rng = np.random.default_rng(13)
    for v in rng.integers(0, g.q, size=(40, g.n), dtype=np.int64):
        x = g.element(v)
        t = x.order_log()
        assert (x ** (3 ** t)).is_identity()
        assert t == 0 or not (x ** (3 ** (t - 1))).is_identity()


def test_batch_ops_match_scalar_ops():
    g = Group(corpus.example2())
    rng = np.random.default_rng(17)
    mat = rng.integers(0, g.q, size=(64, g.n), dtype=np.int64)
    logs = g.orders_log_batch(mat)
    cubes = g.pows_batch(mat, 4)
    for row, t, cu in zip(mat, logs, cubes):
        x = g.element(row)
        assert t == x.order_log()
        assert tuple(cu) == (x ** 4).to_tuple()


def test_order_properties():
    g = Group(corpus.example2())
    assert g.order == 2 ** 11
    assert g.order_log_total == 11
    assert Group(corpus.abelian(5, [2, 2])).order == 5 ** 4


def test_conjugate_and_commutator_identities():
    g = Group(corpus.example2_odd(3))
    rng = np.random.default_rng(19)
    for v, w in zip(rng.integers(0, g.q, size=(15, g.n), dtype=np.int64),
                    rng.integers(0, g.q, size=(15, g.n), dtype=np.int64)):
        x, y = g.element(v), g.element(w)
        assert g.conjugate(x, y) == y.inverse() * x * y
        assert g.commutator(x, y) == x.inverse() * y.inverse() * x * y
        assert g.commutator(x, y).inverse() == g.commutator(y, x)


def test_step_budget_is_enforced():
    g = Group(corpus.example2(), max_steps=3)
    x = g.element([7, 7, 31])
    with pytest.raises(BudgetError):
        x ** (10 ** 6)


def test_trivial_group():
    g = Group(PcPresentation(3, [], []))
    assert g.order == 1
    assert g.identity.is_identity()
    assert g.all_elements().shape == (1, 0)
