import pytest

from pcgroups import corpus
from pcgroups.collector import Group


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # touch every kernel once so compile/load time stays out of timed tests
    g = Group(corpus.example1(3))
    from pcgroups import properties as props
    from pcgroups import subgroup as sg
    from pcgroups.consistency import check_consistency

    check_consistency(g)
    H = sg.whole(g)
    sg.omega(sg.agemo(H, 1), 1)
    sg.central_preimage(H, sg.derived_subgroup(H))
    props.pn_class(H)
    g.orders_log_batch(g.all_elements())
    g.pows_batch(g.all_elements()[:4], 3)


@pytest.fixture(scope="session")
def ex1_3():
    return Group(corpus.example1(3))


@pytest.fixture(scope="session")
def ex1_5():
    return Group(corpus.example1(5))


@pytest.fixture(scope="session")
def ex2():
    return Group(corpus.example2())


@pytest.fixture(scope="session")
def ex2_odd3():
    return Group(corpus.example2_odd(3))
