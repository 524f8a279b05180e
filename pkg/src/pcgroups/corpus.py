"""Built-in presentation families used by the tests and the verification
suite.  Constructors return consistency-checked presentations; the
parametric family rejects inconsistent parameter tuples with the failing
overlap as witness."""

from __future__ import annotations

from .consistency import assert_consistent, check_consistency
from .errors import InconsistentPresentationError, PreconditionError
from .presentation import PcPresentation, Word, is_prime


def _require_odd_prime(p: int):
    if not is_prime(p) or p == 2:
        raise PreconditionError(f"p = {p} must be an odd prime")


def example1(p: int) -> PcPresentation:
    """Order p^4: a, b of order p, c of order p^2, [b,a] = c^p, c central."""
    _require_odd_prime(p)
    return PcPresentation(
        p, ["a", "b", "c"], [1, 1, 2],
        comm_rels={(2, 1): Word(((3, p),))},
        name=f"example1({p})")


def example2() -> PcPresentation:
    """Order 2^11: a, b of order 8, c of order 32, [a,b] = c^4, c central.

    The stored [b,a] is c^28, the inverse of c^4."""
    q3 = 2 ** 5
    return PcPresentation(
        2, ["a", "b", "c"], [3, 3, 5],
        comm_rels={(2, 1): Word(((3, q3 - 2 ** 2),))},
        name="example2")


def example2_odd(p: int) -> PcPresentation:
    """Odd analog of example2: orders p^3, p^3, p^5 with [a,b] = c^{p^2}."""
    _require_odd_prime(p)
    q3 = p ** 5
    return PcPresentation(
        p, ["a", "b", "c"], [3, 3, 5],
        comm_rels={(2, 1): Word(((3, q3 - p ** 2),))},
        name=f"example2_odd({p})")


def abelian(p: int, partition) -> PcPresentation:
    """Direct product of cyclic groups of orders p^{partition[k]}."""
    if not is_prime(p):
        raise PreconditionError(f"p = {p} is not prime")
    parts = [int(m) for m in partition]
    if not parts or any(m < 1 for m in parts):
        raise PreconditionError("partition entries must be integers >= 1")
    names = [f"g{k+1}" for k in range(len(parts))]
    label = ",".join(str(m) for m in parts)
    return PcPresentation(p, names, parts, name=f"abelian({p},[{label}])")


def family(p: int, alpha: int, beta: int, gamma: int, delta: int) -> PcPresentation:
    """Three generators of orders p^alpha, p^beta, p^gamma with c central
    and [a,b] = c^{p^delta}.

    The tuple is consistent iff delta + min(alpha, beta) >= gamma; the
    constructor runs the overlap checks and rejects bad tuples rather than
    encoding that inequality.
    """
    if not is_prime(p):
        raise PreconditionError(f"p = {p} is not prime")
    for v, nm in ((alpha, "alpha"), (beta, "beta"), (gamma, "gamma")):
        if v < 1:
            raise PreconditionError(f"{nm} must be >= 1")
    if not (0 <= delta <= gamma):
        raise PreconditionError("delta must satisfy 0 <= delta <= gamma")
    qc = p ** gamma
    exp = (qc - p ** delta) % qc
    comm = {(2, 1): Word(((3, exp),))} if exp else {}
    P = PcPresentation(p, ["a", "b", "c"], [alpha, beta, gamma], comm_rels=comm,
                       name=f"family({p},{alpha},{beta},{gamma},{delta})")
    rep = check_consistency(P)
    if rep.status != "pass":
        raise InconsistentPresentationError(
            f"{P.name} is inconsistent: {rep.notes[0] if rep.notes else 'overlap failure'}",
            rep)
    return P


def standard_corpus() -> list[PcPresentation]:
    """The fixed group collection exercised by the verification suites.

    Every entry fits the default element budget; the largest members have
    order 3^11 and 2^11.
    """
    entries = [
        example1(3),
        example1(5),
        example2(),
        example2_odd(3),
        abelian(3, [1]),
        abelian(3, [2, 2]),
        abelian(3, [3, 2]),
        abelian(5, [2, 2]),
        abelian(2, [3, 3, 5]),
        abelian(2, [2, 1]),
        family(3, 2, 2, 3, 1),
        family(3, 1, 1, 2, 1),
        family(5, 1, 1, 2, 1),
        family(3, 2, 2, 4, 2),
        family(2, 2, 2, 3, 2),
    ]
    return entries


def corpus_names() -> list[str]:
    return [P.name for P in standard_corpus()]


def get(name: str) -> PcPresentation:
    for P in standard_corpus():
        if P.name == name:
            return P
    raise PreconditionError(f"unknown corpus entry {name!r}")


def verified_group(P: PcPresentation, **kw):
    """Group for P after passing the overlap checks."""
    from .collector import Group

    return assert_consistent(Group(P, **kw))
