"""Group-theoretic predicates and invariants for subgroups: powerful,
strongly powerful, the greedy powerfully central series and the resulting
nilpotency class, rank via the Frattini quotient, and chain verification.

The greedy series Z_0 = 1, Z_k = {x : [x, H] <= Z_{k-1}^p} dominates every
powerfully central chain term by term, so its length equals the minimal
chain length whenever one exists.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import subgroup as sg
from .errors import PreconditionError
from .report import FAIL, PASS, CheckReport
from .subgroup import Chain, Subgroup, _comm_vec

NOT_POWERFULLY_NILPOTENT = None


def is_powerful(H: Subgroup) -> bool:
    """H' <= H^p for odd p; H' <= H^4 for p = 2."""
    need = 2 if H.group.p == 2 else 1
    return sg.derived_subgroup(H).leq(sg.agemo(H, need))


def is_strongly_powerful(H: Subgroup) -> bool:
    """H' <= H^{p^2}."""
    return sg.derived_subgroup(H).leq(sg.agemo(H, 2))


def upper_powerfully_central_series(H: Subgroup) -> Chain:
    """Ascending greedy series; stops at H or at the first repeat."""
    hit = H._cache.get("upcs")
    if hit is not None:
        return hit
    terms = [sg.trivial(H.group)]
    while True:
        prev = terms[-1]
        nxt = sg.central_preimage(H, sg.agemo(prev, 1))
        if nxt.order == prev.order:
            break
        terms.append(nxt)
        if nxt.order == H.order:
            break
    chain = Chain(terms, descending=False)
    H._cache["upcs"] = chain
    return chain


def pn_class(H: Subgroup):
    """Minimal powerfully central chain length, or None when H is not
    powerfully nilpotent.  The trivial group has class 0.  For p = 2 the
    defining chain requires a powerful group, so that is checked first;
    for odd p a successful chain implies powerful on its own."""
    if H.is_trivial():
        return 0
    if H.group.p == 2 and not is_powerful(H):
        return NOT_POWERFULLY_NILPOTENT
    series = upper_powerfully_central_series(H)
    if series.terms[-1].order != H.order:
        return NOT_POWERFULLY_NILPOTENT
    return series.length


def is_powerfully_nilpotent(H: Subgroup) -> bool:
    return pn_class(H) is not None


def coclass(H: Subgroup):
    c = pn_class(H)
    if c is None:
        return None
    return H.order_log - c


def rank(H: Subgroup) -> int:
    """log_p of the Frattini quotient: minimal generator count; 0 for the
    trivial group."""
    if H.is_trivial():
        return 0
    frattini_gens = np.vstack([sg.agemo(H, 1).igs.reshape(-1, H.group.n),
                               sg.derived_subgroup(H).igs.reshape(-1, H.group.n)])
    frat = sg.close(H.group, [row for row in frattini_gens])
    return H.order_log - frat.order_log


@dataclass
class GroupProfile:
    order_log: int
    exponent_log: int
    rank: int
    powerful: bool
    strongly_powerful: bool
    pn_class: int | None
    coclass: int | None

    def to_dict(self):
        return {
            "order_log": self.order_log,
            "exponent_log": self.exponent_log,
            "rank": self.rank,
            "powerful": self.powerful,
            "strongly_powerful": self.strongly_powerful,
            "pn_class": self.pn_class,
            "coclass": self.coclass,
        }


def profile(H: Subgroup) -> GroupProfile:
    c = pn_class(H)
    return GroupProfile(
        order_log=H.order_log,
        exponent_log=H.exponent_log(),
        rank=rank(H),
        powerful=is_powerful(H),
        strongly_powerful=is_strongly_powerful(H),
        pn_class=c,
        coclass=None if c is None else H.order_log - c,
    )


def verify_chain(H: Subgroup, chain, descending: bool | None = None) -> CheckReport:
    """Check that chain is a powerfully central chain for H: endpoints H
    and 1, nested terms, and [T_k, H] <= T_{k+1}^p at every step.

    Witness layout on failure: [step index, commutator exponents...] for a
    commutator escaping the next term's p-th powers; endpoint and nesting
    defects carry the offending index alone.
    """
    t0 = time.perf_counter()
    if isinstance(chain, Chain):
        terms = list(chain.terms)
        if descending is None:
            descending = chain.descending
    else:
        terms = list(chain)
        if descending is None:
            descending = True
    if not descending:
        terms = terms[::-1]
    g = H.group
    rep = CheckReport("chain", params={"terms": len(terms)})
    rep.tested = len(terms)

    def fail(idx, note, comm=None):
        rep.status = FAIL
        if comm is None:
            rep.add_witness([idx])
        else:
            rep.add_witness([idx], comm)
        rep.notes.append(note)

    if not terms[0].equal(H):
        fail(0, "chain does not start at the target subgroup")
    if not terms[-1].is_trivial():
        fail(len(terms) - 1, "chain does not end at the trivial subgroup")
    for k in range(len(terms) - 1):
        if not terms[k + 1].leq(terms[k]):
            fail(k, f"term {k+1} is not contained in term {k}")
    if rep.status == PASS:
        for k in range(len(terms) - 1):
            lower_p = sg.agemo(terms[k + 1], 1)
            top = terms[k]
            done = False
            for r in range(top.igs.shape[0]):
                for s in range(H.igs.shape[0]):
                    cv = _comm_vec(g, top.igs[r], H.igs[s])
                    if not lower_p.contains(cv):
                        fail(k, f"[term {k}, H] escapes term {k+1}^p", cv)
                        done = True
                        break
                if done:
                    break
            if not done:
                # generator commutators inside lower_p imply [T_k, H] <= lower_p
                # only after closing; confirm on the full commutator subgroup
                if not sg.commutator_subgroup(top, H).leq(lower_p):
                    fail(k, f"[term {k}, H] escapes term {k+1}^p after closure")
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep
