"""Overlap tests deciding whether a presentation's normal forms are unique.

A weighted power-commutator presentation is consistent exactly when the
finitely many overlap identities below collect to equal normal forms; then
the group order equals candidate_order.  Products are evaluated with the
collector in the forced association order, powers by repeated
multiplication.
"""

from __future__ import annotations

import time

from .collector import Group
from .errors import InconsistentPresentationError
from .presentation import PcPresentation
from .report import FAIL, PASS, CheckReport

# witness layout: [code, k, j, i, lhs exponents..., rhs exponents...]
OVERLAP_ASSOC = 0      # g_k (g_j g_i) = (g_k g_j) g_i,  k > j > i
OVERLAP_POWER_LEFT = 1    # g_j^{q_j} g_i = g_j^{q_j-1} (g_j g_i),  j > i
OVERLAP_POWER_RIGHT = 2   # g_j g_i^{q_i} = (g_j g_i) g_i^{q_i-1},  j > i
OVERLAP_POWER_SELF = 3    # g_i g_i^{q_i} = g_i^{q_i} g_i

_CODE_NAMES = {
    OVERLAP_ASSOC: "associativity",
    OVERLAP_POWER_LEFT: "left power",
    OVERLAP_POWER_RIGHT: "right power",
    OVERLAP_POWER_SELF: "self power",
}


def _rep_pow(grp, g, e):
    """g^e by repeated right multiplication; e >= 0."""
    acc = grp.identity
    for _ in range(e):
        acc = acc * g
    return acc


def check_consistency(P, max_failures: int = 10, max_steps: int | None = None) -> CheckReport:
    """Evaluate every overlap identity; report pass or the first failures.

    Accepts a PcPresentation or an existing Group.  Overlaps are scanned in
    sorted (code, k, j, i) order, so the report is deterministic.
    """
    t0 = time.perf_counter()
    if isinstance(P, Group):
        grp = P
        pres = P.presentation
    else:
        pres = P
        grp = Group(P) if max_steps is None else Group(P, max_steps=max_steps)
    n = grp.n
    g = [None] + grp.generators()  # 1-based
    rep = CheckReport("consistency", params={"n": n})
    tested = 0

    def record(code, k, j, i, lhs, rhs):
        if lhs != rhs:
            rep.status = FAIL
            if len(rep.witnesses) < max_failures:
                rep.add_witness([code, k, j, i], lhs.vec, rhs.vec)
                rep.notes.append(
                    f"{_CODE_NAMES[code]} overlap (k={k}, j={j}, i={i}): "
                    f"{lhs!r} != {rhs!r}")

    for k in range(3, n + 1):
        for j in range(2, k):
            for i in range(1, j):
                lhs = g[k] * (g[j] * g[i])
                rhs = (g[k] * g[j]) * g[i]
                tested += 1
                record(OVERLAP_ASSOC, k, j, i, lhs, rhs)
    for j in range(2, n + 1):
        qj = pres.q(j)
        for i in range(1, j):
            lhs = _rep_pow(grp, g[j], qj - 1) * g[j] * g[i]
            rhs = _rep_pow(grp, g[j], qj - 1) * (g[j] * g[i])
            tested += 1
            record(OVERLAP_POWER_LEFT, 0, j, i, lhs, rhs)
    for j in range(2, n + 1):
        for i in range(1, j):
            qi = pres.q(i)
            lhs = g[j] * _rep_pow(grp, g[i], qi)
            rhs = (g[j] * g[i]) * _rep_pow(grp, g[i], qi - 1)
            tested += 1
            record(OVERLAP_POWER_RIGHT, 0, j, i, lhs, rhs)
    for i in range(1, n + 1):
        qi = pres.q(i)
        lhs = g[i] * _rep_pow(grp, g[i], qi)
        rhs = _rep_pow(grp, g[i], qi) * g[i]
        tested += 1
        record(OVERLAP_POWER_SELF, 0, 0, i, lhs, rhs)

    rep.tested = tested
    rep.ms = (time.perf_counter() - t0) * 1000.0
    if rep.status == PASS:
        rep.notes.append(f"all {tested} overlaps collect consistently")
    return rep


def assert_consistent(P, max_steps: int | None = None) -> Group:
    """Build a Group and raise InconsistentPresentationError on any failing
    overlap; returns the verified Group."""
    grp = P if isinstance(P, Group) else (
        Group(P) if max_steps is None else Group(P, max_steps=max_steps))
    rep = check_consistency(grp)
    if rep.status != PASS:
        name = grp.presentation.name or "presentation"
        detail = rep.notes[0] if rep.notes else "overlap failure"
        raise InconsistentPresentationError(f"{name} is inconsistent: {detail}", rep)
    return grp
