"""Verification harness for the structural laws of omega subgroups of
agemo subgroups in powerful groups.

Each check scans a quantified statement over a group and returns a
CheckReport.  Pair quantifiers run exhaustively when the ambient order is
at most 2^12 and otherwise draw a seeded uniform sample; the mode used is
recorded in the report params.  Witnesses are flat integer rows; each
check documents its row layout.  "tested" counts checked instances
(pairs for pair scans, parameter tuples for subgroup-level checks).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from . import properties as props
from . import subgroup as sg
from .collector import Group
from .consistency import check_consistency
from .errors import PreconditionError
from .presentation import PcPresentation
from .report import EXPECTED_FAIL, FAIL, PASS, SKIPPED, CheckReport

EXHAUSTIVE_LIMIT = 1 << 12
DEFAULT_SAMPLE = 10_000
MAX_WITNESSES = 10

SUITES = ("consistency", "thm1", "lemma-p", "prop", "shorten", "chain", "main")


@dataclass
class VerifyConfig:
    """Quantifier ranges and scan policy for the verification checks."""

    i_max: int = 4
    j_max: int = 4
    k_max: int = 4
    mode: str = "auto"  # auto | exhaustive | sample
    sample_size: int = DEFAULT_SAMPLE
    seed: int = 0
    max_witnesses: int = MAX_WITNESSES


def _cfg(config) -> VerifyConfig:
    if config is None:
        return VerifyConfig()
    if not isinstance(config, VerifyConfig):
        raise PreconditionError("config must be a VerifyConfig")
    if config.mode not in ("auto", "exhaustive", "sample"):
        raise PreconditionError(f"unknown scan mode {config.mode!r}")
    return config


def _as_group(G) -> Group:
    if isinstance(G, Group):
        return G
    if isinstance(G, PcPresentation):
        return Group(G)
    raise PreconditionError("expected a Group or PcPresentation")


class _Ctx:
    """Per-run cache of derived subgroups keyed by how they are built.

    Expressions are nested tuples: ("whole",), ("trivial",),
    ("agemo", expr, j), ("omega", expr, i), ("comm", expr, expr).
    """

    def __init__(self, group: Group):
        self.group = group
        self._memo = {}
        self._olog = {}

    def sub(self, expr) -> sg.Subgroup:
        if expr in self._memo:
            return self._memo[expr]
        op = expr[0]
        if op == "whole":
            val = sg.whole(self.group)
        elif op == "trivial":
            val = sg.trivial(self.group)
        elif op == "agemo":
            j = expr[2]
            if j == 0:
                val = self.sub(expr[1])
            elif int(self.ologs(expr[1]).max(initial=0)) <= j:
                val = self.sub(("trivial",))
            else:
                val = sg.agemo(self.sub(expr[1]), j)
        elif op == "omega":
            i = expr[2]
            if i < 0:
                val = self.sub(("trivial",))
            else:
                val = sg.omega(self.sub(expr[1]), i, ologs=self.ologs(expr[1]))
        elif op == "comm":
            val = sg.commutator_subgroup(self.sub(expr[1]), self.sub(expr[2]))
        else:
            raise ValueError(f"unknown subgroup expression {expr!r}")
        self._memo[expr] = val
        return val

    def ologs(self, expr) -> np.ndarray:
        if expr not in self._olog:
            H = self.sub(expr)
            self._olog[expr] = self.group.orders_log_batch(H.elements())
        return self._olog[expr]


def _require_powerful(ctx: _Ctx):
    if not props.is_powerful(ctx.sub(("whole",))):
        raise PreconditionError("ambient group is not powerful")


def _pair_mode(group: Group, cfg: VerifyConfig) -> str:
    if cfg.mode != "auto":
        return cfg.mode
    return "exhaustive" if group.order <= EXHAUSTIVE_LIMIT else "sample"


def _mode_params(rep: CheckReport, mode: str, cfg: VerifyConfig):
    rep.params["mode"] = mode
    if mode == "sample":
        rep.params["sample"] = cfg.sample_size
        rep.params["seed"] = cfg.seed


def _record(rep: CheckReport, cfg: VerifyConfig, note: str, *parts):
    rep.status = FAIL
    if len(rep.witnesses) < cfg.max_witnesses:
        rep.add_witness(*parts)
        rep.notes.append(note)


def _comm_block(g: Group, A, r, B, s0, block):
    g._check(kernels._comm_rows(A, r, B, s0, block, g.tab, g._stack, g._scr,
                                g.max_steps))


def _sample_elements(g: Group, rng, count: int) -> np.ndarray:
    """Uniform normal forms: independent uniform digits in each slot."""
    return rng.integers(0, g.q, size=(count, g.n), dtype=np.int64)


def _first_escaper(H: sg.Subgroup, K: sg.Subgroup):
    """First echelon row of H outside K, or None."""
    for r in range(H.igs.shape[0]):
        if not K.contains(H.igs[r]):
            return H.igs[r]
    return None


def _first_order_breaker(H: sg.Subgroup, bound_log: int):
    ologs = H.group.orders_log_batch(H.elements())
    idx = np.nonzero(ologs > bound_log)[0]
    if idx.size == 0:
        return None
    return H.elements()[idx[0]]


# -- commutator-order and omega-exponent laws --------------------------------


def check_thm1(G, config=None) -> CheckReport:
    """Order laws for commutators and omega subgroups of a powerful group.

    part 1: o([x,y]) <= min(o(x), o(y)) for all x, y;
    part 2: o([x^{p^j}, y^{p^k}]) <= p^max(i-j-k,0) with
            i = max(olog(x)-1, olog(y)), for all x, y and j, k >= 0;
    part 3 (odd p): exp(omega(G, i)) <= p^i for all i >= 0;
    part 4 (p = 2): exp(omega(agemo(G,1), i)) <= 2^i for all i >= 0.

    Witness rows: [part, j, k, x..., y...] for pair parts, with j = k = 0
    in part 1; [part, i, 0, x...] for exponent parts.
    """
    ctx = _Ctx(_as_group(G))
    _require_powerful(ctx)
    return _check_thm1(ctx, _cfg(config))


def _check_thm1(ctx: _Ctx, cfg: VerifyConfig) -> CheckReport:
    t0 = time.perf_counter()
    g = ctx.group
    W = ("whole",)
    mode = _pair_mode(g, cfg)
    rep = CheckReport("thm1")
    _mode_params(rep, mode, cfg)

    ologs = ctx.ologs(W)
    e = int(ologs.max(initial=0))
    jk_max = min(cfg.j_max, e)

    if mode == "exhaustive":
        mat = ctx.sub(W).elements()
        N = mat.shape[0]
        block = np.zeros((max(N, 1), g.n), np.int64)
        for r in range(N):
            cnt = N - r
            _comm_block(g, mat, r, mat, r, block[:cnt])
            oc = g.orders_log_batch(block[:cnt])
            bad = np.nonzero(oc > np.minimum(int(ologs[r]), ologs[r:]))[0]
            for b in bad:
                _record(rep, cfg, "part 1 pair", [1, 0, 0], mat[r], mat[r + b])
            rep.tested += cnt
        # power images with the minimal preimage order decide every
        # (x, y, j, k) instance at once; (j, k) = (0, 0) is implied by part 1
        uni, minlog = [], []
        for j in range(jk_max + 1):
            pw = mat if j == 0 else g.pows_batch(mat, g.p ** j)
            u, inv = np.unique(pw, axis=0, return_inverse=True)
            ml = np.full(u.shape[0], 127, np.int64)
            np.minimum.at(ml, inv, ologs.astype(np.int64))
            uni.append(u)
            minlog.append(ml)
        for j in range(jk_max + 1):
            for k in range(jk_max + 1):
                if j == 0 and k == 0:
                    continue
                U, mu = uni[j], minlog[j]
                V, mv = uni[k], minlog[k]
                vb = np.zeros((V.shape[0], g.n), np.int64)
                for r in range(U.shape[0]):
                    _comm_block(g, U, r, V, 0, vb)
                    oc = g.orders_log_batch(vb)
                    req = np.maximum(np.maximum(int(mu[r]) - 1, mv) - j - k, 0)
                    bad = np.nonzero(oc > req)[0]
                    for b in bad:
                        _record(rep, cfg, "part 2 pair", [2, j, k], U[r], V[b])
                    rep.tested += V.shape[0]
    else:
        rng = np.random.default_rng(cfg.seed)
        S = cfg.sample_size
        xs = _sample_elements(g, rng, S)
        ys = _sample_elements(g, rng, S)
        ox = g.orders_log_batch(xs)
        oy = g.orders_log_batch(ys)
        idx = np.arange(S, dtype=np.int64)
        comms = np.zeros((S, g.n), np.int64)
        g._check(kernels._comm_pairs(xs, idx, ys, idx, comms, g.tab, g._stack,
                                     g._scr, g.max_steps))
        oc = g.orders_log_batch(comms)
        for b in np.nonzero(oc > np.minimum(ox, oy))[0]:
            _record(rep, cfg, "part 1 pair", [1, 0, 0], xs[b], ys[b])
        rep.tested += S
        xpow = {0: xs}
        ypow = {0: ys}
        for j in range(1, jk_max + 1):
            xpow[j] = g.pows_batch(xs, g.p ** j)
            ypow[j] = g.pows_batch(ys, g.p ** j)
        i0 = np.maximum(ox.astype(np.int64) - 1, oy.astype(np.int64))
        for j in range(jk_max + 1):
            for k in range(jk_max + 1):
                if j == 0 and k == 0:
                    continue
                g._check(kernels._comm_pairs(xpow[j], idx, ypow[k], idx, comms,
                                             g.tab, g._stack, g._scr, g.max_steps))
                oc = g.orders_log_batch(comms)
                req = np.maximum(i0 - j - k, 0)
                for b in np.nonzero(oc > req)[0]:
                    _record(rep, cfg, "part 2 pair", [2, j, k], xs[b], ys[b])
                rep.tested += S

    if g.p != 2:
        for i in range(e + 1):
            Om = ctx.sub(("omega", W, i))
            if Om.exponent_log() > i:
                x = _first_order_breaker(Om, i)
                _record(rep, cfg, f"part 3 exponent at i={i}", [3, i, 0], x)
            rep.tested += 1
    else:
        H1 = ("agemo", W, 1)
        e1 = int(ctx.ologs(H1).max(initial=0))
        for i in range(e1 + 1):
            Om = ctx.sub(("omega", H1, i))
            if Om.exponent_log() > i:
                x = _first_order_breaker(Om, i)
                _record(rep, cfg, f"part 4 exponent at i={i}", [4, i, 0], x)
            rep.tested += 1

    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


# -- order-p commuting law ---------------------------------------------------


def check_order_p_lemma(G, config=None) -> CheckReport:
    """Inside the subgroup of p-th powers, every element of order p
    commutes with every element of order at most p^2; consequently the
    omega-1 subgroup there is abelian.

    Witness rows: [0, x..., y...] for a non-commuting pair,
    [1, z...] for a nontrivial commutator in the omega-1 subgroup.
    """
    ctx = _Ctx(_as_group(G))
    _require_powerful(ctx)
    return _check_order_p_lemma(ctx, _cfg(config))


def _check_order_p_lemma(ctx: _Ctx, cfg: VerifyConfig) -> CheckReport:
    t0 = time.perf_counter()
    g = ctx.group
    Hx = ("agemo", ("whole",), 1)
    H = ctx.sub(Hx)
    mat = H.elements()
    ologs = ctx.ologs(Hx)
    S1 = mat[ologs == 1]
    S2 = mat[ologs <= 2]
    npairs = S1.shape[0] * S2.shape[0]

    rep = CheckReport("lemma_order_p")
    mode = _pair_mode(g, cfg)
    if npairs <= cfg.sample_size:
        mode = "exhaustive"
    _mode_params(rep, mode, cfg)

    if mode == "exhaustive":
        if npairs:
            block = np.zeros((S2.shape[0], g.n), np.int64)
            for r in range(S1.shape[0]):
                _comm_block(g, S1, r, S2, 0, block)
                for b in np.nonzero(block.any(axis=1))[0]:
                    _record(rep, cfg, "non-commuting pair", [0], S1[r], S2[b])
                rep.tested += S2.shape[0]
    else:
        rng = np.random.default_rng(cfg.seed)
        S = cfg.sample_size
        ia = rng.integers(0, S1.shape[0], size=S, dtype=np.int64)
        ib = rng.integers(0, S2.shape[0], size=S, dtype=np.int64)
        comms = np.zeros((S, g.n), np.int64)
        g._check(kernels._comm_pairs(S1, ia, S2, ib, comms, g.tab, g._stack,
                                     g._scr, g.max_steps))
        for b in np.nonzero(comms.any(axis=1))[0]:
            _record(rep, cfg, "non-commuting pair", [0], S1[ia[b]], S2[ib[b]])
        rep.tested += S

    Om1 = ctx.sub(("omega", Hx, 1))
    der = sg.derived_subgroup(Om1)
    if not der.is_trivial():
        _record(rep, cfg, "omega-1 subgroup is not abelian", [1], der.igs[0])
    rep.tested += 1

    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


# -- power inclusion law -----------------------------------------------------


def check_power_inclusion(G, i_max=None, j_max=None, k_max=None,
                          config=None) -> CheckReport:
    """For 0 <= i <= i_max, 0 <= j <= j_max, 1 <= k <= k_max, the p^j-th
    powers of omega(agemo(G,k), i) lie in omega(agemo(G,k+j), i-j) and
    have exponent at most p^max(i-j,0).

    Witness rows: [i, j, k, x...] with x either an escaping generator row
    or an element of too-large order.
    """
    cfg = _cfg(config)
    ctx = _Ctx(_as_group(G))
    _require_powerful(ctx)
    return _check_power_inclusion(ctx, cfg, i_max, j_max, k_max)


def _check_power_inclusion(ctx: _Ctx, cfg: VerifyConfig, i_max=None,
                           j_max=None, k_max=None) -> CheckReport:
    t0 = time.perf_counter()
    i_max = cfg.i_max if i_max is None else i_max
    j_max = cfg.j_max if j_max is None else j_max
    k_max = cfg.k_max if k_max is None else k_max
    W = ("whole",)
    rep = CheckReport("power_inclusion",
                      params={"i_max": i_max, "j_max": j_max, "k_max": k_max})
    for k in range(1, k_max + 1):
        for i in range(i_max + 1):
            Ax = ("omega", ("agemo", W, k), i)
            for j in range(j_max + 1):
                L = ctx.sub(("agemo", Ax, j))
                R = ctx.sub(("omega", ("agemo", W, k + j), i - j))
                if not L.leq(R):
                    x = _first_escaper(L, R)
                    _record(rep, cfg, f"inclusion fails at i={i} j={j} k={k}",
                            [i, j, k], x)
                elif L.exponent_log() > max(i - j, 0):
                    x = _first_order_breaker(L, max(i - j, 0))
                    _record(rep, cfg, f"exponent fails at i={i} j={j} k={k}",
                            [i, j, k], x)
                rep.tested += 1
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


# -- commutator shortening law ----------------------------------------------


def check_shortening_lemma(G, i_max=None, j_max=None, config=None) -> CheckReport:
    """For odd p, 1 <= i <= i_max, 0 <= j <= j_max:
    [agemo(O2, j), O1] <= agemo(O2, j+2), where O1 = omega(agemo(G,1), i)
    and O2 = omega(agemo(G,2), i).

    Witness rows: [i, j, x...] with x an escaping generator row.
    """
    cfg = _cfg(config)
    g = _as_group(G)
    if g.p == 2:
        raise PreconditionError("the shortening law needs an odd prime")
    ctx = _Ctx(g)
    _require_powerful(ctx)
    return _check_shortening_lemma(ctx, cfg, i_max, j_max)


def _check_shortening_lemma(ctx: _Ctx, cfg: VerifyConfig, i_max=None,
                            j_max=None) -> CheckReport:
    t0 = time.perf_counter()
    i_max = cfg.i_max if i_max is None else i_max
    j_max = cfg.j_max if j_max is None else j_max
    W = ("whole",)
    rep = CheckReport("shortening", params={"i_max": i_max, "j_max": j_max})
    for i in range(1, i_max + 1):
        O1 = ("omega", ("agemo", W, 1), i)
        O2 = ("omega", ("agemo", W, 2), i)
        for j in range(j_max + 1):
            L = ctx.sub(("comm", ("agemo", O2, j), O1))
            R = ctx.sub(("agemo", O2, j + 2))
            if not L.leq(R):
                x = _first_escaper(L, R)
                _record(rep, cfg, f"shortening fails at i={i} j={j}", [i, j], x)
            rep.tested += 1
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


# -- descending chain construction ------------------------------------------


def build_theorem3_chain(G, i: int) -> sg.Chain:
    """Descending chain witnessing the class bound for omega(agemo(G,1), i)
    over an odd prime: the top term, then the p^t-th powers of
    omega(agemo(G,2), i) for t = 0..i-2, then the trivial subgroup, with
    adjacent equal terms merged.  The result has at most i steps."""
    g = _as_group(G)
    if g.p == 2:
        raise PreconditionError("the chain construction needs an odd prime")
    if i < 1:
        raise PreconditionError("chain index must be >= 1")
    ctx = _Ctx(g)
    _require_powerful(ctx)
    return _chain(ctx, i)


def _chain(ctx: _Ctx, i: int) -> sg.Chain:
    W = ("whole",)
    terms = [ctx.sub(("omega", ("agemo", W, 1), i))]
    if i >= 2:
        O2 = ("omega", ("agemo", W, 2), i)
        for t in range(i - 1):
            terms.append(ctx.sub(("agemo", O2, t)))
    terms.append(ctx.sub(("trivial",)))
    out = [terms[0]]
    for T in terms[1:]:
        if T.order != out[-1].order or not T.equal(out[-1]):
            out.append(T)
    return sg.Chain(out, descending=True)


def check_theorem3_chain(G, i: int, config=None) -> CheckReport:
    """Build the descending chain and verify it is powerfully central for
    its top term, with at most i steps."""
    cfg = _cfg(config)
    g = _as_group(G)
    if g.p == 2:
        raise PreconditionError("the chain construction needs an odd prime")
    ctx = _Ctx(g)
    _require_powerful(ctx)
    return _check_theorem3_chain(ctx, cfg, i)


def _check_theorem3_chain(ctx: _Ctx, cfg: VerifyConfig, i: int) -> CheckReport:
    t0 = time.perf_counter()
    chain = _chain(ctx, i)
    rep = props.verify_chain(chain.terms[0], chain)
    rep.name = "theorem3_chain"
    rep.params = {"i": i, "terms": len(chain.terms)}
    if chain.length > i:
        rep.status = FAIL
        rep.add_witness([i, chain.length])
        rep.notes.append(f"chain has {chain.length} steps, more than i={i}")
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


# -- nilpotency class bounds -------------------------------------------------


def verify_main_odd(G, i_max=None, j_max=None, config=None) -> CheckReport:
    """For odd p and 1 <= i <= i_max, 1 <= j <= j_max, the subgroup
    omega(agemo(G,j), i) is powerful and powerfully nilpotent of class at
    most i.  params["attained"] lists [i, j, class] triples where the
    bound is met exactly.

    Witness rows: [i, j, c] with c the computed class or -1 if undefined.
    """
    cfg = _cfg(config)
    g = _as_group(G)
    if g.p == 2:
        raise PreconditionError("the odd-prime class bound needs an odd prime")
    ctx = _Ctx(g)
    _require_powerful(ctx)
    return _verify_main_odd(ctx, cfg, i_max, j_max)


def _verify_main_odd(ctx: _Ctx, cfg: VerifyConfig, i_max=None,
                     j_max=None) -> CheckReport:
    t0 = time.perf_counter()
    i_max = cfg.i_max if i_max is None else i_max
    j_max = cfg.j_max if j_max is None else j_max
    W = ("whole",)
    rep = CheckReport("main_odd", params={"i_max": i_max, "j_max": j_max})
    attained = []
    for i in range(1, i_max + 1):
        for j in range(1, j_max + 1):
            H = ctx.sub(("omega", ("agemo", W, j), i))
            c = props.pn_class(H)
            if c is None:
                _record(rep, cfg, f"not powerfully nilpotent at i={i} j={j}",
                        [i, j, -1])
            elif c > i:
                _record(rep, cfg, f"class {c} exceeds {i} at i={i} j={j}",
                        [i, j, c])
            elif not props.is_powerful(H):
                _record(rep, cfg, f"not powerful at i={i} j={j}", [i, j, c])
            elif c == i:
                attained.append([i, j, c])
            rep.tested += 1
    rep.params["attained"] = attained
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


def verify_main_even(G, i_max=None, j_max=None, config=None) -> CheckReport:
    """For p = 2 and 1 <= i <= i_max, 2 <= j <= j_max, the subgroup
    omega(agemo(G,j), i) is powerfully nilpotent of class at most
    max(i-1, 1); trivial subgroups count as class 0 and are noted.

    Witness rows: [i, j, c] with c the computed class or -1 if undefined.
    """
    cfg = _cfg(config)
    g = _as_group(G)
    if g.p != 2:
        raise PreconditionError("the even-prime class bound needs p = 2")
    ctx = _Ctx(g)
    _require_powerful(ctx)
    return _verify_main_even(ctx, cfg, i_max, j_max)


def _verify_main_even(ctx: _Ctx, cfg: VerifyConfig, i_max=None,
                      j_max=None) -> CheckReport:
    t0 = time.perf_counter()
    i_max = cfg.i_max if i_max is None else i_max
    j_max = cfg.j_max if j_max is None else j_max
    W = ("whole",)
    rep = CheckReport("main_even", params={"i_max": i_max, "j_max": j_max})
    for i in range(1, i_max + 1):
        for j in range(2, j_max + 1):
            H = ctx.sub(("omega", ("agemo", W, j), i))
            c = props.pn_class(H)
            bound = max(i - 1, 1)
            if c is None:
                _record(rep, cfg, f"not powerfully nilpotent at i={i} j={j}",
                        [i, j, -1])
            elif c > bound:
                _record(rep, cfg, f"class {c} exceeds {bound} at i={i} j={j}",
                        [i, j, c])
            elif H.is_trivial():
                rep.notes.append(f"i={i} j={j}: trivial subgroup")
            rep.tested += 1
    rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


def even_negative_controls(G, i_max=None, config=None) -> list:
    """Reports, without asserting, whether omega(agemo(G,1), i) is
    powerful for p = 2; failures are expected and tagged as such."""
    cfg = _cfg(config)
    g = _as_group(G)
    if g.p != 2:
        raise PreconditionError("negative controls only apply to p = 2")
    ctx = _Ctx(g)
    _require_powerful(ctx)
    return _even_negative_controls(ctx, cfg, i_max)


def _even_negative_controls(ctx: _Ctx, cfg: VerifyConfig, i_max=None) -> list:
    i_max = cfg.i_max if i_max is None else i_max
    W = ("whole",)
    reports = []
    for i in range(1, i_max + 1):
        t0 = time.perf_counter()
        rep = CheckReport("even_negative_control", params={"i": i, "j": 1})
        H = ctx.sub(("omega", ("agemo", W, 1), i))
        pw = props.is_powerful(H)
        rep.params["powerful"] = bool(pw)
        rep.status = PASS if pw else EXPECTED_FAIL
        rep.notes.append(f"omega(agemo(G,1), {i}) is "
                         + ("powerful" if pw else "not powerful"))
        rep.tested = 1
        rep.ms = (time.perf_counter() - t0) * 1000.0
        reports.append(rep)
    return reports


# -- full suite --------------------------------------------------------------


def run_suite(G, config=None, suites=None) -> list:
    """All checks in a fixed order: consistency, the order laws, the
    order-p commuting law, power inclusion, the shortening law and chain
    constructions (odd p; skipped entries for p = 2), then the parity's
    class bound (with negative controls for p = 2).  Returns the list of
    CheckReports."""
    cfg = _cfg(config)
    g = _as_group(G)
    if suites is None:
        want = set(SUITES)
    else:
        want = set(suites)
        unknown = want - set(SUITES)
        if unknown:
            raise PreconditionError(f"unknown suite names: {sorted(unknown)}")
    ctx = _Ctx(g)
    reports = []
    if "consistency" in want:
        reports.append(check_consistency(g))
        if not reports[-1].ok:
            # nothing else is meaningful without unique normal forms
            return reports
    needs_powerful = want - {"consistency"}
    if needs_powerful:
        _require_powerful(ctx)
    if "thm1" in want:
        reports.append(_check_thm1(ctx, cfg))
    if "lemma-p" in want:
        reports.append(_check_order_p_lemma(ctx, cfg))
    if "prop" in want:
        reports.append(_check_power_inclusion(ctx, cfg))
    if "shorten" in want:
        if g.p == 2:
            reports.append(CheckReport("shortening", status=SKIPPED,
                                       notes=["odd primes only"]))
        else:
            reports.append(_check_shortening_lemma(ctx, cfg))
    if "chain" in want:
        if g.p == 2:
            reports.append(CheckReport("theorem3_chain", status=SKIPPED,
                                       notes=["odd primes only"]))
        else:
            for i in range(1, cfg.i_max + 1):
                reports.append(_check_theorem3_chain(ctx, cfg, i))
    if "main" in want:
        if g.p == 2:
            reports.append(_verify_main_even(ctx, cfg))
            reports.extend(_even_negative_controls(ctx, cfg))
        else:
            reports.append(_verify_main_odd(ctx, cfg))
    return reports
