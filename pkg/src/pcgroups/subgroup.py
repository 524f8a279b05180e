"""Subgroup algebra inside a fixed consistent group.

Subgroups are echelonized generating sequences: one row per depth (index
of the first nonzero exponent), depths strictly increasing, each leading
exponent normalized to an exact power of p.  Membership is decided by
sifting, enumeration by an odometer over the rows, and closure by
sift-and-spin: every inserted row is spun against its relative-order power
and its products with all current rows.  The relative-order power (not
just the p-th power) is what keeps closure correct when a power relation
leaves the row's own level.
"""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .collector import Element, Group
from .errors import BudgetError, PreconditionError

# generator batches up to this size are closed by the plain worklist;
# larger candidate matrices go through batched residue scans
_SMALL_GEN_LIMIT = 64


def _padic_val(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _conj_vec(group: Group, uvec, gvec):
    """g^-1 * u * g as a fresh vector."""
    out = np.zeros(group.n, np.int64)
    group._check(kernels._inv_into(out, gvec, group.tab, group._stack, group._scr,
                                   group.max_steps))
    group._check(kernels._mult_into(out, uvec, group.tab, group._stack, group.max_steps))
    group._check(kernels._mult_into(out, gvec, group.tab, group._stack, group.max_steps))
    return out


def _comm_vec(group: Group, avec, bvec):
    out = np.zeros(group.n, np.int64)
    group._check(kernels._comm_into(out, avec, bvec, group.tab, group._stack,
                                    group._scr, group.max_steps))
    return out


def _inv_rows(group: Group, igs):
    """Rowwise inverses, precomputed once so sifting never re-inverts."""
    out = np.zeros_like(igs)
    for r in range(igs.shape[0]):
        group._check(kernels._inv_into(out[r], igs[r], group.tab, group._stack,
                                       group._scr, group.max_steps))
    return out


class _Closure:
    """Mutable echelon state used while building a subgroup."""

    def __init__(self, group: Group):
        self.group = group
        self.rows: dict[int, np.ndarray] = {}

    def arrays(self):
        ds = sorted(self.rows)
        igs = np.zeros((len(ds), self.group.n), np.int64)
        for r, d in enumerate(ds):
            igs[r] = self.rows[d]
        depths = np.array(ds, np.int64)
        pv = np.array([int(self.rows[d][d]) for d in ds], np.int64)
        return igs, _inv_rows(self.group, igs), depths, pv

    def sift(self, vec):
        g = self.group
        igs, igs_inv, depths, pv = self.arrays()
        rem = np.zeros(g.n, np.int64)
        g._check(kernels._sift_into(rem, vec, igs, igs_inv, depths, pv, g.tab,
                                    g._stack, g._scr, g.max_steps))
        return rem

    def _normalize(self, vec):
        """Scale vec by a unit so its leading exponent is exactly p^v."""
        g = self.group
        d = int(np.nonzero(vec)[0][0])
        lead = int(vec[d])
        v = _padic_val(lead, g.p)
        unit = lead // g.p ** v
        mod = int(g.q[d]) // g.p ** v
        t = pow(unit, -1, mod) if mod > 1 else 1
        if t != 1:
            out = np.zeros(g.n, np.int64)
            g._check(kernels._pow_into(out, vec, t, g.tab, g._stack, g._scr,
                                       g.max_steps))
            vec = out
        return d, v, vec

    def insert_with_spin(self, vec):
        """Sift-and-spin worklist seeded with one candidate vector."""
        g = self.group
        work = [np.asarray(vec, np.int64)]
        while work:
            cand = work.pop()
            if not cand.any():
                continue
            rem = self.sift(cand)
            if not rem.any():
                continue
            d, v, new = self._normalize(rem)
            old = self.rows.get(d)
            self.rows[d] = new
            if old is not None:
                work.append(old)
            out = np.zeros(g.n, np.int64)
            g._check(kernels._pow_into(out, new, g.p ** (int(g.m[d]) - v), g.tab,
                                       g._stack, g._scr, g.max_steps))
            work.append(out)
            for w in list(self.rows.values()):
                z = new.copy()
                g._check(kernels._mult_into(z, w, g.tab, g._stack, g.max_steps))
                work.append(z)
                if w is not new:
                    z = w.copy()
                    g._check(kernels._mult_into(z, new, g.tab, g._stack, g.max_steps))
                    work.append(z)

    def absorb_matrix(self, mat):
        """Close over many candidate rows; membership scans run batched and
        resume past rows already absorbed."""
        g = self.group
        mat = np.ascontiguousarray(mat, np.int64)
        if mat.shape[0] <= _SMALL_GEN_LIMIT:
            for r in range(mat.shape[0]):
                self.insert_with_spin(mat[r])
            return
        res = np.zeros(g.n, np.int64)
        start = 0
        while True:
            igs, igs_inv, depths, pv = self.arrays()
            idx = g._check(kernels._sift_scan(mat, start, igs, igs_inv, depths, pv,
                                              res, g.tab, g._stack, g._scr,
                                              g.max_steps))
            if idx >= mat.shape[0]:
                return
            # the residue spans the same extension as the raw row
            self.insert_with_spin(res.copy())
            start = idx

    def subgroup(self, gens=None, name=None) -> "Subgroup":
        igs, igs_inv, depths, pv = self.arrays()
        return Subgroup(self.group, igs, depths, pv, igs_inv=igs_inv, gens=gens,
                        name=name)


class Subgroup:
    """Immutable echelonized subgroup of a fixed group."""

    def __init__(self, group: Group, igs, depths, pv, igs_inv=None, gens=None,
                 name=None):
        self.group = group
        self.igs = igs
        self.igs_inv = igs_inv if igs_inv is not None else _inv_rows(group, igs)
        self.depths = depths
        self.pv = pv
        self.gens = list(gens) if gens is not None else None
        self.name = name
        self.local_orders = np.array(
            [int(group.q[d]) // int(v) for d, v in zip(depths, pv)], np.int64)
        self._elements = None
        # derived-object memo; sound because instances are immutable
        self._cache = {}

    @property
    def order_log(self) -> int:
        return int(sum(_padic_val(int(o), self.group.p) for o in self.local_orders))

    @property
    def order(self) -> int:
        return math.prod(int(o) for o in self.local_orders)

    def is_trivial(self) -> bool:
        return self.igs.shape[0] == 0

    def igs_elements(self) -> list[Element]:
        return [Element(self.group, self.igs[r].copy()) for r in range(self.igs.shape[0])]

    def __repr__(self):
        label = self.name or "H"
        return f"<Subgroup {label}: order=p^{self.order_log} rows={self.igs.shape[0]}>"

    # -- membership ---------------------------------------------------------

    def _vec_of(self, x):
        if isinstance(x, Element):
            if x.group is not self.group:
                raise PreconditionError("element belongs to a different group")
            return x.vec
        return np.asarray(x, np.int64)

    def contains(self, x) -> bool:
        g = self.group
        rem = np.zeros(g.n, np.int64)
        g._check(kernels._sift_into(rem, self._vec_of(x), self.igs, self.igs_inv,
                                    self.depths, self.pv, g.tab, g._stack, g._scr,
                                    g.max_steps))
        return not rem.any()

    def contains_all(self, mat) -> bool:
        g = self.group
        mat = np.ascontiguousarray(mat, np.int64)
        res = np.zeros(g.n, np.int64)
        idx = g._check(kernels._sift_scan(mat, 0, self.igs, self.igs_inv,
                                          self.depths, self.pv, res, g.tab,
                                          g._stack, g._scr, g.max_steps))
        return idx >= mat.shape[0]

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def leq(self, other: "Subgroup") -> bool:
        _same_group(self, other)
        return other.contains_all(self.igs)

    def __le__(self, other):
        return self.leq(other)

    def equal(self, other: "Subgroup") -> bool:
        return self.leq(other) and other.leq(self)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.equal(other)

    def __hash__(self):
        # orders collide rarely enough for dict use; equality stays exact
        return hash((id(self.group), self.order))

    # -- enumeration --------------------------------------------------------

    def elements(self) -> np.ndarray:
        """All members as an (order, n) matrix, identity first."""
        if self._elements is None:
            g = self.group
            N = self.order
            if N > g.max_elements:
                raise BudgetError(
                    f"subgroup of order {N} exceeds the element budget {g.max_elements}")
            t = self.igs.shape[0]
            out = np.zeros((N, g.n), np.int64)
            pre = np.zeros((t + 1, g.n), np.int64)
            digits = np.zeros(max(t, 1), np.int64)
            g._check(kernels._subgroup_elements(out, self.igs, self.local_orders,
                                                g.tab, g._stack, pre, digits,
                                                g.max_steps))
            self._elements = out
        return self._elements

    def element_objects(self):
        for row in self.elements():
            yield Element(self.group, row.copy())

    def exponent_log(self) -> int:
        if self.is_trivial():
            return 0
        ologs = self._cache.get("ologs")
        if ologs is None:
            ologs = self.group.orders_log_batch(self.elements())
            self._cache["ologs"] = ologs
        return int(ologs.max())

    def is_normal(self) -> bool:
        """Normal in the ambient group."""
        g = self.group
        for r in range(self.igs.shape[0]):
            for i in range(g.n):
                gv = np.zeros(g.n, np.int64)
                gv[i] = 1
                if not self.contains(_conj_vec(g, self.igs[r], gv)):
                    return False
        return True


def _same_group(*subs):
    g = subs[0].group
    for s in subs[1:]:
        if s.group is not g:
            raise PreconditionError("subgroups belong to different groups")
    return g


# -- constructors -----------------------------------------------------------


def close(group: Group, gens, name=None) -> Subgroup:
    """Smallest subgroup containing the given elements (or vectors)."""
    cl = _Closure(group)
    gens = list(gens)
    for x in gens:
        vec = x.vec if isinstance(x, Element) else np.asarray(x, np.int64)
        cl.insert_with_spin(vec)
    return cl.subgroup(gens=gens, name=name)


def trivial(group: Group) -> Subgroup:
    return close(group, [], name="1")


def whole(group: Group) -> Subgroup:
    return close(group, group.generators(), name=group.presentation.name or "G")


def normal_closure(group: Group, gens, ambient_gens=None, name=None) -> Subgroup:
    """Smallest subgroup containing gens closed under conjugation by the
    ambient generators (whole-group generators by default)."""
    if ambient_gens is None:
        conj = [g.vec for g in group.generators()]
    else:
        conj = [x.vec if isinstance(x, Element) else np.asarray(x, np.int64)
                for x in ambient_gens]
    cl = _Closure(group)
    for x in list(gens):
        vec = x.vec if isinstance(x, Element) else np.asarray(x, np.int64)
        cl.insert_with_spin(vec)
    _conj_close(cl, conj)
    return cl.subgroup(gens=list(gens), name=name)


def _conj_close(cl: _Closure, conjugators):
    g = cl.group
    changed = True
    while changed:
        changed = False
        igs, _, _, _ = cl.arrays()
        for r in range(igs.shape[0]):
            for cv in conjugators:
                z = _conj_vec(g, igs[r], cv)
                rem = cl.sift(z)
                if rem.any():
                    cl.insert_with_spin(rem)
                    changed = True


def commutator_subgroup(H: Subgroup, K: Subgroup, name=None) -> Subgroup:
    """[H, K]: the normal closure, inside <H, K>, of the commutators of the
    generating rows."""
    g = _same_group(H, K)
    joint = _Closure(g)
    for r in range(H.igs.shape[0]):
        joint.insert_with_spin(H.igs[r])
    for r in range(K.igs.shape[0]):
        joint.insert_with_spin(K.igs[r])
    jrows, _, _, _ = joint.arrays()
    cl = _Closure(g)
    for r in range(H.igs.shape[0]):
        for s in range(K.igs.shape[0]):
            cl.insert_with_spin(_comm_vec(g, H.igs[r], K.igs[s]))
    _conj_close(cl, [jrows[r] for r in range(jrows.shape[0])])
    return cl.subgroup(name=name)


def derived_subgroup(H: Subgroup) -> Subgroup:
    hit = H._cache.get("derived")
    if hit is None:
        hit = commutator_subgroup(H, H)
        H._cache["derived"] = hit
    return hit


def agemo(H: Subgroup, j: int, name=None) -> Subgroup:
    """Subgroup generated by the p^j-th powers of all elements of H."""
    if j < 0:
        raise PreconditionError("agemo exponent must be >= 0")
    g = H.group
    hit = H._cache.get(("agemo", j))
    if hit is not None:
        return hit
    if j == 0:
        res = Subgroup(g, H.igs.copy(), H.depths.copy(), H.pv.copy(),
                       igs_inv=H.igs_inv.copy(), name=name)
    else:
        mat = H.elements()
        pw = g.pows_batch(mat, g.p ** j)
        uniq = np.unique(pw, axis=0)
        cl = _Closure(g)
        cl.absorb_matrix(uniq)
        res = cl.subgroup(name=name)
    H._cache[("agemo", j)] = res
    return res


def omega(H: Subgroup, i: int, name=None, ologs=None) -> Subgroup:
    """Subgroup generated by the elements of H of order dividing p^i;
    trivial for i < 0.  ologs may carry a precomputed order table for
    H.elements()."""
    g = H.group
    if i < 0:
        return trivial(g)
    hit = H._cache.get(("omega", i))
    if hit is not None:
        return hit
    mat = H.elements()
    if ologs is None:
        ologs = H._cache.get("ologs")
        if ologs is None:
            ologs = g.orders_log_batch(mat)
            H._cache["ologs"] = ologs
    sel = mat[ologs <= i]
    if sel.shape[0] == mat.shape[0]:
        res = Subgroup(g, H.igs.copy(), H.depths.copy(), H.pv.copy(),
                       igs_inv=H.igs_inv.copy(), name=name)
    else:
        cl = _Closure(g)
        cl.absorb_matrix(sel)
        res = cl.subgroup(name=name)
    H._cache[("omega", i)] = res
    return res


def exponent(H: Subgroup) -> int:
    return H.group.p ** H.exponent_log()


def index(H: Subgroup, K: Subgroup) -> int:
    """[H : K] for K <= H."""
    _same_group(H, K)
    if not K.leq(H):
        raise PreconditionError("index is only defined for a contained subgroup")
    return H.order // K.order


def central_preimage(H: Subgroup, N: Subgroup, name=None) -> Subgroup:
    """{x in H : [x, h] in N for every generating row h of H}, the preimage
    in H of the center of H/N.  N must be normal in H."""
    g = _same_group(H, N)
    if not N.leq(H):
        raise PreconditionError("N must be contained in H")
    for r in range(N.igs.shape[0]):
        for s in range(H.igs.shape[0]):
            if not N.contains(_conj_vec(g, N.igs[r], H.igs[s])):
                raise PreconditionError("N is not normal in H")
    mat = H.elements()
    mask = np.zeros(mat.shape[0], np.int8)
    g._check(kernels._central_mask(mat, H.igs, N.igs, N.igs_inv, N.depths, N.pv,
                                   mask, g.tab, g._stack, g._scr, g.max_steps))
    cl = _Closure(g)
    cl.absorb_matrix(mat[mask == 1])
    return cl.subgroup(name=name)


class Chain:
    """An inclusion chain of subgroups of one group.

    terms are stored in the given order; descending=True means
    terms[0] >= terms[1] >= ...  The length of a chain is the number of
    inclusion steps, len(terms) - 1.
    """

    def __init__(self, terms, descending=True):
        if not terms:
            raise PreconditionError("a chain needs at least one term")
        _same_group(*terms)
        self.terms = list(terms)
        self.descending = descending

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def nested(self) -> bool:
        lo = self.terms if self.descending else self.terms[::-1]
        return all(lo[k + 1].leq(lo[k]) for k in range(len(lo) - 1))

    def __repr__(self):
        arrow = " >= " if self.descending else " <= "
        return "<Chain " + arrow.join(f"p^{t.order_log}" for t in self.terms) + ">"
