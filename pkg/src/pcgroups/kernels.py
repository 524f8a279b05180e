"""Collection kernels over flat integer tables.

Every kernel works on plain numpy arrays so the same source compiles under
numba and runs unmodified as pure Python.  Set PCGROUPS_NO_NUMBA=1 before
import to force the pure-Python path; USING_NUMBA reports which one is
active.

Table pack ``tab`` (all int64 arrays), built by collector.Group:

    tab[0] q          relative orders p^{m_i}, length n
    tab[1] m          relative order exponents m_i, length n
    tab[2] wgen       static word arena: 0-based generator indices
    tab[3] wexp       static word arena: exponents, in [1, q)
    tab[4] pow_start  arena offset of R_i (g_i^{q_i} = R_i), length n
    tab[5] pow_len    length of R_i; 0 means trivial
    tab[6] conj_start arena offset of W_ji = g_j * [g_j,g_i] at j*n+i (j > i)
    tab[7] conj_len   length of W_ji; 1 means the pair commutes

Collection state is a frame stack (cap, 4) int64.  A frame is either a
static word reference (start, len, pos, rep) with start >= 0, meaning
word^rep starting at letter pos, or an inline single letter with
start = -1-gi, exponent in field 1.  The group element represented at any
moment is g_1^{x_1}..g_n^{x_n} times the frames read top to bottom.

Scratch rows (scr, shape (8, n)): nested kernels use fixed disjoint rows
along every call chain.  _inv_into: 0,1,2; _pow_into: 3; _order_log: 4,5
(calls _pow_into); _sift_into: 5 (calls _pow_into, takes precomputed row
inverses); _comm_into: 6,7 (calls _inv_into).  Caller-provided out/rem
arguments must not alias rows the callee uses.

Return conventions: step count (or 0 for batch kernels) on success,
-1 budget exhausted, -2 frame stack overflow, -3 internal invariant broken.
"""

import os

import numpy as np

SCR_ROWS = 8
STACK_CAP = 1 << 14

_env = os.environ.get("PCGROUPS_NO_NUMBA", "")
if _env not in ("", "0"):
    USING_NUMBA = False
else:
    try:
        from numba import njit

        USING_NUMBA = True
    except ImportError:
        USING_NUMBA = False


def _collect_core_py(x, tab, stack, sp, budget):
    q = tab[0]
    wgen = tab[2]
    wexp = tab[3]
    pow_start = tab[4]
    pow_len = tab[5]
    conj_start = tab[6]
    conj_len = tab[7]
    n = q.shape[0]
    cap = stack.shape[0]
    steps = 0
    while sp > 0:
        t = sp - 1
        s0 = stack[t, 0]
        if s0 >= 0:
            pos = stack[t, 2]
            gi = wgen[s0 + pos]
            e = wexp[s0 + pos]
            pos += 1
            if pos == stack[t, 1]:
                rep = stack[t, 3] - 1
                if rep == 0:
                    sp -= 1
                else:
                    stack[t, 2] = 0
                    stack[t, 3] = rep
            else:
                stack[t, 2] = pos
        else:
            gi = -s0 - 1
            e = stack[t, 1]
            sp -= 1
        steps += 1
        if steps > budget:
            return -1
        # g_gi^e slides to its slot when every occupied higher slot commutes with it
        free = True
        for j in range(n - 1, gi, -1):
            if x[j] != 0 and conj_len[j * n + gi] > 1:
                free = False
                break
        if free:
            x[gi] += e
            if x[gi] >= q[gi]:
                ovf = x[gi] // q[gi]
                x[gi] -= ovf * q[gi]
                if pow_len[gi] > 0:
                    # insert R_gi^ovf right after slot gi: re-push the tail, R on top
                    for j in range(n - 1, gi, -1):
                        if x[j] != 0:
                            if sp == cap:
                                return -2
                            stack[sp, 0] = -1 - j
                            stack[sp, 1] = x[j]
                            stack[sp, 2] = 0
                            stack[sp, 3] = 1
                            sp += 1
                            x[j] = 0
                    if sp == cap:
                        return -2
                    stack[sp, 0] = pow_start[gi]
                    stack[sp, 1] = pow_len[gi]
                    stack[sp, 2] = 0
                    stack[sp, 3] = ovf
                    sp += 1
        else:
            # tail * g_gi = g_gi * prod_j (g_j [g_j,g_gi])^{x_j}; one unit moves,
            # the leftover g_gi^{e-1} waits below the conjugated tail
            if e > 1:
                if sp == cap:
                    return -2
                stack[sp, 0] = -1 - gi
                stack[sp, 1] = e - 1
                stack[sp, 2] = 0
                stack[sp, 3] = 1
                sp += 1
            for j in range(n - 1, gi, -1):
                if x[j] != 0:
                    if sp == cap:
                        return -2
                    c = j * n + gi
                    stack[sp, 0] = conj_start[c]
                    stack[sp, 1] = conj_len[c]
                    stack[sp, 2] = 0
                    stack[sp, 3] = x[j]
                    sp += 1
                    x[j] = 0
            x[gi] += 1
            if x[gi] == q[gi]:
                x[gi] = 0
                if pow_len[gi] > 0:
                    if sp == cap:
                        return -2
                    stack[sp, 0] = pow_start[gi]
                    stack[sp, 1] = pow_len[gi]
                    stack[sp, 2] = 0
                    stack[sp, 3] = 1
                    sp += 1
    return steps


def _mult_into_py(z, y, tab, stack, budget):
    # z := z * y; aliasing z is y is safe, y is only read while seeding
    n = tab[0].shape[0]
    cap = stack.shape[0]
    sp = 0
    for j in range(n - 1, -1, -1):
        if y[j] != 0:
            if sp == cap:
                return -2
            stack[sp, 0] = -1 - j
            stack[sp, 1] = y[j]
            stack[sp, 2] = 0
            stack[sp, 3] = 1
            sp += 1
    return _collect_core(z, tab, stack, sp, budget)


def _word_into_py(z, wg, we, tab, stack, budget):
    # z := z * word; wg 0-based indices, we >= 1
    cap = stack.shape[0]
    sp = 0
    for k in range(wg.shape[0] - 1, -1, -1):
        if we[k] != 0:
            if sp == cap:
                return -2
            stack[sp, 0] = -1 - wg[k]
            stack[sp, 1] = we[k]
            stack[sp, 2] = 0
            stack[sp, 3] = 1
            sp += 1
    return _collect_core(z, tab, stack, sp, budget)


def _inv_into_py(out, x, tab, stack, scr, budget):
    # out := x^{-1} by sifting: left-multiply by g_i^{q_i - e_i} at each
    # surviving depth, then collect the corrections in reverse order
    q = tab[0]
    n = q.shape[0]
    acc = scr[0]
    work = scr[1]
    corr = scr[2]
    total = 0
    for k in range(n):
        acc[k] = x[k]
        corr[k] = 0
    for i in range(n):
        e = acc[i]
        if e != 0:
            c = q[i] - e
            corr[i] = c
            for k in range(n):
                work[k] = 0
            work[i] = c
            s = _mult_into(work, acc, tab, stack, budget)
            if s < 0:
                return s
            total += s
            budget -= s
            for k in range(n):
                acc[k] = work[k]
    for k in range(n):
        if acc[k] != 0:
            return -3
    cap = stack.shape[0]
    sp = 0
    for i in range(n):
        if corr[i] != 0:
            if sp == cap:
                return -2
            stack[sp, 0] = -1 - i
            stack[sp, 1] = corr[i]
            stack[sp, 2] = 0
            stack[sp, 3] = 1
            sp += 1
    for k in range(n):
        out[k] = 0
    s = _collect_core(out, tab, stack, sp, budget)
    if s < 0:
        return s
    return total + s


def _pow_into_py(out, x, k, tab, stack, scr, budget):
    # out := x^k, k >= 0, by binary powering; powers of x commute so the
    # accumulation order is immaterial
    n = tab[0].shape[0]
    base = scr[3]
    for j in range(n):
        base[j] = x[j]
    for j in range(n):
        out[j] = 0
    total = 0
    kk = k
    while kk > 0:
        if kk & 1 == 1:
            s = _mult_into(out, base, tab, stack, budget)
            if s < 0:
                return s
            total += s
            budget -= s
        kk >>= 1
        if kk > 0:
            s = _mult_into(base, base, tab, stack, budget)
            if s < 0:
                return s
            total += s
            budget -= s
    return total


def _order_log_py(x, p, tab, stack, scr, budget):
    # smallest t with x^{p^t} = 1
    m = tab[1]
    n = m.shape[0]
    y = scr[4]
    ynew = scr[5]
    tmax = 1
    for k in range(n):
        tmax += m[k]
    for k in range(n):
        y[k] = x[k]
    t = 0
    while True:
        zero = True
        for k in range(n):
            if y[k] != 0:
                zero = False
                break
        if zero:
            return t
        if t > tmax:
            return -3
        s = _pow_into(ynew, y, p, tab, stack, scr, budget)
        if s < 0:
            return s
        budget -= s
        for k in range(n):
            y[k] = ynew[k]
        t += 1


def _comm_into_py(out, a, b, tab, stack, scr, budget):
    # out := [a, b] = a^-1 b^-1 a b
    n = tab[0].shape[0]
    ia = scr[6]
    ib = scr[7]
    total = 0
    s = _inv_into(ia, a, tab, stack, scr, budget)
    if s < 0:
        return s
    total += s
    budget -= s
    s = _inv_into(ib, b, tab, stack, scr, budget)
    if s < 0:
        return s
    total += s
    budget -= s
    for k in range(n):
        out[k] = ia[k]
    s = _mult_into(out, ib, tab, stack, budget)
    if s < 0:
        return s
    total += s
    budget -= s
    s = _mult_into(out, a, tab, stack, budget)
    if s < 0:
        return s
    total += s
    budget -= s
    s = _mult_into(out, b, tab, stack, budget)
    if s < 0:
        return s
    return total + s


def _sift_into_py(rem, x, igs, igs_inv, depths, pv, tab, stack, scr, budget):
    # rem := residue of x against the echelon rows; rem == 0 iff x is in
    # the span.  igs rows are normal forms with strictly increasing depths
    # and leading exponent pv[s] (a power of p) at depth depths[s];
    # igs_inv holds the precomputed row inverses.
    n = tab[0].shape[0]
    t = igs.shape[0]
    upow = scr[5]
    total = 0
    for k in range(n):
        rem[k] = x[k]
    for s in range(t):
        d = depths[s]
        e = rem[d]
        if e == 0:
            continue
        if e % pv[s] != 0:
            return total
        c = e // pv[s]
        st = _pow_into(upow, igs_inv[s], c, tab, stack, scr, budget)
        if st < 0:
            return st
        total += st
        budget -= st
        st = _mult_into(upow, rem, tab, stack, budget)
        if st < 0:
            return st
        total += st
        budget -= st
        for k in range(n):
            rem[k] = upow[k]
    return total


def _sift_scan_py(mat, start, igs, igs_inv, depths, pv, res, tab, stack, scr, budget):
    # first row index >= start whose sift residue is nonzero (residue left
    # in res); mat.shape[0] if every row is in the span
    K = mat.shape[0]
    n = mat.shape[1]
    for r in range(start, K):
        s = _sift_into(res, mat[r], igs, igs_inv, depths, pv, tab, stack, scr, budget)
        if s < 0:
            return s
        nz = False
        for k in range(n):
            if res[k] != 0:
                nz = True
                break
        if nz:
            return r
    return K


def _subgroup_elements_py(out, igs, ords, tab, stack, pre, digits, budget):
    # out[r] := u_1^{a_1} .. u_t^{a_t} in odometer order, digit s running
    # over [0, ords[s]), last digit fastest; pre holds prefix products
    t = igs.shape[0]
    n = out.shape[1]
    N = out.shape[0]
    for k in range(n):
        pre[0, k] = 0
    for s in range(t):
        digits[s] = 0
        for k in range(n):
            pre[s + 1, k] = pre[s, k]
    for k in range(n):
        out[0, k] = pre[t, k]
    total = 0
    for r in range(1, N):
        s = t - 1
        while digits[s] == ords[s] - 1:
            digits[s] = 0
            s -= 1
        digits[s] += 1
        st = _mult_into(pre[s + 1], igs[s], tab, stack, budget)
        if st < 0:
            return st
        total += st
        budget -= st
        for j in range(s + 1, t):
            for k in range(n):
                pre[j + 1, k] = pre[j, k]
        for k in range(n):
            out[r, k] = pre[t, k]
    return total


def _orders_batch_py(mat, p, out, tab, stack, scr, budget):
    N = mat.shape[0]
    for r in range(N):
        t = _order_log(mat[r], p, tab, stack, scr, budget)
        if t < 0:
            return t
        out[r] = t
    return 0


def _pows_batch_py(mat, k, out, tab, stack, scr, budget):
    N = mat.shape[0]
    for r in range(N):
        s = _pow_into(out[r], mat[r], k, tab, stack, scr, budget)
        if s < 0:
            return s
    return 0


def _comm_rows_py(A, r, B, s0, out, tab, stack, scr, budget):
    # out[k] := [A[r], B[s0+k]]
    C = out.shape[0]
    for k in range(C):
        s = _comm_into(out[k], A[r], B[s0 + k], tab, stack, scr, budget)
        if s < 0:
            return s
    return 0


def _comm_pairs_py(A, ia, B, ib, out, tab, stack, scr, budget):
    # out[k] := [A[ia[k]], B[ib[k]]]
    S = ia.shape[0]
    for k in range(S):
        s = _comm_into(out[k], A[ia[k]], B[ib[k]], tab, stack, scr, budget)
        if s < 0:
            return s
    return 0


def _central_mask_py(mat, gens, igs, igs_inv, depths, pv, out, tab, stack, scr, budget):
    # out[r] := 1 iff [mat[r], g] is in the igs span for every row g of gens
    N = mat.shape[0]
    G = gens.shape[0]
    n = mat.shape[1]
    cm = np.empty(n, np.int64)
    res = np.empty(n, np.int64)
    for r in range(N):
        ok = 1
        for g in range(G):
            s = _comm_into(cm, mat[r], gens[g], tab, stack, scr, budget)
            if s < 0:
                return s
            s = _sift_into(res, cm, igs, igs_inv, depths, pv, tab, stack, scr, budget)
            if s < 0:
                return s
            for k in range(n):
                if res[k] != 0:
                    ok = 0
                    break
            if ok == 0:
                break
        out[r] = ok
    return 0


_KERNEL_NAMES = [
    "_collect_core",
    "_mult_into",
    "_word_into",
    "_inv_into",
    "_pow_into",
    "_order_log",
    "_comm_into",
    "_sift_into",
    "_sift_scan",
    "_subgroup_elements",
    "_orders_batch",
    "_pows_batch",
    "_comm_rows",
    "_comm_pairs",
    "_central_mask",
]

if USING_NUMBA:
    for _name in _KERNEL_NAMES:
        globals()[_name] = njit(cache=True)(globals()[_name + "_py"])
else:
    for _name in _KERNEL_NAMES:
        globals()[_name] = globals()[_name + "_py"]
