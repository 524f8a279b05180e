"""Group contexts and element arithmetic on top of the collection kernels.

A Group compiles a PcPresentation into the flat integer tables the kernels
consume and owns the scratch buffers they run in.  Elements are normal
form exponent vectors g_1^{x_1}..g_n^{x_n} with 0 <= x_i < p^{m_i}.
"""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .errors import BudgetError, PcGroupError, PreconditionError
from .presentation import PcPresentation, Word

DEFAULT_MAX_STEPS = 10_000_000
DEFAULT_MAX_ELEMENTS = 1 << 20


class Element:
    """A group element in collected normal form.  Immutable by convention."""

    __slots__ = ("group", "vec")

    def __init__(self, group, vec):
        # vec is adopted, not copied; callers hand over ownership
        self.group = group
        self.vec = vec

    def __mul__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.group.multiply(self, other)

    def __pow__(self, k):
        return self.group.power(self, k)

    def inverse(self):
        return self.group.inverse(self)

    def order(self) -> int:
        return self.group.order_of(self)

    def order_log(self) -> int:
        return self.group.order_log(self)

    def is_identity(self) -> bool:
        return not self.vec.any()

    def as_word(self) -> Word:
        return Word(tuple((i + 1, int(e)) for i, e in enumerate(self.vec) if e != 0))

    def to_tuple(self) -> tuple:
        return tuple(int(e) for e in self.vec)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.group is other.group and bool((self.vec == other.vec).all())

    def __hash__(self):
        return hash(self.to_tuple())

    def __repr__(self):
        return self.group.presentation.render_word(self.as_word())


class Group:
    """Arithmetic context for one presentation.

    max_steps bounds the collection work of a single public operation and
    max_elements bounds any materialized element table; exceeding either
    raises BudgetError rather than returning a partial answer.
    """

    def __init__(self, presentation: PcPresentation,
                 max_steps: int = DEFAULT_MAX_STEPS,
                 max_elements: int = DEFAULT_MAX_ELEMENTS):
        self.presentation = presentation
        self.max_steps = int(max_steps)
        self.max_elements = int(max_elements)
        self.p = presentation.p
        self.n = presentation.n
        self.q = np.array([presentation.q(i + 1) for i in range(self.n)], np.int64)
        self.m = np.array(presentation.rel_orders, np.int64)
        self._build_tables()
        self._stack = np.zeros((kernels.STACK_CAP, 4), np.int64)
        self._scr = np.zeros((kernels.SCR_ROWS, self.n), np.int64)

    def _build_tables(self):
        n = self.n
        P = self.presentation
        arena_g, arena_e = [], []

        def add(letters):
            start = len(arena_g)
            for idx, e in letters:
                arena_g.append(idx - 1)
                arena_e.append(e)
            return start, len(letters)

        pow_start = np.zeros(n, np.int64)
        pow_len = np.zeros(n, np.int64)
        for i in range(1, n + 1):
            w = P.power_rels.get(i)
            if w:
                pow_start[i - 1], pow_len[i - 1] = add(w.letters)
        conj_start = np.zeros(n * n, np.int64)
        conj_len = np.zeros(n * n, np.int64)
        for j in range(2, n + 1):
            for i in range(1, j):
                w = P.comm_rels.get((j, i))
                letters = ((j, 1),) + (w.letters if w else ())
                s, ln = add(letters)
                conj_start[(j - 1) * n + (i - 1)] = s
                conj_len[(j - 1) * n + (i - 1)] = ln
        if not arena_g:
            arena_g, arena_e = [0], [1]
        self.tab = (
            self.q,
            self.m,
            np.array(arena_g, np.int64),
            np.array(arena_e, np.int64),
            pow_start,
            pow_len,
            conj_start,
            conj_len,
        )

    # -- plumbing -----------------------------------------------------------

    def _check(self, ret):
        if ret == -1:
            raise BudgetError(
                f"collection step budget exceeded (max_steps={self.max_steps})")
        if ret == -2:
            raise BudgetError("collection frame stack overflowed")
        if ret == -3:
            raise PcGroupError("collection invariant broken; presentation is unusable")
        return ret

    def _wrap(self, vec) -> Element:
        return Element(self, vec)

    @property
    def order(self) -> int:
        return math.prod(int(qi) for qi in self.q)

    @property
    def order_log_total(self) -> int:
        return int(self.m.sum())

    def __repr__(self):
        label = self.presentation.name or "G"
        return f"<Group {label}: p={self.p} order=p^{int(self.m.sum())}>"

    # -- element construction ----------------------------------------------

    @property
    def identity(self) -> Element:
        return self._wrap(np.zeros(self.n, np.int64))

    def generator(self, which) -> Element:
        if isinstance(which, str):
            i = self.presentation.index_of(which)
        else:
            i = int(which)
        if not (1 <= i <= self.n):
            raise PreconditionError(f"generator index {i} out of range")
        v = np.zeros(self.n, np.int64)
        v[i - 1] = 1
        return self._wrap(v)

    def generators(self) -> list:
        return [self.generator(i) for i in range(1, self.n + 1)]

    def element(self, exps) -> Element:
        """Element from an exponent sequence; entries may be any integers."""
        v = np.asarray(list(exps), dtype=np.int64)
        if v.shape != (self.n,):
            raise PreconditionError(f"expected {self.n} exponents, got {v.shape}")
        if ((v >= 0) & (v < self.q)).all():
            return self._wrap(v.copy())
        acc = self.identity
        for i in range(self.n):
            if v[i] != 0:
                acc = acc * self.power(self.generator(i + 1), int(v[i]))
        return acc

    def evaluate(self, w: Word) -> Element:
        """Collected value of a Word (1-based letters, any integer exponents)."""
        acc = self.identity
        for idx, e in w:
            if not (1 <= idx <= self.n):
                raise PreconditionError(f"word letter index {idx} out of range")
            if e != 0:
                acc = acc * self.power(self.generator(idx), int(e))
        return acc

    def normal_form(self, w: Word) -> Element:
        return self.evaluate(w)

    # -- arithmetic ---------------------------------------------------------

    def multiply(self, a: Element, b: Element) -> Element:
        z = a.vec.copy()
        self._check(kernels._mult_into(z, b.vec, self.tab, self._stack, self.max_steps))
        return self._wrap(z)

    def inverse(self, a: Element) -> Element:
        out = np.zeros(self.n, np.int64)
        self._check(kernels._inv_into(out, a.vec, self.tab, self._stack, self._scr,
                                      self.max_steps))
        return self._wrap(out)

    def power(self, a: Element, k: int) -> Element:
        k = int(k)
        if k < 0:
            a = self.inverse(a)
            k = -k
        out = np.zeros(self.n, np.int64)
        self._check(kernels._pow_into(out, a.vec, k, self.tab, self._stack, self._scr,
                                      self.max_steps))
        return self._wrap(out)

    def commutator(self, a: Element, b: Element) -> Element:
        out = np.zeros(self.n, np.int64)
        self._check(kernels._comm_into(out, a.vec, b.vec, self.tab, self._stack,
                                       self._scr, self.max_steps))
        return self._wrap(out)

    def conjugate(self, a: Element, b: Element) -> Element:
        """b^-1 * a * b."""
        z = self.inverse(b).vec
        self._check(kernels._mult_into(z, a.vec, self.tab, self._stack, self.max_steps))
        self._check(kernels._mult_into(z, b.vec, self.tab, self._stack, self.max_steps))
        return self._wrap(z)

    def order_log(self, a: Element) -> int:
        t = kernels._order_log(a.vec, self.p, self.tab, self._stack, self._scr,
                               self.max_steps)
        return self._check(t)

    def order_of(self, a: Element) -> int:
        return self.p ** self.order_log(a)

    # -- bulk tables --------------------------------------------------------

    def all_elements(self) -> np.ndarray:
        """All normal forms as an (order, n) matrix, identity first, the
        last exponent varying fastest."""
        N = self.order
        if N > self.max_elements:
            raise BudgetError(
                f"group of order {N} exceeds the element budget {self.max_elements}")
        r = np.arange(N, dtype=np.int64)
        mat = np.empty((N, self.n), np.int64)
        stride = 1
        for i in range(self.n - 1, -1, -1):
            mat[:, i] = (r // stride) % int(self.q[i])
            stride *= int(self.q[i])
        return mat

    def orders_log_batch(self, mat: np.ndarray) -> np.ndarray:
        out = np.zeros(mat.shape[0], np.int8)
        self._check(kernels._orders_batch(mat, self.p, out, self.tab, self._stack,
                                          self._scr, self.max_steps))
        return out

    def pows_batch(self, mat: np.ndarray, k: int) -> np.ndarray:
        out = np.zeros_like(mat)
        self._check(kernels._pows_batch(mat, int(k), out, self.tab, self._stack,
                                        self._scr, self.max_steps))
        return out
