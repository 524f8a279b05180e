"""Weighted power-commutator presentations of finite p-groups.

A presentation consists of generators g_1..g_n, a prime p, relative orders
p^{m_i}, power relations g_i^{p^{m_i}} = R_i and commutator relations
[g_j, g_i] = C_ji (j > i), where R_i and C_ji are words in generators of
index strictly greater than i resp. j.  That index restriction is what
makes collection terminate and gives every element a normal form
g_1^{x_1} ... g_n^{x_n} with 0 <= x_i < p^{m_i}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, PresentationError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Word:
    """A product of generator powers: ((index, exponent), ...), indices 1-based."""

    letters: tuple[tuple[int, int], ...] = ()

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)


def word(*pairs) -> Word:
    """Convenience constructor: word((3, 2), (1, -1)) = g3^2 * g1^-1."""
    return Word(tuple((int(i), int(e)) for i, e in pairs))


class PcPresentation:
    """Immutable power-commutator presentation data.

    power_rels maps i -> Word for g_i^{p^{m_i}} (omitted means trivial);
    comm_rels maps (j, i) with j > i -> Word for [g_j, g_i] (omitted means
    the generators commute).  Stored relation words are collected normal
    forms: indices respect the weight condition and exponents lie in
    [0, p^{m_k}).
    """

    def __init__(self, p, names, rel_orders, power_rels=None, comm_rels=None, name=None):
        self.p = int(p)
        self.names = tuple(str(s) for s in names)
        self.rel_orders = tuple(int(m) for m in rel_orders)
        self.power_rels = dict(power_rels or {})
        self.comm_rels = dict(comm_rels or {})
        self.name = name
        self._validate()

    @property
    def n(self) -> int:
        return len(self.names)

    def q(self, i: int) -> int:
        """Relative order p^{m_i} of generator i (1-based)."""
        return self.p ** self.rel_orders[i - 1]

    def index_of(self, gen_name: str) -> int:
        try:
            return self.names.index(gen_name) + 1
        except ValueError:
            raise PresentationError(f"unknown generator {gen_name!r}") from None

    def _validate(self):
        if not is_prime(self.p):
            raise PresentationError(f"p = {self.p} is not prime")
        # an empty generator list presents the trivial group
        if len(set(self.names)) != len(self.names):
            raise PresentationError("duplicate generator names")
        for nm in self.names:
            if not _NAME_RE.fullmatch(nm):
                raise PresentationError(f"bad generator name {nm!r}")
        if len(self.rel_orders) != self.n:
            raise PresentationError("rel_orders length does not match generator count")
        if any(m < 1 for m in self.rel_orders):
            raise PresentationError("relative order exponents must be >= 1")
        for i, w in self.power_rels.items():
            if not (1 <= i <= self.n):
                raise PresentationError(f"power relation for invalid generator index {i}")
            self._validate_relation_word(w, min_index=i + 1, what=f"power relation of g{i}")
        for key, w in self.comm_rels.items():
            j, i = key
            if not (1 <= i < j <= self.n):
                raise PresentationError(f"commutator relation key {key} must be (j, i) with j > i")
            self._validate_relation_word(w, min_index=j + 1, what=f"commutator relation [{j},{i}]")

    def _validate_relation_word(self, w, min_index, what):
        if not isinstance(w, Word):
            raise PresentationError(f"{what}: relation must be a Word")
        for idx, e in w:
            if not (1 <= idx <= self.n):
                raise PresentationError(f"{what}: generator index {idx} out of range")
            if idx < min_index:
                raise PresentationError(
                    f"{what}: index restriction violated (g{idx} not allowed, need index >= {min_index})"
                )
            if not (0 < e < self.q(idx)):
                raise PresentationError(
                    f"{what}: exponent {e} for g{idx} outside [1, {self.q(idx)})"
                )

    def __eq__(self, other):
        if not isinstance(other, PcPresentation):
            return NotImplemented
        return (
            self.p == other.p
            and self.names == other.names
            and self.rel_orders == other.rel_orders
            and self.power_rels == other.power_rels
            and self.comm_rels == other.comm_rels
        )

    def __hash__(self):
        return hash((self.p, self.names, self.rel_orders,
                     tuple(sorted(self.power_rels.items())),
                     tuple(sorted(self.comm_rels.items()))))

    def __repr__(self):
        label = self.name or "pc"
        return f"<PcPresentation {label}: p={self.p} orders={self.rel_orders}>"

    def render_word(self, w: Word) -> str:
        if not w:
            return "1"
        return "*".join(f"{self.names[i - 1]}^{e}" for i, e in w)


def candidate_order(P: PcPresentation) -> int:
    """p^(sum of relative order exponents); the group order when P is consistent."""
    return P.p ** sum(P.rel_orders)


# ---------------------------------------------------------------------------
# word grammar, shared by relation right-hand sides and CLI queries


def parse_word(text: str, P: PcPresentation, allow_commutators: bool = False) -> Word:
    """Parse ``a^2*b*[a,c]^-1`` style products into a Word.

    Bare names mean exponent 1.  Commutator factors [x,y] expand to
    x^-1*y^-1*x*y (only if allowed); exponents may be any integer.
    """
    letters = _parse_word_letters(text, P.names, allow_commutators, line=None)
    return Word(tuple(letters))


def _parse_word_letters(text, names, allow_commutators, line):
    name_to_idx = {nm: k + 1 for k, nm in enumerate(names)}
    text = text.strip()
    if text == "1" or text == "":
        return []
    letters = []
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise ParseError("empty factor in word", line)
        m = re.fullmatch(r"\[\s*(\w+)\s*,\s*(\w+)\s*\](?:\^(-?\d+))?", factor)
        if m:
            if not allow_commutators:
                raise ParseError("commutator brackets are not allowed here", line)
            a, b, exp = m.group(1), m.group(2), int(m.group(3) or 1)
            for nm in (a, b):
                if nm not in name_to_idx:
                    raise ParseError(f"unknown generator {nm!r}", line)
            ia, ib = name_to_idx[a], name_to_idx[b]
            base = [(ia, -1), (ib, -1), (ia, 1), (ib, 1)]
            if exp < 0:
                base = [(i, -e) for i, e in reversed(base)]
                exp = -exp
            letters.extend(base * exp)
            continue
        m = re.fullmatch(r"(\w+)(?:\^(-?\d+))?", factor)
        if not m:
            raise ParseError(f"cannot parse factor {factor!r}", line)
        nm, exp = m.group(1), int(m.group(2) or 1)
        if nm not in name_to_idx:
            raise ParseError(f"unknown generator {nm!r}", line)
        if exp != 0:
            letters.append((name_to_idx[nm], exp))
    return letters


# ---------------------------------------------------------------------------
# presentation file format


def parse(text: str, name: str | None = None) -> PcPresentation:
    """Parse the line-oriented presentation format.

    ::

        p = 3
        gens a b c
        orders a:3 b:3 c:9      # absolute orders, powers of p
        rel a^3 = 1
        rel [b,a] = c^3

    Omitted relations are trivial.  Relation right-hand sides may use any
    integer exponents; they are stored in collected normal form.  [x,y]
    with x of lower index is accepted and stored as [y,x]^-1.
    """
    p = None
    names = None
    orders = None
    raw_rels = []  # (line_no, kind, payload)

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"p\s*=\s*(\d+)", line)
        if m:
            if p is not None:
                raise ParseError("duplicate p declaration", ln)
            p = int(m.group(1))
            continue
        if line.startswith("gens"):
            if names is not None:
                raise ParseError("duplicate gens declaration", ln)
            # an empty gens line declares the trivial group
            names = line[len("gens"):].split()
            for nm in names:
                if not _NAME_RE.fullmatch(nm):
                    raise ParseError(f"bad generator name {nm!r}", ln)
            if len(set(names)) != len(names):
                raise ParseError("duplicate generator names", ln)
            continue
        if line.startswith("orders"):
            if orders is not None:
                raise ParseError("duplicate orders declaration", ln)
            orders = []
            for chunk in line[len("orders"):].split():
                m = re.fullmatch(r"(\w+):(\d+)", chunk)
                if not m:
                    raise ParseError(f"cannot parse order entry {chunk!r}", ln)
                orders.append((m.group(1), int(m.group(2)), ln))
            continue
        if line.startswith("rel"):
            body = line[len("rel"):].strip()
            if "=" not in body:
                raise ParseError("relation needs '='", ln)
            lhs, rhs = (s.strip() for s in body.split("=", 1))
            raw_rels.append((ln, lhs, rhs))
            continue
        raise ParseError(f"unrecognized line {line!r}", ln)

    if p is None:
        raise ParseError("missing 'p = <prime>' declaration")
    if not is_prime(p):
        raise ParseError(f"p = {p} is not prime")
    if names is None:
        raise ParseError("missing 'gens' declaration")
    if orders is None:
        raise ParseError("missing 'orders' declaration")

    name_to_idx = {nm: k + 1 for k, nm in enumerate(names)}
    m_exps = [None] * len(names)
    for nm, absord, ln in orders:
        if nm not in name_to_idx:
            raise ParseError(f"unknown generator {nm!r} in orders", ln)
        k = name_to_idx[nm] - 1
        if m_exps[k] is not None:
            raise ParseError(f"duplicate order for {nm!r}", ln)
        m = 0
        v = absord
        while v > 1 and v % p == 0:
            v //= p
            m += 1
        if v != 1 or m < 1:
            raise ParseError(f"order {absord} of {nm!r} is not a power of p = {p} (>= p)", ln)
        m_exps[k] = m
    missing = [names[k] for k in range(len(names)) if m_exps[k] is None]
    if missing:
        raise ParseError(f"no order declared for {', '.join(missing)}")

    # classify relations, validate index restrictions on the raw words
    pow_raw = {}   # i -> (line, letters)
    comm_raw = {}  # (j, i) -> (line, letters, inverted)
    for ln, lhs, rhs in raw_rels:
        m = re.fullmatch(r"\[\s*(\w+)\s*,\s*(\w+)\s*\]", lhs)
        if m:
            x, y = m.group(1), m.group(2)
            for nm in (x, y):
                if nm not in name_to_idx:
                    raise ParseError(f"unknown generator {nm!r}", ln)
            ix, iy = name_to_idx[x], name_to_idx[y]
            if ix == iy:
                raise ParseError(f"commutator [{x},{y}] of a generator with itself", ln)
            j, i = max(ix, iy), min(ix, iy)
            inverted = ix < iy  # [lo, hi] given; store [hi, lo] = rhs^-1
            if (j, i) in comm_raw:
                raise ParseError(f"duplicate relation for [{names[j-1]},{names[i-1]}]", ln)
            letters = _parse_word_letters(rhs, tuple(names), False, ln)
            for idx, _ in letters:
                if idx <= j:
                    raise ParseError(
                        f"index restriction: [{x},{y}] right-hand side may only use "
                        f"generators after {names[j-1]}", ln)
            comm_raw[(j, i)] = (ln, letters, inverted)
            continue
        m = re.fullmatch(r"(\w+)\^(\d+)", lhs)
        if not m:
            raise ParseError(f"cannot parse relation left-hand side {lhs!r}", ln)
        nm, e = m.group(1), int(m.group(2))
        if nm not in name_to_idx:
            raise ParseError(f"unknown generator {nm!r}", ln)
        i = name_to_idx[nm]
        if e != p ** m_exps[i - 1]:
            raise ParseError(
                f"power relation exponent {e} must equal the declared order "
                f"{p ** m_exps[i-1]} of {nm!r}", ln)
        if i in pow_raw:
            raise ParseError(f"duplicate power relation for {nm!r}", ln)
        letters = _parse_word_letters(rhs, tuple(names), False, ln)
        for idx, _ in letters:
            if idx <= i:
                raise ParseError(
                    f"index restriction: power relation of {nm!r} may only use "
                    f"generators after {nm}", ln)
        pow_raw[i] = (ln, letters)

    return _normalize(p, tuple(names), tuple(m_exps), pow_raw, comm_raw, name)


def _normalize(p, names, m_exps, pow_raw, comm_raw, name):
    """Reduce raw relation words to collected normal form.

    A relation at level L only uses generators above L, so processing
    levels from n down to 1 lets each word be collected in the partial
    presentation whose higher relations are already canonical.
    """
    from . import collector

    n = len(names)
    canon_pow = {}
    canon_comm = {}
    for level in range(n, 0, -1):
        todo_pow = [(i, v) for i, v in pow_raw.items() if i == level]
        todo_comm = [(k, v) for k, v in comm_raw.items() if k[0] == level]
        if not todo_pow and not todo_comm:
            continue
        partial = PcPresentation(p, names, m_exps, canon_pow, canon_comm)
        grp = collector.Group(partial)
        for i, (ln, letters) in todo_pow:
            elem = grp.evaluate(Word(tuple(letters)))
            w = elem.as_word()
            if w:
                canon_pow[i] = w
        for (j, i), (ln, letters, inverted) in todo_comm:
            elem = grp.evaluate(Word(tuple(letters)))
            if inverted:
                elem = elem.inverse()
            w = elem.as_word()
            if w:
                canon_comm[(j, i)] = w
    return PcPresentation(p, names, m_exps, canon_pow, canon_comm, name)


def render(P: PcPresentation) -> str:
    """Canonical source text; parse(render(P)) == P."""
    lines = [f"p = {P.p}"]
    lines.append("gens " + " ".join(P.names))
    lines.append("orders " + " ".join(f"{nm}:{P.q(k + 1)}" for k, nm in enumerate(P.names)))
    for i in sorted(P.power_rels):
        lines.append(f"rel {P.names[i - 1]}^{P.q(i)} = {P.render_word(P.power_rels[i])}")
    for j, i in sorted(P.comm_rels):
        lines.append(f"rel [{P.names[j - 1]},{P.names[i - 1]}] = {P.render_word(P.comm_rels[(j, i)])}")
    return "\n".join(lines) + "\n"
