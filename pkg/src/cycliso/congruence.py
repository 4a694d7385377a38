"""Coset-style enumeration of finite monoid congruences.

Given a presentation on alphabet A with relation pairs (u, v), this
module enumerates the quotient of the free monoid A* by the two-sided
congruence the relations generate, in the style of the Todd-Coxeter
procedure adapted to monoids: no inverses, a single distinguished slot
for the class of the empty word, and every relation pushed at every
class (not just at the identity).

The table is a partial deterministic automaton over A.  Each live slot
is a tentative congruence class; pushing relation (u, v) at slot s
traces both words from s, defining missing edges as brand-new slots,
and merges the two endpoints.  Merging is processed to a fixed point
through a queue over a union-find keeping the smaller id as
representative, so slot 0 (the empty word) can never die.  If the
sweep completes, the table is a total automaton whose slot count is
exactly the size of the presented monoid; if the slot budget runs out
first the enumeration is inconclusive, never wrong.

Used to machine-check that a presentation defines a given finite
monoid: the canonical generator assignment makes the monoid a quotient
of the presented one, so equality of (finite) sizes pins them equal.
"""

import time
from collections import deque
from dataclasses import dataclass

from .monoid import build_by_restrictions
from .presentations import (
    build_Q,
    build_R,
    check_satisfaction,
    q_to_r_substitution,
    r_to_q_substitution,
    substitute,
)

__all__ = [
    "BudgetExceededError",
    "CongruenceTable",
    "enumerate_quotient",
    "word_normal_form",
    "check_consequence",
    "VerifyReport",
    "verify_defines",
    "BridgeReport",
    "check_tietze_bridge",
    "DEFAULT_BUDGET_FACTOR",
]

DEFAULT_BUDGET_FACTOR = 64  # max slots per target element, when a target is known


class BudgetExceededError(RuntimeError):
    """The slot budget ran out before the table closed: inconclusive."""

    def __init__(self, max_slots, slots_used, merges):
        super().__init__(
            f"inconclusive (budget): {slots_used} slots created, "
            f"budget {max_slots}, {merges} merges"
        )
        self.max_slots = max_slots
        self.slots_used = slots_used
        self.merges = merges


@dataclass(frozen=True)
class CongruenceTable:
    """A closed enumeration: a total automaton on the congruence classes.

    ``edges`` is flat, ``edges[s * width + a]`` being the class of
    (word of s) followed by letter a.  Slot 0 is the class of the empty
    word.  ``slots_used`` and ``merges`` record how hard the run was.
    """

    alphabet: tuple
    size: int
    edges: tuple
    slots_used: int
    merges: int

    @property
    def width(self):
        return len(self.alphabet)

    def follow(self, slot, letter):
        return self.edges[slot * self.width + letter]

    def trace(self, word, start=0):
        """Class reached from `start` by the word's letters."""
        cur = start
        width = self.width
        edges = self.edges
        for a in word:
            cur = edges[cur * width + a]
        return cur


def enumerate_quotient(presentation, max_slots):
    """Enumerate the monoid the presentation defines; see module notes.

    Deterministic: slots are created in a fixed sweep order, so repeated
    runs produce identical tables.  Raises BudgetExceededError when more
    than max_slots slots would be needed before closing.
    """
    width = len(presentation.alphabet)
    if width == 0:
        raise ValueError("empty alphabet")
    if max_slots < 1:
        raise ValueError(f"slot budget must be positive, got {max_slots!r}")
    # Duplicate relation pairs impose nothing new; skipping them keeps
    # the sweep linear in the number of distinct relations.
    relations = list(dict.fromkeys(presentation.relations))

    tab = [-1] * width
    parent = [0]
    merges = 0
    pending = deque()

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def merge(a, b):
        nonlocal merges
        pending.append((a, b))
        while pending:
            x, y = pending.popleft()
            x = find(x)
            y = find(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            parent[y] = x
            merges += 1
            bx = x * width
            by = y * width
            for k in range(width):
                t = tab[by + k]
                if t != -1:
                    u = tab[bx + k]
                    if u == -1:
                        tab[bx + k] = t
                    else:
                        pending.append((u, t))

    def define():
        s = len(parent)
        if s >= max_slots:
            raise BudgetExceededError(max_slots, s, merges)
        parent.append(s)
        tab.extend([-1] * width)
        return s

    def trace_defining(start, word):
        cur = start
        for a in word:
            k = cur * width + a
            t = tab[k]
            if t == -1:
                t = define()
            else:
                t = find(t)
            tab[k] = t
            cur = t
        return cur

    s = 0
    while s < len(parent):
        if parent[s] != s:
            s += 1
            continue
        for u, v in relations:
            x = trace_defining(s, u)
            y = trace_defining(s, v)
            if x != y:
                merge(x, y)
            if parent[s] != s:
                # s was absorbed by a smaller slot, which was already
                # swept in full while live; nothing left to do here.
                break
        if parent[s] == s:
            base = s * width
            for k in range(width):
                if tab[base + k] == -1:
                    tab[base + k] = define()
        s += 1

    live = [i for i in range(len(parent)) if parent[i] == i]
    number = {old: new for new, old in enumerate(live)}
    edges = []
    for old in live:
        base = old * width
        for k in range(width):
            t = tab[base + k]
            assert t != -1, "live slot with an undefined edge after closure"
            edges.append(number[find(t)])
    return CongruenceTable(
        alphabet=presentation.alphabet,
        size=len(live),
        edges=tuple(edges),
        slots_used=len(parent),
        merges=merges,
    )


def word_normal_form(table, word):
    """Class ordinal of a word: its normal form in the quotient."""
    return table.trace(word)


def check_consequence(table, lhs, rhs):
    """Does lhs = rhs hold in the presented monoid?

    Sound and complete over a closed table: two words land in the same
    slot iff the congruence identifies them.
    """
    return table.trace(lhs) == table.trace(rhs)


@dataclass(frozen=True)
class VerifyReport:
    name: str
    n: int
    target_size: int
    quotient_size: int | None
    verdict: str  # "defines" | "differs" | "inconclusive"
    slots_used: int
    merges: int
    wall_ms: float

    @property
    def ok(self):
        return self.verdict == "defines"


def verify_defines(presentation, monoid, images=None, max_slots=None):
    """Decide whether the presentation defines the given monoid.

    First requires the generator assignment to satisfy every relation
    (so the monoid is a quotient of the presented one), then enumerates
    the presented monoid and compares cardinalities: equal finite sizes
    force the quotient map to be an isomorphism.
    """
    report = check_satisfaction(presentation, images)
    if not report.ok:
        raise ValueError(
            f"assignment violates {len(report.failures)} relation(s), "
            f"e.g. {report.failures[0][2]} = {report.failures[0][3]}"
        )
    target = len(monoid)
    if max_slots is None:
        max_slots = DEFAULT_BUDGET_FACTOR * target
    t0 = time.perf_counter()
    try:
        table = enumerate_quotient(presentation, max_slots)
    except BudgetExceededError as exc:
        wall_ms = (time.perf_counter() - t0) * 1000.0
        return VerifyReport(
            presentation.name,
            presentation.n,
            target,
            None,
            "inconclusive",
            exc.slots_used,
            exc.merges,
            wall_ms,
        )
    wall_ms = (time.perf_counter() - t0) * 1000.0
    verdict = "defines" if table.size == target else "differs"
    return VerifyReport(
        presentation.name,
        presentation.n,
        target,
        table.size,
        verdict,
        table.slots_used,
        table.merges,
        wall_ms,
    )


@dataclass(frozen=True)
class BridgeReport:
    """Cross-derivability of the two presentation families at one n."""

    n: int
    r_to_q: tuple  # (label, ok) per wide relation rewritten over 3 letters
    q_to_r: tuple  # (label, ok) per 3-letter relation rewritten over the wide alphabet

    @property
    def ok(self):
        return all(ok for _, ok in self.r_to_q) and all(
            ok for _, ok in self.q_to_r
        )


def check_tietze_bridge(n, r_table=None, q_table=None, max_slots=None):
    """Check each family's relations are consequences of the other's.

    The wide letters are rewritten by e_i -> h g^(i-1) e h g^(i-1) and
    tested in the 3-letter quotient; the 3-letter relations are
    rewritten by e -> e_n and tested in the wide quotient.  Together
    with the satisfaction checks this exhibits the two presentations as
    defining the same monoid.
    """
    if max_slots is None:
        max_slots = DEFAULT_BUDGET_FACTOR * len(build_by_restrictions(n))
    pres_r = build_R(n)
    pres_q = build_Q(n)
    if r_table is None:
        r_table = enumerate_quotient(pres_r, max_slots)
    if q_table is None:
        q_table = enumerate_quotient(pres_q, max_slots)

    into_q = r_to_q_substitution(n)
    r_to_q = tuple(
        (label, check_consequence(q_table, substitute(u, into_q), substitute(v, into_q)))
        for (u, v), label in zip(pres_r.relations, pres_r.labels)
    )
    into_r = q_to_r_substitution(n)
    q_to_r = tuple(
        (label, check_consequence(r_table, substitute(u, into_r), substitute(v, into_r)))
        for (u, v), label in zip(pres_q.relations, pres_q.labels)
    )
    return BridgeReport(n, r_to_q, q_to_r)
