"""Permutation-type quotients and Todd-Coxeter coset enumeration.

A motion is recorded per ring *label* (its position at the start): ``perm``
sends a label to its final position and the twist/sign vector records how
often that ring was flipped.  Products are read left to right, so the
semidirect law is ``(p1, v1)(p2, v2) = (p2 o p1, v1 + v2 o p1)``.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import GenLetter, GroupId, GroupWord, alphabet, sigma, tau

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_then(p: Perm, q: Perm) -> Perm:
    """``p`` first, then ``q``."""
    return tuple(q[x - 1] for x in p)


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for k, x in enumerate(p, 1):
        out[x - 1] = k
    return tuple(out)


def cycle_notation(p: Perm) -> str:
    seen, cycles = set(), []
    for start in range(1, len(p) + 1):
        if start in seen or p[start - 1] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p[x - 1]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def _swap(n: int, i: int) -> Perm:
    p = list(range(1, n + 1))
    p[i - 1], p[i] = i + 1, i
    return tuple(p)


@dataclass(frozen=True)
class TwistPerm:
    """Element of Sigma_n^Z: permutation plus integer twist per ring."""

    perm: Perm
    twist: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> TwistPerm:
        return cls(identity_perm(n), (0,) * n)

    def then(self, other: TwistPerm) -> TwistPerm:
        twist = tuple(a + other.twist[self.perm[k] - 1] for k, a in enumerate(self.twist))
        return TwistPerm(perm_then(self.perm, other.perm), twist)

    def inverse(self) -> TwistPerm:
        inv = perm_inverse(self.perm)
        return TwistPerm(inv, tuple(-self.twist[inv[k] - 1] for k in range(len(inv))))

    def is_identity(self) -> bool:
        return self.perm == identity_perm(len(self.perm)) and not any(self.twist)

    def mod2(self) -> SignedPerm:
        return SignedPerm(self.perm, tuple(-1 if t % 2 else 1 for t in self.twist))

    def __str__(self):
        return f"{cycle_notation(self.perm)} {list(self.twist)}"


@dataclass(frozen=True)
class SignedPerm:
    """Element of Sigma_n^+-: permutation plus orientation sign per ring."""

    perm: Perm
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(identity_perm(n), (1,) * n)

    def then(self, other: SignedPerm) -> SignedPerm:
        signs = tuple(s * other.signs[self.perm[k] - 1] for k, s in enumerate(self.signs))
        return SignedPerm(perm_then(self.perm, other.perm), signs)

    def inverse(self) -> SignedPerm:
        inv = perm_inverse(self.perm)
        return SignedPerm(inv, tuple(self.signs[inv[k] - 1] for k in range(len(inv))))

    def is_identity(self) -> bool:
        return self.perm == identity_perm(len(self.perm)) and all(s == 1 for s in self.signs)

    def __str__(self):
        return f"{cycle_notation(self.perm)} {list(self.signs)}"


def _letter_twist(x: GenLetter, n: int) -> TwistPerm:
    if x.kind in ("rho", "sigma"):
        return TwistPerm(_swap(n, x.index), (0,) * n)
    if x.kind == "tau":
        v = [0] * n
        v[x.index - 1] = x.exponent
        return TwistPerm(identity_perm(n), tuple(v))
    # McCool letters are pure and untwisted
    return TwistPerm.identity(n)


def perm_image(w: GroupWord) -> Perm:
    n = w.group.n
    p = identity_perm(n)
    for x in w.letters:
        if x.kind in ("rho", "sigma"):
            p = perm_then(p, _swap(n, x.index))
    return p


def twist_image(w: GroupWord) -> TwistPerm:
    """Image in Sigma_n^Z; not defined on R_n where tau_i^2 = 1."""
    if w.group.family in ("R", "PUR") and any(x.kind == "tau" for x in w.letters):
        raise ValueError("twist image is not defined on R_n")
    n = w.group.n
    g = TwistPerm.identity(n)
    for x in w.letters:
        g = g.then(_letter_twist(x, n))
    return g


def signed_image(w: GroupWord) -> SignedPerm:
    n = w.group.n
    g = TwistPerm.identity(n)
    for x in w.letters:
        g = g.then(_letter_twist(x, n))
    return g.mod2()


def is_pure(w: GroupWord) -> bool:
    return perm_image(w) == identity_perm(w.group.n)


def in_untwisted(w: GroupWord) -> bool:
    """Membership in the index-2^n subgroup UR_n of R_n."""
    return all(s == 1 for s in signed_image(w).signs)


def sorting_word(p: Perm) -> list[GenLetter]:
    """sigma letters whose motion sends ring k to position p[k-1]."""
    n = len(p)
    target = [0] * n  # target[pos-1]: label wanted at pos
    for label, pos in enumerate(p, 1):
        target[pos - 1] = label
    arr = list(range(1, n + 1))
    letters = []
    for pos in range(1, n + 1):
        q = arr.index(target[pos - 1]) + 1
        for k in range(q - 1, pos - 1, -1):
            letters.append(sigma(k))
            arr[k - 1], arr[k] = arr[k], arr[k - 1]
    return letters


def section_word(g: SignedPerm | TwistPerm, group: GroupId) -> GroupWord:
    """Canonical word over tau and sigma letters with the given image."""
    vec = g.twist if isinstance(g, TwistPerm) else tuple(0 if s == 1 else 1 for s in g.signs)
    letters: list[GenLetter] = []
    for k, v in enumerate(vec, 1):
        letters.extend([tau(k, 1 if v > 0 else -1)] * abs(v))
    letters.extend(sorting_word(g.perm))
    return GroupWord(group, tuple(letters))


# --------------------------------------------------------------------------
# coset enumeration

DEFAULT_LIMIT = 10 ** 6


def default_limit() -> int:
    return int(os.environ.get("MG_TC_LIMIT", DEFAULT_LIMIT))


@dataclass
class CosetTable:
    group: GroupId
    generators: list[GenLetter]
    subgroup: list[GroupWord]
    status: str  # "complete" or "overflow"
    limit: int
    # rows[c][2k] = c . g_k, rows[c][2k+1] = c . g_k^-1, cosets numbered from 0
    rows: list[list[int]] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    @property
    def count(self) -> int | None:
        return len(self.rows) if self.complete else None

    def act(self, coset: int, w: GroupWord) -> int:
        col = {g: 2 * k for k, g in enumerate(self.generators)}
        for x in w.letters:
            base = GenLetter(x.kind, x.index, 1, x.target)
            coset = self.rows[coset][col[base] + (0 if x.exponent == 1 else 1)]
        return coset

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["coset", "generator", "target"])
        for c, row in enumerate(self.rows, 1):
            for k, g in enumerate(self.generators):
                out.writerow([c, str(g), row[2 * k] + 1])
        return buf.getvalue()


class _Enumerator:
    """Felsch-style enumeration with union-find coincidence handling."""

    def __init__(self, ngens: int, relators: list[list[int]], limit: int):
        self.m = 2 * ngens
        self.limit = limit
        self.table: list[list[int | None]] = [[None] * self.m]
        self.parent = [0]
        self.stack: list[tuple[int, int]] = []
        by_first: dict[int, set[tuple[int, ...]]] = {x: set() for x in range(self.m)}
        for r in relators:
            for word in (r, [x ^ 1 for x in reversed(r)]):
                for k in range(len(word)):
                    rot = tuple(word[k:] + word[:k])
                    by_first[rot[0]].add(rot)
        self.by_first = {x: sorted(v) for x, v in by_first.items()}

    def live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if len(self.table) >= self.limit:
            raise OverflowError
        new = len(self.table)
        self.table.append([None] * self.m)
        self.parent.append(new)
        self.table[c][x] = new
        self.table[new][x ^ 1] = c
        self.stack.append((c, x))

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        k = 0
        while k < len(queue):
            dead = queue[k]
            k += 1
            for x in range(self.m):
                d = self.table[dead][x]
                if d is None:
                    continue
                if self.table[d][x ^ 1] == dead:
                    self.table[d][x ^ 1] = None
                mu, nu = self.rep(dead), self.rep(d)
                if self.table[mu][x] is not None:
                    self._merge(nu, self.table[mu][x], queue)
                elif self.table[nu][x ^ 1] is not None:
                    self._merge(mu, self.table[nu][x ^ 1], queue)
                else:
                    self.table[mu][x] = nu
                    self.table[nu][x ^ 1] = mu
                    self.stack.append((mu, x))

    def scan(self, c: int, word: Sequence[int], fill: bool = False) -> None:
        t = self.table
        while True:
            f, i = c, 0
            b, j = c, len(word) - 1
            while i <= j and t[f][word[i]] is not None:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][word[j] ^ 1] is not None:
                b = t[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][word[i] ^ 1] = f
                self.stack.append((f, word[i]))
                return
            if not fill:
                return
            self.define(f, word[i])

    def process_deductions(self) -> None:
        while self.stack:
            a, x = self.stack.pop()
            if not self.live(a):
                continue
            for w in self.by_first[x]:
                self.scan(a, w)
                if not self.live(a):
                    break
            b = self.table[a][x] if self.live(a) else None
            if b is not None and self.live(b):
                for w in self.by_first[x ^ 1]:
                    self.scan(b, w)
                    if not self.live(b):
                        break

    def run(self, subgroup: list[list[int]]) -> None:
        for h in subgroup:
            self.scan(0, h, fill=True)
            self.process_deductions()
        c = 0
        while c < len(self.table):
            for x in range(self.m):
                if not self.live(c):
                    break
                if self.table[c][x] is None:
                    self.define(c, x)
                    self.process_deductions()
            c += 1

    def compact(self) -> list[list[int]]:
        live = [c for c in range(len(self.table)) if self.live(c)]
        index = {c: k for k, c in enumerate(live)}
        return [[index[self.rep(self.table[c][x])] for x in range(self.m)] for c in live]


def _columns(w: GroupWord, col: dict[GenLetter, int]) -> list[int]:
    out = []
    for x in w.letters:
        base = GenLetter(x.kind, x.index, 1, x.target)
        out.append(col[base] + (0 if x.exponent == 1 else 1))
    return out


def todd_coxeter(relators, extra_relators: Iterable[GroupWord] = (),
                 subgroup: Iterable[GroupWord] = (), limit: int | None = None,
                 generators: Sequence[GenLetter] | None = None) -> CosetTable:
    """Enumerate the cosets of ``subgroup`` in the group presented by
    ``relators`` (a RelatorSet) together with ``extra_relators``.

    ``generators`` defaults to the full alphabet of the relator set's group.
    Returns a table with status ``"overflow"`` when more than ``limit``
    cosets would be needed.
    """
    group = relators.group
    limit = limit if limit is not None else default_limit()
    gens = list(generators) if generators is not None else alphabet(group)
    col = {g: 2 * k for k, g in enumerate(gens)}
    rels = [_columns(w, col) for w in (*relators.relators, *extra_relators) if len(w)]
    subgroup = list(subgroup)
    en = _Enumerator(len(gens), rels, limit)
    try:
        en.run([_columns(h, col) for h in subgroup])
    except OverflowError:
        return CosetTable(group, gens, subgroup, "overflow", limit)
    return CosetTable(group, gens, subgroup, "complete", limit, en.compact())


def table_is_consistent(table: CosetTable, relators: Iterable[GroupWord]) -> bool:
    """Every relator closes at every coset and the table is a permutation
    representation."""
    rels = list(relators)
    for c in range(len(table.rows)):
        for w in rels:
            if table.act(c, w) != c:
                return False
        for k in range(len(table.generators)):
            if table.rows[table.rows[c][2 * k]][2 * k + 1] != c:
                return False
    return all(table.act(0, h) == 0 for h in table.subgroup)
