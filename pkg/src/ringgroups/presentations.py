"""Relator sets for UW_n, UR_n, W_n, VR_n, R_n (and PUR_n) and the ut rewriting.

Every relation ``left = right`` is stored as the relator ``left * right^-1``.
Relators come out in a fixed order: relation family first, then indices,
then the signs epsilon, eta of the tau relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .words import (
    GenLetter, GroupId, GroupWord, free_reduce, invert, rho, sigma, tau,
)


@dataclass(frozen=True)
class RelatorSet:
    group: GroupId
    relators: tuple[GroupWord, ...]
    # relation family of each relator, parallel to ``relators``
    labels: tuple[str, ...] = ()

    def __iter__(self):
        return iter(self.relators)

    def __len__(self):
        return len(self.relators)

    def to_text(self) -> str:
        return "".join(f"{w}\n" for w in self.relators)


class _Builder:
    def __init__(self, group: GroupId):
        self.group = group
        self.relators: list[GroupWord] = []
        self.labels: list[str] = []

    def rel(self, label: str, left: Iterable[GenLetter], right: Iterable[GenLetter] = ()):
        lw = GroupWord(self.group, tuple(left))
        rw = GroupWord(self.group, tuple(right))
        self.relators.append(free_reduce(GroupWord(self.group, lw.letters + invert(rw).letters)))
        self.labels.append(label)

    def comm(self, label: str, a: GenLetter, b: GenLetter):
        self.rel(label, [a, b], [b, a])

    def build(self) -> RelatorSet:
        return RelatorSet(self.group, tuple(self.relators), tuple(self.labels))


def _untwisted(b: _Builder, n: int) -> None:
    for i in range(1, n):
        for j in range(i + 2, n):
            b.comm("far rho-rho", rho(i), rho(j))
    for i in range(1, n):
        for j in range(i + 2, n):
            b.comm("far sigma-sigma", sigma(i), sigma(j))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                b.comm("far rho-sigma", rho(i), sigma(j))
    for i in range(1, n - 1):
        b.rel("braid rho", [rho(i), rho(i + 1), rho(i)], [rho(i + 1), rho(i), rho(i + 1)])
    for i in range(1, n - 1):
        b.rel("braid sigma", [sigma(i), sigma(i + 1), sigma(i)],
              [sigma(i + 1), sigma(i), sigma(i + 1)])
    for i in range(1, n - 1):
        b.rel("mixed rho-sigma-sigma", [rho(i), sigma(i + 1), sigma(i)],
              [sigma(i + 1), sigma(i), rho(i + 1)])
        b.rel("mixed sigma-sigma-rho", [sigma(i), sigma(i + 1), rho(i)],
              [rho(i + 1), sigma(i), sigma(i + 1)])
        b.rel("mixed sigma-rho-rho", [sigma(i), rho(i + 1), rho(i)],
              [rho(i + 1), rho(i), sigma(i + 1)])


def _tau_relations(b: _Builder, n: int) -> None:
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            b.comm("tau-tau", tau(i), tau(j))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                b.comm("far rho-tau", rho(i), tau(j))
                b.comm("far sigma-tau", sigma(i), tau(j))
    signs = (1, -1)
    for i in range(1, n):
        for e in signs:
            for h in signs:
                b.rel("tau-sigma", [tau(i, e), sigma(i, h)], [sigma(i, h), tau(i + 1, e)])
                b.rel("tau-sigma", [tau(i + 1, e), sigma(i, h)], [sigma(i, h), tau(i, e)])
    for i in range(1, n):
        for e in signs:
            b.rel("tau-rho", [tau(i, e), rho(i)], [rho(i), tau(i + 1, e)])
            b.rel("tau-rho", [tau(i + 1, e), rho(i)],
                  [sigma(i, -e), rho(i, -1), sigma(i, e), tau(i, e)])
    for i in range(1, n):
        for e in signs:
            b.rel("tau-rho^-1", [tau(i, e), rho(i, -1)],
                  [sigma(i, -e), rho(i), sigma(i, e), tau(i + 1, e)])
            b.rel("tau-rho^-1", [tau(i + 1, e), rho(i, -1)], [rho(i, -1), tau(i, e)])


def relators(group: GroupId) -> RelatorSet:
    """The defining relators of ``group`` as listed in the presentations."""
    fam, n = group.family, group.n
    if fam == "PUR":
        from .free_autos import pur_relators
        return pur_relators(n)
    b = _Builder(group)
    _untwisted(b, n)
    if fam in ("W", "VR", "R"):
        _tau_relations(b, n)
    if fam in ("UR", "VR", "R"):
        for i in range(1, n):
            b.rel("sigma^2", [sigma(i), sigma(i)])
    if fam == "R":
        for i in range(1, n + 1):
            b.rel("tau^2", [tau(i), tau(i)])
    return b.build()


def _pass_tau(t: GenLetter, x: GenLetter) -> tuple[list[GenLetter], GenLetter]:
    """Rewrite ``t x`` as ``X t'`` with X free of tau letters."""
    i, j, e = x.index, t.index, t.exponent
    if j not in (i, i + 1):
        return [x], t
    if x.kind == "sigma":
        return [x], tau(i + 1 if j == i else i, e)
    if x.exponent == 1:
        if j == i:
            return [x], tau(i + 1, e)
        return [sigma(i, -e), rho(i, -1), sigma(i, e)], tau(i, e)
    if j == i:
        return [sigma(i, -e), rho(i), sigma(i, e)], tau(i + 1, e)
    return [x], tau(i, e)


def tau_normal_form(w: GroupWord) -> tuple[GroupWord, GroupWord]:
    """Split ``w`` as ``u * t`` with u over rho/sigma and t over tau.

    Only the tau relations of the W_n presentation are used, so the result
    is valid in W_n, VR_n and R_n alike.  ``t`` is returned sorted by index
    (the tau_i commute).
    """
    u: list[GenLetter] = []
    pending: list[GenLetter] = []
    for x in w.letters:
        if x.kind == "tau":
            pending.append(x)
            continue
        block = [x]
        new_pending = []
        for t in reversed(pending):
            moved: list[GenLetter] = []
            for y in block:
                ys, t = _pass_tau(t, y)
                moved.extend(ys)
            block = moved
            new_pending.append(t)
        pending = new_pending[::-1]
        u.extend(block)
    totals: dict[int, int] = {}
    for t in pending:
        totals[t.index] = totals.get(t.index, 0) + t.exponent
    t_letters = []
    for k in sorted(totals):
        s = totals[k]
        t_letters.extend([tau(k, 1 if s > 0 else -1)] * abs(s))
    return free_reduce(GroupWord(w.group, tuple(u))), GroupWord(w.group, tuple(t_letters))


@dataclass(frozen=True)
class RelatorReport:
    group: GroupId
    representation: str
    rows: tuple[tuple[GroupWord, bool], ...]

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.rows)

    def to_text(self) -> str:
        lines = [f"# {self.group} under {self.representation}"]
        for w, ok in self.rows:
            lines.append(f"{w}\t{'pass' if ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "group": str(self.group),
            "representation": self.representation,
            "rows": [{"relator": str(w), "target": self.representation, "pass": ok}
                     for w, ok in self.rows],
        }


def verify_relators(group: GroupId, rep: str | Callable[[GroupWord], bool],
                    extra: Iterable[GroupWord] = ()) -> RelatorReport:
    """Check every relator of ``group`` maps to the identity under ``rep``.

    ``rep`` is a representation name (see :mod:`ringgroups.representations`)
    or a predicate deciding whether a word's image is trivial.
    """
    from .representations import get_representation
    if callable(rep):
        name, trivial = getattr(rep, "__name__", "custom"), rep
    else:
        r = get_representation(rep)
        r.check_group(group)
        name, trivial = r.name, r.is_trivial
    rows = tuple((w, bool(trivial(w))) for w in (*relators(group).relators, *extra))
    return RelatorReport(group, name, rows)
