"""Braid words, an exact triviality test, and the endpoint map W_n -> B_2n.

Triviality is decided with Dynnikov coordinates: B_m acts on Z^(2m) by
piecewise-linear integer formulas, and a braid is trivial exactly when it
fixes the vector (0, 1, 0, 1, ..., 0, 1).  Python integers keep this exact.

Crossing convention: ``b_i`` (exponent +1) is the crossing in which the strand
in position i passes in front of the strand in position i+1.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import GroupId, GroupWord, relabel


class BraidSyntaxError(ValueError):
    pass


class NoDictionaryFound(RuntimeError):
    """No sign assignment of the endpoint templates kills every W_n relator."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(i), int(e)) for i, e in self.letters))
        for i, e in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"generator b{i} out of range for B_{self.strands}")
            if e not in (1, -1):
                raise ValueError("braid letters must have exponent +-1")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise ValueError("strand count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def reduced(self) -> BraidWord:
        out: list[tuple[int, int]] = []
        for i, e in self.letters:
            if out and out[-1] == (i, -e):
                out.pop()
            else:
                out.append((i, e))
        return BraidWord(self.strands, tuple(out))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"b{i}" if e == 1 else f"b{i}^-1" for i, e in self.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    letters = []
    for m in re.finditer(r"\S+", text):
        if m.group() in ("1", "e"):
            continue
        tm = re.fullmatch(r"b(\d+)(?:\^([+-]?1))?", m.group())
        if tm is None:
            raise BraidSyntaxError(f"cannot parse {m.group()!r} at position {m.start()}")
        letters.append((int(tm.group(1)), int(tm.group(2) or 1)))
    return BraidWord(strands, tuple(letters))


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


def dynnikov_act(coords: Sequence[int], i: int, e: int) -> list[int]:
    """Action of b_i^e on a coordinate vector (a1, b1, ..., am, bm)."""
    v = list(coords)
    k = 2 * (i - 1)
    a1, b1, a2, b2 = v[k], v[k + 1], v[k + 2], v[k + 3]
    if e > 0:
        d = a1 - _neg(b1) - a2 + _pos(b2)
        v[k] = a1 + _pos(b1) + _pos(_pos(b2) - d)
        v[k + 1] = b2 - _pos(d)
        v[k + 2] = a2 + _neg(b2) + _neg(_neg(b1) + d)
        v[k + 3] = b1 + _pos(d)
    else:
        c = a1 + _neg(b1) - a2 - _pos(b2)
        v[k] = a1 - _pos(b1) - _pos(_pos(b2) + c)
        v[k + 1] = b2 + _neg(c)
        v[k + 2] = a2 - _neg(b2) - _neg(_neg(b1) - c)
        v[k + 3] = b1 - _neg(c)
    return v


def reference_coords(strands: int) -> tuple[int, ...]:
    return (0, 1) * strands


def triviality_coords(b: BraidWord, start: Sequence[int] | None = None) -> tuple[int, ...]:
    """Coordinates of the reference curve system after applying ``b``."""
    v = list(start if start is not None else reference_coords(b.strands))
    for i, e in b.letters:
        v = dynnikov_act(v, i, e)
    return tuple(v)


def braid_is_trivial(b: BraidWord) -> bool:
    return triviality_coords(b) == reference_coords(b.strands)


def braid_perm(b: BraidWord) -> tuple[int, ...]:
    """Permutation of strands as a tuple p with p[k-1] = end position of strand k."""
    where = list(range(1, b.strands + 1))  # where[k-1]: position of strand k
    at = list(range(1, b.strands + 1))     # at[pos-1]: strand at position pos
    for i, _ in b.letters:
        s, t = at[i - 1], at[i]
        at[i - 1], at[i] = t, s
        where[s - 1], where[t - 1] = i + 1, i
    return tuple(where)


def rho_template(i: int, signs: tuple[int, int]) -> list[tuple[int, int]]:
    """Block transposition of strands {2i-1, 2i} past {2i+1, 2i+2}.

    ``signs[0]`` is the sign of both crossings with strand 2i+1, ``signs[1]``
    the sign of both crossings with strand 2i+2.
    """
    p, q = signs
    return [(2 * i, p), (2 * i - 1, p), (2 * i + 1, q), (2 * i, q)]


sigma_template = rho_template


def tau_template(i: int, sign: int) -> list[tuple[int, int]]:
    """Half twist exchanging the two endpoints of wicket i."""
    return [(2 * i - 1, sign)]


@dataclass(frozen=True)
class GeneratorDictionary:
    n: int
    rho_signs: tuple[int, int]
    sigma_signs: tuple[int, int]
    tau_sign: int
    # every sign assignment that passed when this dictionary was pinned
    winners: tuple[tuple[tuple[int, int], tuple[int, int], int], ...] = field(default=(), compare=False)

    @property
    def key(self):
        return (self.rho_signs, self.sigma_signs, self.tau_sign)

    def image(self, kind: str, i: int) -> BraidWord:
        m = 2 * self.n
        if kind == "rho":
            return BraidWord(m, tuple(rho_template(i, self.rho_signs)))
        if kind == "sigma":
            return BraidWord(m, tuple(sigma_template(i, self.sigma_signs)))
        if kind == "tau":
            return BraidWord(m, tuple(tau_template(i, self.tau_sign)))
        raise ValueError(f"no braid image for {kind} letters")

    def restrict(self, n: int) -> GeneratorDictionary:
        return GeneratorDictionary(n, self.rho_signs, self.sigma_signs, self.tau_sign)

    def table(self) -> list[tuple[str, BraidWord]]:
        rows = []
        for kind, prefix, top in (("rho", "r", self.n - 1), ("sigma", "s", self.n - 1),
                                  ("tau", "t", self.n)):
            for i in range(1, top + 1):
                rows.append((f"{prefix}{i}", self.image(kind, i)))
        return rows

    def to_text(self) -> str:
        return "".join(f"{g}\t{b}\n" for g, b in self.table())


def _block_perm(n: int, i: int) -> tuple[int, ...]:
    p = list(range(1, 2 * n + 1))
    a, b = 2 * i - 1, 2 * i + 1
    p[a - 1], p[a], p[b - 1], p[b] = b, b + 1, a, a + 1
    return tuple(p)


def _transposition(m: int, a: int, b: int) -> tuple[int, ...]:
    p = list(range(1, m + 1))
    p[a - 1], p[b - 1] = b, a
    return tuple(p)


def dictionary_permutations_ok(d: GeneratorDictionary) -> bool:
    n, m = d.n, 2 * d.n
    for i in range(1, n):
        for kind in ("rho", "sigma"):
            if braid_perm(d.image(kind, i)) != _block_perm(n, i):
                return False
    return all(braid_perm(d.image("tau", i)) == _transposition(m, 2 * i - 1, 2 * i)
               for i in range(1, n + 1))


def endpoint_hom(w: GroupWord, d: GeneratorDictionary) -> BraidWord:
    """Letter by letter substitution of the dictionary images into ``w``."""
    if w.group.family not in ("W", "UW"):
        raise ValueError(f"endpoint map is defined on W_n and UW_n, not {w.group.family}")
    if w.group.n != d.n:
        d = d.restrict(w.group.n)
    letters: list[tuple[int, int]] = []
    for x in w.letters:
        img = d.image(x.kind, x.index)
        letters.extend(img.letters if x.exponent == 1 else img.inverse().letters)
    return BraidWord(2 * w.group.n, tuple(letters))


def dictionary_kills_relators(d: GeneratorDictionary) -> bool:
    from .presentations import relators
    return all(braid_is_trivial(endpoint_hom(r, d)) for r in relators(GroupId("W", d.n)))


def candidate_dictionaries(n: int) -> Iterable[GeneratorDictionary]:
    pairs = list(itertools.product((-1, 1), repeat=2))
    for rs, ss, ts in itertools.product(pairs, pairs, (-1, 1)):
        yield GeneratorDictionary(n, rs, ss, ts)


_PINNED: dict[int, GeneratorDictionary] = {}


def pin_dictionary(n: int) -> GeneratorDictionary:
    """Search the template sign space for dictionaries that respect the
    required permutations and send every relator of W_n to a trivial braid.

    Returns the lexicographically least winner; all winners are recorded in
    ``winners``.
    """
    if n < 2:
        raise ValueError("pin_dictionary needs n >= 2")
    if n in _PINNED:
        return _PINNED[n]
    winners = [d for d in candidate_dictionaries(n)
               if dictionary_permutations_ok(d) and dictionary_kills_relators(d)]
    if not winners:
        raise NoDictionaryFound(f"no endpoint dictionary for W_{n}; check the templates")
    winners.sort(key=lambda d: d.key)
    best = winners[0]
    pinned = GeneratorDictionary(n, best.rho_signs, best.sigma_signs, best.tau_sign,
                                 tuple(d.key for d in winners))
    _PINNED[n] = pinned
    return pinned


def default_dictionary(n: int) -> GeneratorDictionary:
    """Pinned dictionary for n >= 2 (pinned at n=3, where every relation
    family is present, and restricted); n=1 only needs the tau image."""
    base = pin_dictionary(3)
    return base.restrict(n) if n != 3 else base


def word_is_trivial_W(w: GroupWord, d: GeneratorDictionary | None = None) -> bool:
    """Word problem in W_n (and UW_n, which injects into W_n)."""
    if w.group.family == "UW":
        w = relabel(w, GroupId("W", w.group.n))
    if w.group.family != "W":
        raise ValueError(f"{w.group} is not a wicket group")
    d = d or default_dictionary(w.group.n)
    return braid_is_trivial(endpoint_hom(w, d))
