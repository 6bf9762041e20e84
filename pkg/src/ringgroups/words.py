"""Generator alphabet and words for the ring and wicket groups.

Letters are ``rho_i``, ``sigma_i`` (1 <= i <= n-1) and ``tau_i`` (1 <= i <= n),
plus the McCool letters ``alpha_ij`` which only occur in words of the pure
untwisted ring group PUR_n.  All indices are 1-based.

Text form, one word per line, letters separated by whitespace::

    r1 s2^-1 t3^2 a1_3

A lone ``1`` or ``e`` denotes the identity.  Exponents are expanded on
parsing, so every stored letter has exponent +1 or -1.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

FAMILIES = ("UW", "W", "UR", "VR", "R", "PUR")

# families whose words may contain tau letters
TWISTED = frozenset({"W", "VR", "R"})
# families in which sigma_i^2 = 1
RING_FAMILIES = frozenset({"UR", "VR", "R", "PUR"})

_PREFIX = {"rho": "r", "sigma": "s", "tau": "t", "alpha": "a"}
_KIND = {v: k for k, v in _PREFIX.items()}


class WordError(ValueError):
    """Base class for malformed words."""


class WordSyntaxError(WordError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexOutOfRange(WordError):
    pass


class IllegalLetter(WordError):
    """Letter kind not admitted by the group family (e.g. tau in UW)."""


class GroupMismatch(WordError):
    pass


@dataclass(frozen=True, order=True)
class GroupId:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown group family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")

    def __str__(self):
        return f"{self.family}_{self.n}"


@dataclass(frozen=True, order=True)
class GenLetter:
    kind: str
    index: int
    exponent: int = 1
    # second subscript, only used by alpha letters
    target: int = 0

    def inverse(self) -> GenLetter:
        return GenLetter(self.kind, self.index, -self.exponent, self.target)

    def cancels(self, other: GenLetter) -> bool:
        return (self.kind == other.kind and self.index == other.index
                and self.target == other.target
                and self.exponent == -other.exponent)

    def __str__(self):
        name = _PREFIX[self.kind] + str(self.index)
        if self.kind == "alpha":
            name += f"_{self.target}"
        return name if self.exponent == 1 else f"{name}^{self.exponent}"


def rho(i: int, e: int = 1) -> GenLetter:
    return GenLetter("rho", i, e)


def sigma(i: int, e: int = 1) -> GenLetter:
    return GenLetter("sigma", i, e)


def tau(i: int, e: int = 1) -> GenLetter:
    return GenLetter("tau", i, e)


def alpha(i: int, j: int, e: int = 1) -> GenLetter:
    return GenLetter("alpha", i, e, j)


def check_letter(letter: GenLetter, group: GroupId) -> None:
    """Raise if ``letter`` is not a legal letter of ``group``."""
    n, family = group.n, group.family
    if letter.exponent not in (1, -1):
        raise WordError(f"letter {letter} is not normalized")
    if family == "PUR":
        if letter.kind != "alpha":
            raise IllegalLetter(f"{letter} is not a McCool letter; PUR admits only alpha_ij")
    elif letter.kind == "alpha":
        raise IllegalLetter(f"{letter} is only admitted in PUR")
    elif letter.kind == "tau" and family not in TWISTED:
        raise IllegalLetter(f"{family} has no tau generators")
    if letter.kind in ("rho", "sigma"):
        if not 1 <= letter.index <= n - 1:
            raise IndexOutOfRange(f"{letter}: index must lie in 1..{n - 1}")
    elif letter.kind == "tau":
        if not 1 <= letter.index <= n:
            raise IndexOutOfRange(f"{letter}: index must lie in 1..{n}")
    else:
        i, j = letter.index, letter.target
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise IndexOutOfRange(f"{letter}: need distinct indices in 1..{n}")


@dataclass(frozen=True)
class GroupWord:
    group: GroupId
    letters: tuple[GenLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            check_letter(letter, self.group)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return concat(self, other)

    def __str__(self):
        return format_word(self)

    def is_empty(self) -> bool:
        return not self.letters


def word(group: GroupId, letters: Iterable[GenLetter] = ()) -> GroupWord:
    return GroupWord(group, tuple(letters))


_TOKEN = re.compile(r"([rsta])(\d+)(?:_(\d+))?(?:\^([+-]?\d+))?$")


def parse_word(text: str, group: GroupId) -> GroupWord:
    """Parse whitespace separated letters such as ``"r1 s2^-1 t1"``."""
    letters: list[GenLetter] = []
    for m in re.finditer(r"\S+", text):
        token = m.group()
        if token in ("1", "e"):
            continue
        tm = _TOKEN.match(token)
        if tm is None:
            raise WordSyntaxError(f"cannot parse letter {token!r}", m.start())
        prefix, idx, target, exp = tm.groups()
        kind = _KIND[prefix]
        if (kind == "alpha") != (target is not None):
            raise WordSyntaxError(f"malformed letter {token!r}", m.start())
        power = int(exp) if exp is not None else 1
        step = 1 if power > 0 else -1
        base = GenLetter(kind, int(idx), step, int(target or 0))
        check_letter(base, group)
        letters.extend([base] * abs(power))
    return GroupWord(group, tuple(letters))


def format_word(w: GroupWord) -> str:
    """Inverse of :func:`parse_word`; the empty word prints as ``1``."""
    if not w.letters:
        return "1"
    return " ".join(str(x) for x in w.letters)


def _reduce(letters: Iterable[GenLetter]) -> list[GenLetter]:
    out: list[GenLetter] = []
    for x in letters:
        if out and out[-1].cancels(x):
            out.pop()
        else:
            out.append(x)
    return out


def free_reduce(w: GroupWord) -> GroupWord:
    return GroupWord(w.group, tuple(_reduce(w.letters)))


def invert(w: GroupWord) -> GroupWord:
    return GroupWord(w.group, tuple(x.inverse() for x in reversed(w.letters)))


def concat(w1: GroupWord, w2: GroupWord) -> GroupWord:
    if w1.group != w2.group:
        raise GroupMismatch(f"cannot concatenate words of {w1.group} and {w2.group}")
    return GroupWord(w1.group, tuple(_reduce(w1.letters + w2.letters)))


def power(w: GroupWord, k: int) -> GroupWord:
    base = w if k >= 0 else invert(w)
    return free_reduce(GroupWord(w.group, base.letters * abs(k)))


def relabel(w: GroupWord, group: GroupId) -> GroupWord:
    """The same letters read in another group (e.g. an R word as a W word)."""
    return GroupWord(group, w.letters)


class ExponentSums(NamedTuple):
    rho: tuple[int, ...]
    sigma: tuple[int, ...]
    tau: tuple[int, ...]
    alpha: tuple[tuple[int, ...], ...]  # alpha[i-1][j-1]

    def __add__(self, other):
        def add(a, b):
            return tuple(x + y for x, y in zip(a, b))
        return ExponentSums(add(self.rho, other.rho), add(self.sigma, other.sigma),
                            add(self.tau, other.tau),
                            tuple(add(a, b) for a, b in zip(self.alpha, other.alpha)))


def exponent_sums(w: GroupWord) -> ExponentSums:
    n = w.group.n
    rho_s = [0] * max(n - 1, 0)
    sigma_s = [0] * max(n - 1, 0)
    tau_s = [0] * n
    alpha_s = [[0] * n for _ in range(n)]
    for x in w.letters:
        if x.kind == "rho":
            rho_s[x.index - 1] += x.exponent
        elif x.kind == "sigma":
            sigma_s[x.index - 1] += x.exponent
        elif x.kind == "tau":
            tau_s[x.index - 1] += x.exponent
        else:
            alpha_s[x.index - 1][x.target - 1] += x.exponent
    return ExponentSums(tuple(rho_s), tuple(sigma_s), tuple(tau_s),
                        tuple(tuple(row) for row in alpha_s))


def alphabet(group: GroupId) -> list[GenLetter]:
    """Positive generators of ``group`` in canonical order."""
    n = group.n
    if group.family == "PUR":
        return [alpha(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    gens = [rho(i) for i in range(1, n)] + [sigma(i) for i in range(1, n)]
    if group.family in TWISTED:
        gens += [tau(i) for i in range(1, n + 1)]
    return gens


def random_word(group: GroupId, length: int, rng: random.Random | None = None,
                kinds: Sequence[str] | None = None) -> GroupWord:
    """Uniform random (not necessarily reduced) word of the given length."""
    rng = rng or random.Random()
    gens = [g for g in alphabet(group) if kinds is None or g.kind in kinds]
    if not gens:
        return GroupWord(group)
    letters = []
    for _ in range(length):
        g = rng.choice(gens)
        letters.append(g if rng.random() < 0.5 else g.inverse())
    return GroupWord(group, tuple(letters))
