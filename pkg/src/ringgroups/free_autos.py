"""Symmetric automorphisms of free groups and the word problem for ring groups.

Free words are tuples of nonzero ints: ``k`` is x_k, ``-k`` is x_k^-1.  They
are kept freely reduced, so comparing images is a syntactic check.

Conventions (all checked by relator nullity, none asserted to be the
geometric handedness):

* ``compose(a, b)`` applies ``b`` first, then ``a``.
* A group word maps to the composite of its letters' automorphisms in
  reading order, ``dahm_rep(g1 g2) = compose(dahm_rep(g1), dahm_rep(g2))``.
  The opposite order violates the mixed and tau-rho relations.
* sigma_i swaps x_i and x_{i+1}; rho_i sends x_i -> x_{i+1} and
  x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}; tau_i inverts x_i.
* alpha_ij sends x_i -> x_j^-1 x_i x_j.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .words import (
    GenLetter, GroupId, GroupWord, alpha, free_reduce, invert, relabel, rho, sigma,
)

FreeWord = tuple[int, ...]


def reduce_free(letters: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def free_inverse(w: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(w))


def format_free(w: FreeWord) -> str:
    if not w:
        return "1"
    return " ".join(f"x{abs(x)}" if x > 0 else f"x{abs(x)}^-1" for x in w)


def parse_free(text: str, rank: int) -> FreeWord:
    letters = []
    for m in re.finditer(r"\S+", text):
        if m.group() in ("1", "e"):
            continue
        tm = re.fullmatch(r"x(\d+)(?:\^([+-]?\d+))?", m.group())
        if tm is None:
            raise ValueError(f"cannot parse {m.group()!r} at position {m.start()}")
        k, p = int(tm.group(1)), int(tm.group(2) or 1)
        if not 1 <= k <= rank:
            raise ValueError(f"x{k} out of range for rank {rank}")
        letters.extend([k if p > 0 else -k] * abs(p))
    return reduce_free(letters)


class RankMismatch(ValueError):
    pass


@dataclass(frozen=True)
class SymAuto:
    """An endomorphism of F_n given by the images of x_1..x_n."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError("need one image per basis letter")
        object.__setattr__(self, "images", tuple(reduce_free(w) for w in self.images))

    @classmethod
    def identity(cls, rank: int) -> SymAuto:
        return cls(rank, tuple((k,) for k in range(1, rank + 1)))

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply(self, w)

    def to_text(self) -> str:
        return "".join(f"x{k} -> {format_free(img)}\n" for k, img in enumerate(self.images, 1))


def apply(a: SymAuto, w: FreeWord) -> FreeWord:
    out: list[int] = []
    for x in w:
        img = a.images[abs(x) - 1]
        out.extend(img if x > 0 else free_inverse(img))
    return reduce_free(out)


def compose(a: SymAuto, b: SymAuto) -> SymAuto:
    """``b`` first, then ``a``: x -> a(b(x))."""
    if a.rank != b.rank:
        raise RankMismatch(f"ranks {a.rank} and {b.rank}")
    return SymAuto(a.rank, tuple(apply(a, img) for img in b.images))


def is_identity(a: SymAuto) -> bool:
    return all(img == (k,) for k, img in enumerate(a.images, 1))


def conjugate_shape(img: FreeWord) -> tuple[FreeWord, int] | None:
    """Write ``img`` as c x_j^{+-1} c^-1; returns (c, +-j) or None."""
    if len(img) % 2 == 0:
        return None
    h = len(img) // 2
    c, mid = img[:h], img[h]
    if img[h + 1:] != free_inverse(c):
        return None
    return c, mid


def is_symmetric(a: SymAuto) -> bool:
    """Each image is a conjugate of a basis letter or its inverse, and the
    underlying index map is a permutation."""
    targets = []
    for img in a.images:
        shape = conjugate_shape(img)
        if shape is None:
            return False
        targets.append(abs(shape[1]))
    return sorted(targets) == list(range(1, a.rank + 1))


def signed_perm_part(a: SymAuto) -> bool:
    """True if every image is a single basis letter or its inverse."""
    return all(len(img) == 1 for img in a.images)


def inverse(a: SymAuto) -> SymAuto:
    """Inverse of a symmetric automorphism.

    Greedily precomposes with McCool generators while that shortens the
    images, until a signed permutation is left; raises if it stalls.
    """
    n = a.rank
    if not is_symmetric(a):
        raise ValueError("not a symmetric automorphism")
    used: list[SymAuto] = []
    cur = a
    size = sum(map(len, cur.images))
    while not signed_perm_part(cur):
        best = None
        for k in range(1, n + 1):
            for m in range(1, n + 1):
                if k == m:
                    continue
                for e in (1, -1):
                    g = mccool(k, m, n, e)
                    cand = compose(cur, g)
                    c_size = sum(map(len, cand.images))
                    if c_size < size and (best is None or c_size < best[0]):
                        best = (c_size, g, cand)
        if best is None:
            raise ValueError("McCool reduction stalled")
        size, g, cur = best
        used.append(g)
    # cur = a o g1 o ... o gk is a signed permutation
    perm_inv = [()] * n
    for k, img in enumerate(cur.images, 1):
        x = img[0]
        perm_inv[abs(x) - 1] = (k,) if x > 0 else (-k,)
    result = SymAuto(n, tuple(perm_inv))
    for g in reversed(used):
        result = compose(g, result)
    return result


def _basis_map(rank: int, changes: dict[int, FreeWord]) -> SymAuto:
    return SymAuto(rank, tuple(changes.get(k, (k,)) for k in range(1, rank + 1)))


@lru_cache(maxsize=None)
def generator_auto(kind: str, i: int, rank: int, exponent: int = 1) -> SymAuto:
    if kind == "sigma":
        a = _basis_map(rank, {i: (i + 1,), i + 1: (i,)})
    elif kind == "rho":
        a = _basis_map(rank, {i: (i + 1,), i + 1: (-(i + 1), i, i + 1)})
    elif kind == "tau":
        a = _basis_map(rank, {i: (-i,)})
    else:
        raise ValueError(f"no generator action for {kind}")
    if exponent == 1 or kind != "rho":
        return a
    return _basis_map(rank, {i: (i, i + 1, -i), i + 1: (i,)})


def mccool(i: int, j: int, n: int, exponent: int = 1) -> SymAuto:
    """alpha_ij: x_i -> x_j^-1 x_i x_j, other basis letters fixed."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"alpha_{i}{j} needs distinct indices in 1..{n}")
    if exponent == 1:
        return _basis_map(n, {i: (-j, i, j)})
    return _basis_map(n, {i: (j, i, -j)})


def _letter_auto(x: GenLetter, n: int) -> SymAuto:
    if x.kind == "alpha":
        return mccool(x.index, x.target, n, x.exponent)
    return generator_auto(x.kind, x.index, n, x.exponent)


def dahm_rep(w: GroupWord) -> SymAuto:
    """Image of a ring group word in Aut(F_n)."""
    if w.group.family not in ("R", "VR", "UR", "PUR"):
        raise ValueError(f"Dahm representation is defined on ring groups, not {w.group.family}")
    n = w.group.n
    result = SymAuto.identity(n)
    for x in w.letters:
        result = compose(result, _letter_auto(x, n))
    return result


def product(autos: Iterable[SymAuto], rank: int) -> SymAuto:
    """Product in the same left-to-right order as :func:`dahm_rep`."""
    result = SymAuto.identity(rank)
    for a in autos:
        result = compose(result, a)
    return result


@lru_cache(maxsize=None)
def _perm_words(n: int) -> dict[tuple[FreeWord, ...], tuple[GenLetter, ...]]:
    """Shortest sigma word for every permutation automorphism of F_n (BFS)."""
    g = GroupId("UR", n)
    start = SymAuto.identity(n)
    seen = {start.images: ()}
    frontier = [()]
    while frontier:
        nxt = []
        for letters in frontier:
            for k in range(1, n):
                cand = letters + (sigma(k),)
                imgs = dahm_rep(GroupWord(g, cand)).images
                if imgs not in seen:
                    seen[imgs] = cand
                    nxt.append(cand)
        frontier = nxt
    return seen


class ConstructionFailed(RuntimeError):
    pass


@lru_cache(maxsize=None)
def alpha_word(i: int, j: int, n: int) -> GroupWord:
    """A rho/sigma word in UR_n whose Dahm image is ``mccool(i, j, n)``."""
    target = mccool(i, j, n)
    g = GroupId("UR", n)
    bases = ([rho(1), sigma(1, -1)], [sigma(1, -1), rho(1)],
             [sigma(1), rho(1)], [rho(1), sigma(1)])
    # conjugate alpha_12 by a permutation word s carrying x_1, x_2 to x_i, x_j
    for imgs, perm in sorted(_perm_words(n).items(), key=lambda kv: (len(kv[1]), kv[0])):
        if {imgs[0], imgs[1]} != {(i,), (j,)}:
            continue
        s_word = GroupWord(g, perm)
        for base in bases:
            b_word = GroupWord(g, tuple(base))
            for cand in (invert(s_word) * b_word * s_word, s_word * b_word * invert(s_word)):
                if dahm_rep(cand) == target:
                    return cand
    raise ConstructionFailed(f"no rho/sigma word found for alpha_{i}{j}")


def expand_alpha(w: GroupWord) -> GroupWord:
    """Rewrite a PUR_n word over alpha letters as a UR_n word."""
    n = w.group.n
    g = GroupId("UR", n)
    letters: list[GenLetter] = []
    for x in w.letters:
        aw = alpha_word(x.index, x.target, n)
        letters.extend(aw.letters if x.exponent == 1 else invert(aw).letters)
    return free_reduce(GroupWord(g, tuple(letters)))


def pur_relators(n: int, upper: bool = False):
    """McCool relators of PUR_n; with ``upper`` only alpha_ij with i < j.

    ``alpha_ij alpha_kl = alpha_kl alpha_ij``, ``alpha_ik alpha_jk = alpha_jk alpha_ik``,
    ``alpha_ij alpha_ik alpha_jk = alpha_jk alpha_ik alpha_ij`` over distinct indices.
    """
    from .presentations import RelatorSet
    g = GroupId("PUR", n)
    rng = range(1, n + 1)

    def ok(*pairs):
        return not upper or all(a < b for a, b in pairs)

    rels, labels = [], []

    def rel(label, left, right):
        rels.append(free_reduce(GroupWord(g, tuple(left) + invert(GroupWord(g, tuple(right))).letters)))
        labels.append(label)

    for i in rng:
        for j in rng:
            for k in rng:
                for l_ in rng:
                    if len({i, j, k, l_}) == 4 and (i, j) < (k, l_) and ok((i, j), (k, l_)):
                        rel("disjoint", [alpha(i, j), alpha(k, l_)], [alpha(k, l_), alpha(i, j)])
    for i in rng:
        for j in rng:
            for k in rng:
                if len({i, j, k}) == 3 and i < j and ok((i, k), (j, k)):
                    rel("common target", [alpha(i, k), alpha(j, k)], [alpha(j, k), alpha(i, k)])
    for i in rng:
        for j in rng:
            for k in rng:
                if len({i, j, k}) == 3 and ok((i, j), (i, k), (j, k)):
                    rel("triangle", [alpha(i, j), alpha(i, k), alpha(j, k)],
                        [alpha(j, k), alpha(i, k), alpha(i, j)])
    return RelatorSet(g, tuple(rels), tuple(labels))


def upper_relators(n: int):
    return pur_relators(n, upper=True)


def word_is_trivial_R(w: GroupWord) -> bool:
    if w.group.family not in ("R", "UR"):
        raise ValueError(f"{w.group} is not R_n")
    return is_identity(dahm_rep(w))


def word_is_trivial_UR(w: GroupWord) -> bool:
    """UR_n injects into R_n, so the R_n test decides."""
    if w.group.family != "UR":
        raise ValueError(f"{w.group} is not UR_n")
    return word_is_trivial_R(relabel(w, GroupId("R", w.group.n)))


def word_is_trivial_PUR(w: GroupWord) -> bool:
    if w.group.family != "PUR":
        raise ValueError(f"{w.group} is not PUR_n")
    return is_identity(dahm_rep(w))


def word_is_trivial_VR(w: GroupWord) -> bool:
    """Trivial iff the Sigma_n^Z image is trivial and the rho/sigma part of
    the ut form is trivial in R_n."""
    from .presentations import tau_normal_form
    from .quotients import twist_image
    if w.group.family not in ("VR", "UR"):
        raise ValueError(f"{w.group} is not VR_n")
    if not twist_image(w).is_identity():
        return False
    u, _ = tau_normal_form(relabel(w, GroupId("VR", w.group.n)))
    return is_identity(dahm_rep(relabel(u, GroupId("R", w.group.n))))
