"""Named representations used for relator checks and word problems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import braids, free_autos, quotients
from .words import GroupId, GroupWord, relabel


class RepresentationUndefined(ValueError):
    pass


@dataclass(frozen=True)
class Representation:
    name: str
    families: frozenset[str]
    image: Callable[[GroupWord], Any]
    is_trivial: Callable[[GroupWord], bool]
    description: str = ""

    def check_group(self, group: GroupId) -> None:
        if group.family not in self.families:
            raise RepresentationUndefined(
                f"{self.name} representation is not defined on {group.family}_n "
                f"(valid: {', '.join(sorted(self.families))})")


def _as_w(w: GroupWord) -> GroupWord:
    return relabel(w, GroupId("W", w.group.n)) if w.group.family == "UW" else w


def _braid_image(w: GroupWord):
    w = _as_w(w)
    return braids.endpoint_hom(w, braids.default_dictionary(w.group.n))


def _dahm_trivial(w: GroupWord) -> bool:
    if not free_autos.is_identity(free_autos.dahm_rep(w)):
        return False
    if w.group.family == "VR":
        return quotients.twist_image(w).is_identity()
    return True


_REGISTRY = {
    "braid": Representation(
        "braid", frozenset({"UW", "W"}), _braid_image,
        lambda w: braids.braid_is_trivial(_braid_image(w)),
        "endpoint map W_n -> B_2n (faithful)"),
    "dahm": Representation(
        "dahm", frozenset({"UR", "VR", "R", "PUR"}), free_autos.dahm_rep, _dahm_trivial,
        "symmetric automorphisms of F_n (faithful on R_n; paired with the twist image on VR_n)"),
    "signed": Representation(
        "signed", frozenset({"UW", "W", "UR", "VR", "R", "PUR"}), quotients.signed_image,
        lambda w: quotients.signed_image(w).is_identity(),
        "signed permutation quotient Sigma_n^+-"),
    "twist": Representation(
        "twist", frozenset({"UW", "W", "UR", "VR"}), quotients.twist_image,
        lambda w: quotients.twist_image(w).is_identity(),
        "twisted permutation quotient Sigma_n^Z"),
    "perm": Representation(
        "perm", frozenset({"UW", "W", "UR", "VR", "R", "PUR"}), quotients.perm_image,
        quotients.is_pure, "permutation quotient Sigma_n"),
}

NAMES = tuple(_REGISTRY)


def get_representation(name: str) -> Representation:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise RepresentationUndefined(f"unknown representation {name!r}") from None


def faithful_representation(group: GroupId) -> str:
    """Name of a representation that solves the word problem for ``group``."""
    return "braid" if group.family in ("UW", "W") else "dahm"


def is_trivial(w: GroupWord) -> bool:
    """Word problem in any of the six families."""
    fam = w.group.family
    if fam in ("UW", "W"):
        return braids.word_is_trivial_W(w)
    if fam == "R":
        return free_autos.word_is_trivial_R(w)
    if fam == "UR":
        return free_autos.word_is_trivial_UR(w)
    if fam == "VR":
        return free_autos.word_is_trivial_VR(w)
    return free_autos.word_is_trivial_PUR(w)
