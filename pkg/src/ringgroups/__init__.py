"""Motion groups of unlinked rings and wickets.

Word problems for UW_n, W_n, UR_n, VR_n, R_n and PUR_n, their finite
presentations, permutation quotients and coset enumeration, and the geometry
of round circle configurations.
"""

from .words import GroupId, GroupWord, parse_word, format_word, free_reduce, invert, concat
from .presentations import relators, tau_normal_form, verify_relators
from .braids import BraidWord, braid_is_trivial, endpoint_hom, pin_dictionary, word_is_trivial_W
from .free_autos import (
    SymAuto, alpha_word, dahm_rep, mccool, word_is_trivial_R, word_is_trivial_UR,
    word_is_trivial_VR,
)
from .quotients import perm_image, signed_image, twist_image, todd_coxeter
from .representations import is_trivial

__version__ = "0.1.0"
