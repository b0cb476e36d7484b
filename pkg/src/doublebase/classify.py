"""Cardinality classification of lexicographic subshifts and univoque sets.

Omega_{a,b} is the set of binary sequences all of whose suffixes avoid
the open interval (a, b); it is trivial ({0^inf, 1^inf}), countable,
uncountable with zero entropy, or uncountable with positive entropy, and
which of these holds is decided by comparing the s-map directive
sequences of a and b:

    s(a) > s(b)                 positive entropy
    s(a) < s(b)                 countable (trivial or not)
    s(a) = s(b) repeat tail     countable, nontrivial
    s(a) = s(b) primitive       uncountable with zero entropy

The trivial/nontrivial refinement depends only on the walk before the
first M step: a node sigma = wM with w over {L,R} witnesses nontriviality
as soon as a >= sigma(0^inf) and b <= sigma(1^inf); if the walks diverge
earlier with a below or b above every such window, Omega collapses to
{0^inf, 1^inf}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .config import Config, resolve
from .critical import generalized_golden_ratio, komornik_loreti, Case
from .expansions import regular
from .substitution import (
    _branch0,
    _branch1,
    BR_STOP_L,
    BR_STOP_R,
    LimitWordStream,
    is_primitive,
)
from .words import Word, LetterStream, compare, ZERO_ONE, ONE_ZERO, W_010, W_101


class Label(Enum):
    TRIVIAL = "Trivial"
    COUNTABLE_NONTRIVIAL = "CountableNontrivial"
    UNCOUNTABLE_ZERO_ENTROPY = "UncountableZeroEntropy"
    POSITIVE_ENTROPY = "PositiveEntropy"
    UNDECIDED = "Undecided"
    # labels used by the closed-interval variant Sigma_{a,b}
    EMPTY = "Empty"
    COUNTABLE = "Countable"


@dataclass(frozen=True)
class Classification:
    label: Label
    depth: Optional[int] = None  # descent depth at truncation, for UNDECIDED

    def __str__(self):
        if self.label is Label.UNDECIDED and self.depth is not None:
            return f"Undecided({self.depth})"
        return self.label.value


_ORDER_INDEX = {
    Label.TRIVIAL: 0,
    Label.COUNTABLE_NONTRIVIAL: 1,
    Label.UNCOUNTABLE_ZERO_ENTROPY: 2,
    Label.POSITIVE_ENTROPY: 2,
}


def label_rank(label: Label) -> int:
    """Trivial < CountableNontrivial < {uncountable labels}; used by the
    monotonicity properties of the classifier."""
    return _ORDER_INDEX[label]


def _cmp(u, v, exact: bool):
    return compare(u, v) if exact else compare(u, v, None)


def classify_omega(a, b, max_depth: int = 48) -> Classification:
    """Classify Omega_{a,b} for a starting 0 and b starting 1.

    Exact for eventually periodic words; limit-word streams of one
    common primitive directive are recognized directly, other streams
    are classified up to comparison depth (Undecided when ties persist).
    """
    exact_a, exact_b = isinstance(a, Word), isinstance(b, Word)
    if a.prefix(1) != "0":
        raise ValueError("a must start with 0")
    if b.prefix(1) != "1":
        raise ValueError("b must start with 1")

    if isinstance(a, LimitWordStream) and isinstance(b, LimitWordStream):
        if a.directive == b.directive and is_primitive(a.directive) and (a.seed, b.seed) == ("0", "1"):
            return Classification(Label.UNCOUNTABLE_ZERO_ENTROPY)

    # corner cells of the s-map partition
    a_max = _cmp(a, ZERO_ONE, exact_a)      # a = 0 1^inf has s(a) = R^inf
    b_min = _cmp(b, ONE_ZERO, exact_b)      # b = 1 0^inf has s(b) = L^inf
    a_low = _cmp(a, W_010, exact_a)         # a <= 01 0^inf has s(a) = L^inf
    b_high = _cmp(b, W_101, exact_b)        # b >= 10 1^inf has s(b) = R^inf
    if a_max is None or b_min is None or a_low is None or b_high is None:
        return Classification(Label.UNDECIDED, 0)
    a_is_top, b_is_bottom = a_max == 0, b_min == 0
    a_is_low, b_is_high = a_low <= 0, b_high >= 0

    if a_is_top and b_is_bottom:
        return Classification(Label.POSITIVE_ENTROPY)  # no constraint binds
    if a_is_top:
        # every window is witnessed on the a side; countable iff s(b) = R^inf
        return Classification(
            Label.COUNTABLE_NONTRIVIAL if b_is_high else Label.POSITIVE_ENTROPY
        )
    if b_is_bottom:
        return Classification(
            Label.COUNTABLE_NONTRIVIAL if a_is_low else Label.POSITIVE_ENTROPY
        )
    if a_is_low or b_is_high:
        # s(a) = L^inf below every window, or s(b) = R^inf above it
        return Classification(Label.TRIVIAL)

    w = ""
    witness = False  # some {L,R}*M node has a >= sigma(0^inf), b <= sigma(1^inf)
    for depth in range(max_depth):
        ba = _branch0(a, w, exact_a)
        bb = _branch1(b, w, exact_b)
        if ba is None or bb is None:
            return Classification(Label.UNDECIDED, depth)
        if "M" not in w and ba >= BR_STOP_L and bb <= BR_STOP_R:
            witness = True
        if ba > bb:
            return Classification(Label.POSITIVE_ENTROPY)
        if ba < bb:
            return Classification(
                Label.COUNTABLE_NONTRIVIAL if witness else Label.TRIVIAL
            )
        if ba in (BR_STOP_L, BR_STOP_R):
            # s(a) = s(b) ends with a repeat tail: countable, and the stop
            # node itself (or the first M step) witnesses nontriviality
            return Classification(Label.COUNTABLE_NONTRIVIAL)
        w += "LMR"[ba // 2]
    return Classification(Label.UNDECIDED, max_depth)


def _prepend(letter: str, x):
    if isinstance(x, Word):
        return Word(letter + x.pre, x.per)
    def factory():
        yield letter
        yield from x.letters()
    return LetterStream(factory, f"{letter}+{x!r}")


_SIGMA_LABEL = {
    Label.TRIVIAL: Label.EMPTY,
    Label.COUNTABLE_NONTRIVIAL: Label.COUNTABLE,
}


def classify_sigma(a, b, max_depth: int = 48) -> Classification:
    """Classify Sigma_{a,b}, the sequences whose every suffix stays in the
    closed interval [a, b]; reduces to Omega_{0b,1a} (whose elements are
    exactly 0*Sigma, 1*Sigma and the two constants)."""
    res = classify_omega(_prepend("0", b), _prepend("1", a), max_depth)
    return Classification(_SIGMA_LABEL.get(res.label, res.label), res.depth)


def classify_univoque(q0: float, q1: float, tol: float = 1e-9,
                      max_depth: int | None = None,
                      config: Config | None = None) -> Classification:
    """Cardinality of the unique-expansion set for the base pair (q0, q1).

    Irregular pairs have every sequence unique (full shift).  Otherwise
    q1 is placed against the critical brackets G(q0) and K(q0); within
    tol of a critical value the descent case decides between the
    boundary behaviours where it can, else Undecided.
    """
    cfg = resolve(config)
    if not (q0 > 1 and q1 > 1):
        raise ValueError("need q0, q1 > 1")
    if not regular(q0, q1):
        return Classification(Label.POSITIVE_ENTROPY)
    gres = generalized_golden_ratio(q0, config=cfg, max_depth=max_depth)
    window_g = max(tol, gres.value.width)
    if q1 < gres.value.lo - window_g:
        return Classification(Label.TRIVIAL)
    at_g = abs(q1 - gres.value.mid) <= window_g
    kres = komornik_loreti(q0, config=cfg, max_depth=max_depth)
    window_k = max(tol, kres.value.width)
    at_k = abs(q1 - kres.value.mid) <= window_k
    if at_g and at_k:
        # G(q0) = K(q0): a coincidence point, where the set is trivial at
        # the critical base iff the node is a finite formula node
        if gres.case in (Case.LEFT_FORMULA, Case.RIGHT_FORMULA):
            return Classification(Label.TRIVIAL)
        return Classification(Label.UNDECIDED, max_depth or cfg.max_depth)
    if at_g:
        if gres.case in (Case.LEFT_FORMULA, Case.RIGHT_FORMULA):
            return Classification(Label.TRIVIAL)
        # at G over a primitive Sturmian point the set is already uncountable,
        # but that cannot be certified from a numeric q0
        return Classification(Label.UNDECIDED, max_depth or cfg.max_depth)
    if at_k:
        if kres.case in (Case.LEFT_FORMULA, Case.RIGHT_FORMULA):
            return Classification(Label.COUNTABLE_NONTRIVIAL)
        return Classification(Label.UNDECIDED, max_depth or cfg.max_depth)
    if q1 < kres.value.lo:
        return Classification(Label.COUNTABLE_NONTRIVIAL)
    return Classification(Label.POSITIVE_ENTROPY)
