"""Exact evaluation of the two-base expansion value maps.

pi(q0, q1, u)  = sum_k u_k / (q_{u_1} ... q_{u_k})   (digit 0 scaled by q0)
pit(q0, q1, v) = sum_k (1 - v_k) / (q_{v_1} ... q_{v_k})

For eventually periodic words the value is a finite sum plus a geometric
tail, evaluated with whatever scalar type the bases carry (float,
Fraction, mpmath.mpf), so the same code serves both exact rational work
and multiprecision solving.

The module also provides the affine forms used by the critical-value
descent: reading a letter c maps the value of the remaining tail x to
a_c + s_c * x, and substitution images compose these maps, so pi of huge
node boundary words costs O(|directive|) arithmetic instead of
materializing the words.
"""

from __future__ import annotations

from typing import Iterable

from .substitution import Directive, PERIODIC, DirectiveError, image_string
from .words import Word


class DegenerateSystemError(ValueError):
    """Alphabet-base system whose expansions all have the same value."""


def _affine_over(letters: Iterable[str], q0, q1):
    """Compose the per-letter maps x -> (d + x)/q over a finite word.

    Returns (a, s) with pi(word . tail) = a + s * pi(tail).
    """
    one = q0 / q0
    a, s = one - one, one
    for c in letters:
        if c == "0":
            a, s = a, s / q0
        else:
            a, s = a + s / q1, s / q1
    return a, s


def _affine_over_tilde(letters: Iterable[str], q0, q1):
    """Same composition for pit (numerators 1 - digit)."""
    one = q0 / q0
    a, s = one - one, one
    for c in letters:
        if c == "0":
            a, s = a + s / q0, s / q0
        else:
            a, s = a, s / q1
    return a, s


def pi(q0, q1, u: Word):
    """Value of the expansion with digit word u in bases (q0, q1).

    Finite preperiod sum plus geometric period tail; needs q0, q1 > 1
    (q1 = 1 is allowed when the period contains a 0, as used by the
    solver boundary checks).
    """
    a_pre, s_pre = _affine_over(u.pre, q0, q1)
    a_per, s_per = _affine_over(u.per, q0, q1)
    return a_pre + s_pre * (a_per / (1 - s_per))


def pi_tilde(q0, q1, v: Word):
    """Mirror value sum_k (1 - v_k)/(q_{v_1}...q_{v_k})."""
    a_pre, s_pre = _affine_over_tilde(v.pre, q0, q1)
    a_per, s_per = _affine_over_tilde(v.per, q0, q1)
    return a_pre + s_pre * (a_per / (1 - s_per))


def f(u: Word, q0, q1):
    """q0 (q1 pi(u) - 1); strictly decreasing in q0 and q1.

    Its root in q1 is the base pair at which u is the quasi-greedy
    expansion of 1/q1.
    """
    return q0 * (q1 * pi(q0, q1, u) - 1)


def f_tilde(v: Word, q0, q1):
    """q1 (q0 pit(v) - 1), the mirror of f under 0<->1 reflection."""
    return q1 * (q0 * pi_tilde(q0, q1, v) - 1)


def reduce_system(d0, q0, d1, q1):
    """Affine identification of {(d0,q0),(d1,q1)}-expansions with the
    standard digits {(0,q0),(1,q1)}.

    Returns (offset, scale) with value = offset + scale * pi(q0,q1,digits).
    Raises DegenerateSystemError when every digit sequence has the same
    value (d0/(q0-1) = d1/(q1-1)).
    """
    offset = d0 / (q0 - 1)
    scale = d1 - d0 * (q1 - 1) / (q0 - 1)
    if scale == 0:
        raise DegenerateSystemError(
            f"system {{({d0},{q0}),({d1},{q1})}} is degenerate: all expansions equal {offset}"
        )
    return offset, scale


# ----------------------------------------------------------------------
# affine forms of substitution images
# ----------------------------------------------------------------------


class AffinePair:
    """Maps (a0,s0), (a1,s1) with pi(w(c) . tail) = a_c + s_c * pi(tail).

    Building the pair for a directive word w costs O(|w|) regardless of
    the exponential image lengths.
    """

    __slots__ = ("a0", "s0", "a1", "s1")

    def __init__(self, a0, s0, a1, s1):
        self.a0, self.s0, self.a1, self.s1 = a0, s0, a1, s1

    @classmethod
    def identity(cls, q0, q1):
        one = q0 / q0
        zero = one - one
        return cls(zero, one / q0, one / q1, one / q1)

    def step(self, letter: str) -> "AffinePair":
        """Affine pair of w.letter given the pair of w."""
        a0, s0, a1, s1 = self.a0, self.s0, self.a1, self.s1
        if letter == "L":           # blocks 0 -> "0", 1 -> "10"
            return AffinePair(a0, s0, a1 + s1 * a0, s1 * s0)
        if letter == "M":           # 0 -> "01", 1 -> "10"
            return AffinePair(a0 + s0 * a1, s0 * s1, a1 + s1 * a0, s1 * s0)
        if letter == "R":           # 0 -> "01", 1 -> "1"
            return AffinePair(a0 + s0 * a1, s0 * s1, a1, s1)
        raise DirectiveError(f"bad directive letter {letter!r}")

    def of_word(self, u: Word):
        """pi(w(u)) for eventually periodic u, via the composed maps."""
        a_pre, s_pre = self._over(u.pre)
        a_per, s_per = self._over(u.per)
        return a_pre + s_pre * (a_per / (1 - s_per))

    def _over(self, letters: str):
        a, s = self.a0 - self.a0, self.s0 / self.s0
        for c in letters:
            if c == "0":
                a, s = a + s * self.a0, s * self.s0
            else:
                a, s = a + s * self.a1, s * self.s1
        return a, s


def directive_affine(w: str, q0, q1) -> AffinePair:
    pair = AffinePair.identity(q0, q1)
    for letter in w:
        pair = pair.step(letter)
    return pair


_NODE_SEED = {
    "s0": Word("", "0"),
    "s010": Word("01", "0"),
    "s01": Word("0", "1"),
    "s10": Word("1", "0"),
    "s101": Word("10", "1"),
    "s1": Word("", "1"),
}


def node_pi(w: str, q0, q1) -> dict:
    """pi of the six boundary words of node sigma = wM, from affine forms."""
    pair = directive_affine(w + "M", q0, q1)
    p0 = pair.a0 / (1 - pair.s0)
    p1 = pair.a1 / (1 - pair.s1)
    p10 = pair.a1 + pair.s1 * p0
    p01 = pair.a0 + pair.s0 * p1
    return {
        "s0": p0,
        "s1": p1,
        "s10": p10,
        "s01": p01,
        "s010": pair.a0 + pair.s0 * p10,
        "s101": pair.a1 + pair.s1 * p01,
    }


def f_from_pi(p, q0, q1):
    return q0 * (q1 * p - 1)


def f_tilde_from_pi(p, q0, q1):
    # pit(v) = (1 - (q1-1) pi(v)) / (q0-1), the reflection identity
    pt = (1 - (q1 - 1) * p) / (q0 - 1)
    return q1 * (q0 * pt - 1)


def pi_limit(d: Directive, seed, q0, q1, scale_eps: float = 1e-60):
    """pi of the limit word of a periodic-tail directive.

    Uses the self-similarity F = head(Fix), Fix = block(Fix): composing
    the affine pair of the block squares its contraction at every round,
    so a handful of rounds pushes the unknown-tail contribution (bounded
    by scale * sup pi) below any fixed threshold.  Comparing consecutive
    values would be wrong here: prepended zeros leave the value unchanged.
    """
    if d.tail != PERIODIC:
        raise DirectiveError("pi_limit needs a periodic-tail directive")
    seed = str(seed)
    psi = directive_affine(d.head, q0, q1)
    block_words = {c: image_string(d.block, c) for c in "01"}
    for _ in range(160):
        a, s = (psi.a0, psi.s0) if seed == "0" else (psi.a1, psi.s1)
        if abs(s) < scale_eps:
            return a
        nxt = {}
        for c in "01":
            aa, ss = (0 * psi.a0), (psi.s0 / psi.s0)
            for b in block_words[c]:
                ca, cs = (psi.a0, psi.s0) if b == "0" else (psi.a1, psi.s1)
                aa, ss = aa + ss * ca, ss * cs
            nxt[c] = (aa, ss)
        psi = AffinePair(nxt["0"][0], nxt["0"][1], nxt["1"][0], nxt["1"][1])
    return (psi.a0 if seed == "0" else psi.a1)
