"""Critical bases: the generalized golden ratio G(q0) and generalized
Komornik-Loreti constant K(q0) by directive-tree descent.

For each directive node sigma = wM the six boundary words define crossing
values mu (cached per node, since they do not depend on q0).  The G
descent walks {L,R}* nodes: q0 left of [mu_{s0,s10}, mu_{s01,s1}] appends
L, right appends R, inside picks the left formula (root of f_{sigma(0^inf)})
or the right formula (root of f~_{sigma(1^inf)}) according to the middle
crossing mu_{s0,s1}.  The K descent walks {L,M,R}* nodes with the two
formula intervals [mu_{s0,s10}, mu_{s010,s10}] and [mu_{s01,s101},
mu_{s01,s1}]; strictly between them it appends M.

Membership is decided against certified mu brackets; a q0 within bracket
width of an endpoint is resolved into the adjacent closed formula
interval (the formulas agree at shared endpoints, so this is the
tightest enclosure) and the returned value bracket is padded by a local
slope estimate times the ambiguity.  At max_depth the result is the
enclosure of the two adjacent formula values, which is valid because the
critical maps are strictly decreasing.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import mpmath as mp

from .config import Config, resolve
from .expansions import expansion_bounds, regular
from .series import node_pi, f_from_pi, f_tilde_from_pi
from .solvers import (
    Bracket,
    _bisect_float,
    _certify_mp,
    _bisect_mp,
    expand_upper,
    solve_decreasing,
    _FLOAT_TOL_FLOOR,
)
from .substitution import (
    _branch0,
    _branch1,
    BR_STOP_L,
    BR_STOP_R,
    apply,
    image_lengths,
)
from .words import Word

_BOUNDARY_WORD_CAP = 200_000  # letters; larger node words are not materialized


class Case(Enum):
    LEFT_FORMULA = "LeftFormula"
    RIGHT_FORMULA = "RightFormula"
    PRIMITIVE_LIMIT = "PrimitiveLimit"
    DEPTH_EXHAUSTED = "DepthExhausted"


_SEED_OF_KEY = {
    "s0": Word("", "0"),
    "s010": Word("01", "0"),
    "s01": Word("0", "1"),
    "s10": Word("1", "0"),
    "s101": Word("10", "1"),
    "s1": Word("", "1"),
}


@dataclass(frozen=True)
class CriticalResult:
    value: Bracket
    node: str                      # directive head w; the node is sigma = wM
    case: Case
    boundary_word: Optional[Word]  # sigma(seed) for formula cases, when small
    inequality_witness: float      # (q0-1) * (value.mid - 1)

    def __str__(self):
        return f"{self.value} node={self.node} case={self.case.value}"


# ----------------------------------------------------------------------
# per-node machinery
# ----------------------------------------------------------------------


def _node_f(w: str, key: str, kind: str):
    """f or f~ of a node boundary word as a function of (q0, q1), via the
    composed affine forms (no word materialization)."""
    if kind == "f":
        def fn(q0, q1):
            return f_from_pi(node_pi(w, q0, q1)[key], q0, q1)
    else:
        def fn(q0, q1):
            return f_tilde_from_pi(node_pi(w, q0, q1)[key], q0, q1)
    return fn


def _node_root(w: str, key: str, kind: str, q0: float, tol: float, dps: int) -> Bracket:
    """Root in q1 of the node equation; the formula value at q0."""
    fn = _node_f(w, key, kind)
    lo = 1.0 + 1e-12
    if fn(q0, lo) <= 0:
        return Bracket(1.0, lo)
    hi = expand_upper(lambda y: fn(q0, y), q0 / (q0 - 1) + 1.0)
    q0m = mp.mpf(q0)
    return solve_decreasing(
        lambda y: fn(q0, y), lambda y: fn(q0m, y), lo, hi, tol, dps
    )


def _node_mu(w: str, ukey: str, vkey: str, tol: float, dps: int) -> Bracket:
    """Crossing of the node equations g_{u} = g~_{v}; cached by the caller.

    Sign of g_u(x) - g~_v(x) read off f~_v(x, g_u(x)): f~ is decreasing
    in q1, so a positive value means g_u(x) < g~_v(x) (right of the
    crossing)."""
    fu = _node_f(w, ukey, "f")
    fv = _node_f(w, vkey, "ft")

    def sign(x: float, inner: float) -> float:
        if fu(x, 1.0) <= 0:
            return -1.0
        lo = 1.0 + 1e-12
        hi = expand_upper(lambda y: fu(x, y), 8.0)
        glo, ghi = _bisect_float(lambda y: fu(x, y), lo, hi, inner)
        return -1.0 if fv(x, 0.5 * (glo + ghi)) > 0 else 1.0

    def sign_mp(x: float, inner: float) -> float:
        xm = mp.mpf(x)
        with mp.workdps(dps):
            if fu(xm, mp.mpf(1)) <= 0:
                return -1.0
            glo, ghi = _bisect_float(lambda y: fu(x, y), 1.0 + 1e-12,
                                     expand_upper(lambda y: fu(x, y), 8.0), 1e-9)
            glo, ghi = _certify_mp(lambda y: fu(xm, y), glo, ghi, dps)
            glo, ghi = _bisect_mp(lambda y: fu(xm, y), glo, ghi, inner, dps)
            s_lo, s_hi = fv(xm, mp.mpf(glo)), fv(xm, mp.mpf(ghi))
            if (s_lo > 0) != (s_hi > 0):
                return 0.0
            return -1.0 if s_lo > 0 else 1.0

    lo, hi = 1.0 + 1e-9, 4.0
    while sign(lo, 1e-9) < 0:
        lo = 1.0 + (lo - 1.0) / 100
        if lo - 1.0 < 1e-15:
            raise ArithmeticError(f"node {w!r} crossing {ukey}/{vkey} not above 1")
    for _ in range(60):
        if sign(hi, 1e-9) < 0:
            break
        hi *= 2
    inner = 1e-13 if tol >= _FLOAT_TOL_FLOOR else tol * 1e-3
    flo, fhi = _bisect_float(lambda x: sign(x, inner), lo, hi, max(tol, _FLOAT_TOL_FLOOR))
    step = max(fhi - flo, 1e-15)
    for _ in range(60):
        if sign_mp(flo, 1e-20) > 0:
            break
        flo -= step
        step *= 2
    step = max(fhi - flo, 1e-15)
    for _ in range(60):
        if sign_mp(fhi, 1e-20) < 0:
            break
        fhi += step
        step *= 2
    return Bracket(flo, fhi)


_MU_CACHE: dict = {}


def node_mu(w: str, ukey: str, vkey: str, config: Config | None = None) -> Bracket:
    """Cached crossing value of a node pair; keyed on the directive head.

    The cache is shared across descents (crossings do not depend on q0);
    concurrent readers are safe, concurrent writers at worst recompute.
    """
    cfg = resolve(config)
    key = (w, ukey, vkey, cfg.precision)
    hit = _MU_CACHE.get(key)
    if hit is None:
        hit = _node_mu(w, ukey, vkey, min(cfg.tol, 1e-13), cfg.precision)
        _MU_CACHE[key] = hit
    return hit


def _boundary_word(w: str, key: str) -> Optional[Word]:
    n0, n1 = image_lengths(w + "M")
    seed = _SEED_OF_KEY[key]
    size = sum(n0 if c == "0" else n1 for c in seed.pre + seed.per)
    if size > _BOUNDARY_WORD_CAP:
        return None
    return apply(w + "M", seed)


def _slope_estimate(w: str, key: str, kind: str, q0: float, val: float, tol: float, dps: int) -> float:
    h = 1e-6
    other = _node_root(w, key, kind, q0 + h, tol, dps).mid
    return abs(other - val) / h


def _formula_result(w: str, key: str, kind: str, q0: float, case: Case,
                    tol: float, dps: int, ambiguity: float) -> CriticalResult:
    val = _node_root(w, key, kind, q0, tol, dps)
    if ambiguity > 0:
        # q0 could belong to an adjacent cell: widen by the local slope of
        # the critical map times the membership uncertainty
        slope = _slope_estimate(w, key, kind, q0, val.mid, tol, dps) + 1.0
        pad = 8.0 * slope * ambiguity
        val = Bracket(val.lo - pad, val.hi + pad)
    return CriticalResult(
        value=val,
        node=w,
        case=case,
        boundary_word=_boundary_word(w, key),
        inequality_witness=(q0 - 1.0) * (val.mid - 1.0),
    )


def _exhausted_result(q0, lo_bound, hi_bound, tol, dps) -> CriticalResult:
    lo_val = 1.0
    hi_val = math.inf
    if lo_bound is not None:
        w, key, kind, at = lo_bound
        lo_val = _node_root(w, key, kind, at, tol, dps).lo
    if hi_bound is not None:
        w, key, kind, at = hi_bound
        hi_val = _node_root(w, key, kind, at, tol, dps).hi
    lo_val, hi_val = min(lo_val, hi_val), max(lo_val, hi_val)
    width = hi_val - lo_val
    case = Case.PRIMITIVE_LIMIT if width <= 1e4 * max(tol, _FLOAT_TOL_FLOOR) else Case.DEPTH_EXHAUSTED
    val = Bracket(lo_val, hi_val)
    return CriticalResult(val, "", case, None, (q0 - 1.0) * (val.mid - 1.0))


def generalized_golden_ratio(q0: float, tol: float | None = None,
                             max_depth: int | None = None,
                             config: Config | None = None) -> CriticalResult:
    """G(q0): the infimum of bases q1 for which some sequence other than
    0^inf and 1^inf is a unique (q0, q1)-expansion."""
    cfg = resolve(config)
    tol = cfg.tol if tol is None else tol
    max_depth = cfg.max_depth if max_depth is None else max_depth
    if not q0 > 1:
        raise ValueError("q0 must exceed 1")
    dps = cfg.precision
    w = ""
    lo_bound = hi_bound = None  # lazy value bounds for exhaustion
    for _ in range(max_depth):
        mu1 = node_mu(w, "s0", "s10", cfg)
        mu2 = node_mu(w, "s01", "s1", cfg)
        slack1 = max(mu1.width, _FLOAT_TOL_FLOOR)
        slack2 = max(mu2.width, _FLOAT_TOL_FLOOR)
        if q0 < mu1.lo - slack1:
            lo_bound = (w, "s0", "f", mu1.mid)  # G(q0) > G(mu1) = left formula there
            w += "L"
            continue
        if q0 > mu2.hi + slack2:
            hi_bound = (w, "s1", "ft", mu2.mid)
            w += "R"
            continue
        ambiguity = 0.0
        if q0 <= mu1.hi + slack1:
            ambiguity = max(ambiguity, 2 * slack1)
        if q0 >= mu2.lo - slack2:
            ambiguity = max(ambiguity, 2 * slack2)
        mumid = node_mu(w, "s0", "s1", cfg)
        if q0 <= mumid.mid:
            return _formula_result(w, "s0", "f", q0, Case.LEFT_FORMULA, tol, dps, ambiguity)
        return _formula_result(w, "s1", "ft", q0, Case.RIGHT_FORMULA, tol, dps, ambiguity)
    return _exhausted_result(q0, lo_bound, hi_bound, tol, dps)


def komornik_loreti(q0: float, tol: float | None = None,
                    max_depth: int | None = None,
                    config: Config | None = None) -> CriticalResult:
    """K(q0): the infimum of bases q1 with uncountably many unique
    (q0, q1)-expansions; also the right end of the first entropy plateau."""
    cfg = resolve(config)
    tol = cfg.tol if tol is None else tol
    max_depth = cfg.max_depth if max_depth is None else max_depth
    if not q0 > 1:
        raise ValueError("q0 must exceed 1")
    dps = cfg.precision
    w = ""
    lo_bound = hi_bound = None
    for _ in range(max_depth):
        muL1 = node_mu(w, "s0", "s10", cfg)
        muR2 = node_mu(w, "s01", "s1", cfg)
        slackL1 = max(muL1.width, _FLOAT_TOL_FLOOR)
        slackR2 = max(muR2.width, _FLOAT_TOL_FLOOR)
        if q0 < muL1.lo - slackL1:
            lo_bound = (w, "s10", "ft", muL1.mid)
            w += "L"
            continue
        if q0 > muR2.hi + slackR2:
            hi_bound = (w, "s01", "f", muR2.mid)
            w += "R"
            continue
        muL2 = node_mu(w, "s010", "s10", cfg)
        slackL2 = max(muL2.width, _FLOAT_TOL_FLOOR)
        if q0 <= muL2.hi + slackL2:
            ambiguity = 0.0
            if q0 <= muL1.hi + slackL1:
                ambiguity = max(ambiguity, 2 * slackL1)
            if q0 >= muL2.lo - slackL2:
                ambiguity = max(ambiguity, 2 * slackL2)
            return _formula_result(w, "s10", "ft", q0, Case.LEFT_FORMULA, tol, dps, ambiguity)
        muR1 = node_mu(w, "s01", "s101", cfg)
        slackR1 = max(muR1.width, _FLOAT_TOL_FLOOR)
        if q0 >= muR1.lo - slackR1:
            ambiguity = 0.0
            if q0 <= muR1.hi + slackR1:
                ambiguity = max(ambiguity, 2 * slackR1)
            if q0 >= muR2.lo - slackR2:
                ambiguity = max(ambiguity, 2 * slackR2)
            return _formula_result(w, "s01", "f", q0, Case.RIGHT_FORMULA, tol, dps, ambiguity)
        # strictly between the formula intervals: the cell is below node wM
        hi_bound = (w, "s10", "ft", muL2.mid)
        lo_bound = (w, "s01", "f", muR1.mid)
        w += "M"
    return _exhausted_result(q0, lo_bound, hi_bound, tol, dps)


def kl_fixed_point(tol: float = 1e-9, lo: float = 1.7, hi: float = 1.9,
                   config: Config | None = None) -> Bracket:
    """The unique base q* with K(q*) = q* (K is strictly decreasing, so
    bisection on K(q) - q is safe)."""
    cfg = resolve(config)
    if not komornik_loreti(lo, config=cfg).value.mid > lo:
        raise ValueError("K(lo) - lo must be positive")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if komornik_loreti(mid, config=cfg).value.mid > mid:
            lo = mid
        else:
            hi = mid
    return Bracket(lo, hi)


# ----------------------------------------------------------------------
# s-map cross-check on expansion words
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class KsResult:
    order: str          # "<", "=", ">" (or "Undecided" for blocked digits)
    node: str           # common directive prefix walked before the verdict
    depth: int          # directive letters examined


def split_descent(a, b, max_depth: int):
    """Simultaneous s-map descent of a 0-word a and a 1-word b.

    Returns (order, w, ba, bb): order ">" when s(a) > s(b) certified at
    node w with branch pair (ba, bb), "<" symmetrically, "=" when the
    walk stayed joint (including repeat-tail stops) for max_depth levels
    or hit undecidable stream ties.
    """
    exact_a, exact_b = isinstance(a, Word), isinstance(b, Word)
    w = ""
    for depth in range(max_depth):
        ba = _branch0(a, w, exact_a)
        bb = _branch1(b, w, exact_b)
        if ba is None or bb is None:
            return "=", w, None, None
        if ba > bb:
            return ">", w, ba, bb
        if ba < bb:
            return "<", w, ba, bb
        if ba in (BR_STOP_L, BR_STOP_R):
            return "=", w, ba, bb
        w += "LMR"[ba // 2]
    return "=", w, None, None


def ks_crosscheck(q0, q1, depth: int = 24, config: Config | None = None) -> KsResult:
    """Order of s(a_{q0,q1}) versus s(b_{q0,q1}) from the digit streams.

    Above K(q0) the order is ">", below it "<"; at K the streams agree
    to every depth examined.  Digit arithmetic is exact, so boundary
    hits do not block the verdict.
    """
    if not regular(q0, q1):
        raise ValueError(f"pair ({q0}, {q1}) is not regular")
    a, b = expansion_bounds(q0, q1)
    order, w, _, _ = split_descent(a, b, depth)
    return KsResult(order, w, len(w))


# ----------------------------------------------------------------------
# curve sampling
# ----------------------------------------------------------------------

CSV_HEADER = ["q0", "which", "value_lo", "value_hi", "node", "case"]


@dataclass(frozen=True)
class CurveRow:
    q0: float
    which: str
    value_lo: float
    value_hi: float
    node: str
    case: str


def sample_curve(q0_lo: float, q0_hi: float, n: int, which: str = "both",
                 tol: float | None = None, max_depth: int | None = None,
                 config: Config | None = None) -> list[CurveRow]:
    """Evaluate the critical maps on a uniform grid; rows are independent."""
    if not (1 < q0_lo < q0_hi):
        raise ValueError("need 1 < q0_lo < q0_hi")
    if n < 2:
        raise ValueError("need at least two samples")
    if which not in ("gr", "kl", "both"):
        raise ValueError("which must be gr, kl or both")
    rows = []
    for i in range(n):
        q0 = q0_lo + (q0_hi - q0_lo) * i / (n - 1)
        if which in ("gr", "both"):
            r = generalized_golden_ratio(q0, tol, max_depth, config)
            rows.append(CurveRow(q0, "gr", r.value.lo, r.value.hi, r.node, r.case.value))
        if which in ("kl", "both"):
            r = komornik_loreti(q0, tol, max_depth, config)
            rows.append(CurveRow(q0, "kl", r.value.lo, r.value.hi, r.node, r.case.value))
    return rows


def curve_csv(rows: list[CurveRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([repr(r.q0), r.which, repr(r.value_lo), repr(r.value_hi), r.node, r.case])
    return buf.getvalue()


def parse_curve_csv(text: str) -> list[CurveRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != CSV_HEADER:
        raise ValueError(f"unexpected header {header!r}")
    return [
        CurveRow(float(q0), which, float(lo), float(hi), node, case)
        for q0, which, lo, hi, node, case in reader
    ]
