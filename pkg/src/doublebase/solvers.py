"""Bracketed root solvers for the base equations.

All roots are reported as closed brackets, never bare points.  The
functions solved here are strictly monotone (proven properties of the
value maps), so plain bisection is unconditionally safe: a float64
bisection does the bulk of the work and the endpoint signs are then
re-verified in multiprecision arithmetic (config.precision decimal
digits).  Tolerances below the float64 floor switch to multiprecision
bisection seeded by the certified float bracket.

g(u, q0)   -- the unique q1 > 1 with f_u(q0, q1) = 0, or BELOW_ONE
gt(v, q0)  -- the unique q1 > 1 with f~_v(q0, q1) = 0
mu(u, v)   -- the unique crossing g_u(x) = g~_v(x), with
              g_u > g~_v left of the crossing and < right of it
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

from .config import Config, resolve
from .series import f, f_tilde, pi_limit, f_from_pi, f_tilde_from_pi
from .substitution import Directive, is_primitive, common_node_image
from .words import Word, sup0, inf1

_FLOAT_TOL_FLOOR = 1e-13


class PreconditionError(ValueError):
    """Solver input outside the domain where the root is known unique."""


@dataclass(frozen=True)
class Bracket:
    """Closed interval [lo, hi] certified to contain the root.

    Endpoints are floats at default tolerances; tolerances below the
    float64 floor keep the multiprecision endpoints so the width stays
    meaningful.
    """

    lo: float
    hi: float

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


class _BelowOne:
    """Returned by g when f_u(q0, 1) <= 0, encoding g_u(q0) = 1."""

    def __repr__(self):
        return "BELOW_ONE"


BELOW_ONE = _BelowOne()


def _bisect_float(fn, lo: float, hi: float, tol: float) -> tuple[float, float]:
    # fn(lo) > 0 >= fn(hi) assumed
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if fn(mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _certify_mp(fn_mp, lo: float, hi: float, dps: int, floor: float = 1.0) -> tuple[float, float]:
    """Verify fn(lo) > 0 > fn(hi) at dps digits, nudging endpoints outward
    past any float rounding haze near the root (never below the domain
    floor, the functions being roots in a base > 1)."""
    with mp.workdps(dps):
        step = max(hi - lo, 1e-15)
        for _ in range(80):
            if fn_mp(mp.mpf(lo)) > 0:
                break
            lo = max(lo - step, 0.5 * (lo + floor))
            step *= 2
        else:
            raise ArithmeticError("could not certify lower bracket endpoint")
        step = max(hi - lo, 1e-15)
        for _ in range(80):
            if fn_mp(mp.mpf(hi)) < 0:
                break
            hi += step
            step *= 2
        else:
            raise ArithmeticError("could not certify upper bracket endpoint")
    return lo, hi


def _bisect_mp(fn_mp, lo, hi, tol, dps):
    with mp.workdps(dps):
        lo, hi = mp.mpf(lo), mp.mpf(hi)
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if fn_mp(mid) > 0:
                lo = mid
            else:
                hi = mid
        return lo, hi


def solve_decreasing(fn, fn_mp, lo: float, hi: float, tol: float, dps: int) -> Bracket:
    """Bracket the root of a strictly decreasing function.

    fn is the float64 evaluation, fn_mp the same function on mpf inputs.
    Precondition: fn(lo) > 0 >= fn(hi).
    """
    flo, fhi = _bisect_float(fn, lo, hi, max(tol, _FLOAT_TOL_FLOOR))
    flo, fhi = _certify_mp(fn_mp, flo, fhi, dps)
    if tol < _FLOAT_TOL_FLOOR:
        flo, fhi = _bisect_mp(fn_mp, flo, fhi, tol, dps)
    return Bracket(flo, fhi)


def expand_upper(fn, hi: float, factor: float = 2.0, limit: int = 200) -> float:
    for _ in range(limit):
        if fn(hi) <= 0:
            return hi
        hi *= factor
    raise ArithmeticError("no sign change found while expanding the bracket")


# ----------------------------------------------------------------------
# domain validation
# ----------------------------------------------------------------------


def in_W(u: Word) -> bool:
    """u is a sup0-fixed word, not eventually constant."""
    return len(u.per) > 1 and sup0(u) == u


def in_W_tilde(v: Word) -> bool:
    return len(v.per) > 1 and inf1(v) == v


def _is_limit_stream(x) -> bool:
    return hasattr(x, "directive") and isinstance(getattr(x, "directive"), Directive)


def _value_fn(u, kind: str):
    """f_u(q0, q1) (kind 'f') or f~_u (kind 'ft') as a generic callable,
    accepting eventually periodic words or periodic-directive limit words."""
    if isinstance(u, Word):
        if kind == "f":
            return lambda q0, q1: f(u, q0, q1)
        return lambda q0, q1: f_tilde(u, q0, q1)
    d, seed = u.directive, u.seed
    if kind == "f":
        return lambda q0, q1: f_from_pi(pi_limit(d, seed, q0, q1), q0, q1)
    # pit via the reflection identity on pi of the same word
    return lambda q0, q1: f_tilde_from_pi(pi_limit(d, seed, q0, q1), q0, q1)


# ----------------------------------------------------------------------
# public solvers
# ----------------------------------------------------------------------


def g(u, q0: float, tol: float | None = None, config: Config | None = None):
    """The unique q1 > 1 with f_u(q0, q1) = 0, or BELOW_ONE when
    f_u(q0, 1) <= 0 (i.e. q0 at or past the critical base of u)."""
    cfg = resolve(config)
    tol = cfg.tol if tol is None else tol
    if isinstance(u, Word) and not in_W(u):
        raise PreconditionError(f"{u} is not sup0-fixed aperiodic-tail (not in W)")
    fu = _value_fn(u, "f")
    if q0 <= 1:
        raise PreconditionError("q0 must exceed 1")
    if fu(q0, 1.0) <= 0:
        return BELOW_ONE
    lo = 1.0 + min(tol, 1e-12)
    if fu(q0, lo) <= 0:
        return Bracket(1.0, lo)
    hi = expand_upper(lambda y: fu(q0, y), q0 / (q0 - 1) + 1.0)
    q0m = mp.mpf(q0)
    return solve_decreasing(
        lambda y: fu(q0, y), lambda y: fu(q0m, y), lo, hi, tol, cfg.precision
    )


def g_tilde(v, q0: float, tol: float | None = None, config: Config | None = None) -> Bracket:
    """The unique q1 > 1 with f~_v(q0, q1) = 0; exists for every q0 > 1."""
    cfg = resolve(config)
    tol = cfg.tol if tol is None else tol
    if isinstance(v, Word) and not in_W_tilde(v):
        raise PreconditionError(f"{v} is not inf1-fixed aperiodic-tail (not in W~)")
    if q0 <= 1:
        raise PreconditionError("q0 must exceed 1")
    fv = _value_fn(v, "ft")
    lo = 1.0 + min(tol, 1e-12)
    if fv(q0, lo) <= 0:
        return Bracket(1.0, lo)
    hi = expand_upper(lambda y: fv(q0, y), q0 / (q0 - 1) + 1.0)
    q0m = mp.mpf(q0)
    return solve_decreasing(
        lambda y: fv(q0, y), lambda y: fv(q0m, y), lo, hi, tol, cfg.precision
    )


def critical_base(u, tol: float | None = None, config: Config | None = None) -> Bracket:
    """The base q_u with f_u(q_u, 1) = 0: g_u(q0) > 1 exactly on (1, q_u)."""
    cfg = resolve(config)
    tol = cfg.tol if tol is None else tol
    fu = _value_fn(u, "f")
    lo = 1.0 + 1e-9
    if fu(lo, 1.0) <= 0:
        return Bracket(1.0, lo)
    hi = expand_upper(lambda x: fu(x, 1.0), 4.0)
    return solve_decreasing(
        lambda x: fu(x, 1.0), lambda x: fu(x, mp.mpf(1)), lo, hi, tol, cfg.precision
    )


def _validate_mu_pair(u, v):
    if _is_limit_stream(u) and _is_limit_stream(v):
        du, dv = u.directive, v.directive
        if du != dv or not is_primitive(du):
            raise PreconditionError("limit-word mu needs one primitive directive for both words")
        if (u.seed, v.seed) != ("0", "1"):
            raise PreconditionError("limit-word mu needs seeds 0 (left) and 1 (right)")
        return
    if not (isinstance(u, Word) and isinstance(v, Word)):
        raise PreconditionError("mu needs two words or two matching limit-word streams")
    if not in_W(u):
        raise PreconditionError(f"{u} not in W")
    if not in_W_tilde(v):
        raise PreconditionError(f"{v} not in W~")
    if not common_node_image(u, v):
        raise PreconditionError(
            f"({u}, {v}) are not images of a common {{L,R}}*M substitution node; "
            "the crossing is not known to be unique"
        )


def mu(u, v, tol: float | None = None, config: Config | None = None) -> Bracket:
    """The unique x > 1 where g_u and g~_v cross.

    The sign of g_u(x) - g~_v(x) is read off f~_v(x, g_u(x)) without
    forming the difference: f~_v is strictly decreasing in q1, so
    f~_v(x, g_u(x)) > 0 exactly when g_u(x) < g~_v(x).
    """
    cfg = resolve(config)
    tol = cfg.tol if tol is None else tol
    _validate_mu_pair(u, v)
    fu, fv = _value_fn(u, "f"), _value_fn(v, "ft")

    def crossing_sign(x, inner_tol, dps=None):
        # +1 while g_u(x) > g~_v(x) (left of the crossing), else -1
        if fu(x, 1.0 if dps is None else mp.mpf(1)) <= 0:
            return -1.0  # x >= q_u, g_u = 1 < g~_v
        lo = 1.0 + 1e-12
        hi = expand_upper(lambda y: fu(float(x), y), 8.0)
        if dps is None:
            glo, ghi = _bisect_float(lambda y: fu(x, y), lo, hi, inner_tol)
            val = fv(x, 0.5 * (glo + ghi))
            return -1.0 if val > 0 else 1.0
        with mp.workdps(dps):
            xm = mp.mpf(x)
            xf = float(x)
            glo, ghi = _bisect_float(lambda y: fu(xf, y), lo, hi, 1e-9)
            glo, ghi = _certify_mp(lambda y: fu(xm, y), glo, ghi, dps)
            glo, ghi = _bisect_mp(lambda y: fu(xm, y), glo, ghi, inner_tol, dps)
            s_lo = fv(xm, mp.mpf(glo))
            s_hi = fv(xm, mp.mpf(ghi))
            if (s_lo > 0) != (s_hi > 0):
                return 0.0  # too close to the crossing to certify at this x
            return -1.0 if s_lo > 0 else 1.0

    inner = min(tol * 1e-3, 1e-13)
    lo = 1.0 + 1e-9
    while crossing_sign(lo, 1e-9) < 0:
        lo = 1.0 + (lo - 1.0) / 100
        if lo - 1.0 < 1e-15:
            raise PreconditionError("no crossing found above 1")
    hi = 4.0
    for _ in range(60):
        if crossing_sign(hi, 1e-9) < 0:
            break
        hi *= 2
    flo, fhi = _bisect_float(lambda x: crossing_sign(x, inner), lo, hi, max(tol, _FLOAT_TOL_FLOOR))
    # multiprecision endpoint certification, nudging outward as needed
    step = max(fhi - flo, 1e-15)
    for _ in range(60):
        s = crossing_sign(flo, 1e-20, cfg.precision)
        if s > 0:
            break
        flo -= step
        step *= 2
    step = max(fhi - flo, 1e-15)
    for _ in range(60):
        s = crossing_sign(fhi, 1e-20, cfg.precision)
        if s < 0:
            break
        fhi += step
        step *= 2
    if tol < _FLOAT_TOL_FLOOR:
        with mp.workdps(cfg.precision):
            a, b = mp.mpf(flo), mp.mpf(fhi)
            inner_deep = tol * mp.mpf("1e-4")
            while b - a > tol:
                m = (a + b) / 2
                sg = crossing_sign(m, inner_deep, cfg.precision)
                if sg > 0:
                    a = m
                elif sg < 0:
                    b = m
                else:
                    break
            flo, fhi = a, b
    return Bracket(flo, fhi)
