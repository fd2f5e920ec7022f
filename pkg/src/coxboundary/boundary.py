"""Desk-scale simulation of the boundary action.

Boundary points are modelled by eventually periodic infinite reduced words
based at the identity; the action of a group element g sends such a ray to
the stabilized normal-form prefixes of g times a long ray prefix.  Distances
between two translated rays use a word-metric stand-in for the boundary
metric: the sum over depths i of min(word distance at depth i, 2^-i), kept
as exact rationals so experiments are bit-reproducible.

The proxy is NOT the boundary metric of the underlying CAT(0) geometry;
every report produced from these numbers must say so.  Translation requires
the right-angled normal-form engine, so rays are restricted to right-angled
systems.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import inf

from . import core, racg
from .errors import (
    HorizonTooSmall,
    NotRightAngled,
    OrderNotInfinite,
    Unstable,
)

PROXY_DISCLAIMER = (
    "note: distances are word-metric proxy values, not CAT(0) boundary distances"
)


@dataclass(frozen=True)
class Ray:
    """Eventually periodic infinite word: head then period repeated."""

    head: tuple
    period: tuple

    def letters(self, n):
        """First n letters of head . period . period ..."""
        out = list(self.head[:n])
        i = 0
        while len(out) < n:
            out.append(self.period[i % len(self.period)])
            i += 1
        return tuple(out)


@dataclass(frozen=True)
class MetricSeries:
    """Indexed distance values, exact rationals in [0, 1]."""

    entries: tuple  # of (index, Fraction)

    def values(self):
        return [d for _, d in self.entries]


def format_decimal(q, digits=12):
    """Exact fixed-point decimal string (round half to even)."""
    scale = 10**digits
    n, r = divmod(q.numerator * scale, q.denominator)
    if 2 * r > q.denominator or (2 * r == q.denominator and n % 2):
        n += 1
    return f"{n // scale}.{n % scale:0{digits}d}"


def validate_ray(system, ray, horizon):
    """True when every prefix up to the horizon is a reduced word.

    The horizon must cover the head plus two periods, so that the periodic
    part is exercised against itself at least once.
    """
    if not system.right_angled:
        raise NotRightAngled("rays need the right-angled normal-form engine")
    if not ray.period:
        return False
    core.check_word(system, ray.head)
    core.check_word(system, ray.period)
    minimum = len(ray.head) + 2 * len(ray.period)
    if horizon < minimum:
        raise HorizonTooSmall(f"horizon {horizon} below minimum {minimum}")
    word = ()
    for s in ray.letters(horizon):
        nxt = racg._append(system, word, s)
        if len(nxt) <= len(word):
            return False
        word = nxt
    return True


def ray_prefix(system, ray, n):
    """Normal form of the first n letters of a validated ray."""
    return racg.normal_form(system, ray.letters(n))


def _stable_prefixes(system, g_word, ray, depth, margin):
    word = racg.normal_form(system, g_word + ray.letters(margin)).word
    return [word[:i] for i in range(1, depth + 1)]


def translate_ray(system, g, ray, depth):
    """Prefixes u_1 .. u_depth of the translated ray g . ray.

    Computes the normal form of g times a long ray prefix and cuts prefixes;
    the margin is rechecked one period later and must give identical
    prefixes, otherwise Unstable is raised.
    """
    g = core.check_word(system, g)
    if depth == 0:
        return []
    glen = len(racg.normal_form(system, g).word)
    margin = depth + 2 * glen + len(ray.period)
    first = _stable_prefixes(system, g, ray, depth, margin)
    second = _stable_prefixes(system, g, ray, depth, margin + len(ray.period))
    if first != second:
        raise Unstable("translated prefixes changed between margins")
    return [racg.NormalForm(w, racg._descents(system, w)) for w in first]


def proxy_distance(system, g, ray_a, ray_b, depth):
    """Word-metric proxy distance between the translates of two rays.

    Sum over i = 1..depth of min(word distance of the depth-i prefixes,
    2^-i); symmetric, bounded by 1, exact.
    """
    us = translate_ray(system, g, ray_a, depth)
    vs = translate_ray(system, g, ray_b, depth)
    total = Fraction(0)
    for i in range(1, depth + 1):
        u = us[i - 1].word
        v = vs[i - 1].word
        if u == v:
            continue
        d = core.word_distance(system, u, v)
        total += min(Fraction(d), Fraction(1, 2**i))
    return total


def derive_push_data(system, ray_a, ray_b, s0=None, prefix_len=None):
    """Orbit data (s0, t0, x) for the contraction experiment.

    Pushes the inverses of matching ray prefixes into the descent class
    {s0}; t0 is the smallest non-commuting partner of s0.  The returned x
    satisfies descents(prefix_a^-1 x) = descents(prefix_b^-1 x) = {s0}.
    """
    entries = system.matrix.entries
    if s0 is None:
        s0 = next(
            s
            for s in system.generators
            if any(entries[s][t] == inf for t in system.generators)
        )
    t0 = next(
        (t for t in sorted(system.generators) if entries[s0][t] == inf), None
    )
    if t0 is None:
        raise OrderNotInfinite(f"{system.labels[s0]} has no infinite-order partner")
    if prefix_len is None:
        prefix_len = max(
            len(r.head) + 2 * len(r.period) for r in (ray_a, ray_b)
        )
    w = racg.normal_form(
        system, core.inverse_word(ray_a.letters(prefix_len))
    )
    v = racg.normal_form(
        system, core.inverse_word(ray_b.letters(prefix_len))
    )
    x = racg.push_to_common_singleton(system, w, v, s0)
    return s0, t0, x


def liminf_series(system, ray_a, ray_b, s0, t0, x, k_max, depth):
    """Distances along the orbit sequence built from (s0, t0, x).

    Entry k holds the proxy distance after translating both rays by
    (s0 t0)^k x^-1.  When x comes from derive_push_data the translated rays
    share ever longer prefixes, so the series contracts towards zero.
    """
    if system.order(s0, t0) != inf:
        raise OrderNotInfinite(
            f"order of {system.labels[s0]} {system.labels[t0]} is not inf"
        )
    x = core.check_word(system, x)
    entries = []
    for k in range(1, k_max + 1):
        g = (s0, t0) * k + core.inverse_word(x)
        entries.append((k, proxy_distance(system, g, ray_a, ray_b, depth)))
    return MetricSeries(tuple(entries))


def _ball_scan(system, ray_a, ray_b, radius, depth, want_max):
    """Cumulative extreme of the proxy distance over balls of growing radius."""
    pick = max if want_max else min
    best = None
    out = []
    elements = core.ball(system, radius)
    by_length = {}
    for w in elements:
        by_length.setdefault(len(w), []).append(w)
    for r in range(radius + 1):
        for g in by_length.get(r, []):
            d = proxy_distance(system, g, ray_a, ray_b, depth)
            best = d if best is None else pick(best, d)
        out.append(best)
    return out


def limsup_scan(system, ray_a, ray_b, radius, depth):
    """Maximum proxy distance over every g of length <= radius."""
    return _ball_scan(system, ray_a, ray_b, radius, depth, want_max=True)[-1]


def obstruction_scan(system, ray_a, ray_b, radius, depth):
    """Minimum proxy distance over every g of length <= radius."""
    return _ball_scan(system, ray_a, ray_b, radius, depth, want_max=False)[-1]
