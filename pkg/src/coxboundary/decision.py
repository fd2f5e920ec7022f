"""Verdict-producing procedures with machine-checkable certificates.

For a right-angled system with more than two boundary points, the boundary
is a scrambled set exactly when the minimum finite-index parabolic is
irreducible; otherwise the infinite part splits as a product, which blocks
scrambling.  Everything a verdict asserts is carried in a certificate that
can be re-validated independently of the procedure that produced it.
"""

from dataclasses import dataclass
from math import inf

from . import core, racg
from .errors import (
    BoundaryTooSmallError,
    NotRightAngled,
    OrderNotInfinite,
)

# boundary size classes
EMPTY = "empty"
TWO_POINTS = "two-points"
MORE_THAN_TWO = "more-than-two"

SCRAMBLED = "scrambled"
NOT_SCRAMBLED = "not-scrambled"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class IrreducibleCore:
    """The infinite part of the system is a single irreducible piece."""

    members: frozenset

    def describe(self, system):
        names = " ".join(system.labels[i] for i in sorted(self.members))
        return f"irreducible-core: {{{names}}}"

    def revalidate(self, system):
        if self.members != core.infinite_support(system):
            return False
        sub, _ = core.induced(system, self.members)
        return racg.is_irreducible(sub)


@dataclass(frozen=True)
class ProductSplit:
    """The infinite part splits as a product of two infinite halves."""

    left: frozenset
    right: frozenset

    def describe(self, system):
        a = " ".join(system.labels[i] for i in sorted(self.left))
        b = " ".join(system.labels[i] for i in sorted(self.right))
        return f"product-split: {{{a}}} x {{{b}}}"

    def revalidate(self, system):
        entries = system.matrix.entries
        if self.left & self.right:
            return False
        if self.left | self.right != core.infinite_support(system):
            return False
        if any(entries[a][b] != 2 for a in self.left for b in self.right):
            return False
        return not core.is_spherical(system, self.left) and not core.is_spherical(
            system, self.right
        )


@dataclass(frozen=True)
class FiniteCentralizer:
    """Some generator has a finite centralizer."""

    generator: int

    def describe(self, system):
        return f"finite-centralizer: {system.labels[self.generator]}"

    def revalidate(self, system):
        return racg.generator_centralizer_finite(system, self.generator)


@dataclass(frozen=True)
class PushWitness:
    """A bounded-step push into a common one-generator descent class."""

    s0: int
    t0: int
    bound: int

    def describe(self, system):
        return (
            f"push-witness: s0={system.labels[self.s0]}"
            f" t0={system.labels[self.t0]} bound={self.bound}"
        )

    def revalidate(self, system):
        return system.order(self.s0, self.t0) == inf


@dataclass(frozen=True)
class BoundaryTooSmall:
    size_class: str

    def describe(self, system):
        return f"boundary-too-small: {self.size_class}"

    def revalidate(self, system):
        return boundary_size_class(system) == self.size_class


@dataclass(frozen=True)
class OutOfScope:
    reason: str

    def describe(self, system):
        return f"out-of-scope: {self.reason}"

    def revalidate(self, system):
        return True


@dataclass(frozen=True)
class Verdict:
    outcome: str
    certificate: object

    def describe(self, system):
        return f"verdict: {self.outcome}\ncertificate: {self.certificate.describe(system)}"


def boundary_size_class(system):
    """Classify the boundary as empty, a two-point set, or bigger.

    The group is finite exactly when the infinite support is empty; the
    boundary is a two-point set exactly when the infinite support is a
    single non-commuting pair (an infinite dihedral factor).
    """
    support = core.infinite_support(system)
    if not support:
        return EMPTY
    if len(support) == 2:
        a, b = sorted(support)
        if system.order(a, b) == inf:
            return TWO_POINTS
    return MORE_THAN_TWO


def decide_scrambled(system):
    """Decide whether the boundary of a right-angled system is scrambled."""
    if not system.right_angled:
        raise NotRightAngled("the full decision applies to right-angled systems")
    size = boundary_size_class(system)
    if size != MORE_THAN_TWO:
        return Verdict(NOT_SCRAMBLED, BoundaryTooSmall(size))
    support = core.infinite_support(system)
    sub, _ = core.induced(system, support)
    if racg.is_irreducible(sub):
        return Verdict(SCRAMBLED, IrreducibleCore(support))
    split = find_product_split(system)
    return Verdict(NOT_SCRAMBLED, ProductSplit(*split))


def find_product_split(system):
    """Partition of the infinite support into two infinite halves, if any.

    Returns (left, right) with both parabolics infinite and all cross pairs
    commuting, or None when the infinite support has a single component.
    """
    infinite_comps = [
        comp
        for comp in core.irreducible_components(system)
        if not core.is_spherical(system, comp)
    ]
    if len(infinite_comps) < 2:
        return None
    left = infinite_comps[0]
    right = frozenset().union(*infinite_comps[1:])
    return left, right


def finite_centralizer_generator(system):
    """Smallest generator whose centralizer is finite, or None.

    Implemented for right-angled systems only; a hit upgrades an unknown
    verdict to scrambled whenever the boundary has more than two points.
    """
    if not system.right_angled:
        return None
    for s in system.generators:
        if racg.generator_centralizer_finite(system, s):
            return s
    return None


def is_expansive(system):
    """Expansiveness of the boundary action, for right-angled systems.

    Coincides with hyperbolicity whenever the boundary has more than two
    points.
    """
    if not system.right_angled:
        raise NotRightAngled("expansiveness test is right-angled only")
    if boundary_size_class(system) != MORE_THAN_TWO:
        raise BoundaryTooSmallError("expansiveness needs more than two ends")
    return racg.is_hyperbolic(system)


def uniform_push_condition(system, s0, t0, bound, radius):
    """Bounded verification of the joint-push condition.

    Checks that for every pair (w, v) of elements of length <= radius there
    is an x of length <= bound with descents(w x) = descents(v x) = {s0},
    and records one witness per unordered pair.  Requires the product s0 t0
    to have infinite order.  This is a radius-bounded verification, not a
    proof for the whole group.

    Returns (ok, witnesses) where witnesses maps (w, v) canonical word pairs
    to the witness word; on failure the offending pair is absent.
    """
    if system.order(s0, t0) != inf:
        raise OrderNotInfinite(
            f"order of {system.labels[s0]} {system.labels[t0]} is not inf"
        )
    elements = core.ball(system, radius)
    witnesses = {}
    ok = True
    target = frozenset([s0])
    constructive = (
        system.right_angled
        and racg.is_irreducible(system)
        and boundary_size_class(system) == MORE_THAN_TWO
    )
    candidates = None  # exhaustive fallback, built on first use

    def search(w, v):
        nonlocal candidates
        if candidates is None:
            candidates = core.ball(system, bound)
        for x in candidates:
            if (
                core.descent_set(system, w + x) == target
                and core.descent_set(system, v + x) == target
            ):
                return x
        return None

    if constructive:
        nfs = [racg.NormalForm(w, racg._descents(system, w)) for w in elements]
        for i, w in enumerate(nfs):
            for v in nfs[i:]:
                x = racg.push_to_common_singleton(system, w, v, s0)
                wx = racg.normal_form(system, w.word + x)
                vx = racg.normal_form(system, v.word + x)
                if (
                    len(x) <= bound
                    and wx.descents == target
                    and vx.descents == target
                ):
                    witnesses[(w.word, v.word)] = x
                    continue
                x = search(w.word, v.word)
                if x is None:
                    ok = False
                else:
                    witnesses[(w.word, v.word)] = x
        return ok, witnesses
    for i, w in enumerate(elements):
        for v in elements[i:]:
            x = search(w, v)
            if x is None:
                ok = False
            else:
                witnesses[(w, v)] = x
    return ok, witnesses


def analyze(system):
    """Full verdict pipeline, usable for any system.

    Right-angled systems get the complete decision.  Otherwise only the
    certifiable sufficient conditions run: a small boundary or a product
    split settles the question, anything else stays unknown.
    """
    if system.right_angled:
        return decide_scrambled(system)
    size = boundary_size_class(system)
    if size != MORE_THAN_TWO:
        return Verdict(NOT_SCRAMBLED, BoundaryTooSmall(size))
    split = find_product_split(system)
    if split is not None:
        return Verdict(NOT_SCRAMBLED, ProductSplit(*split))
    return Verdict(
        UNKNOWN,
        OutOfScope(
            "not right-angled: only sufficient conditions are certifiable here"
        ),
    )
