"""Three-valued negation and four-cornered region classification.

The negation table treats a property with an empty domain as unreal and
therefore unnegatable: positive and negative swap, unnegatable is fixed.

The four-cornered scheme splits judgments about a property P into P,
not-P (the rest of the discourse), both (the discourse itself, as an
aggregate, not an element classification), and neither (outside the
discourse altogether).
"""

from __future__ import annotations

from enum import Enum

from .errors import InvalidFlags


class ThreeVal(Enum):
    P = "P"  # positive
    N = "N"  # negative
    U = "U"  # unnegatable: a property with an empty domain

    def __str__(self) -> str:
        return self.value


class KotiRegion(Enum):
    P = "P"
    NOT_P = "not-P"
    NEITHER = "neither"
    # "Both" is the discourse universe as an aggregate (P plus not-P).
    # No single element is classified as BOTH under the set reading.
    BOTH = "both"

    def __str__(self) -> str:
        return self.value


_NEGATION = {ThreeVal.P: ThreeVal.N, ThreeVal.N: ThreeVal.P, ThreeVal.U: ThreeVal.U}


def negate3(v: ThreeVal) -> ThreeVal:
    """P and N swap; U is fixed (no real property, nothing to negate)."""
    return _NEGATION[v]


def negation_table() -> tuple[tuple[ThreeVal, ThreeVal], ...]:
    """The (w, not-w) rows, in the order P, N, U."""
    return tuple((v, negate3(v)) for v in (ThreeVal.P, ThreeVal.N, ThreeVal.U))


def catuskoti_classify(in_p: bool, in_discourse: bool) -> KotiRegion:
    """Place an element: in P, in the discourse outside P, or beyond both.

    Membership in P entails membership in the discourse; the opposite
    combination is inconsistent and rejected.
    """
    if in_p and not in_discourse:
        raise InvalidFlags("an element of P is necessarily in the discourse")
    if in_p:
        return KotiRegion.P
    if in_discourse:
        return KotiRegion.NOT_P
    return KotiRegion.NEITHER
