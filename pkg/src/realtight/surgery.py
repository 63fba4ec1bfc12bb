"""Identify chain surgery diagrams and validate equivariant decorations.

Every diagram used by the census is, smoothly, a chain of unknots with
integer framings in which consecutive components link once.  Such a
chain with framings [a1, ..., an] produces the lens space L(p, q) where
the negative continued fraction a1 - 1/(a2 - ...) evaluates to -p/q.
Contact surgery coefficients convert to smooth framings by adding the
Thurston-Bennequin number of the component.
"""

from __future__ import annotations

import json as _json
from dataclasses import dataclass

from .lens import LensSpace
from .slopes import Slope, _eval_chain

C1_INVARIANT = "c1-invariant"
C4_INVARIANT = "c4-invariant"
EQUIVARIANT_PAIR = "equivariant-pair"
NOT_EQUIVARIANT = "none"


@dataclass(frozen=True)
class ChainDiagram:
    """Framings of a chain of unknots, consecutive components linking once."""

    coefficients: tuple

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coefficients)
        if not cs:
            raise ValueError("empty chain")
        object.__setattr__(self, "coefficients", cs)

    def reversed(self) -> "ChainDiagram":
        return ChainDiagram(tuple(reversed(self.coefficients)))


@dataclass(frozen=True)
class LegendrianUnknotDatum:
    tb: int
    contact_coeff: int
    equivariance: str = NOT_EQUIVARIANT

    def __post_init__(self):
        if self.tb > -1:
            raise ValueError("a Legendrian unknot has tb <= -1")
        if self.contact_coeff not in (1, -1):
            raise ValueError("contact coefficient must be +1 or -1")
        if self.equivariance not in (
            C1_INVARIANT,
            C4_INVARIANT,
            EQUIVARIANT_PAIR,
            NOT_EQUIVARIANT,
        ):
            raise ValueError("unknown equivariance decoration")


def smooth_coefficient(d: LegendrianUnknotDatum) -> int:
    """Smooth surgery framing: tb + contact coefficient."""
    return d.tb + d.contact_coeff


def lens_from_chain(d: ChainDiagram) -> LensSpace:
    """The lens space produced by a negative-definite chain.

    The framing list evaluates, as a negative continued fraction, to
    -p/q with p > q >= 1 (or to an integer -p, giving L(p, 1); the
    value -1 gives S^3).
    """
    try:
        value = _eval_chain(d.coefficients)
    except ValueError as exc:
        raise ValueError("not a negative-definite chain") from exc
    if value > -1:
        raise ValueError("not a negative-definite chain")
    p, q = -value.numerator, value.denominator
    if p == 1:
        return LensSpace(1, 0)
    return LensSpace(p, q)


@dataclass(frozen=True)
class EquivarianceVerdict:
    valid: bool
    unique: bool
    glue_back: str
    glue_back_slope: Slope | None
    note: str

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "unique": self.unique,
            "glue_back": self.glue_back,
            "glue_back_slope": None
            if self.glue_back_slope is None
            else str(self.glue_back_slope),
            "note": self.note,
        }


def validate_equivariance(d: LegendrianUnknotDatum) -> EquivarianceVerdict:
    """Check that the decorated surgery has an equivariant glue-back.

    A c1-invariant component needs the signed pair of hyperelliptic
    solid tori at slope +1 (contact +1) or infinity (contact -1), both
    of which exist; a c4-invariant component glues back a unique real
    core neighborhood; an equivariant pair is always possible.
    """
    if d.equivariance == C1_INVARIANT:
        slope = Slope(1, 1) if d.contact_coeff == 1 else Slope.INFINITY
        return EquivarianceVerdict(
            True, False, "hyperelliptic solid torus (two signs)", slope,
            "glue-back slope %s exists as a signed pair" % slope,
        )
    if d.equivariance == C4_INVARIANT:
        return EquivarianceVerdict(
            True, True, "real-core solid torus", None,
            "glue-back exists and is unique",
        )
    if d.equivariance == EQUIVARIANT_PAIR:
        return EquivarianceVerdict(
            True, True, "mirror pair of surgeries", None,
            "paired surgeries are always possible",
        )
    return EquivarianceVerdict(
        False, False, "", None, "component carries no equivariance decoration"
    )


def parse_diagram_json(text: str):
    """Parse a diagram: either raw framings or decorated components.

    Accepts a JSON list of integers (smooth framings) or a JSON list of
    objects {"tb": int, "contact_coeff": +-1, "equivariance": str}.
    Returns (ChainDiagram, [LegendrianUnknotDatum] or None).
    """
    data = _json.loads(text)
    if not isinstance(data, list) or not data:
        raise ValueError("diagram must be a nonempty JSON list")
    if all(isinstance(x, int) for x in data):
        return ChainDiagram(tuple(data)), None
    data_objs = []
    for x in data:
        if not isinstance(x, dict):
            raise ValueError("mixed diagram entries")
        data_objs.append(
            LegendrianUnknotDatum(
                int(x["tb"]),
                int(x["contact_coeff"]),
                x.get("equivariance", NOT_EQUIVARIANT),
            )
        )
    chain = ChainDiagram(tuple(smooth_coefficient(d) for d in data_objs))
    return chain, data_objs
