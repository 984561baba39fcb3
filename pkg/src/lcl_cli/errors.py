"""Exception hierarchy for lcl-cli."""


class LclError(Exception):
    """Base class for every error raised by the library."""


class ReducibleMinPoly(LclError):
    """The supplied defining polynomial factors over Q."""


class NonMonic(LclError):
    """The supplied defining polynomial is not monic."""


class DegreeTooLarge(LclError):
    """Irreducibility cannot be certified at this degree without an explicit assertion."""


class PrecisionExhausted(LclError):
    """Interval enclosures still straddle zero at the maximum precision."""


class NotLoxodromic(LclError):
    """The operation needs a loxodromic (or hyperbolic) element."""


class SharedFixedPoint(LclError):
    """Two loxodromic elements share a fixed point."""


class NotCertified(LclError):
    """No Schottky certificate exists for the pair within the power budget."""


class DegenerateImage(LclError):
    """A circle is mapped to a line (the pole sits on the circle)."""


class ZeroParameter(LclError):
    """A quaternion algebra parameter vanishes."""


class NoStandardOrder(LclError):
    """The standard order needs algebraic-integer parameters a and b."""


class ComponentTypeViolation(LclError):
    """A product isometry mixes component types forbidden for arithmetic subgroups."""


class AllFactorsDropped(LclError):
    """No factor shows a loxodromic element within the evidence budget."""


class EmptyGeneratorSet(LclError):
    """A group needs at least one generator."""


class EmptyCloud(LclError):
    """A direction cloud has no points."""


class DegenerateSamples(LclError):
    """Fewer than three distinct anchor points are available for fitting."""


class UnsupportedDimension(LclError):
    """The requested rendering needs q + r <= 3."""


class UnsupportedParameter(LclError):
    """A catalog builder or an exporter was asked for a parameter it does not support."""


class SpecParseError(LclError):
    """A group specification document is malformed."""
