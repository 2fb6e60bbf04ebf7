"""Exception hierarchy for funcdyn."""


class FuncdynError(Exception):
    """Base class for all funcdyn domain errors."""


class CompositeP(FuncdynError):
    """Field characteristic is not prime."""


class ZeroElement(FuncdynError):
    """Operation requires a nonzero field element."""


class BothZero(FuncdynError):
    """gcd of two zero polynomials is undefined."""


class ZeroPolynomial(FuncdynError):
    """Operation requires a nonzero polynomial."""


class FieldMismatch(FuncdynError):
    """Operands belong to different field specs."""


class EqualPoints(FuncdynError):
    """Operation requires two distinct points."""


class DegenerateMap(FuncdynError):
    """Form pair has vanishing resultant and defines no morphism."""


class DegreeMismatch(FuncdynError):
    """Form pair degrees disagree."""


class BadReductionPlace(FuncdynError):
    """Reduction requested at a place of bad reduction."""


class IterateZero(FuncdynError):
    """Iteration count must be at least 1."""


class SingularMobius(FuncdynError):
    """Mobius matrix has zero determinant."""


class TooFewSamples(FuncdynError):
    """Rational interpolation needs at least 2d+1 distinct inputs."""


class DuplicateSample(FuncdynError):
    """Rational interpolation inputs must be distinct."""


class NoAdmissibleSolution(FuncdynError):
    """Interpolation solution space contains no admissible vector."""


class HypothesisViolated(FuncdynError):
    """A lemma hypothesis fails; carries a concrete witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotACycle(FuncdynError):
    """Point list is not a genuine cycle of the map."""


class NotClosed(FuncdynError):
    """Orbit record did not close into a cycle."""


class NotUnitLeadingPolynomial(FuncdynError):
    """Map is not a polynomial with unit leading coefficient."""


class MismatchWitness(FuncdynError):
    """Two periodic-point methods disagree; carries the offending point."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class DegenerateResidueMap(FuncdynError):
    """Reduced form pair has zero resultant over the residue field."""


class DegreeTooSmall(FuncdynError):
    """Interpolation degree below the field cardinality."""


class DuplicateInput(FuncdynError):
    """Construction inputs must be pairwise distinct."""


class PowersCollide(FuncdynError):
    """n-th powers of the cycle seeds must be pairwise distinct."""


class UnitOrderOne(FuncdynError):
    """Cycle construction needs a unit of multiplicative order > 1."""


class UnsupportedBadPlace(FuncdynError):
    """Construction implemented only when the bad locus is contained in {infinity}."""


class UsageError(FuncdynError):
    """Invalid command-line usage."""
