"""Exception hierarchy for the library."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """A single failed law, with the element tuple that breaks it."""

    law: str
    witness: tuple

    def __str__(self):
        return f"{self.law} at {self.witness}"


class SemiringError(Exception):
    """Base class for every error raised by this package."""


class MalformedTable(SemiringError):
    pass


class ZeroEqualsOne(SemiringError):
    pass


class AxiomViolation(SemiringError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    def laws(self):
        return [v.law for v in self.violations]


class HomViolation(AxiomViolation):
    pass


class SizeCapExceeded(SemiringError):
    pass


class ParentMismatch(SemiringError):
    pass


class ZeroIdeal(SemiringError):
    pass


class EmptyFamily(SemiringError):
    pass


class InvalidMCSet(SemiringError):
    pass


class NotPrime(SemiringError):
    pass


class ImproperIdeal(SemiringError):
    pass


class PreconditionViolated(SemiringError):
    pass


class NoPrimaryDecomposition(SemiringError):
    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"no primary family replaces component {witness}")


class InvariantBroken(SemiringError):
    """A construction failed a postcondition that the theory guarantees.

    Seeing this means a bug in the library, not bad input.
    """


class CorrespondenceFailure(InvariantBroken):
    pass


class EquivalenceFailure(InvariantBroken):
    pass


class ParseError(SemiringError):
    pass


class UnknownPropositionId(SemiringError):
    pass
