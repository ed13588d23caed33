"""Exception hierarchy.

Everything raised for a violated mathematical precondition derives from
:class:`CoxcombError`; the CLI maps that family to exit code 3, except
:class:`HypothesesNotMet` which gets its own code.
"""


class CoxcombError(ValueError):
    pass


class DimensionMismatch(CoxcombError):
    pass


class NotWellDefined(CoxcombError):
    """A matrix does not send source relations into the target relations."""


class NonFreeSource(CoxcombError):
    pass


class PairwiseDependence(CoxcombError):
    pass


class BadExponent(CoxcombError):
    pass


class NoTrinomials(CoxcombError):
    pass


class IndexViolation(CoxcombError, IndexError):
    pass


class HypothesesNotMet(CoxcombError):
    pass


class ProfileError(CoxcombError):
    pass


class Indivisible(ProfileError):
    pass


class BadFiber(ProfileError):
    pass
