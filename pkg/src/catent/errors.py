"""Exception types shared across the package."""


class CatentError(Exception):
    """Base class for all package errors."""


class GapConditionFails(CatentError):
    """Two support degrees of V differ by exactly d; no shift can repair this."""


class AmbiguousConnectingMap(CatentError):
    """A long exact sequence has overlapping supports, so a connecting map rank is unknown."""


class InconsistentInput(CatentError):
    pass


class MissingAmbientHypothesis(CatentError):
    """The requested case needs T = D(A)^c for a smooth compact dg algebra A."""


class PossiblyIsomorphicPair(CatentError):
    """The Hom polynomial has the self-Hom shape q^s (1 + q^d).

    This is only a necessary test for isomorphism up to shift, so a
    non-isomorphic pair with the same polynomial would also be rejected.
    """


class BraidWordError(CatentError, ValueError):
    pass
