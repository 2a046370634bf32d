"""Exception hierarchy shared by every layer of the package."""


class PictureFuzzyError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(PictureFuzzyError):
    """An argument lies outside the domain of a generator or operation."""


class OutOfDomainGamma(DomainError):
    def __init__(self, family, gamma, domain):
        self.family = family
        self.gamma = gamma
        self.domain = domain
        super().__init__(f"gamma={gamma!r} is outside the domain {domain} of the {family} family")


class InvalidPFN(PictureFuzzyError):
    """A triple violates the picture fuzzy number constraints."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class EmptyInput(PictureFuzzyError):
    pass


class LengthMismatch(PictureFuzzyError):
    pass


class TooFewElements(PictureFuzzyError):
    pass


class DegenerateWeight(PictureFuzzyError):
    pass


class InvalidWeights(PictureFuzzyError):
    pass


class DegenerateProblem(PictureFuzzyError):
    pass


class ParseError(PictureFuzzyError):
    """A problem file could not be read; ``location`` points at the offending spot."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)
