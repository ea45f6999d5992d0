"""Exception types shared across the package."""


class PerfectCodesError(Exception):
    pass


class InvalidInput(PerfectCodesError, ValueError):
    pass


class InvalidParameter(PerfectCodesError, ValueError):
    pass


class CorruptDesign(PerfectCodesError, ValueError):
    """A triple family that is not a Steiner system where one is required."""


class CorruptCode(PerfectCodesError, ValueError):
    """Weight-3 words of a code that do not form a Steiner system."""


class NotClosed(PerfectCodesError, ValueError):
    """A restriction of a design that is not itself a Steiner system."""


class ConstructionBug(PerfectCodesError, RuntimeError):
    pass


class TheoryViolation(PerfectCodesError, RuntimeError):
    """A computed object contradicts a structural fact it must satisfy."""


class ResourceLimit(PerfectCodesError, RuntimeError):
    """A search or enumeration exceeded its configured budget."""
