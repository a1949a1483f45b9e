"""Exception hierarchy shared by the library and the CLI."""


class SpechtError(ValueError):
    """Base class for every domain error raised by this package."""


class PartitionSyntaxError(SpechtError):
    """A partition expression could not be tokenised."""


class PartitionDomainError(SpechtError):
    """A sequence of parts does not form a partition."""


class InvalidNodeError(SpechtError):
    pass


class NotPrimeError(SpechtError):
    pass


class NotIrreducibleError(SpechtError):
    """Raised by operations that require a p-irreducible partition."""


class GlueError(SpechtError):
    """The middle component is empty while both outer components are not."""


class ShrinkError(SpechtError):
    pass


class LabelPairError(SpechtError):
    pass


class SpecialCaseError(SpechtError):
    """p = 2 and n = 4: the counting theorem does not apply, use the oracle."""


class LimitExceededError(SpechtError):
    pass


class ConstructionDefect(AssertionError):
    """A constructed partition failed its guaranteed properties."""
