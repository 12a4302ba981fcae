"""Exception hierarchy shared by all modules."""


class CosGrassError(ValueError):
    """Base class for every error raised by :mod:`cosgrass`."""


class ConstraintViolation(CosGrassError):
    pass


class TrivialCharacter(CosGrassError):
    pass


class DimensionMismatch(CosGrassError):
    pass


class NotInLattice(CosGrassError):
    pass


class NotNeighbors(CosGrassError):
    pass


class NoPath(CosGrassError):
    pass


class DomainError(CosGrassError):
    pass


class SingularBlock(CosGrassError):
    pass


class KernelSingular(CosGrassError):
    pass


class NotInL(CosGrassError):
    pass


class ConventionMismatch(CosGrassError):
    pass


class ExcessiveRejection(CosGrassError):
    pass


class NotASection(CosGrassError):
    """A callback passed as a section fails f(k m) = chi(m)^{-1} f(k)."""
