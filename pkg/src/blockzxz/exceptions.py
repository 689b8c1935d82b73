"""Exception types shared across the package."""


class BlockZXZError(Exception):
    """Base class for all errors raised by this package."""


class ShapeMismatchError(BlockZXZError):
    """Operands do not have compatible shapes."""


class OddDimensionError(BlockZXZError):
    """A block operation was requested on a matrix of odd dimension."""


class NotUnitaryError(BlockZXZError):
    """A matrix failed the unitarity check at the configured tolerance."""


class NotPermutationError(BlockZXZError):
    """A matrix expected to be a permutation matrix is not one."""


class NotPowerOfTwoError(BlockZXZError):
    """Circuit synthesis requires a 2**w x 2**w matrix."""


class NonConvergenceError(BlockZXZError):
    """Iterative polar decomposition did not converge within max_iter."""


class InvalidOptionsError(BlockZXZError):
    """An option value is out of its documented range."""


class DecompositionFailedError(BlockZXZError):
    """Factorization did not meet the residual gate after all fallbacks."""
