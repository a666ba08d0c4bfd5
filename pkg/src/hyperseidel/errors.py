"""Exception types raised across the package."""


class HyperSeidelError(Exception):
    """Base class for all package errors."""


class InvalidParams(HyperSeidelError, ValueError):
    pass


class InvalidHypergraph(HyperSeidelError, ValueError):
    pass


class IndexOutOfRange(HyperSeidelError, IndexError):
    pass


class InvalidPair(HyperSeidelError, ValueError):
    pass


class EdgeNotFound(HyperSeidelError, KeyError):
    pass


class NotClassifiable(HyperSeidelError, ValueError):
    pass


class NoConvergence(HyperSeidelError, ArithmeticError):
    pass


class OrderTooLarge(HyperSeidelError, ValueError):
    pass


class InvalidPartition(HyperSeidelError, ValueError):
    pass


class NotEquitable(HyperSeidelError, ValueError):
    """Raised when a partition's block row sums are not constant.

    ``witness`` holds ``(r, s, i, i2)``: rows ``i`` and ``i2`` of block ``r``
    have different sums over block ``s`` (all 0-based).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
