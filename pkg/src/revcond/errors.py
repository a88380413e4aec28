"""Exception types shared across the package."""


class RevcondError(Exception):
    pass


class ParseError(RevcondError, ValueError):
    """A string is not a canonical element encoding for the structure."""


class CapabilityError(RevcondError):
    """The structure does not support the requested witness operation."""


class PreconditionError(RevcondError, ValueError):
    pass


class PosetError(RevcondError, ValueError):
    """An order table is not reflexive, antisymmetric and transitive."""


class StrategyError(RevcondError):
    """An extension step could not produce its witness.

    The constructions are guaranteed to succeed, so this always points to a bug.
    """


class SeedError(RevcondError, ValueError):
    pass


class IncompatibleError(RevcondError, ValueError):
    """The (structure, strategy) pair is not supported."""
