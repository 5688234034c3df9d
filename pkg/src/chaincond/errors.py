"""Exception hierarchy shared by every module."""


class ChainCondError(ValueError):
    """Base class for all library errors."""


class KindMismatch(ChainCondError):
    pass


class EqualBranches(ChainCondError):
    pass


class EntryOutOfRange(ChainCondError):
    pass


class NotAntiClique(ChainCondError):
    pass


class NotAClique(ChainCondError):
    pass


class EmptyCondition(ChainCondError):
    pass


class BadArity(ChainCondError):
    pass


class DepthTooSmall(ChainCondError):
    pass


class TooLarge(ChainCondError):
    pass


class IndexOutOfRange(ChainCondError):
    pass


class NotAPartialOrder(ChainCondError):
    pass


class InvalidConfiguration(ChainCondError):
    pass


class UnknownSelector(ChainCondError):
    pass


class ConfigError(ChainCondError):
    pass
