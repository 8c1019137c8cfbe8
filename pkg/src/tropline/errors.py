"""Exception types raised across the package."""


class TroplineError(ValueError):
    pass


class NonSquare(TroplineError):
    pass


NotSquare = NonSquare


class DimensionMismatch(TroplineError):
    pass


class NotATree(TroplineError):
    pass


class RankOne(TroplineError):
    pass


class NotCollinear(TroplineError):
    pass


class UnsupportedDimension(TroplineError):
    pass


class FaceNotInComplex(TroplineError):
    pass


class NotPure(TroplineError):
    pass


class OrderMismatch(TroplineError):
    pass


class NotAShelling(TroplineError):
    pass


class InvalidClassString(TroplineError):
    pass


class LengthMismatch(TroplineError):
    pass


class ParseError(TroplineError):
    pass
