"""Exception hierarchy. Every error raised by the package derives from
:class:`InellipseError`, which is itself a :class:`ValueError`."""


class InellipseError(ValueError):
    pass


# quad
class NotConvex(InellipseError):
    pass


class Degenerate(InellipseError):
    pass


class NotCyclic(InellipseError):
    pass


class NotOrthodiagonal(InellipseError):
    pass


class CollinearMidpoints(InellipseError):
    pass


# conic
class DegenerateConic(InellipseError):
    pass


class NotEllipse(InellipseError):
    pass


class DegenerateLine(InellipseError):
    pass


# inscribed family / marden
class ParamOutOfRange(InellipseError):
    pass


class TrapezoidInput(InellipseError):
    pass


class InvalidTrapezoid(InellipseError):
    pass


class CollinearVertices(InellipseError):
    pass


class InvalidWeights(InellipseError):
    pass


# besant
class NotBesant(InellipseError):
    pass


class NonIsoscelesTrapezoid(NotBesant):
    pass


class ConstraintViolation(InellipseError):
    pass
