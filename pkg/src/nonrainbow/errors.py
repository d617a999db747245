"""
Exceptions and default implementations for record-level error handlers
"""
import logging

log = logging.getLogger(__name__)


class NonRainbowError(ValueError):
    pass


class InvalidVertex(NonRainbowError):
    pass


class FaceNotTriple(NonRainbowError):
    pass


class DuplicateFace(NonRainbowError):
    pass


class EdgeNotInTwoFaces(NonRainbowError):
    pass


class VertexLinkNotSingleCycle(NonRainbowError):
    pass


class Disconnected(NonRainbowError):
    pass


class UnsupportedSurface(NonRainbowError):
    pass


class NotAFace(NonRainbowError):
    pass


class InvalidColoring(NonRainbowError):
    pass


class NotNullColoring(NonRainbowError):
    pass


class PlanarCodeError(NonRainbowError):
    pass


class FormatError(NonRainbowError):
    def __init__(self, msg, lineno=None):
        if lineno is not None:
            msg = 'line {0}: {1}'.format(lineno, msg)
        super(FormatError, self).__init__(msg)
        self.lineno = lineno


class BudgetExhausted(RuntimeError):
    def __init__(self, nodes, msg=None):
        super(BudgetExhausted, self).__init__(
            msg or 'search budget exhausted after {0} nodes'.format(nodes))
        self.nodes = nodes


def strict(record, exc):
    log.debug('invalid record {0}: {1}'.format(record, exc))
    raise exc


def skip(record, exc):
    log.warning('skipping record {0}: {1}'.format(record, exc))
    return None
