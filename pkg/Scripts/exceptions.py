#!/usr/bin/env python3
# -*- coding: utf-8 -*-


class MarkedOrderError(Exception):
    """Root of all errors raised by the library."""


class InputError(MarkedOrderError, ValueError):
    """Malformed input or a violated precondition."""


class SizeLimit(MarkedOrderError):
    """An engine limit (elements, ideals, chains, search nodes) was exceeded."""


class VerificationFailure(MarkedOrderError):
    """An internal consistency check or an oracle comparison failed."""


class CycleDetected(InputError):
    pass


class DuplicateElement(InputError):
    pass


class EmptyShape(InputError):
    pass


class InvalidShape(InputError):
    pass


class VarMismatch(InputError):
    pass


class DuplicateNode(InputError):
    pass


class NegativeDilationVector(InputError):
    pass


class OutsideOrderCone(InputError):
    pass


class RegionViolation(InputError):
    pass


class NotNaturalLabeling(InputError):
    pass


class NotAnExtension(InputError):
    pass


class GapNotPositive(InputError):
    pass


class QuotientCycle(InputError):
    pass


class ContradictoryMarks(InputError):
    pass


class InvalidSpec(InputError):
    pass
