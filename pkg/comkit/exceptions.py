from __future__ import absolute_import, division, print_function


class ComkitException(Exception):
    PARSE = "ParseError"
    DIMENSION = "DimensionMismatch"
    GUARD = "GuardExceeded"
    PRECONDITION = "PreconditionFailed"
    EMPTY = "EmptyResult"
    CONSISTENCY = "InternalConsistency"
    CONFIG = "ConfigError"
    UNKNOWN_AXIOM = "UnknownAxiom"

    code = None
    exit_code = 1

    # pylint: disable=super-init-not-called
    def __init__(self, msg, code=None, locator=None):
        self.errors = []
        self.add_error(msg, code or self.code, locator)
        Exception.__init__(self, msg)

    def add_error(self, msg, code=None, locator=None):
        self.errors.append({
            "msg": msg,
            "code": code,
            "locator": locator
        })

    def report(self):
        return {
            "error": type(self).__name__,
            "errors": list(self.errors),
        }


class ParseError(ComkitException):
    code = ComkitException.PARSE
    exit_code = 2


class DimensionError(ComkitException):
    code = ComkitException.DIMENSION
    exit_code = 2


class GuardExceeded(ComkitException):
    code = ComkitException.GUARD
    exit_code = 3


class PreconditionError(ComkitException):
    code = ComkitException.PRECONDITION
    exit_code = 1

    def __init__(self, msg, code=None, locator=None, axiom_report=None):
        super(PreconditionError, self).__init__(msg, code, locator)
        self.axiom_report = axiom_report

    def report(self):
        rep = super(PreconditionError, self).report()
        if self.axiom_report is not None:
            rep["axiom"] = self.axiom_report.as_dict()
        return rep


class EmptyResultError(ComkitException):
    code = ComkitException.EMPTY
    exit_code = 1


class ConsistencyError(ComkitException):
    code = ComkitException.CONSISTENCY
    exit_code = 4


class ConfigException(ComkitException):
    code = ComkitException.CONFIG
    exit_code = 2


class UnknownAxiom(ComkitException, KeyError):
    code = ComkitException.UNKNOWN_AXIOM
    exit_code = 2

    def __str__(self):
        return self.errors[0]["msg"]


def check_guard(n, guard, what="ground set"):
    """Raise GuardExceeded when an exhaustive enumeration over n elements is over the limit."""
    if guard is None:
        from comkit.comkit_configuration import get_config
        guard = get_config().enumeration_guard
    if n > guard:
        raise GuardExceeded(
            "%s of size %d exceeds the enumeration guard (%d)" % (what, n, guard),
            locator=what)
