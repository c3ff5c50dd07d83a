class GaussRdpException(Exception):

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class DomainException(GaussRdpException):
    """ An argument lies outside the domain of the operation. """
    pass


class UsageException(GaussRdpException):
    """ The operation was called with an incompatible configuration (wrong measure, budget exceeded, ...). """
    pass


class StateException(GaussRdpException):
    """ The operation is undefined at the given point (e.g. outside the positive-supremum region). """
    pass


class PreconditionException(GaussRdpException):

    def __init__(self, message, condition):
        super().__init__(message)
        self.condition = condition


class NumericalException(GaussRdpException):

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or dict()
