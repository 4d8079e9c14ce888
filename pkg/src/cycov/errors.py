"""Exception types shared by every module."""


class DomainError(ValueError):
    """Invalid input for a computation (as opposed to a programming error).

    The command line front end turns these into exit code 1 and prints the
    message verbatim.
    """


class BadCharacteristic(DomainError):
    pass


class SearchBudgetExceeded(DomainError):
    pass
