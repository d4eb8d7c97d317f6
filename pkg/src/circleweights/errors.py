"""Exception hierarchy shared across the package."""


class CircleWeightsError(Exception):
    """Base class for all errors raised by circleweights."""


class InvalidWeightError(CircleWeightsError, ValueError):
    """A weight was zero or negative."""


class TruncationMismatchError(CircleWeightsError, ValueError):
    """Two truncated series with different truncation orders were combined."""


class InvalidDatasetError(CircleWeightsError, ValueError):
    """A dataset failed validation; ``violations`` lists what went wrong."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)


class PartitionError(CircleWeightsError, ValueError):
    """A component partition does not match the dataset it is used with."""


class IncompletePartitionError(PartitionError):
    """A component partition lacks the relative signs an operation needs."""


class DomainError(CircleWeightsError, ValueError):
    """An operation defined only for odd weight values got an even one."""


class InconsistentDataError(CircleWeightsError):
    """The signature expression of a dataset is not constant."""

    def __init__(self, first_failing_order):
        super().__init__(
            f"signature expression is not constant; first nonzero "
            f"coefficient at order {first_failing_order}"
        )
        self.first_failing_order = first_failing_order


class PairingError(CircleWeightsError):
    """No pairing with the requested properties exists."""

    def __init__(self, message, value, component=None):
        super().__init__(message)
        self.value = value
        self.component = component


class ParityError(PairingError):
    """A weight value occurs an odd number of times in total."""


class InfeasiblePairingError(PairingError):
    """Distinct-point pairing is impossible: one point holds too many copies."""


class SearchLimitExceeded(CircleWeightsError):
    """The enumerator examined more candidates than allowed.

    ``examined`` is the number of candidates looked at before giving up,
    ``partitions_done`` the number of leading search partitions that were
    completed (their results were already emitted), and ``emitted`` the
    number of datasets emitted so far.
    """

    def __init__(self, limit, examined, partitions_done, emitted):
        super().__init__(
            f"candidate limit {limit} exceeded after {examined} candidates "
            f"({partitions_done} partitions completed, {emitted} datasets emitted)"
        )
        self.limit = limit
        self.examined = examined
        self.partitions_done = partitions_done
        self.emitted = emitted


class EmptyDatasetError(CircleWeightsError, ValueError):
    """A quantity (gcd, minimum weight) is undefined because there are no weights."""


class NonEffectiveWarning(UserWarning):
    """The weights share a common factor, so the action is not effective."""
