"""Exception hierarchy shared by all qpn modules.

Exit-code mapping used by the CLI: validation problems exit 2, analysis
failures (cap exceeded, vanishing cycles, singular solves, ...) exit 3,
verification/assertion failures exit 4.
"""


class QpnError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ValidationError(QpnError):
    """Malformed input: schema, syntax, structural invariant, bad argument."""

    exit_code = 2


class UniverseMismatchError(ValidationError):
    """Two multisets over different element universes were combined."""


class AnalysisError(QpnError):
    """A well-formed model that cannot be analysed as requested."""

    exit_code = 3


class StateCapExceededError(AnalysisError):
    """Reachability exploration hit the state cap (net may be unbounded)."""


class NotEnabledError(AnalysisError):
    """A transition or concurrence was fired in a marking that does not enable it."""


class VanishingCycleError(AnalysisError):
    """The vanishing sub-graph of a GSPN contains a cycle."""


class VerificationError(QpnError):
    """A requested verification (law check, compile --verify, teleport) failed."""

    exit_code = 4
