"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An object failed one of its structural invariants.

    The message always names the violated invariant so callers (and the CLI)
    can surface it verbatim.
    """


class DimensionMismatch(ValidationError):
    """Operands live on Hilbert spaces of different dimension."""


class UnsupportedSizeError(ValueError):
    """Input is structurally valid but outside what an algorithm covers."""


class UnambiguityViolation(ValueError):
    """A decoder claimed to be unambiguous assigns weight to a wrong symbol."""

    def __init__(self, sent, decoded, probability):
        self.sent = sent
        self.decoded = decoded
        self.probability = probability
        super().__init__(
            f"unambiguity violated: sending {sent!r} decodes to {decoded!r} "
            f"with probability {probability:.3e}"
        )
