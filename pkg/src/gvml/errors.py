"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """An argument fell outside the documented domain of an operation."""


class IntegrityError(RuntimeError):
    """Internal evidence failed re-verification (dishonest modulus, bad certificate)."""


class DeltaSearchError(RuntimeError):
    """No delta on the dyadic grid inverts the t-norm for the requested epsilon."""


class DensityError(RuntimeError):
    """A dense generator could not supply a point within the required radius."""

    def __init__(self, index: int, radius) -> None:
        self.index = index
        self.radius = radius
        super().__init__(f"density exhausted at n={index}: no point within radius {radius}")


class ConstantSubsequenceError(ValueError):
    """A value is frequent enough to admit a constant subsequence at this horizon."""

    def __init__(self, value, count: int, horizon: int) -> None:
        self.value = value
        self.count = count
        self.horizon = horizon
        super().__init__(
            f"value {value!r} occurs {count} times within horizon {horizon} "
            f"(more than horizon/2): constant-subsequence candidate"
        )


class UnknownNameError(ValueError):
    """A lookup by name failed; carries the list of valid names."""

    def __init__(self, name: str, valid: tuple[str, ...]) -> None:
        self.name = name
        self.valid = tuple(valid)
        super().__init__(f"unknown name {name!r}; valid names: {', '.join(valid)}")
