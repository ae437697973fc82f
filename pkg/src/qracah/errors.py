"""Exception types shared across the package."""


class PoleError(ArithmeticError):
    """A product formula hit a vanishing denominator factor.

    All reference configurations are pole-free, so a pole almost always
    means misconfigured (non-generic) parameters rather than a legitimate
    infinity.
    """


class SingularEvaluationError(ValueError):
    """An operator coefficient was evaluated on its singular locus."""


class DegenerateParameterError(ArithmeticError):
    """Parameters failed a genericity requirement (vanishing norm,
    colliding eigenvalues, or an interpolation system that stayed
    ill-conditioned after resampling)."""
