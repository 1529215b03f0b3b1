"""Exception types shared across the package."""


class DomainError(ValueError):
    """Mathematically out-of-range parameters (bad (m, n, r, k), non-smooth link, ...)."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed: sign pattern, duality, torsion, or cache mismatch.

    Raised instead of silently patching the offending value; a convention
    bug must surface, not be normalized away.
    """
