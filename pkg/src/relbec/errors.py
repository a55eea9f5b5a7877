"""Exception hierarchy for the relativistic Bose gas EOS engine."""


class RelBecError(Exception):
    """Base class for all domain errors raised by this package."""


class NonPositiveTemperature(RelBecError):
    """Temperature must be strictly positive (in units of the boson mass)."""


class UnphysicalMu(RelBecError):
    """Chemical potential outside [-m, m]; occupations would turn negative."""


class GaplessMode(RelBecError):
    """Zero-energy mode requested from the Bose occupation; the condensate
    mode must be treated separately."""


class NonConvergence(RelBecError):
    """Iterative scheme (quadrature refinement or root finding) exhausted
    its budget without reaching the requested tolerance."""


class BelowCritical(RelBecError):
    """Requested thermal state lies in the condensed phase; no chemical
    potential in (-m, m) can carry the full charge."""

    def __init__(self, message, q_tilde_max=None):
        super().__init__(message)
        self.q_tilde_max = q_tilde_max


class AboveCritical(RelBecError):
    """Condensed-phase solution requested above the critical temperature."""


class UnsupportedDimension(RelBecError):
    """Homogeneous BEC requires spatial dimension d > 2."""


class AsymptoteOutOfRange(RelBecError):
    """Low-temperature asymptotic formula evaluated outside its validity
    region (non-positive denominator)."""


class DivergentCondensateMode(RelBecError):
    """|mu| = m makes the zero-momentum particle occupation divergent."""


class TailTooLarge(RelBecError):
    """Mode cutoff too small: truncated modes contribute above tolerance."""

    def __init__(self, message, tail_bound=None):
        super().__init__(message)
        self.tail_bound = tail_bound
