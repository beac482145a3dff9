"""
Exception hierarchy for phasewalk.

The CLI maps ConfigError to exit status 2 and DomainError (and its
subclasses) to exit status 3.
"""


class PhasewalkError(Exception):
    """Base class for every error raised by phasewalk"""


class DomainError(PhasewalkError, ValueError):
    """A numeric precondition failed (parameter out of range, bad norm, ...)"""


class DegenerateCoinError(DomainError):
    """Operation is undefined for tau1 == tau2 (b = 0, identity-like coin)"""

    def __init__(self, operation: str):
        super().__init__(
            f"{operation} is undefined for a degenerate coin (tau1 == tau2, b = 0); "
            f"the walk is ballistic, use exactsim.evolve for this case"
        )
        self.operation = operation


class QuadratureError(DomainError):
    """Too few quadrature nodes for the inverse Fourier integral to be exact"""

    def __init__(self, nodes: int, required: int):
        super().__init__(
            f"quadrature needs at least {required} nodes to be exact, got {nodes}"
        )
        self.nodes = nodes
        self.required = required


class ConfigError(PhasewalkError, ValueError):
    """Invalid run configuration (CLI usage error).

    Carries every violated precondition so the CLI can print one line each.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
