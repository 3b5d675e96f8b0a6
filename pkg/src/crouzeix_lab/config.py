"""Central tolerance record.

Every residual and unitarity threshold used downstream lives here, so an
experiment can report exactly which tolerances it ran under and overrides
stay in one place.
"""

from dataclasses import dataclass, asdict, replace


@dataclass(frozen=True)
class Tolerances:
    residual: float = 1e-8        # commutators, triangularization, algebra defects
    unitarity: float = 1e-10      # U*U - I, norm-attainment, dilation residuals
    quadrature: float = 1e-8      # discrete Cauchy identity target at N=512
    on_boundary: float = 1e-10    # containment test boundary band
    membership: float = 1e-10     # class membership slack on norm / numerical radius
    estimate: float = 1e-4        # slack added to witness-search comparisons
    inequality: float = 1e-6      # margin floor for verified inequalities

    def as_dict(self):
        return asdict(self)

    def override(self, **kwargs):
        return replace(self, **kwargs)


DEFAULT_TOLERANCES = Tolerances()
