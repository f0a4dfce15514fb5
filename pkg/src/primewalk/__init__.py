"""Prime walks in Z[sqrt 2] and Z[i]: exact ring arithmetic, prime enumeration,
norm-curve families, asymptotic estimates and bounded-step walk exploration."""

from .ring import QuadInt, Ring, UnitPower, associates_in_box, conjugate, is_unit, mul, norm, unit_pow
from .primality import (
    Classification,
    PrimeKind,
    Representation,
    Verdict,
    classify,
    is_rational_prime,
    represent_prime,
    sqrt_mod_prime,
)
from .enumeration import (
    AsymptoteStrip,
    Disk,
    NormRegion,
    Rect,
    count_primes_in_disk,
    families_with_primes,
    family_contains_primes,
    prime_points,
    primes_between_on_branch,
    primes_in_region,
    representable_count,
)
from .analytics import (
    BernaysEstimate,
    MoatBoundReport,
    compare_disk_counts,
    estimate_bernays_constant,
    family_count_asymptotic,
    family_density_asymptotic,
    gaussian_density_asymptotic,
    gaussian_disk_count_asymptotic,
    moat_bound_report,
)
from .walks import (
    ComponentSummary,
    WalkGraph,
    WalkPath,
    build_walk_graph,
    component_of,
    moat_scan,
    neighbors,
    random_walk,
)

__version__ = "0.1.0"
