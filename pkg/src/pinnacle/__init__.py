"""Exact counting and bijections for pinnacle sets of permutations."""

from .admissible import (
    catalan, count_admissible, count_ballot, enumerate_admissible, enumerate_ballot,
    eta, eta_inv, is_admissible, is_ballot, pd_polynomial, pinnacle_count,
)
from .bijections import (
    LatticePath, interleaved_from_subset, lattice_path_from_subset, phi, psi,
    right_canonical,
)
from .counting import (
    ALGORITHMS, ValeSetFamily, count, count_by_ordering, count_closed,
    count_composition, count_dale, count_vale, count_vale_sets, enumerate_vale_sets,
)
from .dales import Dale, DaleSelection, GapComposition, GapProfile, dale_rank_set
from .errors import (
    DomainError, IntegrityError, PinnacleError, SizeGuardError, UnsupportedSizeError,
    UsageError,
)
from .orderings import (
    count_orderings, count_orderings_composition, enumerate_orderings,
    is_admissible_ordering,
)
from .perm import (
    CyclicPermutation, Permutation, all_permutations, cyclic_pinnacle_set,
    lift_to_cyclic, parse_set, peak_set, pinnacle_set, vale_set,
)

__version__ = "0.1.0"
