from .semigroup import (
    FiniteSemigroup, InternalInconsistency, LimitExceeded, SemigroupError, ValidationError, load_table,
)
from .pinj import PartialInjection
from .congruence import Congruence, all_congruences, largest_idempotent_separating_oracle, largest_separating_oracle
from .representations import munn_representation, vp_representation
from .terms import parse_pseudoidentities, satisfies
from .generate import corpus, generate_from_transformations
from .certify import Certification, certify_all
