"""Burnside rings of finite groups, with closed forms for tori, compact abelian groups and O(2)."""

__version__ = "0.1.0"

from .groups import (DEFAULT_MAX_ORDER, FiniteGroup, GroupError, GroupSpecError, OrderCapExceeded,
                     Subgroup, all_subgroup_classes, double_coset_reps, fixed_point_count,
                     is_solvable, p_residual, parse_group_spec)
from .lattice import (BurnsideElement, GhostVector, MarkMatrix, SubgroupLattice, build_lattice,
                      invert_marks, mark_vector, table_of_marks)
from .ring import augmentation, mul, mul_oracle, mul_orbits, parse_element, verify_presentation
from .congruence import congruences_for_class, in_image, order_check
from .spectrum import (bauer_may_check, idempotents, p_perfection_pair, pi_perfect_classes,
                       prime_ideal_equal, units)
from .maps import alpha_map, embed, induction, product_lattice, product_map, restriction
