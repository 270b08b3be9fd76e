"""Closed forms for abelian groups, (Z/p)^n normal forms, and O(2)."""

from .abelian import CompactAbelianDescriptor, abelian_mul, compact_abelian_reduce
from .elementary import ElementaryAbelianNF, nf_from_generators, nf_intersect
from .o2 import (O2Element, O2Subgroup, o2_mark, o2_mul, o2_p_perfection, parse_o2_element,
                 parse_o2_subgroup)
