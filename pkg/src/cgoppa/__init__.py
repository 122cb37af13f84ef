"""Convolutional Goppa codes over the projective line.

Build a code from sections ``t = alpha*z + beta`` and a monomial window
``t^s..t^r``, classify its generator matrix, and compute its degree and free
distance::

    >>> from cgoppa import field_make, sections_geometric, CodeSpec, analyze
    >>> F = field_make(3)
    >>> spec = CodeSpec(F, sections_geometric(F(1), F(2), 2), s=1, r=1)
    >>> analyze(spec).d_free
    4
"""

from cgoppa.analysis import (
    CodeReport,
    analyze,
    analyze_matrix,
    block_min_distance,
    codeword_weight,
    external_degree,
    free_distance_bruteforce,
    free_distance_search,
    singleton_bound,
)
from cgoppa.errors import (
    CodeError,
    FieldMismatchError,
    InconsistencyError,
    NotCanonicalError,
    RankDeficientError,
)
from cgoppa.galois import FieldElement, FieldSpec, field_make, parse_field, primitive_element
from cgoppa.goppa import (
    CodeSpec,
    Section,
    block_code_at,
    encode,
    generator_matrix,
    load_spec,
    sections_geometric,
    spec_from_dict,
    spec_to_dict,
)
from cgoppa.polymat import (
    ConstMatrix,
    PolyMatrix,
    basicize,
    canonical_form,
    const_rank,
    is_basic,
    is_canonical,
    is_reduced,
    leading_row_matrix,
    minors_gcd,
    parse_matrix,
    rank_rational,
    reduce_rows,
    row_degrees,
    smith_normal_form,
    specialize,
)
from cgoppa.polyring import NEG_INF, Poly, gcd, parse_poly, poly_divmod

__version__ = "0.1.0"
