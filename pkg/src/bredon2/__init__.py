"""Exact calculator and verification harness for the C2-equivariant Bredon
cohomology rings with Z/2 coefficients, topological and motivic."""

from .grading import (
    GENERATORS,
    MotDegree,
    RegionKind,
    RO2Degree,
    WeightRegion,
    classify_weight,
    degree_add,
    generator_degree,
)
from .motivic import (
    BC2Elem,
    BC2Mono,
    CFieldElem,
    CFieldMono,
    EC2MotElem,
    EC2MotMono,
    FreeMono,
    MotElem,
    TildeMotElem,
    TildeMotMono,
    TorMono,
    bc2_basis,
    bc2_dim,
    bc2_mul,
    bc2_to_ec2mot,
    ec2mot_basis,
    ec2mot_mul,
    mot_basis,
    mot_gen,
    mot_mul,
    restrict_to_ec2,
    tilde_to_mot,
    tildemot_act,
    tildemot_basis,
)
from .point import (
    BElem,
    EC2TopElem,
    EC2TopMono,
    InhomogeneousError,
    PtElem,
    PtMono,
    TildeTopElem,
    TildeTopMono,
    TopBC2Elem,
    TopBC2Mono,
    b_incl,
    b_mul_u2,
    b_quot,
    b_to_pt,
    basis_at,
    ec2top_mul,
    localize,
    pt_act_tilde,
    pt_basis,
    pt_mul,
    tilde_to_pt,
)
from .expr import (
    ParseError,
    RingConstraintError,
    RingId,
    parse,
    parse_ring_id,
    print_canonical,
)
from .realize import re_bc2, re_ec2, re_point, re_tilde
from .verify import Report, Window, verify_all

__version__ = "0.1.0"
