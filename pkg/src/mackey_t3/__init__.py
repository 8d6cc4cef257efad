"""Socle filtrations, Ext dimensions and blocks for the three-diagram tensor
category of the Mackey Lie algebra, on top of a Littlewood-Richardson engine."""

from .partitions import (
    EMPTY,
    Partition,
    PartitionError,
    contains,
    enumerate_partitions,
    num_standard_tableaux,
    parse_partition,
    size,
    transpose,
)
from .lr import lr_coefficient, lr_expand_product, lr_oracle_product
from .sym import (
    SymElement,
    SymTensor,
    coproduct,
    graded_component,
    iterated_coproduct,
    pairing,
    product,
)
from .poset import (
    DefectUndefinedError,
    PairIndex,
    TripleIndex,
    covers3,
    defect2,
    defect3,
    down_set3,
    is_short3,
    leq2,
    leq3,
)
from .cat3 import (
    Filtration,
    InjectiveLabel,
    PairLabel,
    SimpleLabel,
    block_index,
    composition_multiplicity,
    decompose_X,
    ext_dim,
    ext_via_socle,
    hom_dim,
    injective,
    loewy_length,
    restrict_W_socle,
    simple,
    simple_index,
    socle2_layer,
    socle_filtration,
    socle_layer,
)
from .checks import verify_suite

__version__ = "0.1.0"
