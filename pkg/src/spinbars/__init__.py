"""Spin-character combinatorics and basic-set verification for the double covers."""

from .algnum import AlgNum
from .barcomb import (
    BarPartition,
    BarQuotient,
    Partition,
    bar_core_quotient,
    bar_partitions,
    delta_bar,
    doubling,
    from_core_quotient,
    is_bar_core,
    partition_core_quotient,
    partitions,
    sigma,
)
from .blocks import (
    BlockId,
    LocalLabel,
    basic_set,
    block_members,
    block_of,
    block_partition,
    brauer_count,
    local_basic_labels,
)
from .isometry import (
    IsometrySpec,
    Kernel,
    UnsupportedTargetError,
    basic_set_transport,
    block_kernel,
    broue_check,
    compose_kernel,
    identity_iso,
    iso_I,
    kernel_of,
    local_side,
    perfect_check,
    swap_J,
)
from .spinchar import (
    SpinLabel,
    SplitClass,
    char_value,
    degree,
    epsilon_twist,
    inner_product,
    labels,
    split_classes,
    value_vector,
)
from .zverify import (
    ValueMatrix,
    VerificationReport,
    p_integrality,
    restricted_matrix,
    verify_basic_set,
    z_span_equal,
)

__all__ = [
    "AlgNum",
    "BarPartition",
    "BarQuotient",
    "BlockId",
    "IsometrySpec",
    "Kernel",
    "LocalLabel",
    "Partition",
    "SpinLabel",
    "SplitClass",
    "UnsupportedTargetError",
    "ValueMatrix",
    "VerificationReport",
    "bar_core_quotient",
    "bar_partitions",
    "basic_set",
    "basic_set_transport",
    "block_kernel",
    "block_members",
    "block_of",
    "block_partition",
    "brauer_count",
    "broue_check",
    "char_value",
    "compose_kernel",
    "degree",
    "delta_bar",
    "doubling",
    "epsilon_twist",
    "from_core_quotient",
    "identity_iso",
    "inner_product",
    "is_bar_core",
    "iso_I",
    "kernel_of",
    "labels",
    "local_basic_labels",
    "local_side",
    "p_integrality",
    "partition_core_quotient",
    "partitions",
    "perfect_check",
    "restricted_matrix",
    "sigma",
    "split_classes",
    "swap_J",
    "value_vector",
    "verify_basic_set",
    "z_span_equal",
]
