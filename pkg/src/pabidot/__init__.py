"""Privacy-preserving perturbation of numeric tabular data.

The pipeline z-scores a dataset, grid-searches the multidimensional rotation
angle and reflection axis that maximize the minimum per-attribute privacy
guarantee, applies the composite geometric transform with a random
translation, inflates magnitudes with sign-preserving Gaussian noise, maps
the result back to the input scale and shuffles the rows.  Evaluation
utilities quantify attack resistance, entropy gain, distribution bias and
classification utility of a release.
"""

from .dataio import Dataset, drop_constant_columns, load_csv, write_csv
from .errors import (
    AttackSetupError,
    ConstantColumnError,
    DataFormatError,
    DataShapeError,
    ParameterError,
)
from .evaluate import (
    BiasResult,
    ResistanceResult,
    entropy_increase,
    knn_utility,
    known_io_attack,
    ks_attribute_rejections,
    ks_critical_value,
    ks_record_bias,
    ks_statistic,
    naive_inference_resistance,
    shannon_entropy,
)
from .normalize import ColumnStats, column_stats, inverse_zscore, zscore
from .pipeline import (
    PerturbationConfig,
    PerturbationResult,
    derive_streams,
    perturb,
    randomized_expansion,
    shuffle_rows,
)
from .report import (
    PerturbationReport,
    RunManifest,
    emit_report,
    load_report,
    manifest_from_dict,
    manifest_to_dict,
    report_from_dict,
    report_to_dict,
)
from .search import (
    EXCLUDED_DEGREES,
    PrivacyGrid,
    angle_grid,
    guarantee_bruteforce,
    guarantee_from_covariance,
    search_optimal,
)
from .transforms import (
    apply_composite,
    make_reflection_matrix,
    make_rotation_matrix,
    make_translation_matrix,
    plane_pairs,
    rotation_block,
)

__version__ = "0.1.0"

__all__ = [
    "AttackSetupError",
    "BiasResult",
    "ColumnStats",
    "ConstantColumnError",
    "DataFormatError",
    "DataShapeError",
    "Dataset",
    "EXCLUDED_DEGREES",
    "ParameterError",
    "PerturbationConfig",
    "PerturbationReport",
    "PerturbationResult",
    "PrivacyGrid",
    "ResistanceResult",
    "RunManifest",
    "angle_grid",
    "apply_composite",
    "column_stats",
    "derive_streams",
    "drop_constant_columns",
    "emit_report",
    "entropy_increase",
    "guarantee_bruteforce",
    "guarantee_from_covariance",
    "inverse_zscore",
    "knn_utility",
    "known_io_attack",
    "ks_attribute_rejections",
    "ks_critical_value",
    "ks_record_bias",
    "ks_statistic",
    "load_csv",
    "load_report",
    "make_reflection_matrix",
    "make_rotation_matrix",
    "make_translation_matrix",
    "manifest_from_dict",
    "manifest_to_dict",
    "naive_inference_resistance",
    "perturb",
    "plane_pairs",
    "randomized_expansion",
    "report_from_dict",
    "report_to_dict",
    "rotation_block",
    "search_optimal",
    "shannon_entropy",
    "shuffle_rows",
    "write_csv",
    "zscore",
]
