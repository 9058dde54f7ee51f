"""gvml: finite-scale verification for George-Veeramani fuzzy metric spaces.

Exact-arithmetic membership axioms, the four Cauchy-style sequence classes
at explicit scales, proof-style constructive extractions, completions of
classical rational metrics, and a gallery of named examples with seeded
property suites.
"""

from .completion import (CompletionPoint, completion_point, dist_interval,
                         embed, lift_standard_fuzzy, rational_approx, sqrt_point)
from .errors import (ConstantSubsequenceError, DeltaSearchError, DensityError,
                     DomainError, IntegrityError, UnknownNameError)
from .extract import (IndexChain, approximate_from_dense, cauchy_subsequence,
                      cofinal_subset_via_ball, distinct_subsequence, largest_delta)
from .gallery import GALLERY_NAMES, GalleryEntry, build_named, verify_entry
from .sequences import (ClassificationReport, Scale, SequenceSpec, classify,
                        clusters_at_scale, from_values, is_cauchy_at_scale,
                        is_cofinally_cauchy_at_scale, is_g_cauchy_at_scale,
                        is_pseudo_cauchy_at_scale, metric_is_cauchy,
                        metric_is_cofinally_cauchy, metric_is_g_cauchy,
                        metric_is_pseudo_cauchy)
from .space import (FuzzyMetricSpace, MetricSpace, ball_contains, check_axioms,
                    check_metric_axioms, discrete_metric, eval_m, isometry_check,
                    line_metric, md_threshold, monotone_in_t_check,
                    precompact_at_scale, standard_from_metric, subspace,
                    table_metric)
from .suites import SuiteReport, run_suite, suite_ids
from .tnorm import (LUKASIEWICZ, MINIMUM, PRODUCT, TNorm, apply, by_name,
                    custom, verify_axioms)
from .verdict import Status, Verdict

__version__ = "0.1.0"
