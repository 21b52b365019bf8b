"""Resume-to-career-trajectory pipeline.

Occupation coding with a few-shot completion backend, trajectory
construction over resume job histories, wage/cohort/region enrichment,
upward-mobility regression models, and crowd-rating evaluation statistics.
"""

from .analysis import (
    DesignMatrix,
    FitResult,
    ModelSpec,
    descriptives,
    encode_design,
    fit_logistic,
    run_models,
)
from .crowdeval import (
    aggregate_rating,
    binarize,
    krippendorff_alpha,
    precision,
    two_proportion_ztest,
)
from .enrichment import (
    GdpDecileTable,
    WageTable,
    cohort,
    interpolate_missing,
    lookup_wage,
    regional_rank,
    standardize_wage_socs,
    upward_label,
)
from .fewsoc import (
    ClassificationResult,
    FewShotExampleSet,
    classify_batch,
    classify_jobs,
    load_shot_set,
    parse_generation_response,
    parse_selection_response,
    render_generation_prompt,
    render_selection_prompt,
)
from .llm_backend import (
    BackendDescriptor,
    CompletionRequest,
    HttpCompletionBackend,
    MockCompletionBackend,
    complete,
)
from .profiles import (
    FilterCriteria,
    Profile,
    filter_profiles,
    hash_partition,
    parse_profiles,
    post_graduation_gap,
)
from .taxonomy import (
    CrosswalkTable,
    SocEntry,
    Taxonomy,
    closest_match,
    crosswalk_resolve,
    is_valid,
    load_crosswalk,
    load_taxonomy,
    word_overlap_sim,
)
from .trajectory import (
    CareerTrajectory,
    JobChangeFlags,
    MobilityCount,
    construct_trajectory,
    job_change_flags,
    job_mobility,
    window_truncate,
)

__version__ = "0.1.0"
