"""Deterministic simulator and algorithm library for redundant RFID reader
detection.

Quick tour::

    import rfidsim

    net = rfidsim.fixtures.ex2()
    result = rfidsim.run("oa", net)
    result.redundant          # frozenset({0, 2})
    result.writes_total       # 10

    cfg = rfidsim.ScenarioConfig(reader_count=50, tag_count=400, radius=500,
                                 seed=7)
    net = rfidsim.generate(cfg)
    rfidsim.run("rre", net, order=range(50)).redundant
"""

from . import fixtures
from .algorithms import (
    AlgorithmId,
    DetectionResult,
    format_result,
    run,
    run_drre,
    run_leo,
    run_leo_rre,
    run_naive,
    run_oa,
    run_rre,
    validate_order,
)
from .backend import available_backends, default_backend_name, get_backend
from .experiment import (
    CSV_HEADER,
    ResultRow,
    iter_plan_rows,
    render_plot_script,
    run_plan_to_csv,
)
from .netfile import (
    NetworkFormatError,
    canonical_real,
    load_network,
    parse_network,
    save_network,
    serialize_network,
)
from .network import (
    NetworkOrigin,
    Point2D,
    ReaderSpec,
    RfidNetwork,
    TagSpec,
    build_explicit,
    build_geometric,
)
from .oracles import (
    CoverageVerdict,
    GuardRefusal,
    MetricsReport,
    compute_metrics,
    greedy_redundant_lower_bound,
    oa_characterization,
    optimal_redundant_count,
    pod,
    prd,
    verify_coverage,
)
from .scenario import (
    PRNG_NAME,
    ExperimentPlan,
    ScenarioConfig,
    derive_trial_seed,
    generate,
    generate_trial,
    plan,
)
from .tagmem import (
    StatusTransitionError,
    TagArena,
    TagField,
    TagMemory,
    TagStatus,
    WriteLedger,
)

__version__ = "0.1.0"
