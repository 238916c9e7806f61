"""Double-cylinder cycle codes: construction, girth analysis, shift search."""

from .bsg import (
    BlockStructureGraph,
    BsgEdge,
    ClosedWalk,
    InevitableWalks,
    build_bsg,
    inevitable_walks,
    to_dot,
    validate_closed_walk,
)
from .construction import (
    CodeParams,
    LiftedCode,
    MotherMatrix,
    SlopeSequence,
    build_mother,
    code_length,
    lift,
)
from .formats import (
    AlistError,
    SparseMatrix,
    export_alist,
    import_alist,
    load_descriptor,
    save_descriptor,
)
from .girth import GirthResult, g_max, girth_bfs, girth_bsg, gmax_sweep, sweep_csv
from .search import MinMResult, SearchConfig, SearchOutcome, min_m_search, search
from .table import (
    CodeRecord,
    RecordVerification,
    VerificationReport,
    load_fixtures,
    structural_flags,
    verify_table,
)

__version__ = "0.1.0"
