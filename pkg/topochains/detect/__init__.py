"""The weak equivalence certificates of topochains."""

__title__ = 'detect'
__license__ = 'MIT'

from .whitehead import (
    OrdinaryHomology,
    Pi1Invariant,
    LocalHomology,
    CobarHomology,
    Distinguished,
    Inconclusive,
    Verdict,
    DetectConfig,
    ordinary_quasi_iso,
    compare_pi1,
    compare_local_homology,
    compare_universal_covers,
    compare_cobar,
    whitehead_verdict,
    replay_witness,
    NOT_WEAK_EQUIVALENCE,
    CONSISTENT_UP_TO,
    DEFAULT_UP_TO,
    DetectError
)
