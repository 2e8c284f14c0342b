"""Combinatorial surgery, belts and growth enumeration for fullerene graphs."""

from .belts import (
    BeltAnalysis,
    FaceLoop,
    FiveBeltReport,
    NotFullerene,
    NotSimpleCycle,
    RegionSplit,
    belt_boundary_cycles,
    border_loops,
    classify_five_belts,
    find_k_belts,
    split_by_cycle,
)
from .growth import (
    GrowthRule,
    NegativeParameter,
    NotAMatch,
    ResultNotFullerene,
    apply_rule,
    decompose_rule,
    detect_growth_rules,
    detect_growth_sites,
    enumerate_fullerenes,
    enumerate_maps,
    invert_rule,
    load_fragment_catalog,
    load_rules,
    rules_by_id,
    seed,
    seed_barrel,
    seed_dodecahedron,
    seed_family_one,
    seed_family_two,
)
from .maps import (
    AsymmetricAdjacency,
    CombMap,
    Disconnected,
    MapError,
    NonCubic,
    NonPlanar,
    ValidationReport,
)
from .patterns import (
    MatchResult,
    PatchPattern,
    PatternError,
    extract_patch,
    match_pattern,
    path_turns,
    shortest_thick_path,
)
from .planarcode import (
    BadHeader,
    TruncatedRecord,
    ValidationFailure,
    read_planar_code,
    write_planar_code,
)
from .rulefile import RuleFileError, parse_file
from .spiral import generate_fullerenes, wind
from .surgery import (
    InvalidRun,
    IsSimplex,
    NotDefined,
    SpecOutOfRange,
    StraighteningResult,
    TruncationResult,
    TruncationSpec,
    can_straighten,
    flag_effects,
    is_flag,
    straighten,
    truncate,
    truncate_along_edge,
)
from .svg import render_svg, tutte_layout
from .verify import (
    FamilyReport,
    TheoremReport,
    classify_nanotube,
    verify_fullerene,
    verify_intermediate,
)

__all__ = [
    "AsymmetricAdjacency",
    "BadHeader",
    "BeltAnalysis",
    "CombMap",
    "Disconnected",
    "FaceLoop",
    "FamilyReport",
    "FiveBeltReport",
    "GrowthRule",
    "InvalidRun",
    "IsSimplex",
    "MapError",
    "MatchResult",
    "NegativeParameter",
    "NonCubic",
    "NonPlanar",
    "NotAMatch",
    "NotDefined",
    "NotFullerene",
    "NotSimpleCycle",
    "PatchPattern",
    "PatternError",
    "RegionSplit",
    "ResultNotFullerene",
    "RuleFileError",
    "SpecOutOfRange",
    "StraighteningResult",
    "TheoremReport",
    "TruncatedRecord",
    "TruncationResult",
    "TruncationSpec",
    "ValidationFailure",
    "ValidationReport",
    "apply_rule",
    "belt_boundary_cycles",
    "border_loops",
    "can_straighten",
    "classify_five_belts",
    "classify_nanotube",
    "decompose_rule",
    "detect_growth_rules",
    "detect_growth_sites",
    "enumerate_fullerenes",
    "enumerate_maps",
    "extract_patch",
    "find_k_belts",
    "flag_effects",
    "generate_fullerenes",
    "invert_rule",
    "is_flag",
    "load_fragment_catalog",
    "load_rules",
    "match_pattern",
    "parse_file",
    "path_turns",
    "read_planar_code",
    "render_svg",
    "rules_by_id",
    "seed",
    "seed_barrel",
    "seed_dodecahedron",
    "seed_family_one",
    "seed_family_two",
    "shortest_thick_path",
    "split_by_cycle",
    "straighten",
    "truncate",
    "truncate_along_edge",
    "tutte_layout",
    "verify_fullerene",
    "verify_intermediate",
    "wind",
    "write_planar_code",
]
