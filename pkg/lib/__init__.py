"""
ED文字列ツールキット - ライブラリパッケージ

モジュール構成:
- edcore: ED文字列の型・パース・言語・出現
- linearization: 線形化表記の索引（adj, P, next）
- lce: 最長共通拡張・最長反復因子・EDSI
- satkit: CNF・DIMACS・DPLL・外部ソルバ
- uniqueness: 極小ユニーク部分文字列・極小欠如語
- antipower: k次アンチパワー・ハミルトン路からの帰着
- lpf: 最長先行因子・共通部分列からの帰着
- equiv: オートマトンと言語等価性
- generators: 乱数インスタンス
- file_readers: 入力ファイル
- config: 設定・ログ
- validation: 例外と入力検証
"""

# 設定・ログ
from .config import Settings, get_settings, log, reset_settings

# 例外と入力検証
from .validation import (
    AlphabetExhausted,
    BudgetExceeded,
    CandidateSpaceTooLarge,
    ClauseWithRepeatedVariable,
    DollarInAlphabet,
    EdStringSyntaxError,
    EmptySymbol,
    InvalidCharacter,
    InvalidTextPosition,
    LanguageTooLarge,
    MalformedDimacs,
    MalformedGraph,
    MalformedWitness,
    ModelRejected,
    NestedParentheses,
    NotGd,
    NotIndeterminate,
    ReservedCharacterInAlphabet,
    SearchBudgetExceeded,
    SolverError,
    SolverUnavailable,
    UnbalancedParentheses,
    UnparsableOutput,
    ValidationError,
    validate_enum,
    validate_positive_int,
)

# ED文字列
from .edcore import (
    EDString,
    StringClass,
    Symbol,
    TextPosition,
    char_at,
    classify,
    enumerate_language,
    language_size_bound,
    max_degree,
    occurrence_positions,
    occurs_at,
    parse_linearized,
    serialize_linearized,
    size,
    symbol_sizes,
    text_positions,
    validate_text_position,
)

# 線形化
from .linearization import Linearization, build_linearization, posmap

# LCE / LRF / EDSI
from .lce import (
    LceTable,
    LrfResult,
    edsi_decide,
    lce,
    lce_at,
    lce_bruteforce,
    lrf,
    lrf_bruteforce,
    lrf_length,
    pick_separator,
)

# SAT
from .satkit import (
    CnfBuilder,
    CnfFormula,
    SolveResult,
    SolveStatus,
    emit_dimacs,
    parse_dimacs,
    solve,
    solve_external,
    truth_table_solve,
)

# MUS / MAW
from .uniqueness import (
    Cnf3,
    EncodedInstance,
    EncodingKind,
    Reduction,
    ReductionReport,
    UniquenessResult,
    absent_words,
    clause_gadget,
    encode_maw_cnf,
    encode_mus_cnf,
    is_absent,
    is_maw,
    is_mus,
    is_unique,
    minimal_length_profile,
    occurrence_count_indet,
    occurrence_counts,
    present_strings,
    reduce_3sat_to_maw,
    reduce_3sat_to_mus,
    shortest_absent_bruteforce,
    shortest_absent_sat,
    shortest_unique_bruteforce,
    shortest_unique_sat,
    unique_words,
    verify_reduction_roundtrip,
)

# アンチパワー
from .antipower import (
    AntiPowerWitness,
    Graph,
    HampathReduction,
    antipower_witnesses,
    complete_graph,
    extract_ham_path,
    hamiltonian_paths,
    has_hamiltonian_path,
    has_k_antipower,
    is_k_antipower,
    reduce_hampath,
    vertex_codes,
)

# LPF
from .lpf import (
    CsInstance,
    CsReduction,
    LpfResult,
    StrongRepeat,
    classic_lpf,
    decide_common_subsequence,
    has_common_subsequence_bruteforce,
    longest_strong_repeat,
    lpf_strong_at,
    lpf_weak,
    max_lpf_strong,
    reduce_common_subsequence,
)

# 言語等価性
from .equiv import (
    Dfa,
    InequalityReport,
    Nfa,
    TwoEdReduction,
    TwoEdString,
    build_ed_nfa,
    build_gd_dfa,
    check_2ed_inequality,
    dfa_equivalent,
    languages_equal_bruteforce,
    reduce_3sat_to_2ed_inequality,
)

# 乱数インスタンス
from .generators import (
    random_cnf3,
    random_cs_instance,
    random_ed_string,
    random_gd_string,
    random_graph,
    random_indeterminate_string,
)

# ファイル読み込み
from .file_readers import (
    get_supported_formats,
    read_dimacs,
    read_ed_string,
    read_ed_strings,
    read_graph,
    read_strings,
    read_text_file,
)

__all__ = [
    # 設定・ログ
    "Settings", "get_settings", "log", "reset_settings",
    # 例外と入力検証
    "AlphabetExhausted", "BudgetExceeded", "CandidateSpaceTooLarge",
    "ClauseWithRepeatedVariable", "DollarInAlphabet", "EdStringSyntaxError",
    "EmptySymbol", "InvalidCharacter", "InvalidTextPosition", "LanguageTooLarge",
    "MalformedDimacs", "MalformedGraph", "MalformedWitness", "ModelRejected",
    "NestedParentheses", "NotGd", "NotIndeterminate", "ReservedCharacterInAlphabet",
    "SearchBudgetExceeded", "SolverError", "SolverUnavailable",
    "UnbalancedParentheses", "UnparsableOutput", "ValidationError",
    "validate_enum", "validate_positive_int",
    # ED文字列
    "EDString", "StringClass", "Symbol", "TextPosition", "char_at", "classify",
    "enumerate_language", "language_size_bound", "max_degree",
    "occurrence_positions", "occurs_at", "parse_linearized",
    "serialize_linearized", "size", "symbol_sizes", "text_positions",
    "validate_text_position",
    # 線形化
    "Linearization", "build_linearization", "posmap",
    # LCE / LRF / EDSI
    "LceTable", "LrfResult", "edsi_decide", "lce", "lce_at", "lce_bruteforce",
    "lrf", "lrf_bruteforce", "lrf_length", "pick_separator",
    # SAT
    "CnfBuilder", "CnfFormula", "SolveResult", "SolveStatus", "emit_dimacs",
    "parse_dimacs", "solve", "solve_external", "truth_table_solve",
    # MUS / MAW
    "Cnf3", "EncodedInstance", "EncodingKind", "Reduction", "ReductionReport",
    "UniquenessResult", "absent_words", "clause_gadget", "encode_maw_cnf",
    "encode_mus_cnf", "is_absent", "is_maw", "is_mus", "is_unique",
    "minimal_length_profile", "occurrence_count_indet", "occurrence_counts", "present_strings",
    "reduce_3sat_to_maw", "reduce_3sat_to_mus", "shortest_absent_bruteforce",
    "shortest_absent_sat", "shortest_unique_bruteforce", "shortest_unique_sat",
    "unique_words", "verify_reduction_roundtrip",
    # アンチパワー
    "AntiPowerWitness", "Graph", "HampathReduction", "antipower_witnesses",
    "complete_graph", "extract_ham_path", "hamiltonian_paths",
    "has_hamiltonian_path", "has_k_antipower", "is_k_antipower",
    "reduce_hampath", "vertex_codes",
    # LPF
    "CsInstance", "CsReduction", "LpfResult", "StrongRepeat", "classic_lpf",
    "decide_common_subsequence", "has_common_subsequence_bruteforce",
    "longest_strong_repeat", "lpf_strong_at", "lpf_weak", "max_lpf_strong",
    "reduce_common_subsequence",
    # 言語等価性
    "Dfa", "InequalityReport", "Nfa", "TwoEdReduction", "TwoEdString",
    "build_ed_nfa", "build_gd_dfa", "check_2ed_inequality", "dfa_equivalent",
    "languages_equal_bruteforce", "reduce_3sat_to_2ed_inequality",
    # 乱数インスタンス
    "random_cnf3", "random_cs_instance", "random_ed_string", "random_gd_string",
    "random_graph", "random_indeterminate_string",
    # ファイル読み込み
    "get_supported_formats", "read_dimacs", "read_ed_string", "read_ed_strings",
    "read_graph", "read_strings", "read_text_file",
]
