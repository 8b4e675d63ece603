"""
ED文字列ツールキット - 極小ユニーク部分文字列（MUS）・極小欠損語（MAW）モジュール

不確定文字列上の出現回数・MUS/MAW 判定、総当たりによる最短解の探索、
固定長の SAT 符号化、3-SAT からの帰着文字列の生成と往復検証を提供する。
"""

from collections import Counter
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import NamedTuple

from .config import get_settings, log
from .edcore import EDString, StringClass, Symbol, classify
from .satkit import CnfBuilder, CnfFormula, SolveResult, solve
from .validation import (
    CandidateSpaceTooLarge,
    ClauseWithRepeatedVariable,
    NotIndeterminate,
    ValidationError,
    validate_enum,
    validate_positive_int,
)

BIT = Symbol(("0", "1"))
DOLLAR = Symbol(("$",))
BIT_OR_DOLLAR = Symbol.of("01$")


class EncodingKind(str, Enum):
    """符号化・帰着の種類"""
    MUS = "mus"
    MAW = "maw"


# =============================================================================
# 3-CNF
# =============================================================================

@dataclass(frozen=True)
class Cnf3:
    """
    3-CNF式

    各節は変数番号の昇順に正規化した3リテラルの組。
    """
    variable_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        validate_positive_int(self.variable_count, "変数の個数")
        normalized = []
        for number, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise ValidationError(f"第{number}節はリテラルが3個ではありません: {clause}")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise ValidationError(f"第{number}節のリテラル {lit} は範囲外です")
            if len({abs(lit) for lit in clause}) != 3:
                raise ClauseWithRepeatedVariable(f"第{number}節に同じ変数が複数回現れます: {clause}")
            normalized.append(tuple(sorted(clause, key=abs)))
        object.__setattr__(self, "clauses", tuple(normalized))

    @classmethod
    def from_formula(cls, f: CnfFormula) -> "Cnf3":
        """DIMACS 由来の CnfFormula から変換"""
        return cls(f.variable_count, tuple(tuple(clause) for clause in f.clauses))  # type: ignore[misc]

    def to_formula(self) -> CnfFormula:
        return CnfFormula(self.variable_count, self.clauses)

    def is_satisfied_by(self, bits: str) -> bool:
        """ビット列割当（B[i]='1' ⟺ x_i が真）で充足されるか"""
        return all(any((bits[abs(lit) - 1] == "1") == (lit > 0) for lit in clause)
                   for clause in self.clauses)

    def satisfying_assignments(self) -> list[str]:
        """全充足割当（ビット列、辞書順）"""
        return ["".join(bits) for bits in product("01", repeat=self.variable_count)
                if self.is_satisfied_by("".join(bits))]


def clause_gadget(clause: tuple[int, int, int], n: int) -> tuple[Symbol, ...]:
    """
    節ブロック T_j

    節に現れる変数は正リテラルなら 0、負リテラルなら 1 に固定し、
    それ以外の変数は (0|1)。T_j の要素はちょうど節を偽にする割当。
    """
    fixed = {abs(lit): ("0" if lit > 0 else "1") for lit in clause}
    return tuple(Symbol((fixed[v],)) if v in fixed else BIT for v in range(1, n + 1))


# =============================================================================
# 出現回数と判定
# =============================================================================

def _require_indeterminate(s: EDString):
    if classify(s) is not StringClass.INDETERMINATE:
        raise NotIndeterminate("不確定文字列（全選択肢が1文字）が必要です")


def _count(p: str, sets: Sequence[frozenset[str]]) -> int:
    width = len(p)
    if width == 0 or width > len(sets):
        return 0
    return sum(1 for i in range(len(sets) - width + 1)
               if all(p[offset] in sets[i + offset] for offset in range(width)))


def occurrence_count_indet(p: str, s: EDString) -> int:
    """
    不確定文字列での出現回数（出現開始位置の数）

    |p| > |s| の場合は 0。

    Raises:
        NotIndeterminate: s が不確定文字列でない場合
    """
    _require_indeterminate(s)
    return _count(p, [sym.char_set for sym in s.symbols])


def is_unique(p: str, s: EDString) -> bool:
    return occurrence_count_indet(p, s) == 1


def is_absent(p: str, s: EDString) -> bool:
    return occurrence_count_indet(p, s) == 0


def is_mus(p: str, s: EDString) -> bool:
    """
    極小ユニーク部分文字列か

    真部分文字列の出現回数は長さ |p|-1 の接頭辞・接尾辞で下から抑えられる。
    """
    _require_indeterminate(s)
    sets = [sym.char_set for sym in s.symbols]
    if _count(p, sets) != 1:
        return False
    return len(p) == 1 or (_count(p[1:], sets) >= 2 and _count(p[:-1], sets) >= 2)


def is_maw(p: str, s: EDString) -> bool:
    """極小欠損語か（ε は常に出現するとみなす）"""
    _require_indeterminate(s)
    sets = [sym.char_set for sym in s.symbols]
    if _count(p, sets) != 0:
        return False
    return len(p) == 1 or (_count(p[1:], sets) >= 1 and _count(p[:-1], sets) >= 1)


# =============================================================================
# 総当たり
# =============================================================================

@dataclass(frozen=True)
class UniquenessResult:
    """最短解（MUS なら出現位置も持つ）"""
    witness: str
    length: int
    position: int | None = None


def occurrence_counts(s: EDString, x: int, budget: int | None = None) -> Counter[str]:
    """
    長さ x の全窓に現れる文字列と出現回数

    Raises:
        CandidateSpaceTooLarge: 窓ごとの組合せ数の総和が budget を超える場合
    """
    _require_indeterminate(s)
    budget = budget or get_settings().candidate_budget
    sets = [sorted(sym.char_set) for sym in s.symbols]
    windows = range(len(sets) - x + 1)
    total = 0
    for i in windows:
        width = 1
        for offset in range(x):
            width *= len(sets[i + offset])
        total += width
    if total > budget:
        raise CandidateSpaceTooLarge(f"候補数 {total} が上限 {budget} を超えています", budget)
    counts: Counter[str] = Counter()
    for i in windows:
        counts.update("".join(chars) for chars in product(*sets[i:i + x]))
    return counts


def present_strings(s: EDString, x: int, budget: int | None = None) -> set[str]:
    """長さ x の窓に1回以上現れる文字列"""
    return set(occurrence_counts(s, x, budget))


def unique_words(s: EDString, x: int, budget: int | None = None) -> list[str]:
    """長さ x のユニーク部分文字列（辞書順）"""
    return sorted(w for w, c in occurrence_counts(s, x, budget).items() if c == 1)


def absent_words(s: EDString, x: int, budget: int | None = None) -> list[str]:
    """
    長さ x の欠損語のうち、長さ x-1 の接頭辞が出現するもの（辞書順）

    Raises:
        CandidateSpaceTooLarge: σ^x が budget を超える場合
    """
    budget = budget or get_settings().candidate_budget
    alphabet = sorted(s.alphabet)
    if len(alphabet) ** x > budget:
        raise CandidateSpaceTooLarge(
            f"候補数 {len(alphabet)}^{x} が上限 {budget} を超えています", budget
        )
    present = present_strings(s, x, budget)
    prefixes = sorted(occurrence_counts(s, x - 1, budget)) if x > 1 else [""]
    return sorted(w + c for w in prefixes for c in alphabet if w + c not in present)


def _clamp_kmax(s: EDString, kmax: int) -> int:
    return min(validate_positive_int(kmax, "kmax"), len(s))


def shortest_unique_bruteforce(s: EDString, kmax: int, budget: int | None = None) -> UniquenessResult | None:
    """
    長さ 1..kmax の順に最短のユニーク部分文字列を探す

    Args:
        s: 不確定文字列
        kmax: 探索する最大長（|s| を超える値は |s| に切り詰める）
        budget: 候補数の上限（省略時は設定値）

    Returns:
        辞書順最小の最短解、存在しなければ None

    Raises:
        NotIndeterminate: s が不確定文字列でない場合
        CandidateSpaceTooLarge: 候補数が上限を超える場合
    """
    _require_indeterminate(s)
    for x in range(1, _clamp_kmax(s, kmax) + 1):
        words = unique_words(s, x, budget)
        if words:
            return UniquenessResult(words[0], x)
    return None


def shortest_absent_bruteforce(s: EDString, kmax: int, budget: int | None = None) -> UniquenessResult | None:
    """
    長さ 1..kmax の順に最短の欠損語を探す

    アルファベットは s に現れる文字。より短い欠損語がない長さでは、
    欠損語はすべて極小欠損語になる。

    Raises:
        NotIndeterminate: s が不確定文字列でない場合
        CandidateSpaceTooLarge: σ^x が上限を超える場合
    """
    _require_indeterminate(s)
    for x in range(1, _clamp_kmax(s, kmax) + 1):
        words = absent_words(s, x, budget)
        if words:
            return UniquenessResult(words[0], x)
    return None


# =============================================================================
# SAT 符号化
# =============================================================================

SELECTABLE_ROLES = frozenset({"len", "p", "X"})


@dataclass(frozen=True)
class EncodedInstance:
    """
    固定長 x の SAT 符号化

    varmap は変数番号 → 役割キー:
        ("len", i), ("p", i), ("X", ℓ, c/k), ("M", k, t, ℓ), ("M'", t, ℓ),
        ("C", ℓ, 文字), ("aux",)
    """
    kind: EncodingKind
    cnf: CnfFormula
    varmap: dict[int, tuple]
    x: int
    source: EDString
    alphabet: tuple[str, ...]
    _lookup: dict[tuple, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._lookup.update({role: var for var, role in self.varmap.items() if role != ("aux",)})

    def var(self, *role) -> int:
        return self._lookup[role]

    def role_counts(self) -> Counter[str]:
        return Counter(role[0] for role in self.varmap.values())

    @property
    def selectable_count(self) -> int:
        counts = self.role_counts()
        return sum(counts[name] for name in SELECTABLE_ROLES)

    def decode_position(self, model: dict[int, bool]) -> int | None:
        """MUS のとき選ばれた開始位置 p（1始まり）"""
        if self.kind is not EncodingKind.MUS:
            return None
        return next(i for i in range(1, len(self.source) + 1) if model[self.var("p", i)])

    def decode(self, model: dict[int, bool]) -> str:
        """モデルから長さ x の文字列を復元"""
        chars = []
        if self.kind is EncodingKind.MAW:
            for ell in range(1, self.x + 1):
                c = next(c for c in range(1, len(self.alphabet) + 1) if model[self.var("X", ell, c)])
                chars.append(self.alphabet[c - 1])
        else:
            start = self.decode_position(model)
            assert start is not None
            for ell in range(1, self.x + 1):
                options = self.source.symbols[start + ell - 2].alternatives
                k = next(k for k in range(1, len(options) + 1) if model[self.var("X", ell, k)])
                chars.append(options[k - 1])
        return "".join(chars)


def _length_selector(builder: CnfBuilder, n: int, x: int):
    """(LENX): 長さ選択変数の one-hot を x に固定する"""
    lengths = [builder.var("len", i) for i in range(1, n + 1)]
    builder.exactly_one(lengths)
    builder.add((lengths[x - 1],))


def _mismatch_blocks(builder: CnfBuilder, windows: range, x: int,
                     chars_at: Callable[[int, int], Sequence[str]],
                     selected: Callable[[int, str], int]):
    """(M) と (M') を両方向で出す。M[k,t,ℓ] ⟺ 窓 t の ℓ 文字目の k 番目の選択肢が X[ℓ] と異なる。"""
    for t in windows:
        for ell in range(1, x + 1):
            mismatch_vars = []
            for k, ch in enumerate(chars_at(t, ell), start=1):
                m = builder.var("M", k, t, ell)
                chosen = selected(ell, ch)
                builder.add((-m, -chosen))
                builder.add((chosen, m))
                mismatch_vars.append(m)
            window_mismatch = builder.var("M'", t, ell)
            for m in mismatch_vars:
                builder.add((-window_mismatch, m))
            builder.add(tuple(-m for m in mismatch_vars) + (window_mismatch,))


def _check_length(s: EDString, x: int):
    _require_indeterminate(s)
    validate_positive_int(x, "x")
    if x > len(s):
        raise ValidationError(f"x={x} は文字列長 {len(s)} を超えています")


def encode_maw_cnf(s: EDString, x: int) -> EncodedInstance:
    """
    長さ x の欠損語が存在するかを CNF に符号化

    (LENX) 長さ選択, (SETX) 各 ℓ で X'[ℓ,c] がちょうど1つ,
    (M)/(M') 不一致の指示変数, (CONS) すべての窓 t でどこかが不一致。

    Args:
        s: 不確定文字列
        x: 目標長（1..|s|）

    Returns:
        EncodedInstance（選択可能変数は x·σ + n 個）
    """
    _check_length(s, x)
    n = len(s)
    alphabet = tuple(sorted(s.alphabet))
    index = {ch: c for c, ch in enumerate(alphabet, start=1)}
    builder = CnfBuilder()
    for i in range(1, n + 1):
        builder.var("len", i)
    for ell in range(1, x + 1):
        for c in range(1, len(alphabet) + 1):
            builder.var("X", ell, c)

    _length_selector(builder, n, x)
    for ell in range(1, x + 1):
        builder.exactly_one([builder.var("X", ell, c) for c in range(1, len(alphabet) + 1)])

    windows = range(1, n - x + 2)
    _mismatch_blocks(
        builder, windows, x,
        chars_at=lambda t, ell: s.symbols[t + ell - 2].alternatives,
        selected=lambda ell, ch: builder.var("X", ell, index[ch]),
    )
    for t in windows:
        builder.add(tuple(builder.var("M'", t, ell) for ell in range(1, x + 1)))

    cnf = builder.build((f"maw x={x} n={n} sigma={len(alphabet)}",))
    log(f"MAW符号化: x={x}, 変数{cnf.variable_count}, 節{len(cnf.clauses)}", "DEBUG")
    return EncodedInstance(EncodingKind.MAW, cnf, builder.roles(), x, s, alphabet)


def encode_mus_cnf(s: EDString, x: int) -> EncodedInstance:
    """
    長さ x のユニーク部分文字列が存在するかを CNF に符号化

    (POSP) 開始位置 p がちょうど1つ, (SELX) 各 ℓ で窓 p の記号から1文字を選ぶ,
    補助変数 C[ℓ,c] で選んだ文字を表し, (M)/(M') と p 自身を除いた (CONS)。

    Args:
        s: 不確定文字列
        x: 目標長（1..|s|）

    Returns:
        EncodedInstance（選択可能変数は 2n + r·x 個）
    """
    _check_length(s, x)
    n = len(s)
    r = max(len(sym) for sym in s.symbols)
    alphabet = tuple(sorted(s.alphabet))
    builder = CnfBuilder()
    for i in range(1, n + 1):
        builder.var("len", i)
    for i in range(1, n + 1):
        builder.var("p", i)
    for ell in range(1, x + 1):
        for k in range(1, r + 1):
            builder.var("X", ell, k)

    _length_selector(builder, n, x)
    builder.exactly_one([builder.var("p", i) for i in range(1, n + 1)])
    windows = range(1, n - x + 2)
    for i in range(n - x + 2, n + 1):
        builder.add((-builder.var("p", i),))
    for ell in range(1, x + 1):
        builder.exactly_one([builder.var("X", ell, k) for k in range(1, r + 1)])

    for start in windows:
        p = builder.var("p", start)
        for ell in range(1, x + 1):
            options = s.symbols[start + ell - 2].alternatives
            for k in range(1, r + 1):
                chosen = builder.var("X", ell, k)
                if k > len(options):
                    builder.add((-p, -chosen))
                else:
                    builder.add((-p, -chosen, builder.var("C", ell, options[k - 1])))

    _mismatch_blocks(
        builder, windows, x,
        chars_at=lambda t, ell: s.symbols[t + ell - 2].alternatives,
        selected=lambda ell, ch: builder.var("C", ell, ch),
    )
    for t in windows:
        builder.add((builder.var("p", t),) + tuple(builder.var("M'", t, ell) for ell in range(1, x + 1)))

    cnf = builder.build((f"mus x={x} n={n} r={r}",))
    log(f"MUS符号化: x={x}, 変数{cnf.variable_count}, 節{len(cnf.clauses)}", "DEBUG")
    return EncodedInstance(EncodingKind.MUS, cnf, builder.roles(), x, s, alphabet)


Solver = Callable[[CnfFormula], SolveResult]


def _shortest_by_sat(s: EDString, kmax: int, encoder: Callable[[EDString, int], EncodedInstance],
                     solver: Solver) -> UniquenessResult | None:
    for x in range(1, _clamp_kmax(s, kmax) + 1):
        instance = encoder(s, x)
        result = solver(instance.cnf)
        if result.satisfiable:
            assert result.model is not None
            return UniquenessResult(instance.decode(result.model), x,
                                    instance.decode_position(result.model))
    return None


def shortest_unique_sat(s: EDString, kmax: int, solver: Solver = solve) -> UniquenessResult | None:
    """x = 1, 2, … の固定長符号化を順に解き、最初に SAT となる長さの解を返す"""
    return _shortest_by_sat(s, kmax, encode_mus_cnf, solver)


def shortest_absent_sat(s: EDString, kmax: int, solver: Solver = solve) -> UniquenessResult | None:
    """x = 1, 2, … の固定長符号化を順に解き、最初に SAT となる長さの欠損語を返す"""
    return _shortest_by_sat(s, kmax, encode_maw_cnf, solver)


# =============================================================================
# 3-SAT からの帰着
# =============================================================================

class Reduction(NamedTuple):
    """帰着で得た文字列としきい値"""
    string: EDString
    threshold: int


def _clause_prefix(f: Cnf3) -> list[Symbol]:
    symbols: list[Symbol] = []
    for clause in f.clauses:
        symbols.extend(clause_gadget(clause, f.variable_count))
        symbols.append(DOLLAR)
    return symbols


def reduce_3sat_to_mus(f: Cnf3) -> Reduction:
    """
    3-SAT → 最短 MUS の帰着文字列

    S = T_1 $ … T_m $ (0|1)^n $ (0|1)^{n-1} $ (0|1)^{n-1}。
    長さ n のユニーク部分文字列が存在する ⟺ f が充足可能。
    """
    n = f.variable_count
    symbols = _clause_prefix(f)
    symbols += [BIT] * n + [DOLLAR] + [BIT] * (n - 1) + [DOLLAR] + [BIT] * (n - 1)
    s = EDString(tuple(symbols))
    log(f"MUS帰着を生成: n={n}, m={len(f.clauses)}, 記号数={len(s)}")
    return Reduction(s, n)


def reduce_3sat_to_maw(f: Cnf3) -> Reduction:
    """
    3-SAT → 最短 MAW の帰着文字列

    S = T_1 $ … T_m $ (0|1|$)^{n-1} $ (0|1)^{n-1}。
    長さ n 以下の欠損語が存在する ⟺ f が充足可能。
    """
    n = f.variable_count
    symbols = _clause_prefix(f)
    symbols += [BIT_OR_DOLLAR] * (n - 1) + [DOLLAR] + [BIT] * (n - 1)
    s = EDString(tuple(symbols))
    log(f"MAW帰着を生成: n={n}, m={len(f.clauses)}, 記号数={len(s)}")
    return Reduction(s, n)


@dataclass(frozen=True)
class ReductionReport:
    """帰着の往復検証結果"""
    kind: EncodingKind
    satisfiable: bool
    string_decision: bool
    witnesses: tuple[str, ...]
    witnesses_satisfy: bool
    shorter_found: bool

    @property
    def consistent(self) -> bool:
        return (self.satisfiable == self.string_decision
                and self.witnesses_satisfy and not self.shorter_found)


def verify_reduction_roundtrip(f: Cnf3, kind: EncodingKind | str) -> ReductionReport:
    """
    帰着の往復検証

    DPLL による f の判定と、帰着文字列上の総当たり判定が一致し、
    各証拠ビット列（B[i]='1' ⟺ x_i が真）が f を充足することを確認する。

    Args:
        f: 3-CNF式
        kind: "mus" または "maw"

    Returns:
        ReductionReport
    """
    kind = validate_enum(kind, "kind", EncodingKind)  # type: ignore[assignment]
    n = f.variable_count
    satisfiable = solve(f.to_formula()).satisfiable
    if kind is EncodingKind.MUS:
        s = reduce_3sat_to_mus(f).string
        shorter = n > 1 and shortest_unique_bruteforce(s, n - 1) is not None
        witnesses = tuple(unique_words(s, n))
    else:
        s = reduce_3sat_to_maw(f).string
        shorter = n > 1 and shortest_absent_bruteforce(s, n - 1) is not None
        witnesses = tuple(absent_words(s, n))
    valid = all(len(w) == n and set(w) <= {"0", "1"} and f.is_satisfied_by(w) for w in witnesses)
    report = ReductionReport(kind, satisfiable, bool(witnesses), witnesses, valid, shorter)
    level = "SUCCESS" if report.consistent else "ERROR"
    log(f"往復検証 {kind.value}: SAT={satisfiable}, 証拠{len(witnesses)}件, 整合={report.consistent}", level)
    return report


# =============================================================================
# 接頭辞ごとの最短長
# =============================================================================

@dataclass(frozen=True)
class ProfileRow:
    prefix_length: int
    shortest_absent: int | None
    shortest_unique: int | None


def minimal_length_profile(s: EDString, prefix_lengths: Sequence[int],
                           budget: int | None = None) -> list[ProfileRow]:
    """接頭辞 s[1..m] ごとの最短 MAW / MUS の長さ"""
    rows = []
    for m in prefix_lengths:
        prefix = EDString(s.symbols[:m])
        absent = shortest_absent_bruteforce(prefix, m, budget)
        unique = shortest_unique_bruteforce(prefix, m, budget)
        rows.append(ProfileRow(m, absent.length if absent else None, unique.length if unique else None))
    log(f"接頭辞プロファイル: {len(rows)}行", "DEBUG")
    return rows
