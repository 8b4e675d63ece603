"""
ED文字列ツールキット - SATキットモジュール

CNF式の型、DIMACS CNF の読み書き、組み込み DPLL ソルバー、
外部ソルバー連携、pysat による基数制約の生成を提供する。
"""

import os
import shlex
import subprocess  # noqa: S404
import tempfile
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Any

from pysat.card import CardEnc, EncType
from pysat.formula import IDPool

from .config import get_settings, log
from .validation import (
    MalformedDimacs,
    ModelRejected,
    SolverUnavailable,
    UnparsableOutput,
)

# 基数制約のペアワイズ符号化を使う最大幅
PAIRWISE_MAX_WIDTH = 6
TRUTH_TABLE_MAX_VARIABLES = 16


class SolveStatus(str, Enum):
    """判定結果"""
    SAT = "SAT"
    UNSAT = "UNSAT"


@dataclass(frozen=True)
class CnfFormula:
    """
    CNF式

    Attributes:
        variable_count: 変数の個数（変数は 1..variable_count）
        clauses: 節の列（各節は 0 を含まない符号付き整数の列）
        comments: DIMACS の c 行に出すコメント
    """
    variable_count: int
    clauses: tuple[tuple[int, ...], ...]
    comments: tuple[str, ...] = ()

    def __post_init__(self):
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise MalformedDimacs(
                        f"リテラル {lit} は変数範囲 1..{self.variable_count} の外です"
                    )

    def evaluate(self, model: dict[int, bool]) -> bool:
        """割当が全節を充足するか（未割当の変数は偽とみなす）"""
        return all(any(model.get(abs(lit), False) == (lit > 0) for lit in clause)
                   for clause in self.clauses)


@dataclass(frozen=True)
class SolveResult:
    """求解結果（SAT のときだけ model を持つ）"""
    status: SolveStatus
    model: dict[int, bool] | None = None

    @property
    def satisfiable(self) -> bool:
        return self.status is SolveStatus.SAT


# =============================================================================
# DIMACS CNF
# =============================================================================

def emit_dimacs(f: CnfFormula) -> str:
    """DIMACS CNF 文字列を生成（コメント行、p 行、節の順）"""
    lines = [f"c {comment}" for comment in f.comments]
    lines.append(f"p cnf {f.variable_count} {len(f.clauses)}")
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in f.clauses)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """
    DIMACS CNF をパース

    節は複数行にまたがってよい。% 行（SATLIB 形式の終端）以降は無視する。

    Raises:
        MalformedDimacs: p 行の欠落・重複、数値でないトークン、
            宣言と異なる節数、範囲外のリテラル、0 で閉じていない節
    """
    header: tuple[int, int] | None = None
    comments: list[str] = []
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            comments.append(line[1:].strip())
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise MalformedDimacs(f"{number}行目: p 行が重複しています")
            if len(parts) != 4 or parts[1] != "cnf":
                raise MalformedDimacs(f"{number}行目: p 行の書式が不正です: {line}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise MalformedDimacs(f"{number}行目: p 行の数値が不正です: {line}") from None
            if header[0] < 0 or header[1] < 0:
                raise MalformedDimacs(f"{number}行目: p 行の数値が負です")
            continue
        if header is None:
            raise MalformedDimacs(f"{number}行目: p 行より前に節があります")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise MalformedDimacs(f"{number}行目: 数値でないトークン {token!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > header[0]:
                    raise MalformedDimacs(
                        f"{number}行目: リテラル {lit} は変数範囲 1..{header[0]} の外です"
                    )
                current.append(lit)
    if header is None:
        raise MalformedDimacs("p 行がありません")
    if current:
        raise MalformedDimacs("最後の節が 0 で閉じていません")
    if len(clauses) != header[1]:
        raise MalformedDimacs(f"節数 {len(clauses)} が宣言 {header[1]} と一致しません")
    return CnfFormula(header[0], tuple(clauses), tuple(comments))


# =============================================================================
# 符号化ヘルパー
# =============================================================================

@dataclass
class CnfBuilder:
    """
    役割付き変数と節を積み上げて CnfFormula を作る

    変数は pysat の IDPool で (役割, 添字...) のタプルから採番する。
    基数制約の補助変数は同じプールから採番され、役割を持たない。
    """
    pool: IDPool = field(default_factory=IDPool)
    clauses: list[tuple[int, ...]] = field(default_factory=list)

    def var(self, *key: Any) -> int:
        return self.pool.id(key)

    def add(self, clause: list[int] | tuple[int, ...]):
        self.clauses.append(tuple(clause))

    def exactly_one(self, lits: list[int]):
        """ちょうど1つが真（幅6以下はペアワイズ、それ以上は逐次カウンタ）"""
        if len(lits) == 1:
            self.add((lits[0],))
            return
        encoding = EncType.pairwise if len(lits) <= PAIRWISE_MAX_WIDTH else EncType.seqcounter
        encoded = CardEnc.equals(lits=lits, bound=1, encoding=encoding, vpool=self.pool)
        self.clauses.extend(tuple(clause) for clause in encoded.clauses)

    def roles(self) -> dict[int, tuple]:
        """変数番号 → 役割キー（補助変数は ("aux",)）"""
        return {v: self.pool.obj(v) or ("aux",) for v in range(1, self.pool.top + 1)}

    def build(self, comments: tuple[str, ...] = ()) -> CnfFormula:
        return CnfFormula(self.pool.top, tuple(self.clauses), comments)


# =============================================================================
# 組み込み DPLL
# =============================================================================

class _Dpll:
    """
    2監視リテラルの単位伝播と時系列バックトラックによる DPLL

    分岐は未割当の最小番号の変数を真から試す。純リテラルは根で除去する。
    """

    def __init__(self, f: CnfFormula):
        self.n = f.variable_count
        self.value = [0] * (self.n + 1)
        self.trail: list[int] = []
        self.head = 0
        self.watches: dict[int, list[int]] = {}
        self.clauses: list[list[int]] = []
        self.units: list[int] = []
        self.empty = False
        for raw in f.clauses:
            lits = list(dict.fromkeys(raw))
            if any(-lit in lits for lit in lits):
                continue
            if not lits:
                self.empty = True
            elif len(lits) == 1:
                self.units.append(lits[0])
            else:
                index = len(self.clauses)
                self.clauses.append(lits)
                self.watches.setdefault(lits[0], []).append(index)
                self.watches.setdefault(lits[1], []).append(index)

    def _lit_value(self, lit: int) -> int:
        v = self.value[abs(lit)]
        return v if lit > 0 else -v

    def _assign(self, lit: int) -> bool:
        current = self._lit_value(lit)
        if current == 1:
            return True
        if current == -1:
            return False
        self.value[abs(lit)] = 1 if lit > 0 else -1
        self.trail.append(lit)
        return True

    def _propagate(self) -> bool:
        while self.head < len(self.trail):
            false_lit = -self.trail[self.head]
            self.head += 1
            watching = self.watches.get(false_lit, [])
            kept: list[int] = []
            conflict = False
            for position, index in enumerate(watching):
                if conflict:
                    kept.extend(watching[position:])
                    break
                clause = self.clauses[index]
                if clause[0] == false_lit:
                    clause[0], clause[1] = clause[1], clause[0]
                if self._lit_value(clause[0]) == 1:
                    kept.append(index)
                    continue
                for k in range(2, len(clause)):
                    if self._lit_value(clause[k]) != -1:
                        clause[1], clause[k] = clause[k], clause[1]
                        self.watches.setdefault(clause[1], []).append(index)
                        break
                else:
                    kept.append(index)
                    if not self._assign(clause[0]):
                        conflict = True
            self.watches[false_lit] = kept
            if conflict:
                return False
        return True

    def _undo(self, size: int):
        while len(self.trail) > size:
            self.value[abs(self.trail.pop())] = 0
        self.head = size

    def _pure_literals(self) -> bool:
        while True:
            polarity: dict[int, set[bool]] = {}
            for clause in self.clauses:
                if any(self._lit_value(lit) == 1 for lit in clause):
                    continue
                for lit in clause:
                    if self._lit_value(lit) == 0:
                        polarity.setdefault(abs(lit), set()).add(lit > 0)
            pure = [v if signs == {True} else -v for v, signs in polarity.items() if len(signs) == 1]
            if not pure:
                return True
            for lit in pure:
                self._assign(lit)
            if not self._propagate():
                return False

    def solve(self) -> SolveResult:
        if self.empty:
            return SolveResult(SolveStatus.UNSAT)
        for lit in self.units:
            if not self._assign(lit):
                return SolveResult(SolveStatus.UNSAT)
        if not self._propagate():
            return SolveResult(SolveStatus.UNSAT)
        if not self._pure_literals():
            return SolveResult(SolveStatus.UNSAT)

        # (決定前の trail 長, 変数, 反転済みか)
        decisions: list[tuple[int, int, bool]] = []
        cursor = 1
        while True:
            while cursor <= self.n and self.value[cursor] != 0:
                cursor += 1
            if cursor > self.n:
                model = {v: self.value[v] == 1 for v in range(1, self.n + 1)}
                return SolveResult(SolveStatus.SAT, model)
            decisions.append((len(self.trail), cursor, False))
            self._assign(cursor)
            while not self._propagate():
                while decisions and decisions[-1][2]:
                    self._undo(decisions.pop()[0])
                if not decisions:
                    return SolveResult(SolveStatus.UNSAT)
                start, var, _ = decisions.pop()
                self._undo(start)
                decisions.append((start, var, True))
                self._assign(-var)
                cursor = 1


def solve(f: CnfFormula) -> SolveResult:
    """
    組み込み DPLL による求解

    Args:
        f: CNF式

    Returns:
        SolveResult（SAT なら全変数の割当を含む）
    """
    result = _Dpll(f).solve()
    if result.model is not None and not f.evaluate(result.model):
        raise ModelRejected("内部ソルバーのモデルが式を満たしません")
    return result


def truth_table_solve(f: CnfFormula) -> SolveResult:
    """全割当の総当たり（変数16個以下の検算用）"""
    if f.variable_count > TRUTH_TABLE_MAX_VARIABLES:
        raise ValueError(f"総当たりは変数{TRUTH_TABLE_MAX_VARIABLES}個までです")
    for bits in product((False, True), repeat=f.variable_count):
        model = {v: bits[v - 1] for v in range(1, f.variable_count + 1)}
        if f.evaluate(model):
            return SolveResult(SolveStatus.SAT, model)
    return SolveResult(SolveStatus.UNSAT)


# =============================================================================
# 外部ソルバー
# =============================================================================

def _parse_solver_output(output: str, variable_count: int) -> SolveResult:
    status: SolveStatus | None = None
    values: list[int] = []
    for raw in output.splitlines():
        line = raw.strip()
        if line.startswith("s "):
            verdict = line[2:].strip()
            if verdict == "SATISFIABLE":
                status = SolveStatus.SAT
            elif verdict == "UNSATISFIABLE":
                status = SolveStatus.UNSAT
            else:
                raise UnparsableOutput(f"解釈できない判定行です: {line}")
        elif line.startswith("v "):
            try:
                values.extend(int(token) for token in line[2:].split())
            except ValueError:
                raise UnparsableOutput(f"解釈できない値行です: {line}") from None
    if status is None:
        raise UnparsableOutput("判定行 (s ...) がありません")
    if status is SolveStatus.UNSAT:
        return SolveResult(status)
    model = {v: False for v in range(1, variable_count + 1)}
    for lit in values:
        if lit != 0 and abs(lit) <= variable_count:
            model[abs(lit)] = lit > 0
    return SolveResult(status, model)


def solve_external(f: CnfFormula, command: str | None = None) -> SolveResult:
    """
    外部 DIMACS ソルバーによる求解

    一時ファイルに式を書き出し、コマンドの最後の引数としてそのパスを渡す。
    SAT の場合は返されたモデルを再検証する。

    Args:
        f: CNF式
        command: ソルバーコマンド（省略時は EDSTR_SAT_SOLVER）

    Returns:
        SolveResult

    Raises:
        SolverUnavailable: 未設定・起動失敗・タイムアウト
        UnparsableOutput: 出力を解釈できない
        ModelRejected: モデルが式を満たさない
    """
    settings = get_settings()
    command = command or settings.sat_solver
    if not command:
        raise SolverUnavailable("外部ソルバーが設定されていません (EDSTR_SAT_SOLVER)")
    with tempfile.NamedTemporaryFile("w", suffix=".cnf", delete=False, encoding="utf-8") as handle:
        handle.write(emit_dimacs(f))
        path = handle.name
    try:
        log(f"外部ソルバー実行: {command} (変数{f.variable_count}, 節{len(f.clauses)})")
        completed = subprocess.run(  # noqa: S603
            [*shlex.split(command), path],
            capture_output=True,
            text=True,
            timeout=settings.solver_timeout,
            check=False,
        )
    except (FileNotFoundError, PermissionError) as e:
        raise SolverUnavailable(f"ソルバーを起動できません: {e}") from e
    except subprocess.TimeoutExpired as e:
        raise SolverUnavailable(f"ソルバーがタイムアウトしました ({settings.solver_timeout}秒)") from e
    finally:
        os.unlink(path)
    result = _parse_solver_output(completed.stdout, f.variable_count)
    if result.model is not None and not f.evaluate(result.model):
        log("外部ソルバーのモデルが式を満たしません", "ERROR")
        raise ModelRejected("外部ソルバーのモデルが式を満たしません")
    log(f"外部ソルバー判定: {result.status.value}", "SUCCESS")
    return result
