"""SAT as binary numbers: clause strings, digit-match evaluation and the table solvers.

A clause is a ternary digit string of length n.  Digit position p (variable
x_p) sits at string index n-1-p so x_{n-1} is the most significant digit:
0 is the negated literal, 1 the positive literal, 2 means x_p is absent.
An instance is *simple* when no clause contains a 2; its clauses are then
n-bit numbers and an assignment y fails exactly when complement(y) is one of
them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

import numpy as np

# 2**n slot tables are only built up to this many variables
MAX_TABLE_BITS = 24

_DIGITS = frozenset("012")


def _check_clause(clause: str, n: int) -> str:
    if not isinstance(clause, str) or len(clause) != n:
        raise ValueError(f"clause {clause!r} must be a string of {n} ternary digits")
    if not set(clause) <= _DIGITS:
        raise ValueError(f"malformed digit in clause {clause!r}")
    if set(clause) == {"2"}:
        raise ValueError("clause has no literal")
    return clause


def _masks(clause: str) -> tuple[int, int]:
    n = len(clause)
    pos = neg = 0
    for idx, d in enumerate(clause):
        bit = 1 << (n - 1 - idx)
        if d == "1":
            pos |= bit
        elif d == "0":
            neg |= bit
    return pos, neg


@dataclass(frozen=True)
class SatInstance:
    n: int
    clauses: tuple[str, ...]
    _pn: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        clauses = tuple(_check_clause(c, self.n) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        object.__setattr__(self, "_pn", tuple(_masks(c) for c in clauses))

    @classmethod
    def from_numbers(cls, n: int, values: Iterable[int]) -> "SatInstance":
        return cls(n, tuple(number_to_clause(v, n) for v in values))

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def simple(self) -> bool:
        return all("2" not in c for c in self.clauses)

    def numbers(self) -> list[int]:
        """Clause values in input order (simple instances only)."""
        self._require_simple()
        return [int(c, 2) for c in self.clauses]

    def masks(self) -> tuple[np.ndarray, np.ndarray]:
        return (np.array([p for p, _ in self._pn], dtype=np.int64),
                np.array([q for _, q in self._pn], dtype=np.int64))

    def _require_simple(self):
        if not self.simple:
            raise ValueError("operation defined for simple instances only (no digit 2)")


def clause_to_number(clause: str) -> int:
    """Radix-2 reading when the clause has no 2, radix-3 otherwise."""
    _check_clause(clause, len(clause))
    return int(clause, 3 if "2" in clause else 2)


def number_to_clause(value: int, n: int) -> str:
    if not 0 <= value < 2**n:
        raise ValueError(f"{value} is not an {n}-bit number")
    return format(value, f"0{n}b")


def literals_to_clause(literals: Iterable[int], n: int) -> str:
    """Signed 1-based variable indices (DIMACS style) to a clause string.

    Variable v lands at position v-1.  Raises on tautologies and on
    out-of-range variables; repeated literals collapse.
    """
    digits = ["2"] * n
    for lit in literals:
        v = abs(int(lit))
        if lit == 0 or v > n:
            raise ValueError(f"literal {lit} out of range for {n} variables")
        d = "1" if lit > 0 else "0"
        idx = n - v
        if digits[idx] not in ("2", d):
            raise ValueError(f"tautological clause: variable {v} appears with both signs")
        digits[idx] = d
    return _check_clause("".join(digits), n)


def complement(y: int, n: int) -> int:
    if not 0 <= y < 2**n:
        raise ValueError(f"{y} is not an {n}-bit number")
    return y ^ (2**n - 1)


def _assignment(instance: SatInstance, y: Union[int, str]) -> tuple[int, int]:
    """(bits, assigned mask) from an n-bit int or a ternary/binary string."""
    n = instance.n
    full = 2**n - 1
    if isinstance(y, str):
        if len(y) != n or not set(y) <= _DIGITS:
            raise ValueError(f"assignment {y!r} must have {n} digits in 0/1/2")
        ones, zeros = _masks(y)
        return ones, ones | zeros
    y = int(y)
    if not 0 <= y <= full:
        raise ValueError(f"assignment {y} is not an {n}-bit number")
    return y, full


def evaluate(instance: SatInstance, y: Union[int, str]) -> int:
    """1 when every clause shares at least one digit with y, else 0.

    A 2 in a string assignment leaves that variable open, which matches no
    clause digit.
    """
    bits, assigned = _assignment(instance, y)
    for pos, neg in instance._pn:
        if not ((bits & pos) | (~bits & neg)) & assigned:
            return 0
    return 1


def evaluate_all(instance: SatInstance, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
    """Vectorised ``evaluate`` over the integer range [start, stop)."""
    n = instance.n
    if stop is None:
        stop = 2**n
    ys = np.arange(start, stop, dtype=np.int64)
    ok = np.ones(ys.shape, dtype=bool)
    pos, neg = instance.masks()
    for p, q in zip(pos, neg):
        ok &= ((ys & p) | (~ys & q)) != 0
    return ok


def usage_matrix(instance: SatInstance) -> np.ndarray:
    """m x 2n 0/1 matrix: column p for x_p, column n+p for its negation."""
    n = instance.n
    U = np.zeros((instance.m, 2 * n), dtype=np.int64)
    for j, c in enumerate(instance.clauses):
        for idx, d in enumerate(c):
            p = n - 1 - idx
            if d == "1":
                U[j, p] = 1
            elif d == "0":
                U[j, n + p] = 1
    return U


def is_unsatisfiable_by_coverage(instance: SatInstance) -> bool:
    """True when the clause numbers cover every value in [0, 2**n)."""
    return len(set(instance.numbers())) == 2**instance.n


def _check_table_size(n: int):
    if n > MAX_TABLE_BITS:
        raise ValueError(f"2**n tables limited to n <= {MAX_TABLE_BITS}, got n = {n}")


@dataclass(frozen=True)
class SatOutcome:
    """Solver result.

    ``via`` tells where the value came from: ``clause`` (a clause number that
    satisfies the instance), ``below_min`` / ``above_max`` / ``scan`` (an
    unmarked value offered for the instance extended by its formula),
    ``sample`` (probabilistic draw), ``search`` (exhaustive) or ``unsat``.
    """

    value: Optional[int]
    via: str
    evaluations: int

    @property
    def satisfiable(self) -> bool:
        return self.value is not None


def solve_deterministic(instance: SatInstance) -> SatOutcome:
    """Mark the clause numbers, then try min-1, max+1 and a scan for a free value.

    A clause number that satisfies the instance is returned at once.  When all
    2**n values end up marked the instance is unsatisfiable.
    """
    instance._require_simple()
    n = instance.n
    _check_table_size(n)
    T = np.zeros(2**n, dtype=bool)
    mi, mx, ct = 2**n, -1, 0
    evals = 0
    for k in instance.numbers():
        if T[k]:
            continue
        evals += 1
        if evaluate(instance, k):
            return SatOutcome(k, "clause", evals)
        T[k] = True
        ct += 1
        mi = min(k, mi)
        mx = max(k, mx)
    if ct == 2**n:
        return SatOutcome(None, "unsat", evals)
    # mi > 1 kept as written, so 0 is never probed here
    if mi > 1:
        evals += 1
        if evaluate(instance, mi - 1):
            return SatOutcome(mi - 1, "below_min", evals)
    if mx < 2**n - 1:
        evals += 1
        if evaluate(instance, mx + 1):
            return SatOutcome(mx + 1, "above_max", evals)
    free = np.flatnonzero(~T)
    return SatOutcome(int(free[0]), "scan", evals)


def solve_probabilistic(instance: SatInstance, seed: int = 0) -> SatOutcome:
    """Draw unmarked values uniformly until one satisfies or all are marked.

    The unmarked values sit in the tail of an array; each draw swaps the pick
    into the marked prefix, so no value is drawn twice.
    """
    instance._require_simple()
    n = instance.n
    _check_table_size(n)
    rng = np.random.default_rng(seed)
    size = 2**n
    pool = np.arange(size, dtype=np.int64)
    for ct in range(size):
        r = int(rng.integers(ct, size))
        pool[ct], pool[r] = pool[r], pool[ct]
        k = int(pool[ct])
        if evaluate(instance, k):
            return SatOutcome(k, "sample", ct + 1)
    return SatOutcome(None, "unsat", size)


def solve_exhaustive(instance: SatInstance, chunk: int = 1 << 20) -> SatOutcome:
    """Smallest satisfying n-bit assignment by enumeration (any instance)."""
    n = instance.n
    _check_table_size(n)
    done = 0
    for start in range(0, 2**n, chunk):
        ok = evaluate_all(instance, start, min(start + chunk, 2**n))
        if ok.any():
            i = int(np.argmax(ok))
            return SatOutcome(start + i, "search", done + i + 1)
        done += ok.size
    return SatOutcome(None, "unsat", done)
