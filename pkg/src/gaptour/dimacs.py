"""DIMACS CNF to and from clause strings."""

from __future__ import annotations

import warnings

from gaptour.sat import SatInstance, literals_to_clause


def read_dimacs(text: str) -> tuple[SatInstance, int]:
    """Parse CNF text; returns the instance and the number of dropped tautologies.

    Variable v maps to digit position v-1 (least significant first), so the
    clause string reads x_n ... x_1 from left to right.
    """
    n = m = None
    clauses = []
    dropped = 0
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line[0] in "c%":
            if line.startswith("%"):
                break
            continue
        if line[0] == "p":
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line: {raw!r}")
            n, m = int(parts[2]), int(parts[3])
            if n < 1:
                raise ValueError("CNF needs at least one variable")
            continue
        if n is None:
            raise ValueError("clause before the 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ValueError(f"bad literal {tok!r}") from None
            if abs(lit) > n:
                raise ValueError(f"literal {lit} out of range for {n} variables")
            if lit != 0:
                current.append(lit)
                continue
            if not current:
                raise ValueError("empty clause")
            if any(-v in current for v in current):
                dropped += 1
            else:
                clauses.append(literals_to_clause(current, n))
            current = []
    if n is None:
        raise ValueError("missing 'p cnf' header")
    if current:
        # last clause without its terminating 0
        if any(-v in current for v in current):
            dropped += 1
        else:
            clauses.append(literals_to_clause(current, n))
    if len(clauses) + dropped != m:
        warnings.warn(f"header announces {m} clauses, read {len(clauses) + dropped}", stacklevel=2)
    if dropped:
        warnings.warn(f"dropped {dropped} tautological clause(s)", stacklevel=2)
    return SatInstance(n, tuple(clauses)), dropped


def parse_dimacs(text: str) -> SatInstance:
    return read_dimacs(text)[0]


def write_dimacs(instance: SatInstance) -> str:
    n = instance.n
    out = [f"p cnf {n} {instance.m}"]
    for c in instance.clauses:
        lits = []
        for idx, d in enumerate(c):
            v = n - idx
            if d == "1":
                lits.append(v)
            elif d == "0":
                lits.append(-v)
        lits.sort(key=abs)
        out.append(" ".join(map(str, lits)) + " 0")
    return "\n".join(out) + "\n"
