"""SAT clauses as binary numbers and the linked free/blocked tables.

An assignment y fails a clause exactly when y is the bitwise complement of
the clause number, so a simple instance is unsatisfiable iff its clause
numbers cover every n-bit value.

    python3 demos/04_sat_numbers.py
"""

from gaptour.knowledge import M, S, Knowledge, build_knowledge
from gaptour.sat import (SatInstance, complement, evaluate, solve_deterministic,
                         solve_probabilistic)

inst = SatInstance(6, ("000000", "000001", "111110", "011011"))
print("clauses:", inst.clauses)
print("deterministic:", solve_deterministic(inst))
print("probabilistic:", solve_probabilistic(inst, seed=1))
K = build_knowledge(inst)
print("Y:", sorted(format(y, "06b") for y in K.Y), " free:", K.counts[S], " blocked:", K.counts[M])
blocked = [format(complement(k, 6), "06b") for k in inst.numbers()]
print("assignments killed by a clause:", blocked, [evaluate(inst, b) for b in blocked])

board = SatInstance.from_numbers(2, [0, 1, 2, 3])
print("\ntwo-variable board:", solve_deterministic(board))


def show(K):
    for name, lst in (("S", S), ("M", M)):
        prev, nxt = K.header(lst)
        rows = "  ".join(f"{s}:{lab}({p},{q})" for s, lab, p, q in K.table(lst))
        print(f"  {name} header ({prev},{nxt})  {rows}")


print("\nmoving 011, 001, 000 from S to M at n = 3")
K = Knowledge(3)
show(K)
for v in (0b011, 0b001, 0b000):
    K.move(v, S, M)
    print(f"after {v:03b}:")
    show(K)
