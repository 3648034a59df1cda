"""Index-addressed doubly linked lists partitioning [0, 2**n) into S (free) and M (blocked).

Value v lives in slot v+1 of the list that holds it.  Each list keeps its own
prev/next arrays; column 0 is the header with prev = tail and next = head.  A
slot not in a list has prev = next = 0 (printed as ``- - -``).  Lists are
circular and new values go in at the head, so every move is a fixed number of
link updates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from gaptour.sat import (SatInstance, _check_table_size, complement, evaluate,
                         number_to_clause)

S, M = 0, 1
LIST_NAMES = {S: "S", M: "M"}


class Knowledge:
    def __init__(self, n: int):
        _check_table_size(n)
        self.n = n
        size = 2**n
        self.prev = np.zeros((2, size + 1), dtype=np.int32)
        self.next = np.zeros((2, size + 1), dtype=np.int32)
        slots = np.arange(1, size + 1, dtype=np.int32)
        # S starts with every value in ascending order
        self.prev[S, 1:] = np.roll(slots, 1)
        self.next[S, 1:] = np.roll(slots, -1)
        self.prev[S, 0] = size
        self.next[S, 0] = 1
        self.counts = [size, 0]
        self.Y: set[int] = set()

    def _slot(self, value: int) -> int:
        if not 0 <= value < 2**self.n:
            raise ValueError(f"{value} is not an {self.n}-bit number")
        return value + 1

    def contains(self, lst: int, value: int) -> bool:
        return self.next[lst, self._slot(value)] != 0

    def header(self, lst: int) -> tuple[int, int]:
        return int(self.prev[lst, 0]), int(self.next[lst, 0])

    def links(self, lst: int, value: int) -> tuple[int, int]:
        s = self._slot(value)
        return int(self.prev[lst, s]), int(self.next[lst, s])

    def _unlink(self, lst: int, s: int):
        prev, nxt = self.prev[lst], self.next[lst]
        p, q = prev[s], nxt[s]
        if p == s:
            prev[0] = nxt[0] = 0
        else:
            nxt[p] = q
            prev[q] = p
            if nxt[0] == s:
                nxt[0] = q
            if prev[0] == s:
                prev[0] = p
        prev[s] = nxt[s] = 0
        self.counts[lst] -= 1

    def _push_head(self, lst: int, s: int):
        prev, nxt = self.prev[lst], self.next[lst]
        if nxt[0] == 0:
            prev[s] = nxt[s] = s
            prev[0] = nxt[0] = s
        else:
            head, tail = nxt[0], prev[0]
            prev[s] = tail
            nxt[s] = head
            prev[head] = s
            nxt[tail] = s
            nxt[0] = s
        self.counts[lst] += 1

    def move(self, value: int, from_list: int, to_list: int):
        """Constant-time transfer of ``value`` between the two lists."""
        s = self._slot(value)
        if from_list == to_list:
            raise ValueError("source and target list must differ")
        if self.next[from_list, s] == 0:
            raise ValueError(f"{value} is not in list {LIST_NAMES[from_list]}")
        self._unlink(from_list, s)
        self._push_head(to_list, s)

    def forward(self, lst: int) -> list[int]:
        out = []
        head = int(self.next[lst, 0])
        s = head
        while s:
            out.append(s - 1)
            s = int(self.next[lst, s])
            if s == head:
                break
        return out

    def backward(self, lst: int) -> list[int]:
        out = []
        tail = int(self.prev[lst, 0])
        s = tail
        while s:
            out.append(s - 1)
            s = int(self.prev[lst, s])
            if s == tail:
                break
        return out

    def members(self, lst: int) -> set[int]:
        return set(self.forward(lst))

    def check(self):
        """Raise AssertionError if the partition or link structure is broken."""
        size = 2**self.n
        fs, fm = self.forward(S), self.forward(M)
        assert len(fs) == self.counts[S] and len(fm) == self.counts[M]
        assert self.counts[S] + self.counts[M] == size
        assert not set(fs) & set(fm)
        assert len(set(fs)) == len(fs) and len(set(fm)) == len(fm)
        for lst, fwd in ((S, fs), (M, fm)):
            assert fwd[::-1] == self.backward(lst)
            linked = np.flatnonzero(self.next[lst, 1:])
            assert sorted(fwd) == linked.tolist()
        return True

    def table(self, lst: int) -> list[tuple[int, str, int, int]]:
        """Rows (slot, value bits or '- - -', prev, next) as printed in the paper."""
        rows = []
        for s in range(1, 2**self.n + 1):
            label = number_to_clause(s - 1, self.n) if self.next[lst, s] else "- - -"
            rows.append((s, label, int(self.prev[lst, s]), int(self.next[lst, s])))
        return rows


def ks_move(knowledge: Knowledge, value: int, from_list: int, to_list: int) -> Knowledge:
    knowledge.move(value, from_list, to_list)
    return knowledge


def build_knowledge(instance: SatInstance) -> Knowledge:
    """One pass over the clauses, moving blocked values from S to M.

    A clause number still in S goes to Y and M when it satisfies the instance;
    otherwise it moves to M along with its complement (if still in S).
    """
    instance._require_simple()
    n = instance.n
    K = Knowledge(n)
    for k in instance.numbers():
        if not K.contains(S, k):
            continue
        if evaluate(instance, k):
            K.Y.add(k)
            K.move(k, S, M)
        else:
            K.move(k, S, M)
            kbar = complement(k, n)
            if K.contains(S, kbar):
                K.move(kbar, S, M)
    return K
