"""Subgroups of Z^k in row Hermite normal form."""

from __future__ import annotations

from dataclasses import dataclass


def hermite_rows(rows, k: int) -> tuple:
    """Row-style HNF: positive pivots, entries above each pivot reduced into [0, pivot)."""
    work = [list(r) for r in rows if any(r)]
    out = []
    for col in range(k):
        live = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for i, r in enumerate(out):
            q = r[col] // piv[col]
            out[i] = [a - q * b for a, b in zip(r, piv)]
        out.append(piv)
        work = rest
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class IntSubgroup:
    k: int
    basis: tuple

    @classmethod
    def generated_by(cls, k: int, gens) -> "IntSubgroup":
        return cls(k, hermite_rows([tuple(g) for g in gens], k))

    @classmethod
    def trivial(cls, k: int) -> "IntSubgroup":
        return cls(k, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_trivial(self) -> bool:
        return not self.basis

    def __contains__(self, v) -> bool:
        v = list(v)
        for row in self.basis:
            col = next(i for i, a in enumerate(row) if a)
            if v[col] % row[col]:
                return False
            q = v[col] // row[col]
            v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def join(self, other: "IntSubgroup") -> "IntSubgroup":
        return IntSubgroup.generated_by(self.k, self.basis + other.basis)

    def __str__(self):
        if not self.basis:
            return "{0}"
        return "<" + ", ".join("(" + ",".join(map(str, r)) + ")" for r in self.basis) + ">"
