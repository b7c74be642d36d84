"""
Sparse exact Gaussian elimination.

A row is a dict ``{column: scalar}`` with integer columns and no zero entries.
Pivots are always taken on the smallest column of a row, so ordering the
columns by a monomial order makes the pivot of each row its leading monomial.
"""

import heapq


class RowEchelon:
    """Incrementally maintained echelon basis of a row space.

    Every stored row has leading coefficient 1 at its pivot column and no
    entries to the left of it.
    """

    def __init__(self, field):
        self.field = field
        self.rows = {}  # pivot column -> row

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row):
        """Return the remainder of ``row`` modulo the current row space."""
        F = self.field
        row = {c: v for c, v in row.items() if v != 0}
        if not self.rows or not row:
            return row
        heap = list(row)
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            v = row.get(c)
            if v is None:
                continue
            piv = self.rows.get(c)
            if piv is None:
                continue
            for c2, v2 in piv.items():
                x = F.reduce(row.get(c2, 0) - v * v2)
                if x == 0:
                    row.pop(c2, None)
                else:
                    if c2 not in row:
                        heapq.heappush(heap, c2)
                    row[c2] = x
        return row

    def add(self, row):
        """Insert ``row``; return True when it enlarged the row space."""
        r = self.reduce(row)
        if not r:
            return False
        F = self.field
        c0 = min(r)
        inv = F.inv(r[c0])
        self.rows[c0] = {c: F.reduce(v * inv) for c, v in r.items()}
        return True

    def contains(self, row):
        return not self.reduce(row)

    def reduced_rows(self):
        """Fully reduced echelon form, as ``{pivot: row}``.

        In the result no pivot column occurs in any other row.
        """
        F = self.field
        out = {}
        for c in sorted(self.rows, reverse=True):
            r = dict(self.rows[c])
            for c2 in sorted(r):
                if c2 == c or c2 not in out or c2 not in r:
                    continue
                v = r[c2]
                for c3, v3 in out[c2].items():
                    x = F.reduce(r.get(c3, 0) - v * v3)
                    if x == 0:
                        r.pop(c3, None)
                    else:
                        r[c3] = x
            out[c] = r
        return {c: out[c] for c in sorted(out)}


def rank(rows, field):
    ech = RowEchelon(field)
    for r in rows:
        ech.add(r)
    return ech.rank
