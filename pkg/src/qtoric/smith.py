"""Smith normal form diagonal of integer matrices."""

from __future__ import annotations


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero invariant factors ``s_1 | s_2 | ... | s_r`` of an integer matrix.

    Only the diagonal is produced; the unimodular transforms are not tracked.
    """
    a = [list(map(int, row)) for row in matrix]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(m, n):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if not done:
                # a remainder smaller than the pivot exists; make it the pivot
                _, pi, pj = min(
                    [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
                    + [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
                )
                a[t], a[pi] = a[pi], a[t]
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag
