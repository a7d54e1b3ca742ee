"""Smith normal form over the integers (small dense matrices)."""

from __future__ import annotations


def _copy(matrix):
    return [[int(x) for x in row] for row in matrix]


def smith_diagonal(matrix) -> list[int]:
    """Diagonal of the Smith normal form, with non-negative entries.

    Zero rows/columns contribute trailing zeros; the list has
    ``min(rows, cols)`` entries and each divides the next.
    """
    a = _copy(matrix)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        # pick the smallest nonzero entry in the trailing block as pivot
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            diag.extend([0] * (min(rows, cols) - t))
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # the pivot must divide the whole trailing block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/col t onto the pivot
            best = (abs(a[t][t]), t, t)
            for i in range(t + 1, rows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, cols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
    return diag


def invariant_factors(matrix) -> tuple[int, ...]:
    """Nonzero invariant factors, in divisibility order."""
    return tuple(x for x in smith_diagonal(matrix) if x)
