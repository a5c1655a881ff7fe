"""Independent re-check of orbit-search certificates.

Nothing here calls into the search or into the K0 module's Euler form. The
pairing is rebuilt as an explicit integer matrix on coordinates
``(rank, x, y, ch2_x2)`` and mutations are replayed on plain lists.
"""

from __future__ import annotations


def doubled_euler_matrix(n: int) -> list[list[int]]:
    """Matrix ``M`` with ``2 chi(v, w) = v^T M w``.

    From HRR with ``K = -(n+2)F - 2C`` and ``K.(aF + bC) = -2a + (n-2)b``.
    """
    # rows/cols: r, x, y, s2
    return [
        [2, 2, -(n - 2), 1],
        [-2, 0, -2, 0],
        [n - 2, -2, 2 * n, 0],
        [1, 0, 0, 0],
    ]


def _chi(M, v, w) -> int:
    total = sum(v[i] * M[i][j] * w[j] for i in range(4) for j in range(4))
    if total % 2:
        raise ArithmeticError(f"odd doubled pairing for {v}, {w}")
    return total // 2


def replay(n: int, coords: list, signs, word) -> list:
    M = doubled_euler_matrix(n)
    cur = [list(v) for v in coords]
    for k, sign in word:
        i = k - 1
        v, w = cur[i], cur[i + 1]
        c = _chi(M, v, w)
        if sign == 1:
            cur[i], cur[i + 1] = [b - c * a for a, b in zip(v, w)], v
        elif sign == -1:
            cur[i], cur[i + 1] = w, [a - c * b for a, b in zip(v, w)]
        else:
            raise ValueError(f"bad sign {sign}")
    return [[-x for x in v] if e % 2 else v for v, e in zip(cur, signs)]


def verify_certificate(n: int, source, target, element) -> bool:
    """True iff ``element`` maps ``source`` onto ``target`` entrywise."""
    src = [v.coords() for v in source]
    tgt = [list(v.coords()) for v in target]
    return replay(n, src, element.shifts, element.word) == tgt
