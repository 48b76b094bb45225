"""Row reduction over F_p on plain Python lists."""

from __future__ import annotations

from .polyfield import inverse_mod


def rref(rows, p: int):
    """Reduced row echelon form of ``rows`` modulo ``p``.

    Returns ``(nonzero_rows, pivot_columns)``.
    """
    M = [[v % p for v in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = inverse_mod(M[r][col], p)
        M[r] = [v * inv % p for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][col]:
                c = M[i][col]
                M[i] = [(a - c * b) % p for a, b in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows, p: int) -> int:
    return len(rref(rows, p)[0])
