"""Exact integer and rational linear algebra on plain Python lists."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve_transposed_lower(M: Sequence[Sequence[int]], f: Sequence[int]) -> list[Fraction]:
    """Solve M^T c = f for lower-triangular M with nonzero diagonal.

    M^T is upper triangular, so back-substitute from the last index down.
    """
    n = len(M)
    if len(f) != n:
        raise ValueError("dimension mismatch")
    c = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        s = Fraction(f[k])
        for h in range(k + 1, n):
            if M[h][k] and c[h]:
                s -= c[h] * M[h][k]
        c[k] = s / M[k][k]
    return c


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the integer row lattice.

    Returns the nonzero rows: echelon, positive pivots, entries above each
    pivot reduced into [0, pivot).
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out: list[list[int]] = []
    pivot_cols: list[int] = []
    for col in range(ncols):
        # Euclid on the column among the remaining rows
        while True:
            nz = [r for r in A if r[col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for j in range(col, ncols):
                    r[j] -= q * piv[j]
        nz = [r for r in A if r[col]]
        if not nz:
            continue
        piv = nz[0]
        A.remove(piv)
        A = [r for r in A if any(r)]
        if piv[col] < 0:
            piv = [-x for x in piv]
        for r in out:
            q = r[col] // piv[col]
            if q:
                for j in range(col, ncols):
                    r[j] -= q * piv[j]
        out.append(piv)
        pivot_cols.append(col)
        if not A:
            break
    return out


def in_integer_row_span(rows: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether v is an integer combination of rows."""
    H = hermite_normal_form(rows)
    w = list(v)
    for r in H:
        col = next(j for j, x in enumerate(r) if x)
        if w[col] % r[col]:
            return False
        q = w[col] // r[col]
        if q:
            for j in range(col, len(w)):
                w[j] -= q * r[j]
    return not any(w)


def integer_kernel_of_functional(a: Sequence[int]) -> list[list[int]]:
    """Basis of {x in Z^n : a.x = 0}.

    Column operations reduce a to (g, 0, ..., 0); the transformed unit
    vectors in positions 1..n-1 then span the kernel.
    """
    n = len(a)
    a = list(a)
    U = [[int(i == j) for j in range(n)] for i in range(n)]  # columns of U
    active = [j for j in range(n) if a[j]]
    while len(active) > 1:
        active.sort(key=lambda j: abs(a[j]))
        p = active[0]
        for j in active[1:]:
            q = a[j] // a[p]
            a[j] -= q * a[p]
            U[j] = [x - q * y for x, y in zip(U[j], U[p])]
        active = [j for j in active if a[j]]
    return [U[j] for j in range(n) if not (active and j == active[0])]
