#!/usr/bin/env python3
#
# Copyright 2025 Norbert Kamiński <norbert.kaminski@infogain.com>
#
# SPDX-License-Identifier: Apache-2.0
#

"""
Exact linear algebra over the rationals and the integers.

Everything here works on plain nested sequences of ``int`` or ``Fraction``;
no floating point is ever produced.
"""

from fractions import Fraction


def dot(v1, v2):
    assert len(v1) == len(v2), "Cannot dot vectors of different dimensions!"
    return sum(x1 * x2 for x1, x2 in zip(v1, v2))


def mat_vec(matrix, vector):
    return tuple(dot(row, vector) for row in matrix)


def transpose(matrix):
    return tuple(tuple(column) for column in zip(*matrix))


def int_determinant(matrix):
    """
    Determinant of a square integer matrix by fraction-free (Bareiss)
    elimination. Every intermediate value stays an integer.
    """
    rows = [list(row) for row in matrix]
    size = len(rows)
    if size == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if rows[i][k] != 0),
                        None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = ((rows[i][j] * rows[k][k]
                               - rows[i][k] * rows[k][j]) // previous)
        previous = rows[k][k]
    return sign * rows[size - 1][size - 1]


def int_adjugate(matrix):
    """
    Return ``(det, adj)`` for a square integer matrix, with
    ``adj @ matrix == det * I``. Cofactor expansion; meant for n <= 6.
    """
    size = len(matrix)
    if size == 1:
        return matrix[0][0], ((1,),)
    adjugate = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = [
                [matrix[r][c] for c in range(size) if c != j]
                for r in range(size) if r != i
            ]
            adjugate[j][i] = (-1) ** (i + j) * int_determinant(minor)
    det = sum(matrix[0][c] * adjugate[c][0] for c in range(size))
    return det, tuple(tuple(row) for row in adjugate)


def invert(matrix):
    """
    Gauss-Jordan inverse over the rationals; ``None`` when singular.
    """
    size = len(matrix)
    augmented = [
        [Fraction(x) for x in row] + [Fraction(int(i == j))
                                      for j in range(size)]
        for i, row in enumerate(matrix)
    ]
    for col in range(size):
        pivot = next((r for r in range(col, size) if augmented[r][col] != 0),
                     None)
        if pivot is None:
            return None
        augmented[col], augmented[pivot] = augmented[pivot], augmented[col]
        scale = 1 / augmented[col][col]
        augmented[col] = [x * scale for x in augmented[col]]
        for r in range(size):
            factor = augmented[r][col]
            if r != col and factor != 0:
                augmented[r] = [a - factor * b
                                for a, b in zip(augmented[r], augmented[col])]
    return tuple(tuple(row[size:]) for row in augmented)


def rank(rows):
    """
    Rank of a list of rational (or integer) row vectors.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    width = len(work[0])
    result = 0
    for col in range(width):
        pivot = next((r for r in range(result, len(work))
                      if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[result], work[pivot] = work[pivot], work[result]
        for r in range(result + 1, len(work)):
            factor = work[r][col] / work[result][col]
            if factor != 0:
                work[r] = [a - factor * b
                           for a, b in zip(work[r], work[result])]
        result += 1
        if result == len(work):
            break
    return result


def affine_rank(points):
    """
    Dimension of the affine hull of a non-empty point set.
    """
    base = points[0]
    return rank([[a - b for a, b in zip(point, base)]
                 for point in points[1:]])
