"""Energy of congruences, two ways.

The spectral route builds the adjacency matrix of a partition (edges join
distinct elements of a common block) and sums the absolute eigenvalues,
computed by an in-package cyclic Jacobi solver.  The combinatorial route
returns the exact integer 2*(n - number of blocks).  The combinatorial
route is the production path; the solver exists to validate the spectral
definition against it.
"""

import math
from dataclasses import dataclass

from . import partition as pt
from .errors import NoConvergence, SizeMismatch

MAX_SWEEPS = 64


@dataclass(frozen=True)
class Adjacency:
    n: int
    rows: tuple  # tuple of tuples, symmetric 0/1 with zero diagonal

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise SizeMismatch("row count != n")
        for i, row in enumerate(self.rows):
            if len(row) != self.n:
                raise SizeMismatch("matrix is not square")
            if row[i] != 0:
                raise SizeMismatch("nonzero diagonal entry")
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise SizeMismatch("entries must be 0 or 1")
                if x != self.rows[j][i]:
                    raise SizeMismatch("matrix is not symmetric")

    @property
    def edge_count(self):
        return sum(sum(row) for row in self.rows) // 2


def adjacency_of(p):
    """Adjacency matrix of a partition: (i,j)=1 iff i != j, same block."""
    n = p.n
    rows = [
        tuple(1 if i != j and p.rep[i] == p.rep[j] else 0 for j in range(n))
        for i in range(n)
    ]
    return Adjacency(n, tuple(rows))


def complete_graph(k):
    return Adjacency(k, tuple(tuple(0 if i == j else 1 for j in range(k)) for i in range(k)))


def _off_norm(a, n):
    s = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i][j] * a[i][j]
    return math.sqrt(s)


def spectrum(m, tol=1e-12):
    """Eigenvalues of a symmetric 0/1 matrix, descending.

    Cyclic-by-row Jacobi sweeps; converged when the off-diagonal Frobenius
    norm drops below tol*n.  The sweep cap is a defect detector: these
    matrices converge in a handful of sweeps.
    """
    if tol <= 0:
        raise SizeMismatch("tol must be positive")
    n = m.n
    a = [[float(x) for x in row] for row in m.rows]
    for _ in range(MAX_SWEEPS):
        if _off_norm(a, n) < tol * n:
            return sorted((a[i][i] for i in range(n)), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
    raise NoConvergence(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")


def spectral_energy(m, tol=1e-12):
    return sum(abs(x) for x in spectrum(m, tol))


def combinatorial_energy(p):
    """Exact energy 2*(n - number of blocks)."""
    return 2 * (p.n - pt.num_blocks(p))


def congruence_energy(c):
    """Total energy of a congruence lattice: sum of member energies."""
    total = sum(combinatorial_energy(p) for p in c.members)
    blocks = sum(pt.num_blocks(p) for p in c.members)
    # second formula from the same height identity; cheap internal guard
    assert total == 2 * c.host_n * len(c.members) - 2 * blocks
    return total
