"""Memoized exact integer tables.

Binomials, Stirling numbers of both kinds, Bell numbers, factorials, and the
coefficient polynomials Q_n of the deformed exponential series.  Tables grow
row by row on demand and are kept for the process lifetime.  Rows are stored
as tuples, so a published row can never change; growth is serialized by a
lock and readers never block.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from .poly import MultiPoly


class NumberTables:
    """Grow-on-demand caches for the integer triangles and sequences."""

    def __init__(self):
        self._lock = threading.RLock()
        self._binomial: list[tuple[int, ...]] = [(1,)]
        self._stirling2: list[tuple[int, ...]] = [(1,)]
        self._stirling1: list[tuple[int, ...]] = [(1,)]
        self._bell: list[int] = [1]
        self._factorial: list[int] = [1]
        self._q_product: dict[str, list[MultiPoly]] = {}

    @staticmethod
    def _check_n(n: int):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {n!r}")

    def binomial(self, n: int, k: int) -> int:
        """C(n, k); 0 outside 0 <= k <= n."""
        self._check_n(n)
        if k < 0 or k > n:
            return 0
        rows = self._binomial
        if n >= len(rows):
            with self._lock:
                while len(rows) <= n:
                    prev = rows[-1]
                    m = len(rows)
                    row = (1,) + tuple(prev[j - 1] + prev[j] for j in range(1, m)) + (1,)
                    rows.append(row)
        return rows[n][k]

    def stirling2(self, n: int, k: int) -> int:
        """Partitions of an n-set into k nonempty blocks; 0 outside range."""
        self._check_n(n)
        if k < 0 or k > n:
            return 0
        rows = self._stirling2
        if n >= len(rows):
            with self._lock:
                while len(rows) <= n:
                    prev = rows[-1]
                    m = len(rows)
                    row = [0] * (m + 1)
                    for j in range(1, m + 1):
                        row[j] = (j * prev[j] if j < m else 0) + prev[j - 1]
                    rows.append(tuple(row))
        return rows[n][k]

    def stirling1_unsigned(self, n: int, k: int) -> int:
        """Permutations of an n-set with k cycles; 0 outside range."""
        self._check_n(n)
        if k < 0 or k > n:
            return 0
        rows = self._stirling1
        if n >= len(rows):
            with self._lock:
                while len(rows) <= n:
                    prev = rows[-1]
                    m = len(rows)
                    row = [0] * (m + 1)
                    for j in range(1, m + 1):
                        row[j] = ((m - 1) * prev[j] if j < m else 0) + prev[j - 1]
                    rows.append(tuple(row))
        return rows[n][k]

    def stirling1_signed(self, n: int, k: int) -> int:
        value = self.stirling1_unsigned(n, k)
        return -value if (n - k) % 2 else value

    def bell(self, n: int) -> int:
        """Row sum of the stirling2 triangle."""
        self._check_n(n)
        cache = self._bell
        if n >= len(cache):
            with self._lock:
                while len(cache) <= n:
                    m = len(cache)
                    self.stirling2(m, 0)
                    cache.append(sum(self._stirling2[m]))
        return cache[n]

    def factorial(self, n: int) -> int:
        self._check_n(n)
        cache = self._factorial
        if n >= len(cache):
            with self._lock:
                while len(cache) <= n:
                    cache.append(cache[-1] * len(cache))
        return cache[n]

    def q_product_poly(self, n: int, var: str = "q") -> MultiPoly:
        """Q_n(var) = var * (2*var - 1) * ... * (n*var - (n-1)), with Q_0 = 1."""
        self._check_n(n)
        with self._lock:
            seq = self._q_product.setdefault(var, [MultiPoly.const(1)])
            while len(seq) <= n:
                m = len(seq)
                seq.append(seq[-1] * (MultiPoly.var(var) * m - (m - 1)))
        return seq[n]

    # -- optional on-disk cache of the integer tables --------------------------

    def save(self, path) -> None:
        """Write the integer tables as JSON (values as decimal strings)."""
        with self._lock:
            data = {
                "binomial": [[str(v) for v in row] for row in self._binomial],
                "stirling2": [[str(v) for v in row] for row in self._stirling2],
                "stirling1": [[str(v) for v in row] for row in self._stirling1],
                "bell": [str(v) for v in self._bell],
                "factorial": [str(v) for v in self._factorial],
            }
        Path(path).write_text(json.dumps(data))

    def load(self, path) -> bool:
        """Adopt cached tables when they are longer than what is in memory.

        Returns False (and leaves the tables alone) if the file is missing or
        not structurally a table dump.
        """
        try:
            data = json.loads(Path(path).read_text())
            triangles = {}
            for key in ("binomial", "stirling2", "stirling1"):
                rows = [tuple(int(v) for v in row) for row in data[key]]
                if not rows or any(len(row) != i + 1 for i, row in enumerate(rows)):
                    return False
                if any(row[-1] != 1 for row in rows):
                    return False
                triangles[key] = rows
            bell = [int(v) for v in data["bell"]]
            fact = [int(v) for v in data["factorial"]]
            if not bell or bell[0] != 1 or not fact or fact[0] != 1:
                return False
        except (OSError, ValueError, KeyError, TypeError):
            return False
        with self._lock:
            if len(triangles["binomial"]) > len(self._binomial):
                self._binomial[:] = triangles["binomial"]
            if len(triangles["stirling2"]) > len(self._stirling2):
                self._stirling2[:] = triangles["stirling2"]
            if len(triangles["stirling1"]) > len(self._stirling1):
                self._stirling1[:] = triangles["stirling1"]
            if len(bell) > len(self._bell):
                self._bell[:] = bell
            if len(fact) > len(self._factorial):
                self._factorial[:] = fact
        return True


TABLES = NumberTables()


def binomial(n: int, k: int) -> int:
    return TABLES.binomial(n, k)


def stirling2(n: int, k: int) -> int:
    return TABLES.stirling2(n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    return TABLES.stirling1_unsigned(n, k)


def stirling1_signed(n: int, k: int) -> int:
    return TABLES.stirling1_signed(n, k)


def bell(n: int) -> int:
    return TABLES.bell(n)


def factorial(n: int) -> int:
    return TABLES.factorial(n)


def q_product_poly(n: int, var: str = "q") -> MultiPoly:
    return TABLES.q_product_poly(n, var)
