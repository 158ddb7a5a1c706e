"""Exhaustive involution/braid law sweep over all small magma systems.

The prop1 suite quantifies over every multiplication table and every bar
map at a given size (531,441 systems at size 3), which dominates the
runtime of the brute-force commands.  The inner loop is integer-only, so it
is implemented twice over the same encoded arrays:

* a numba @njit kernel (default when numba imports), and
* a vectorized pure-numpy fallback.

Set FINLINK_BACKEND=numpy or FINLINK_BACKEND=numba to force one path; the
default `auto` prefers numba.  `benchmarks/bench_prop1.py` compares both.

Tables are encoded as arrays indexed by element number; a system's code is
(table_index, bar_index) into the deterministic enumeration order shared
with `magma.enumerate_magmas`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import SizeLimitExceeded
from .magma import MagmaSystem, trivial_point_system


def all_tables(n: int) -> np.ndarray:
    """Every n x n multiplication table, in lexicographic order of the flat rows."""
    flat = np.array(list(product(range(n), repeat=n * n)), dtype=np.int64)
    return flat.reshape(-1, n, n)


def all_bars(n: int) -> np.ndarray:
    return np.array(list(product(range(n), repeat=n)), dtype=np.int64)


def _flags_numpy(tables: np.ndarray, bars: np.ndarray):
    """(inv, braid, cancellation, crossed) boolean arrays of shape (T, B)."""
    n = tables.shape[1]
    t_count, b_count = tables.shape[0], bars.shape[0]
    yy, xx = np.divmod(np.arange(n * n), n)
    rows = np.arange(t_count)[:, None]
    idx = np.arange(n * n)[None, :]
    prod_ = tables[:, yy, xx]  # (T, n*n)

    inv = np.empty((t_count, b_count), dtype=bool)
    braid = np.empty((t_count, b_count), dtype=bool)
    canc = np.empty((t_count, b_count), dtype=bool)
    crossed = np.empty((t_count, b_count), dtype=bool)
    for bi in range(b_count):
        bar = bars[bi]
        th = bar[yy][None, :] * n + prod_
        ph = prod_ * n + bar[xx][None, :]
        th2 = np.take_along_axis(th, th, axis=1)
        ph2 = np.take_along_axis(ph, ph, axis=1)
        inv[:, bi] = (th2 == idx).all(axis=1) & (ph2 == idx).all(axis=1)
        tpt = np.take_along_axis(th, np.take_along_axis(ph, th, axis=1), axis=1)
        ptp = np.take_along_axis(ph, np.take_along_axis(th, ph, axis=1), axis=1)
        braid[:, bi] = (tpt == ptp).all(axis=1)
        barbar = bool((bar[bar] == np.arange(n)).all())
        left = tables[rows, bar[yy][None, :], prod_]
        right = tables[rows, prod_, bar[xx][None, :]]
        canc[:, bi] = barbar & (left == xx[None, :]).all(axis=1) & (
            right == yy[None, :]
        ).all(axis=1)
        barprod = bar[prod_]
        ca = tables[rows, np.broadcast_to(xx[None, :], prod_.shape), barprod]
        cb = tables[rows, barprod, np.broadcast_to(yy[None, :], prod_.shape)]
        crossed[:, bi] = (ca == bar[yy][None, :]).all(axis=1) & (
            cb == bar[xx][None, :]
        ).all(axis=1)
    return inv, braid, canc, crossed


def _make_numba_kernel():
    from numba import njit

    @njit(cache=True)
    def kernel(tables, bars, inv, braid, canc, crossed):  # pragma: no cover
        t_count = tables.shape[0]
        b_count = bars.shape[0]
        n = tables.shape[1]
        size = n * n
        th = np.empty(size, np.int64)
        ph = np.empty(size, np.int64)
        for ti in range(t_count):
            tab = tables[ti]
            for bi in range(b_count):
                bar = bars[bi]
                for i in range(size):
                    y = i // n
                    x = i % n
                    p = tab[y, x]
                    th[i] = bar[y] * n + p
                    ph[i] = p * n + bar[x]
                ok_inv = True
                for i in range(size):
                    if th[th[i]] != i or ph[ph[i]] != i:
                        ok_inv = False
                        break
                ok_braid = True
                for i in range(size):
                    if th[ph[th[i]]] != ph[th[ph[i]]]:
                        ok_braid = False
                        break
                ok_canc = True
                for y in range(n):
                    if bar[bar[y]] != y:
                        ok_canc = False
                        break
                if ok_canc:
                    for i in range(size):
                        y = i // n
                        x = i % n
                        p = tab[y, x]
                        if tab[bar[y], p] != x or tab[p, bar[x]] != y:
                            ok_canc = False
                            break
                ok_crossed = True
                for i in range(size):
                    y = i // n
                    x = i % n
                    bp = bar[tab[y, x]]
                    if tab[x, bp] != bar[y] or tab[bp, y] != bar[x]:
                        ok_crossed = False
                        break
                inv[ti, bi] = ok_inv
                braid[ti, bi] = ok_braid
                canc[ti, bi] = ok_canc
                crossed[ti, bi] = ok_crossed

    return kernel


_numba_kernel = None


def _flags_numba(tables: np.ndarray, bars: np.ndarray):
    global _numba_kernel
    if _numba_kernel is None:
        _numba_kernel = _make_numba_kernel()
    shape = (tables.shape[0], bars.shape[0])
    inv = np.empty(shape, dtype=np.bool_)
    braid = np.empty(shape, dtype=np.bool_)
    canc = np.empty(shape, dtype=np.bool_)
    crossed = np.empty(shape, dtype=np.bool_)
    _numba_kernel(tables, bars, inv, braid, canc, crossed)
    return inv, braid, canc, crossed


def resolve_backend(name: str | None = None) -> str:
    """Pick 'numba' or 'numpy' from the argument or FINLINK_BACKEND."""
    choice = (name or os.environ.get("FINLINK_BACKEND", "auto")).lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"unknown backend {choice!r}")
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        return "numba"
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


def compute_flags(tables: np.ndarray, bars: np.ndarray, backend: str | None = None):
    name = resolve_backend(backend)
    if name == "numba":
        return _flags_numba(tables, bars)
    return _flags_numpy(tables, bars)


@dataclass
class SweepResult:
    size: int
    systems: int
    backend: str
    involutive_mismatches: int
    braid_mismatches: int
    witness_codes: tuple[tuple[int, int], ...]

    @property
    def discrepancies(self) -> int:
        return self.involutive_mismatches + self.braid_mismatches

    def summary(self) -> str:
        return (
            f"size {self.size}: {self.systems} systems, "
            f"{self.discrepancies} discrepancies "
            f"({self.involutive_mismatches} involution-law, "
            f"{self.braid_mismatches} braid-law) [{self.backend}]"
        )


def decode_system(n: int, table_index: int, bar_index: int) -> MagmaSystem:
    """The MagmaSystem at a sweep code, matching the enumeration order."""
    labels = [str(k) for k in range(n)]
    flat = []
    rem = table_index
    for _ in range(n * n):
        flat.append(rem % n)
        rem //= n
    flat.reverse()
    op = {
        (labels[i], labels[j]): labels[flat[i * n + j]]
        for i in range(n)
        for j in range(n)
    }
    barflat = []
    rem = bar_index
    for _ in range(n):
        barflat.append(rem % n)
        rem //= n
    barflat.reverse()
    bar = {labels[i]: labels[barflat[i]] for i in range(n)}
    units = [
        u for u in labels if all(op[(u, a)] == a and op[(a, u)] == a for a in labels)
    ]
    unit = units[0] if units else labels[0]
    return trivial_point_system(op, unit, bar)


def prop1_sweep(n: int, backend: str | None = None, max_size: int = 3,
                max_witnesses: int = 5) -> SweepResult:
    """Exhaustive two-way law comparison over all size-n systems.

    A discrepancy is a system where involutivity disagrees with the
    cancellation laws, or where validity of the whole link (involutions and
    braid) disagrees with cancellation plus crossed cancellation.
    """
    if n > max_size:
        raise SizeLimitExceeded(f"size {n} exceeds the cap of {max_size}")
    tables = all_tables(n)
    bars = all_bars(n)
    name = resolve_backend(backend)
    inv, braid, canc, crossed = compute_flags(tables, bars, name)
    mism1 = inv != canc
    mism2 = (inv & braid) != (canc & crossed)
    codes = []
    bad = np.argwhere(mism1 | mism2)
    for ti, bi in bad[:max_witnesses]:
        codes.append((int(ti), int(bi)))
    return SweepResult(
        size=n,
        systems=int(tables.shape[0] * bars.shape[0]),
        backend=name,
        involutive_mismatches=int(mism1.sum()),
        braid_mismatches=int(mism2.sum()),
        witness_codes=tuple(codes),
    )
