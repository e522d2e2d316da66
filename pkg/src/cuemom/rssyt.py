"""Counting restricted semistandard Young tableaux.

A tableau here has rectangular shape with k*beta rows and N columns and
entries in 1..2*k*beta. It is *restricted* when exactly N*beta of its
entries come from each label block {2*beta*(j-1)+1, ..., 2*j*beta}. The
number of such tableaux equals MoM_N(k, beta).

The main engine is a column transfer matrix: a column is a strictly
increasing k*beta-subset of the alphabet, adjacent columns must be weakly
increasing row by row, and the DP state carries the last column plus the
running block counts tau_1..tau_{k-1}. Counts are carried as int64 residues
modulo a few large primes and recombined by CRT; the number of primes is
chosen so that their product exceeds the total SSYT count of the same
shape, which bounds every restricted count.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache
from typing import Iterator

import numpy as np
from scipy import sparse

from .config import DEFAULT_BUDGET, Budget
from .exact import SizeError

ColumnState = tuple[int, ...]

# Primes below 2**47 keep in-degree * residue below 2**62 for up to 2**14 states.
_PRIME_CEILING = 2**47


def _check_kb(k: int, beta: int, budget: Budget) -> None:
    if k < 1 or beta < 1:
        raise ValueError("k and beta must be positive integers")
    if k * beta > budget.max_kb:
        raise SizeError(f"k*beta = {k * beta} exceeds the budget of {budget.max_kb}")


def _check_n(n: int, budget: Budget) -> None:
    if n < 0:
        raise ValueError("N must be nonnegative")
    if n > budget.max_n:
        raise SizeError(f"N = {n} exceeds the budget of {budget.max_n}")


def enumerate_column_states(k: int, beta: int, budget: Budget = DEFAULT_BUDGET) -> list[ColumnState]:
    """All C(2kb, kb) possible columns, in lexicographic order (1-based labels)."""
    _check_kb(k, beta, budget)
    kb = k * beta
    return list(itertools.combinations(range(1, 2 * kb + 1), kb))


def column_succ(left: ColumnState, right: ColumnState) -> bool:
    """True when ``right`` may sit immediately to the right of ``left``."""
    return all(a <= b for a, b in zip(left, right))


def block_of_label(label: int, beta: int) -> int:
    """0-based block index of a 1-based label."""
    return (label - 1) // (2 * beta)


def block_content(state: ColumnState, k: int, beta: int) -> tuple[int, ...]:
    """Entries of the column falling in each of the k label blocks."""
    tau = [0] * k
    for label in state:
        tau[block_of_label(label, beta)] += 1
    return tuple(tau)


def weyl_dimension(row_count: int, col_count: int, n_vars: int) -> int:
    """Number of SSYT of shape <col_count^row_count> with entries in 1..n_vars.

    Product formula prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
    """
    if col_count == 0:
        return 1
    if row_count > n_vars:
        return 0
    lam = [col_count] * row_count + [0] * (n_vars - row_count)
    num = 1
    den = 1
    for i in range(n_vars):
        for j in range(i + 1, n_vars):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


# ---------------------------------------------------------------------------
# Transfer matrix
# ---------------------------------------------------------------------------


class TransferMatrix:
    """Column states, their block contents and the successor relation for one (k, beta)."""

    def __init__(self, k: int, beta: int, budget: Budget = DEFAULT_BUDGET):
        self.k = k
        self.beta = beta
        self.states = enumerate_column_states(k, beta, budget)
        self.index = {s: i for i, s in enumerate(self.states)}
        self.tau = np.array([block_content(s, k, beta) for s in self.states], dtype=np.int64)
        self.succ = self._successors()

    def _successors(self) -> sparse.csr_matrix:
        cols = np.array(self.states, dtype=np.int16)
        rows, targets = [], []
        for i, s in enumerate(cols):
            ok = np.all(cols >= s, axis=1)
            idx = np.nonzero(ok)[0]
            rows.append(np.full(idx.size, i))
            targets.append(idx)
        r = np.concatenate(rows)
        c = np.concatenate(targets)
        n = len(self.states)
        return sparse.csr_matrix((np.ones(r.size, dtype=np.int64), (r, c)), shape=(n, n))

    def successor_lists(self) -> list[list[int]]:
        return [list(self.succ.indices[self.succ.indptr[i]:self.succ.indptr[i + 1]])
                for i in range(len(self.states))]


@lru_cache(maxsize=16)
def transfer_matrix(k: int, beta: int, budget: Budget = DEFAULT_BUDGET) -> TransferMatrix:
    return TransferMatrix(k, beta, budget)


def _primes_for_bound(bound: int) -> list[int]:
    from sympy import prevprime

    primes = []
    prod = 1
    p = _PRIME_CEILING
    while prod <= bound:
        p = prevprime(p)
        primes.append(p)
        prod *= p
    return primes


def _sweep_mod(tm: TransferMatrix, n_max: int, p: int) -> list[int]:
    """Restricted counts mod p for N = 0..n_max from one left-to-right sweep."""
    k, beta = tm.k, tm.beta
    n_states = len(tm.states)
    cap = n_max * beta
    per_col = min(2 * beta, k * beta)  # most entries one column can put in a block
    dims = (cap + 1,) * (k - 1)

    def window(c: int) -> tuple[int, int]:
        # Block counts after c columns that can still reach tau_j = N*beta for some N <= n_max.
        lo = max(0, c * per_col - n_max * (per_col - beta))
        hi = min(cap, c * per_col)
        return lo, hi

    groups: dict[tuple[int, ...], np.ndarray] = {}
    for key in {tuple(int(x) for x in row[: k - 1]) for row in tm.tau}:
        mask = np.all(tm.tau[:, : k - 1] == np.array(key, dtype=np.int64), axis=1)
        groups[key] = np.nonzero(mask)[0]

    def place(block: np.ndarray, src_lo: int, dst_lo: int, dst_hi: int) -> np.ndarray:
        """Shift each state's slab by its own block content into a fresh layer."""
        out = np.zeros((n_states,) + dims, dtype=np.int64)
        w = block.shape[1] if k > 1 else 0
        for key, idx in groups.items():
            dst, src = [idx], [idx]
            empty = False
            for u in key:
                i0 = max(0, dst_lo - src_lo - u)
                i1 = min(w - 1, dst_hi - src_lo - u)
                if i1 < i0:
                    empty = True
                    break
                src.append(slice(i0, i1 + 1))
                dst.append(slice(src_lo + i0 + u, src_lo + i1 + u + 1))
            if not empty:
                out[tuple(dst)] = block[tuple(src)]
        return out

    counts = [1 % p]
    lo, hi = window(1)
    ones = np.ones((n_states,) + (1,) * (k - 1), dtype=np.int64)
    layer = place(ones, 0, lo, hi)
    succ_t = tm.succ.T.tocsr()
    for c in range(1, n_max + 1):
        if c > 1:
            plo, phi = window(c - 1)
            lo, hi = window(c)
            sub = layer[(slice(None),) + (slice(plo, phi + 1),) * (k - 1)]
            shape = sub.shape
            flat = succ_t @ np.ascontiguousarray(sub).reshape(n_states, -1)
            flat %= p
            layer = place(flat.reshape(shape), plo, lo, hi)
        target = (slice(None),) + (c * beta,) * (k - 1)
        counts.append(int(layer[target].sum() % p))
    return counts


def _crt(residues: list[int], primes: list[int]) -> int:
    value, modulus = 0, 1
    for r, p in zip(residues, primes):
        # Solve value + modulus*x == r (mod p).
        x = ((r - value) * pow(modulus, -1, p)) % p
        value += modulus * x
        modulus *= p
    return value


def _single_column_count(k: int, beta: int) -> int:
    """Restricted tableaux with one column, without building the transfer matrix.

    Walks the alphabet label by label, tracking (entries chosen, block contents).
    """
    kb = k * beta
    layer = {(0, (0,) * k): 1}
    for label in range(1, 2 * kb + 1):
        b = block_of_label(label, beta)
        nxt: dict = defaultdict(int)
        for (size, tau), cnt in layer.items():
            nxt[(size, tau)] += cnt
            if size < kb and tau[b] < beta:
                grown = tau[:b] + (tau[b] + 1,) + tau[b + 1:]
                nxt[(size + 1, grown)] += cnt
        layer = nxt
    return layer.get((kb, (beta,) * k), 0)


def count_rssyt_range(k: int, beta: int, n_max: int, budget: Budget = DEFAULT_BUDGET) -> list[int]:
    """[MoM_0, MoM_1, ..., MoM_{n_max}] as exact integers."""
    _check_kb(k, beta, budget)
    _check_n(n_max, budget)
    if n_max == 0:
        return [1]
    if n_max == 1:
        return [1, _single_column_count(k, beta)]
    tm = transfer_matrix(k, beta, budget)
    kb = k * beta
    primes = _primes_for_bound(weyl_dimension(kb, n_max, 2 * kb))
    per_prime = [_sweep_mod(tm, n_max, p) for p in primes]
    return [_crt([res[n] for res in per_prime], primes) for n in range(n_max + 1)]


def count_rssyt(k: int, beta: int, n: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Exact number of restricted SSYT of shape (k*beta) x N; equals MoM_N(k, beta)."""
    _check_kb(k, beta, budget)
    _check_n(n, budget)
    return count_rssyt_range(k, beta, n, budget)[n]


# ---------------------------------------------------------------------------
# Exact dictionary layers (small cases, invariants)
# ---------------------------------------------------------------------------


def dp_layers(k: int, beta: int, n_columns: int, tau_cap: int | None = None,
              budget: Budget = DEFAULT_BUDGET) -> Iterator[dict]:
    """Yield the DP layer after each of ``n_columns`` columns.

    A layer maps ``(column_state, (tau_1, ..., tau_{k-1}))`` to a positive
    Python int. With ``tau_cap=None`` nothing is pruned, so the layer total
    after c columns is the number of unrestricted SSYT with c columns.
    """
    tm = transfer_matrix(k, beta, budget)
    succ = tm.successor_lists()
    taus = [tuple(int(x) for x in row[: k - 1]) for row in tm.tau]

    def admissible(tau):
        return tau_cap is None or all(x <= tau_cap for x in tau)

    layer: dict = {}
    for i, s in enumerate(tm.states):
        if admissible(taus[i]):
            layer[(s, taus[i])] = 1
    if n_columns >= 1:
        yield layer
    for _ in range(1, n_columns):
        nxt: dict = defaultdict(int)
        for (s, tau), cnt in layer.items():
            for j in succ[tm.index[s]]:
                new_tau = tuple(a + b for a, b in zip(tau, taus[j]))
                if admissible(new_tau):
                    nxt[(tm.states[j], new_tau)] += cnt
        layer = dict(nxt)
        yield layer


# ---------------------------------------------------------------------------
# Direct enumeration oracle
# ---------------------------------------------------------------------------


def brute_force_count(k: int, beta: int, n: int) -> int:
    """Count restricted tableaux by filling cells one at a time (small cases only)."""
    if k < 1 or beta < 1 or n < 0:
        raise ValueError("k, beta must be positive and N nonnegative")
    if k * beta > 3 or n > 4:
        raise SizeError("brute_force_count is limited to k*beta <= 3 and N <= 4")
    rows, alphabet, quota = k * beta, 2 * k * beta, n * beta
    grid = [[0] * n for _ in range(rows)]
    used = [0] * k

    def fill(cell: int) -> int:
        if cell == rows * n:
            return 1 if all(u == quota for u in used) else 0
        r, c = divmod(cell, n)
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        total = 0
        for v in range(lo, alphabet + 1):
            b = (v - 1) // (2 * beta)
            if used[b] == quota:
                continue
            grid[r][c] = v
            used[b] += 1
            total += fill(cell + 1)
            used[b] -= 1
        grid[r][c] = 0
        return total

    return fill(0)
