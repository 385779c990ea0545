"""Dense numerical spectra of permutation actions.

Floating point is confined to this module.  Covers the action of a
symmetric weighted generating set on points, unordered pairs and ordered
pairs of distinct points, splitting of those spectra into irrep blocks,
the n-cycle + transposition example, and brute-force Cayley graph spectra
of S_n for n <= 6.

Pair indexing is lexicographic on ``(x, y)`` with ``x != y`` (ordered) or
``x < y`` (unordered), points numbered from 0 internally.
"""

from __future__ import annotations

import bisect
import math
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np
import scipy.io
from scipy.sparse import coo_matrix

from .errors import AttributionError, DomainError
from .partitions import CycleType, dimension
from .records import f17
from .spectra import NormalElement, all_eigenvalues

EIG_TOL = 1e-9
MATCH_TOL = 1e-8


class Permutation(tuple):
    """Images of ``0..n-1``; printed in 1-based cycle notation."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 1-based cycles, e.g. ``[(1, 2), (3, 4, 5)]``."""
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a - 1] = b - 1
        return cls(images)

    @property
    def n(self) -> int:
        return len(self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(len(self)):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        return CycleType.from_parts(len(c) for c in self.cycles())

    @property
    def sign(self) -> int:
        return self.cycle_type().sign

    def support(self) -> set[int]:
        return {i for i, x in enumerate(self) if x != i}

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)


@dataclass
class WeightedGenSet:
    n: int
    pairs: list[tuple[Permutation, float]] = field(default_factory=list)

    def weights(self) -> dict[Permutation, float]:
        out: dict[Permutation, float] = defaultdict(float)
        for g, w in self.pairs:
            if w < 0:
                raise ValueError("weights must be non-negative")
            if len(g) != self.n:
                raise ValueError("permutation of the wrong degree")
            out[g] += float(w)
        return dict(out)

    def is_symmetric(self, tol: float = 1e-12) -> bool:
        w = self.weights()
        return all(abs(v - w.get(g.inverse(), 0.0)) <= tol for g, v in w.items())

    @property
    def total(self) -> float:
        return sum(self.weights().values())

    @property
    def sign_value(self) -> float:
        return sum(w * g.sign for g, w in self.weights().items())

    @classmethod
    def from_normal(cls, sigma: NormalElement) -> "WeightedGenSet":
        if sigma.n > 8:
            raise DomainError("expanding a normal element into group elements needs n <= 8")
        alphas = {mu: float(a) for mu, a in sigma.coeffs.items()}
        pairs = []
        for images in permutations(range(sigma.n)):
            g = Permutation(images)
            a = alphas.get(g.cycle_type())
            if a:
                pairs.append((g, a))
        return cls(sigma.n, pairs)


def cycle_transposition_set(n: int) -> WeightedGenSet:
    """``1/4 [id + (1 2) + (1 2 ... n) + (1 2 ... n)^-1]``."""
    cycle = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    gens = [Permutation.identity(n), Permutation.from_cycles(n, [(1, 2)]), cycle, cycle.inverse()]
    return WeightedGenSet(n, [(g, 0.25) for g in gens])


def _domain(n: int, ell: int, ordered: bool) -> list[tuple[int, ...]]:
    if ell == 1:
        return [(x,) for x in range(n)]
    if ell == 2:
        if ordered:
            return [(x, y) for x in range(n) for y in range(n) if x != y]
        return [(x, y) for x in range(n) for y in range(x + 1, n)]
    raise ValueError("only actions on points (1) and pairs (2) are supported")


def action_matrix(gens: WeightedGenSet, ell: int = 1, ordered: bool = True) -> np.ndarray:
    """Weighted adjacency of the action on ``ell``-tuples of distinct points."""
    if not gens.is_symmetric():
        raise ValueError("generating set is not symmetric")
    dom = _domain(gens.n, ell, ordered)
    index = {v: i for i, v in enumerate(dom)}
    M = np.zeros((len(dom), len(dom)))
    for g, w in gens.weights().items():
        for i, v in enumerate(dom):
            image = tuple(g[x] for x in v)
            if not ordered:
                image = tuple(sorted(image))
            M[i, index[image]] += w
    return M


def spectrum(M: np.ndarray, tol: float = EIG_TOL) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, descending."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(M, M.T, atol=tol, rtol=0):
        raise ValueError("matrix is not symmetric")
    return np.linalg.eigvalsh(M)[::-1]


def multiset_difference(
    values: Sequence[float], remove: Sequence[float], tol: float = MATCH_TOL
) -> tuple[np.ndarray, float]:
    """Remove each of ``remove`` from ``values`` by nearest match.

    Returns the remaining values (descending) and the worst match distance.
    Raises :class:`AttributionError` if some value has no partner within ``tol``.
    """
    pool = sorted(float(v) for v in values)
    worst = 0.0
    for r in sorted(float(v) for v in remove):
        if not pool:
            raise AttributionError(f"nothing left to match {r!r}")
        i = bisect.bisect_left(pool, r)
        cands = [j for j in (i - 1, i) if 0 <= j < len(pool)]
        j = min(cands, key=lambda j: abs(pool[j] - r))
        dist = abs(pool[j] - r)
        if dist > tol:
            raise AttributionError(f"eigenvalue {r!r} unmatched (nearest {pool[j]!r})")
        worst = max(worst, dist)
        pool.pop(j)
    return np.array(pool[::-1]), worst


BLOCK_NAMES = ("n", "n-1,1", "n-2,2", "n-2,1,1")


@dataclass
class SpectrumAttribution:
    n: int
    total: float
    blocks: dict[str, np.ndarray]
    residual: float
    tol: float

    def top_blocks(self) -> list[str]:
        """Nontrivial block(s) holding the largest nontrivial eigenvalue."""
        tops = {name: self.blocks[name][0] for name in BLOCK_NAMES[1:] if len(self.blocks[name])}
        best = max(tops.values())
        return [name for name, v in tops.items() if best - v <= self.tol]

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "residual": self.residual,
            "block_sizes": {k: len(v) for k, v in self.blocks.items()},
            "block_top": {k: float(v[0]) for k, v in self.blocks.items() if len(v)},
            "winner": self.top_blocks(),
        }


def block_dimensions(n: int) -> dict[str, int]:
    return {"n": 1, "n-1,1": n - 1, "n-2,2": n * (n - 3) // 2, "n-2,1,1": (n - 1) * (n - 2) // 2}


def attribute_blocks(gens: WeightedGenSet, tol: float = MATCH_TOL) -> SpectrumAttribution:
    """Split the pair-action spectra into the triv, std, (n-2,2), (n-2,1,1) blocks.

    points = triv + std; unordered pairs = points + (n-2,2);
    ordered pairs = unordered pairs + std + (n-2,1,1).
    """
    n = gens.n
    if n < 4:
        raise DomainError("block attribution needs n >= 4")
    total = gens.total
    pts = spectrum(action_matrix(gens, 1))
    unord = spectrum(action_matrix(gens, 2, ordered=False))
    ordd = spectrum(action_matrix(gens, 2, ordered=True))
    std, r1 = multiset_difference(pts, [total], tol)
    two, r2 = multiset_difference(unord, pts, tol)
    rest, r3 = multiset_difference(np.append(ordd, total), unord, tol)
    one_one, r4 = multiset_difference(rest, pts, tol)
    blocks = {"n": np.array([total]), "n-1,1": std, "n-2,2": two, "n-2,1,1": one_one}
    return SpectrumAttribution(n, total, blocks, max(r1, r2, r3, r4), tol)


def rayleigh_witness(n: int) -> tuple[float, float]:
    """Rayleigh quotient of ``f(x, y) = (x - y mod n) - n/2`` on ordered pairs.

    Returns ``(quotient, 6/n**3)``.
    """
    if n < 5:
        raise DomainError("need n >= 5")
    A = action_matrix(cycle_transposition_set(n), 2, ordered=True)
    f = np.array([((x - y) % n) - n / 2 for x, y in _domain(n, 2, True)])
    quotient = float(f @ (f - A @ f) / (f @ f))
    return quotient, 6 / n**3


def diameter_bound(log_order: float, gap: float) -> float:
    """``3 log|G| / sqrt(gap)``."""
    return 3 * log_order / math.sqrt(gap)


def log_factorial(n: int) -> float:
    return math.lgamma(n + 1)


# --------------------------------------------------------------------------
# Cayley graphs of S_n


def cayley_matrix(elem: NormalElement | WeightedGenSet, n: int | None = None) -> np.ndarray:
    """Adjacency ``A[g, g h] += w(h)`` on S_n, elements in lexicographic order."""
    n = elem.n if n is None else n
    if n > 6:
        raise DomainError("Cayley oracle is limited to n <= 6")
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    radix = n ** np.arange(n - 1, -1, -1)
    lookup = {int(code): i for i, code in enumerate(perms @ radix)}
    codes = np.array(sorted(lookup))
    order = np.array([lookup[int(c)] for c in codes])
    if isinstance(elem, NormalElement):
        alphas = {mu: float(a) for mu, a in elem.coeffs.items()}
        weights = {}
        for row in perms:
            g = Permutation(row)
            a = alphas.get(g.cycle_type())
            if a:
                weights[g] = a
    else:
        if not elem.is_symmetric():
            raise ValueError("generating set is not symmetric")
        weights = elem.weights()
    N = len(perms)
    A = np.zeros((N, N))
    rows = np.arange(N)
    for h, w in weights.items():
        composed = perms[:, list(h)]  # (g h)(x) = g(h(x))
        target = order[np.searchsorted(codes, composed @ radix)]
        np.add.at(A, (rows, target), w)
    return A


def cayley_oracle(elem: NormalElement | WeightedGenSet) -> np.ndarray:
    """Full Cayley spectrum of S_n, descending."""
    return spectrum(cayley_matrix(elem))


def nontrivial_top(spec: np.ndarray, total: float, sign_value: float, tol: float = MATCH_TOL) -> float:
    """Largest eigenvalue once one copy each of the triv and sgn values is removed."""
    rest, _ = multiset_difference(spec, [total, sign_value], tol)
    return float(rest[0])


def transposition_set(n: int, weights: dict[tuple[int, int], float]) -> WeightedGenSet:
    """Weighted transpositions; keys are 1-based pairs ``(i, j)``."""
    return WeightedGenSet(
        n, [(Permutation.from_cycles(n, [pair]), float(w)) for pair, w in sorted(weights.items())]
    )


def transposition_check(gens: WeightedGenSet) -> tuple[float, float]:
    """``(lambda from the Cayley spectrum, top of the std block)``."""
    lam = nontrivial_top(cayley_oracle(gens), gens.total, gens.sign_value)
    pts = spectrum(action_matrix(gens, 1))
    std, _ = multiset_difference(pts, [gens.total])
    return lam, float(std[0])


def normal_spectrum_multiset(sigma: NormalElement) -> np.ndarray:
    """Character-side spectrum: each irrep scalar repeated ``dim**2`` times."""
    vals = []
    for p, v in all_eigenvalues(sigma).items():
        vals.extend([float(v)] * dimension(p) ** 2)
    return np.sort(np.array(vals))[::-1]


# --------------------------------------------------------------------------
# export


def write_coordinate(M: np.ndarray, path) -> None:
    """Matrix Market coordinate format (1-based)."""
    scipy.io.mmwrite(str(path), coo_matrix(M), precision=17)


def spectrum_csv(values: Iterable[float]) -> str:
    lines = ["index,eigenvalue"]
    lines += [f"{i},{f17(v)}" for i, v in enumerate(values)]
    return "\n".join(lines) + "\n"
