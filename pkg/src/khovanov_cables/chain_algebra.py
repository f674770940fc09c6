"""Exact linear algebra over prime fields and sparse graded chain complexes.

Everything downstream reduces to the primitives here: row reduction mod p,
sparse complexes with (homological, quantum) bigraded generators, Gaussian
simplification with tracked homotopy data, homology ranks, and filtration
levels of cycles.

Dense matrices are numpy int64 arrays with entries already reduced mod p.
Intermediate products stay far below 2**62 for any prime in actual use, so
the arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

# sparse vector: generator id -> nonzero coefficient mod p
Vec = dict[int, int]


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 is not invertible mod {p}")
    return pow(a, p - 2, p)


def _zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def row_reduce(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of A mod p, with the list of pivot columns."""
    R = np.mod(A.astype(np.int64, copy=True), p)
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hot = np.nonzero(R[r:, c])[0]
        if hot.size == 0:
            continue
        i = r + int(hot[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = (R[r] * inv_mod(int(R[r, c]), p)) % p
        other = R[:, c].copy()
        other[r] = 0
        if other.any():
            R = (R - np.outer(other, R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: np.ndarray, p: int) -> int:
    if A.size == 0:
        return 0
    return len(row_reduce(A, p)[1])


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Matrix whose columns form a basis of ker(A) mod p."""
    nrows, ncols = A.shape
    if ncols == 0:
        return _zeros(0, 0)
    if nrows == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = row_reduce(A, p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    K = _zeros(ncols, len(free))
    for j, fc in enumerate(free):
        K[fc, j] = 1
        for i, pc in enumerate(pivots):
            K[pc, j] = (-int(R[i, fc])) % p
    return K


def solve(A: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution x of A x = b mod p, or None if b is outside the span."""
    nrows, ncols = A.shape
    aug = np.concatenate([A, np.asarray(b, dtype=np.int64).reshape(nrows, 1)], axis=1)
    R, pivots = row_reduce(aug, p)
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, ncols]
    return x


def in_column_span(A: np.ndarray, b: np.ndarray, p: int) -> bool:
    return solve(A, b, p) is not None


def independent_columns(A: np.ndarray, p: int) -> list[int]:
    """Indices of a maximal independent subset of columns (leftmost greedy)."""
    return row_reduce(A, p)[1]


# -- sparse vector helpers -----------------------------------------------


def vec_scale(v: Vec, c: int, p: int) -> Vec:
    c %= p
    if not c:
        return {}
    return {g: (a * c) % p for g, a in v.items() if (a * c) % p}


def vec_add(a: Vec, b: Vec, p: int, scalar: int = 1) -> Vec:
    """a + scalar * b."""
    out = dict(a)
    for g, c in b.items():
        nc = (out.get(g, 0) + scalar * c) % p
        if nc:
            out[g] = nc
        else:
            out.pop(g, None)
    return out


def vec_proportional(a: Vec, b: Vec, p: int) -> bool:
    """True iff b = c * a for some nonzero scalar c (both must be nonzero)."""
    if not a or not b:
        return False
    g = next(iter(a))
    c = (b.get(g, 0) * inv_mod(a[g], p)) % p
    if not c:
        return False
    return vec_add(b, a, p, scalar=-c) == {}


# -- complexes -----------------------------------------------------------


@dataclass
class EliminationStep:
    """One Gaussian elimination of an entry src -> dst with unit coefficient.

    src_targets is d(src) without dst, dst_sources the other generators
    hitting dst, both recorded just before the pair is removed.
    """

    src: int
    dst: int
    coeff: int
    src_targets: Vec
    dst_sources: Vec


@dataclass
class SimplifyTrace:
    p: int
    steps: list[EliminationStep] = field(default_factory=list)

    def project(self, vec: Vec) -> Vec:
        """Push a chain down to the reduced complex (the homotopy retraction)."""
        v = dict(vec)
        for st in self.steps:
            v.pop(st.src, None)
            b = v.pop(st.dst, None)
            if b:
                f = (b * inv_mod(st.coeff, self.p)) % self.p
                for w, c in st.src_targets.items():
                    nc = (v.get(w, 0) - f * c) % self.p
                    if nc:
                        v[w] = nc
                    else:
                        v.pop(w, None)
        return v

    def lift(self, vec: Vec) -> Vec:
        """Chain-level section of project, from the reduced complex back up."""
        v = dict(vec)
        for st in reversed(self.steps):
            beta = 0
            for a, c in st.dst_sources.items():
                va = v.get(a)
                if va:
                    beta = (beta + va * c) % self.p
            if beta:
                v[st.src] = (-beta * inv_mod(st.coeff, self.p)) % self.p
        return v


class ScalarComplex:
    """Sparse complex of F_p vector spaces with bigraded generators.

    Generators carry (h, q). The differential raises h by exactly one; in a
    q-exact complex it preserves q, in a filtered one it never lowers q.
    Entries are indexed both by column and by row so elimination stays local.
    """

    def __init__(self, p: int, q_exact: bool = True):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        self.p = int(p)
        self.q_exact = bool(q_exact)
        self.grading: dict[int, tuple[int, int]] = {}
        self.cols: dict[int, Vec] = {}
        self.rows: dict[int, Vec] = {}
        self._next_id = 0

    # construction

    def add_generator(self, h: int, q: int) -> int:
        g = self._next_id
        self._next_id += 1
        self.grading[g] = (int(h), int(q))
        self.cols[g] = {}
        self.rows[g] = {}
        return g

    def add_entry(self, src: int, dst: int, coeff: int) -> None:
        hs, qs = self.grading[src]
        hd, qd = self.grading[dst]
        assert hd == hs + 1, "differential must raise h by exactly 1"
        if self.q_exact:
            assert qd == qs, "q-exact differential must preserve q"
        else:
            assert qd >= qs, "filtered differential must not lower q"
        c = (self.cols[src].get(dst, 0) + coeff) % self.p
        if c:
            self.cols[src][dst] = c
            self.rows[dst][src] = c
        else:
            self.cols[src].pop(dst, None)
            self.rows[dst].pop(src, None)

    def copy(self) -> "ScalarComplex":
        cx = ScalarComplex(self.p, self.q_exact)
        cx.grading = dict(self.grading)
        cx.cols = {g: dict(col) for g, col in self.cols.items()}
        cx.rows = {g: dict(row) for g, row in self.rows.items()}
        cx._next_id = self._next_id
        return cx

    # inspection

    @property
    def dim(self) -> int:
        return len(self.grading)

    def generators(self) -> list[int]:
        return list(self.grading)

    def gens_at(self, h: int) -> list[int]:
        return sorted(g for g, (hh, _) in self.grading.items() if hh == h)

    def apply_d(self, vec: Vec) -> Vec:
        out: Vec = {}
        for g, c in vec.items():
            for t, u in self.cols[g].items():
                out[t] = (out.get(t, 0) + c * u) % self.p
        return {g: c for g, c in out.items() if c}

    def check_d_squared(self) -> None:
        for g in self.grading:
            dd = self.apply_d(self.apply_d({g: 1}))
            assert not dd, f"d^2 != 0 at generator {g}"

    def dense_block(self, srcs: list[int], dsts: list[int]) -> np.ndarray:
        """Matrix of d restricted to the given bases; M[i, j] = <d srcs[j], dsts[i]>."""
        M = _zeros(len(dsts), len(srcs))
        index = {g: i for i, g in enumerate(dsts)}
        for j, s in enumerate(srcs):
            for t, c in self.cols[s].items():
                i = index.get(t)
                if i is not None:
                    M[i, j] = c
        return M

    # homology

    def _block_homology(self, gens: list[int]) -> dict[int, int]:
        byh: dict[int, list[int]] = {}
        for g in gens:
            byh.setdefault(self.grading[g][0], []).append(g)
        for lst in byh.values():
            lst.sort()
        rk: dict[int, int] = {}
        for h, srcs in byh.items():
            dsts = byh.get(h + 1)
            if dsts:
                rk[h] = rank(self.dense_block(srcs, dsts), self.p)
        dims: dict[int, int] = {}
        for h, lst in byh.items():
            d = len(lst) - rk.get(h, 0) - rk.get(h - 1, 0)
            if d:
                dims[h] = d
        return dims

    def homology_dims(self) -> dict:
        """Ranks of homology: {(h, q): dim} when q-exact, else {h: dim}."""
        if self.q_exact:
            byq: dict[int, list[int]] = {}
            for g, (_, q) in self.grading.items():
                byq.setdefault(q, []).append(g)
            out: dict[tuple[int, int], int] = {}
            for q in sorted(byq):
                for h, d in self._block_homology(byq[q]).items():
                    out[(h, q)] = d
            return out
        return self._block_homology(list(self.grading))

    # simplification

    def simplify(self, track: bool = False) -> SimplifyTrace | None:
        """Eliminate every invertible entry with no q jump, in place.

        A q-exact complex ends with zero differential; a filtered one keeps
        only strictly q-raising entries. With track=True the steps are
        recorded so cycles can be projected down and lifted back.
        """
        trace = SimplifyTrace(self.p) if track else None
        stack = [(s, t) for s, col in self.cols.items() for t in col]
        while stack:
            s, t = stack.pop()
            if s not in self.grading or t not in self.grading:
                continue
            u = self.cols[s].get(t)
            if not u:
                continue
            if not self.q_exact and self.grading[s][1] != self.grading[t][1]:
                continue
            stack.extend(self._eliminate(s, t, u, trace))
        return trace

    def _eliminate(
        self, x: int, y: int, u: int, trace: SimplifyTrace | None
    ) -> list[tuple[int, int]]:
        phi = {w: c for w, c in self.cols[x].items() if w != y}
        srcs = {z: c for z, c in self.rows[y].items() if z != x}
        if trace is not None:
            trace.steps.append(EliminationStep(x, y, u, dict(phi), dict(srcs)))
        uinv = inv_mod(u, self.p)
        touched: list[tuple[int, int]] = []
        for z, v in srcs.items():
            f = (v * uinv) % self.p
            for w, c in phi.items():
                self.add_entry(z, w, -f * c)
                touched.append((z, w))
        self._drop_generator(x)
        self._drop_generator(y)
        return touched

    def _drop_generator(self, g: int) -> None:
        for t in self.cols.pop(g):
            self.rows[t].pop(g, None)
        for s in self.rows.pop(g):
            self.cols[s].pop(g, None)
        del self.grading[g]

    # filtration

    def filtration_level(self, vec: Vec, check_cycle: bool = True) -> int | None:
        """Largest Q with vec in span{q >= Q} + boundaries; None if vec bounds.

        vec must be a cycle concentrated in a single homological degree.
        """
        if not vec:
            return None
        hs = {self.grading[g][0] for g in vec}
        assert len(hs) == 1, "filtration level needs an h-homogeneous cycle"
        h = hs.pop()
        if check_cycle:
            assert not self.apply_d(vec), "filtration level needs a cycle"
        srcs = self.gens_at(h - 1)
        tgts = self.gens_at(h)
        A = self.dense_block(srcs, tgts)
        b = np.array([vec.get(g, 0) for g in tgts], dtype=np.int64)
        if in_column_span(A, b, self.p):
            return None
        for Q in sorted({self.grading[g][1] for g in tgts}, reverse=True):
            keep = [i for i, g in enumerate(tgts) if self.grading[g][1] < Q]
            if in_column_span(A[keep], b[keep], self.p):
                return Q
        raise AssertionError("unreachable: the bottom level always passes")


class HomologySpace:
    """Basis data for the homology of a complex in one degree.

    Representatives extend an independent set of boundaries to a basis of
    the cycle space; coords() expresses any cycle's class in that basis.
    """

    def __init__(self, cx: ScalarComplex, h: int):
        self.cx = cx
        self.h = h
        self.tgts = cx.gens_at(h)
        p = cx.p
        d_out = cx.dense_block(self.tgts, cx.gens_at(h + 1))
        d_in = cx.dense_block(cx.gens_at(h - 1), self.tgts)
        K = nullspace(d_out, p)
        B = d_in[:, independent_columns(d_in, p)]
        frame = B
        reps: list[int] = []
        for j in range(K.shape[1]):
            col = K[:, j]
            if solve(frame, col, p) is None:
                frame = np.concatenate([frame, col.reshape(-1, 1)], axis=1)
                reps.append(j)
        self.boundary_rank = B.shape[1]
        self.rep_matrix = (
            K[:, reps] if reps else _zeros(len(self.tgts), 0)
        )
        self._frame = frame
        self.dim = len(reps)

    def rep_vectors(self) -> list[Vec]:
        out: list[Vec] = []
        for j in range(self.dim):
            col = self.rep_matrix[:, j]
            out.append({g: int(c) for g, c in zip(self.tgts, col) if c})
        return out

    def coords(self, vec: Vec) -> np.ndarray:
        """Class of a cycle in the representative basis."""
        b = np.array([vec.get(g, 0) for g in self.tgts], dtype=np.int64)
        x = solve(self._frame, b, self.cx.p)
        assert x is not None, "vector is not a cycle in this degree"
        return x[self.boundary_rank :] % self.cx.p


def induced_matrix(
    f: Callable[[Vec], Vec], src: HomologySpace, dst: HomologySpace
) -> np.ndarray:
    """Matrix of the map a chain map induces on homology, rep basis to rep basis."""
    M = _zeros(dst.dim, src.dim)
    for j, rep in enumerate(src.rep_vectors()):
        M[:, j] = dst.coords(f(rep))
    return M
