"""Crossing-by-crossing computation of link homology at large sizes.

The state-cube complex doubles with every crossing, which caps the naive
approach near a dozen crossings.  This module instead sweeps the diagram one
crossing at a time, maintaining a complex whose generators are crossingless
tangles in the swept region: perfect matchings of the currently open edges,
each carrying raw homological and quantum offsets.  Differential entries are
formal linear combinations of decorated surfaces between two matchings.

Three moves keep the intermediate complexes small:

* closed circles produced by an attachment are split off into a pair of
  summands immediately (the two-dimensional algebra of the theory turns a
  circle into two shifted copies of the same matching);
* every surface component is reduced to genus zero on the spot, trading
  handles for algebra labels;
* differential entries that are invertible scalars times an identity
  surface, with no quantum jump, are cancelled by Gaussian elimination as
  soon as they appear.

The width of the sweep (the largest number of open edges, over the chosen
crossing order) governs the cost, not the crossing number.

Distinguished cycles can be carried through the sweep.  Such a cycle is
stored per generator as a surface from a reference tangle (the partially
assembled resolution picked out by an orientation) into that generator;
whenever a reference circle closes, it is capped with the canonical label
of the corresponding circle of the fully resolved diagram, and every
elimination projects the coordinates exactly as the matrix-level reduction
in chain_algebra does.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .chain_algebra import ScalarComplex, Vec, inv_mod
from .diagrams import LinkDiagram, smoothing_pairs
from .frobenius import Label, Theory
from .planar import ResolvedState

# A boundary arc of a surface: ('s'|'t', key) on the source or target side.
# key is a frozenset of two open-edge ids for a strand still attached to the
# boundary, or a ('circ', cid, k) tuple marking a closed circle that has not
# been capped yet.
Arc = tuple
# A connected surface component: (frozenset of arcs, algebra label, Euler
# characteristic).  Stored parts are genus-normalized.
Part = tuple
Partition = frozenset
# Formal sum of decorated partitions: {partition: coefficient mod p}.
Morphism = dict


def _is_strand(key) -> bool:
    return isinstance(key, frozenset)


# ---------------------------------------------------------------------------
# part and partition normalization


def _part_boundary_circles(arcs: set) -> int:
    """Number of boundary circles of a part.

    Strand arcs pair up into closed cycles (every point carries exactly one
    source arc and one target arc, joined along the vertical line over the
    point), and each uncapped circle marker is one more boundary circle.
    """
    beta = 0
    src: dict = {}
    tgt: dict = {}
    for side, key in arcs:
        if not _is_strand(key):
            beta += 1
            continue
        a, b = tuple(key)
        table = src if side == "s" else tgt
        for pt in (a, b):
            assert pt not in table, "point with two arcs on one side"
        table[a] = b
        table[b] = a
    assert set(src) == set(tgt), "part boundary is not saturated"
    seen: set = set()
    for start in src:
        if start in seen:
            continue
        beta += 1
        pt = start
        while True:
            seen.add(pt)
            mid = src[pt]
            seen.add(mid)
            pt = tgt[mid]
            if pt == start:
                break
    return beta


def _rebuild(parts: list, coeff: int, th: Theory):
    """Genus-normalize working parts and fold closed ones into the scalar.

    Returns (partition, coeff); partition is None when the result is zero.
    """
    p = th.p
    coeff %= p
    if coeff == 0:
        return None, 0
    frozen = []
    for arcs, label, chi in parts:
        if label == (0, 0):
            return None, 0
        beta = _part_boundary_circles(arcs)
        slack = 2 - chi - beta
        assert slack >= 0 and slack % 2 == 0, "part has impossible topology"
        if slack:
            label = th.mul(label, th.label_pow(th.handle(), slack // 2))
            if label == (0, 0):
                return None, 0
        if not arcs:
            coeff = coeff * th.counit(label) % p
            if coeff == 0:
                return None, 0
            continue
        frozen.append((frozenset(arcs), label, 2 - beta))
    return frozenset(frozen), coeff


# ---------------------------------------------------------------------------
# morphism arithmetic


def mor_add(m1: Morphism, m2: Morphism, p: int) -> Morphism:
    out = dict(m1)
    for pt, c in m2.items():
        c2 = (out.get(pt, 0) + c) % p
        if c2:
            out[pt] = c2
        else:
            out.pop(pt, None)
    return out


def mor_scale(m: Morphism, c: int, p: int) -> Morphism:
    c %= p
    if c == 0:
        return {}
    return {pt: (k * c) % p for pt, k in m.items()}


def _glue(pt_e: Partition, pt_t: Partition, scalar: int, th: Theory):
    """Glue the target boundary of one partition to the source of another."""
    parts = [(set(arcs), label, chi) for arcs, label, chi in pt_e]
    off = len(parts)
    parts += [(set(arcs), label, chi) for arcs, label, chi in pt_t]

    mid_e: dict = {}
    mid_t: dict = {}
    for i, (arcs, _, _) in enumerate(pt_e):
        for side, key in arcs:
            if side == "t":
                assert _is_strand(key), "uncapped circle at a composition"
                mid_e[key] = i
    for j, (arcs, _, _) in enumerate(pt_t):
        for side, key in arcs:
            if side == "s":
                assert _is_strand(key), "uncapped circle at a composition"
                mid_t[key] = off + j
    assert set(mid_e) == set(mid_t), "composition boundaries do not match"

    parent = list(range(len(parts)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for key in mid_e:
        ra, rb = find(mid_e[key]), find(mid_t[key])
        if ra != rb:
            parent[ra] = rb

    mid_count: dict = {}
    for key in mid_e:
        r = find(mid_e[key])
        mid_count[r] = mid_count.get(r, 0) + 1

    classes: dict = {}
    for i in range(len(parts)):
        classes.setdefault(find(i), []).append(i)

    working = []
    for root, members in classes.items():
        arcs: set = set()
        label: Label = (1, 0)
        chi = 0
        for i in members:
            a, lab, c = parts[i]
            keep_side = "s" if i < off else "t"
            arcs |= {arc for arc in a if arc[0] == keep_side}
            label = th.mul(label, lab)
            chi += c
        chi -= mid_count.get(root, 0)
        working.append((arcs, label, chi))
    return _rebuild(working, scalar, th)


def compose(later: Morphism, earlier: Morphism, th: Theory) -> Morphism:
    """later after earlier; the middle objects must agree."""
    p = th.p
    out: Morphism = {}
    for pt1, c1 in earlier.items():
        for pt2, c2 in later.items():
            pt, c = _glue(pt1, pt2, c1 * c2 % p, th)
            if pt is None or c == 0:
                continue
            tot = (out.get(pt, 0) + c) % p
            if tot:
                out[pt] = tot
            else:
                out.pop(pt, None)
    return out


def mor_cap(m: Morphism, arc: Arc, cap_label: Label, th: Theory) -> Morphism:
    """Cap one boundary arc with a labeled disk."""
    p = th.p
    out: Morphism = {}
    for partition, coeff in m.items():
        working = []
        hit = False
        for arcs, label, chi in partition:
            if arc in arcs:
                hit = True
                working.append((set(arcs) - {arc}, th.mul(label, cap_label), chi + 1))
            else:
                working.append((set(arcs), label, chi))
        assert hit, "capped arc is not on the boundary"
        pt, c = _rebuild(working, coeff, th)
        if pt is None or c == 0:
            continue
        tot = (out.get(pt, 0) + c) % p
        if tot:
            out[pt] = tot
        else:
            out.pop(pt, None)
    return out


# ---------------------------------------------------------------------------
# attaching a crossing: rewiring ops and surface pieces


def _op_consumed(op) -> frozenset:
    return op[-1]


def _rewire(matching: dict, arcs: Sequence[tuple], cid: int):
    """Apply the two smoothing arcs of one crossing to an open matching.

    matching maps every open point to its partner (both directions).
    Returns (new matching, per-arc ops, markers of circles that closed).
    """
    M = dict(matching)
    ops = []
    circles = []
    for k, (ea, eb) in enumerate(arcs):
        marker = ("circ", cid, k)
        if ea == eb:
            # an edge with both ends at this crossing, closed into a circle
            ops.append(("selfcircle", marker, ea, frozenset()))
            circles.append(marker)
            continue
        a_open = ea in M
        b_open = eb in M
        if a_open and b_open:
            if M[ea] == eb:
                del M[ea]
                del M[eb]
                pair = frozenset((ea, eb))
                ops.append(("close", pair, marker, pair))
                circles.append(marker)
            else:
                pa = M.pop(ea)
                pb = M.pop(eb)
                del M[pa]
                del M[pb]
                assert pa != pb
                M[pa] = pb
                M[pb] = pa
                ops.append(
                    (
                        "merge",
                        frozenset((ea, pa)),
                        frozenset((eb, pb)),
                        frozenset((pa, pb)),
                        frozenset((ea, eb)),
                    )
                )
        elif a_open or b_open:
            eo, en = (ea, eb) if a_open else (eb, ea)
            po = M.pop(eo)
            del M[po]
            assert en not in M
            M[po] = en
            M[en] = po
            ops.append(
                ("extend", frozenset((eo, po)), frozenset((po, en)), frozenset((eo,)))
            )
        else:
            M[ea] = eb
            M[eb] = ea
            ops.append(("new", frozenset((ea, eb)), frozenset()))
    return M, ops, circles


@dataclass
class _Piece:
    """One surface piece of an attachment, glued along vertical lines."""

    chi: int
    glue_points: frozenset
    ops_s: list
    ops_t: list


def _lift_pieces(ops_src: list, ops_tgt: list) -> list:
    """Cylinder pieces lifting a morphism through one attachment.

    Source and target objects receive the same smoothing arcs, so the ops
    lists align arc by arc and consume the same points.
    """
    pieces = []
    for os_, ot in zip(ops_src, ops_tgt):
        cons = _op_consumed(os_)
        assert cons == _op_consumed(ot), "lift sides consume different points"
        chi = 0 if os_[0] == "selfcircle" else 1
        pieces.append(_Piece(chi, cons, [os_], [ot]))
    return pieces


def _apply_ops(arcs: set, side: str, ops: Iterable) -> None:
    for op in ops:
        kind = op[0]
        if kind == "new":
            arcs.add((side, op[1]))
        elif kind == "extend":
            arcs.remove((side, op[1]))
            arcs.add((side, op[2]))
        elif kind == "merge":
            arcs.remove((side, op[1]))
            arcs.remove((side, op[2]))
            arcs.add((side, op[3]))
        elif kind == "close":
            arcs.remove((side, op[1]))
            arcs.add((side, op[2]))
        elif kind == "selfcircle":
            arcs.add((side, op[1]))
        else:  # pragma: no cover
            raise AssertionError(kind)


def _apply_piece(parts: list, piece: _Piece, th: Theory) -> list:
    """Glue one piece into a working partition (no normalization)."""
    touched = []
    untouched = []
    for entry in parts:
        arcs = entry[0]
        if any(
            _is_strand(key) and (key & piece.glue_points) for _, key in arcs
        ):
            touched.append(entry)
        else:
            untouched.append(entry)
    if piece.glue_points:
        assert touched, "gluing points with no incident arcs"
    arcs: set = set()
    label: Label = (1, 0)
    chi = piece.chi - len(piece.glue_points)
    for a, lab, c in touched:
        arcs |= a
        label = th.mul(label, lab)
        chi += c
    _apply_ops(arcs, "s", piece.ops_s)
    _apply_ops(arcs, "t", piece.ops_t)
    untouched.append((arcs, label, chi))
    return untouched


def _lift_morphism(m: Morphism, pieces: list, th: Theory) -> Morphism:
    out: Morphism = {}
    p = th.p
    for partition, coeff in m.items():
        working = [(set(arcs), label, chi) for arcs, label, chi in partition]
        for piece in pieces:
            working = _apply_piece(working, piece, th)
        pt, c = _rebuild(working, coeff, th)
        if pt is None or c == 0:
            continue
        tot = (out.get(pt, 0) + c) % p
        if tot:
            out[pt] = tot
        else:
            out.pop(pt, None)
    return out


def _identity_parts(matching: dict) -> list:
    pairs = {frozenset((a, b)) for a, b in matching.items()}
    return [({("s", P), ("t", P)}, (1, 0), 1) for P in pairs]


# ---------------------------------------------------------------------------
# sweep order


def scan_order(
    D: LinkDiagram, exclude: frozenset = frozenset()
) -> tuple[list, int]:
    """Greedy crossing order keeping the open boundary narrow.

    Returns (order, girth): girth is the largest number of simultaneously
    open edges along the order.  Crossings in exclude are left out.
    """
    remaining = set(D.crossings) - set(exclude)
    scanned: set = set()
    open_edges: set = set()
    order: list = []
    girth = 0

    def width_after(cid: int) -> int:
        n = len(open_edges)
        cr = D.crossings[cid]
        for e in {cr.slots[s][0] for s in range(4)}:
            if e in open_edges:
                n -= 1
            else:
                ends_unscanned = sum(
                    1
                    for c2, _ in D.edges[e].ends
                    if c2 not in scanned and c2 != cid
                )
                if ends_unscanned == 1:
                    n += 1
        return n

    while remaining:
        adjacent = [
            cid
            for cid in remaining
            if any(D.crossings[cid].slots[s][0] in open_edges for s in range(4))
        ]
        pool = adjacent if adjacent else sorted(remaining)
        best = min(pool, key=lambda cid: (width_after(cid), cid))
        scanned.add(best)
        remaining.discard(best)
        order.append(best)
        cr = D.crossings[best]
        for e in {cr.slots[s][0] for s in range(4)}:
            ends_unscanned = sum(1 for c2, _ in D.edges[e].ends if c2 not in scanned)
            if ends_unscanned == 1:
                open_edges.add(e)
            else:
                open_edges.discard(e)
        girth = max(girth, len(open_edges))
    return order, girth


# ---------------------------------------------------------------------------
# the sweep itself


@dataclass
class _Gen:
    matching: dict
    rawh: int
    rawq: int
    circles: tuple


@dataclass
class _Track:
    """A distinguished cycle carried through the sweep for one orientation."""

    flips: frozenset
    ro: dict
    labels_by_eid: dict
    loop_labels: dict
    R: dict = field(default_factory=dict)
    strand_min: dict = field(default_factory=dict)
    vec: dict = field(default_factory=dict)


@dataclass
class ScanResult:
    complex: ScalarComplex
    cycles: dict
    girth: int
    order: tuple
    split: dict | None = None


class _Scan:
    def __init__(self, D: LinkDiagram, theory: Theory, tracks: list):
        self.D = D
        self.th = theory
        self.p = theory.p
        self.gens: dict = {}
        self.d: dict = {}
        self.rin: dict = {}
        self.side: dict = {}
        self.tracks = tracks
        self.open: set = set()
        self.scanned: set = set()
        self.girth = 0
        self._serial = 0
        g0 = self._new_gen({}, 0, 0, ())
        unit: Morphism = {frozenset(): 1}
        for tr in tracks:
            tr.vec = {g0: dict(unit)}

    def _new_gen(self, matching: dict, rawh: int, rawq: int, circles: tuple) -> int:
        gid = self._serial
        self._serial += 1
        self.gens[gid] = _Gen(matching, rawh, rawq, circles)
        return gid

    def _set_entry(self, x: int, y: int, m: Morphism) -> None:
        if not m:
            return
        self.d.setdefault(x, {})[y] = m
        self.rin.setdefault(y, set()).add(x)

    def _del_entry(self, x: int, y: int) -> None:
        row = self.d.get(x)
        if row and y in row:
            del row[y]
            if not row:
                del self.d[x]
        col = self.rin.get(y)
        if col:
            col.discard(x)
            if not col:
                del self.rin[y]

    # -- attaching one crossing

    def attach(self, cid: int, eliminate: bool = True, record_side: bool = False):
        D, th = self.D, self.th
        cr = D.crossings[cid]
        slot_edges = [cr.slots[s][0] for s in range(4)]
        arcs_by_eps = {
            eps: [
                (slot_edges[sa], slot_edges[sb])
                for sa, sb in smoothing_pairs(cr.over_diag, eps)
            ]
            for eps in (0, 1)
        }
        prior_open = frozenset(self.open)

        info = {
            gid: {
                eps: _rewire(g.matching, arcs_by_eps[eps], cid) for eps in (0, 1)
            }
            for gid, g in self.gens.items()
        }

        newid = {}
        old_gens = self.gens
        self.gens = {}
        for gid in sorted(old_gens):
            g = old_gens[gid]
            for eps in (0, 1):
                M2, _, circ = info[gid][eps]
                ng = self._new_gen(M2, g.rawh + eps, g.rawq, tuple(circ))
                newid[(gid, eps)] = ng
                if record_side:
                    self.side[ng] = eps

        old_d = self.d
        self.d = {}
        self.rin = {}
        for x, row in old_d.items():
            for y, m in row.items():
                for eps in (0, 1):
                    pieces = _lift_pieces(info[x][eps][1], info[y][eps][1])
                    m2 = _lift_morphism(m, pieces, th)
                    self._set_entry(newid[(x, eps)], newid[(y, eps)], m2)

        self_edges = {e for e in set(slot_edges) if slot_edges.count(e) == 2}
        glue = frozenset(e for e in set(slot_edges) if e in prior_open)
        for gid in sorted(old_gens):
            g = old_gens[gid]
            piece = _Piece(1 - len(self_edges), glue, info[gid][0][1], info[gid][1][1])
            working = _apply_piece(_identity_parts(g.matching), piece, th)
            sign = 1 if g.rawh % 2 == 0 else self.p - 1
            pt, c = _rebuild(working, sign, th)
            if pt is not None and c:
                self._set_entry(newid[(gid, 0)], newid[(gid, 1)], {pt: c})

        for tr in self.tracks:
            eps = tr.ro[cid]
            newR, rops, _ = _rewire(tr.R, arcs_by_eps[eps], cid)
            caps = []
            for op in rops:
                kind = op[0]
                if kind == "new":
                    tr.strand_min[op[1]] = min(op[1])
                elif kind == "extend":
                    tr.strand_min[op[2]] = min(tr.strand_min.pop(op[1]), *op[2])
                elif kind == "merge":
                    tr.strand_min[op[3]] = min(
                        tr.strand_min.pop(op[1]), tr.strand_min.pop(op[2])
                    )
                elif kind == "close":
                    eid = tr.strand_min.pop(op[1])
                    caps.append((op[2], tr.labels_by_eid[eid]))
                elif kind == "selfcircle":
                    caps.append((op[1], tr.labels_by_eid[op[2]]))
            newvec = {}
            for gid, v in tr.vec.items():
                pieces = _lift_pieces(rops, info[gid][eps][1])
                v2 = _lift_morphism(v, pieces, th)
                for marker, lab in caps:
                    v2 = mor_cap(v2, ("s", marker), lab, th)
                if v2:
                    newvec[newid[(gid, eps)]] = v2
            tr.R = newR
            tr.vec = newvec

        self.scanned.add(cid)
        for e in set(slot_edges):
            ends_unscanned = sum(
                1 for c2, _ in D.edges[e].ends if c2 not in self.scanned
            )
            if ends_unscanned == 1:
                self.open.add(e)
            else:
                self.open.discard(e)
        self.girth = max(self.girth, len(self.open))

        self._deloop_all()
        if eliminate:
            self._eliminate_all()

    # -- delooping

    def _deloop_all(self) -> None:
        queue = [gid for gid, g in self.gens.items() if g.circles]
        while queue:
            gid = queue.pop()
            g = self.gens.get(gid)
            if g is None or not g.circles:
                continue
            marker, rest = g.circles[0], g.circles[1:]
            th, p = self.th, self.p
            gp = self._new_gen(g.matching, g.rawh, g.rawq + 1, rest)
            gm = self._new_gen(g.matching, g.rawh, g.rawq - 1, rest)
            if gid in self.side:
                eps = self.side.pop(gid)
                self.side[gp] = eps
                self.side[gm] = eps
            pi_plus = ((-th.h) % p, 1)
            pi_minus = (1, 0)
            for w in sorted(self.rin.get(gid, set())):
                m = self.d[w][gid]
                self._del_entry(w, gid)
                self._set_entry(w, gp, mor_cap(m, ("t", marker), pi_plus, th))
                self._set_entry(w, gm, mor_cap(m, ("t", marker), pi_minus, th))
            for z, m in list(self.d.get(gid, {}).items()):
                self._del_entry(gid, z)
                self._set_entry(gp, z, mor_cap(m, ("s", marker), (1, 0), th))
                self._set_entry(gm, z, mor_cap(m, ("s", marker), (0, 1), th))
            for tr in self.tracks:
                if gid in tr.vec:
                    v = tr.vec.pop(gid)
                    vp = mor_cap(v, ("t", marker), pi_plus, th)
                    vm = mor_cap(v, ("t", marker), pi_minus, th)
                    if vp:
                        tr.vec[gp] = vp
                    if vm:
                        tr.vec[gm] = vm
            del self.gens[gid]
            if rest:
                queue.append(gp)
                queue.append(gm)

    # -- elimination

    def _iso_scalar(self, x: int, y: int, m: Morphism):
        if self.gens[y].rawq != self.gens[x].rawq - 1:
            return None
        if len(m) != 1:
            return None
        (pt, c), = m.items()
        scalar = c
        for arcs, label, chi in pt:
            if label[1] != 0 or label[0] == 0:
                return None
            if len(arcs) != 2:
                return None
            (sa, ka), (sb, kb) = sorted(arcs)
            if {sa, sb} != {"s", "t"} or ka != kb or not _is_strand(ka):
                return None
            scalar = scalar * label[0] % self.p
        return scalar % self.p or None

    def _eliminate(self, x: int, y: int, u: int) -> None:
        th, p = self.th, self.p
        scale = (-inv_mod(u, p)) % p
        ins = [
            (z, self.d[z][y]) for z in sorted(self.rin.get(y, set())) if z != x
        ]
        outs = [(w, m) for w, m in sorted(self.d.get(x, {}).items()) if w != y]
        for z, bz in ins:
            for w, cw in outs:
                corr = mor_scale(compose(cw, bz, th), scale, p)
                prev = self.d.get(z, {}).get(w, {})
                tot = mor_add(prev, corr, p)
                self._del_entry(z, w)
                self._set_entry(z, w, tot)
        for tr in self.tracks:
            vy = tr.vec.get(y)
            if vy:
                for w, cw in outs:
                    corr = mor_scale(compose(cw, vy, th), scale, p)
                    tot = mor_add(tr.vec.get(w, {}), corr, p)
                    if tot:
                        tr.vec[w] = tot
                    else:
                        tr.vec.pop(w, None)
            tr.vec.pop(x, None)
            tr.vec.pop(y, None)
        for z, _ in ins:
            self._del_entry(z, y)
        for w, _ in outs:
            self._del_entry(x, w)
        self._del_entry(x, y)
        for w in list(self.rin.get(x, set())):
            self._del_entry(w, x)
        for z in list(self.d.get(y, {})):
            self._del_entry(y, z)
        del self.gens[x]
        del self.gens[y]
        self.side.pop(x, None)
        self.side.pop(y, None)

    def _eliminate_all(self) -> None:
        again = True
        while again:
            again = False
            for x in sorted(self.d):
                row = self.d.get(x)
                if not row:
                    continue
                for y in sorted(row):
                    u = self._iso_scalar(x, y, row[y])
                    if u is not None:
                        self._eliminate(x, y, u)
                        again = True
                        break
                if again:
                    break

    # -- export

    def finish(self, flips: frozenset) -> ScanResult:
        D, th, p = self.D, self.th, self.p
        for g in self.gens.values():
            assert not g.matching and not g.circles
        nplus = D.n_plus(flips)
        nminus = D.n_minus(flips)
        loops = sorted(D.loops)
        signs = list(product((1, -1), repeat=len(loops)))

        cx = ScalarComplex(p, q_exact=th.q_exact)
        ids = {}
        for gid in sorted(self.gens):
            g = self.gens[gid]
            for sigma in signs:
                h = g.rawh - nminus
                q = g.rawq + sum(sigma) + g.rawh + nplus - 2 * nminus
                ids[(gid, sigma)] = cx.add_generator(h, q)
        for x, row in self.d.items():
            for y, m in row.items():
                if not m:
                    continue
                assert set(m) == {frozenset()}, "open surface at export"
                c = m[frozenset()]
                for sigma in signs:
                    cx.add_entry(ids[(x, sigma)], ids[(y, sigma)], c)

        cycles = {}
        for tr in self.tracks:
            v: Vec = {}
            for gid, m in tr.vec.items():
                assert set(m) == {frozenset()}
                base = m[frozenset()]
                for sigma in signs:
                    c = base
                    for lid, s in zip(loops, sigma):
                        lab = tr.loop_labels[lid]
                        c = c * (lab[0] if s == 1 else lab[1]) % p
                    if c:
                        v[ids[(gid, sigma)]] = c
            cycles[tr.flips] = v

        split = None
        if self.side:
            split = {"zero": [], "one": []}
            for gid in sorted(self.gens):
                if gid not in self.side:
                    continue
                key = "zero" if self.side[gid] == 0 else "one"
                for sigma in signs:
                    split[key].append(ids[(gid, sigma)])
        return ScanResult(cx, cycles, self.girth, (), split)


def _make_track(D: LinkDiagram, th: Theory, flips: frozenset) -> _Track:
    ro = {
        cid: 0 if D.crossing_sign(cid, flips) > 0 else 1 for cid in D.crossings
    }
    st = ResolvedState(D, ro)
    labels_by_eid: dict = {}
    loop_labels: dict = {}
    for idx, circ in enumerate(st.circles):
        lab = th.canonical_label(st.parity(idx, flips))
        if circ.loop is not None:
            loop_labels[circ.loop] = lab
        else:
            for eid in circ.edges:
                labels_by_eid[eid] = lab
    return _Track(flips, ro, labels_by_eid, loop_labels)


def scan_complex(
    D: LinkDiagram,
    theory: Theory,
    flips: frozenset = frozenset(),
    orientations: Sequence[frozenset] | None = None,
    order: Sequence[int] | None = None,
    split_at: int | None = None,
) -> ScanResult:
    """Sweep the diagram and return its reduced complex.

    flips fixes the orientation used for the grading shifts.  orientations
    lists the orientations whose distinguished cycles should be transported;
    the result maps each to a vector in the returned complex.  split_at
    names a crossing to attach last without elimination, so the generators
    coming from its two smoothings stay visible (reported in .split).
    """
    tracks = [_make_track(D, theory, o) for o in (orientations or [])]
    if order is None:
        if split_at is None:
            order, _ = scan_order(D)
        else:
            partial, _ = scan_order(D, exclude=frozenset((split_at,)))
            order = partial + [split_at]
    order = list(order)
    assert sorted(order) == sorted(D.crossings), "order must cover every crossing"
    sc = _Scan(D, theory, tracks)
    for cid in order:
        last = split_at is not None and cid == split_at
        sc.attach(cid, eliminate=not last, record_side=last)
    out = sc.finish(flips)
    out.order = tuple(order)
    return out


def homology_table(D: LinkDiagram, theory: Theory, flips: frozenset = frozenset()):
    """Homology ranks via the sweep; same shape as the cube-based table."""
    return scan_complex(D, theory, flips).complex.homology_dims()
