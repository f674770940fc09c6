"""Planar link diagrams with explicit embedding data.

A diagram is a 4-valent planar map with over/under decorations, plus
crossing-free loops. Each crossing stores its four incident edge ends in
counterclockwise cyclic order; `over_diag` says which diagonal (slots 0/2
or slots 1/3) carries the over-strand. Edges are directed (tail to head)
and the base orientation of the link runs every edge tail to head;
alternative orientations are frozensets of reversed component indices.

Because a rotation system only pins the embedding of each connected piece,
the diagram also records placement data: for every edged piece, a dart
whose left side is the piece's own unbounded region, and a host dart
locating the piece inside the rest of the diagram (None = outer face).
Crossing-free loops carry a handedness bit and a host dart; loops never
contain any other part of the diagram.

A dart is (edge_id, toward): the direction walking toward ends[toward].
The face "left of" a dart is the face swept counterclockwise into the
walk direction; face traversal turns clockwise at each crossing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

Dart = tuple[int, int]
End = tuple[int, int]  # (crossing id, slot 0..3)


@dataclass
class Crossing:
    # slots[s] = (edge_id, end_idx); end_idx 1 means the edge's head is here
    slots: list[tuple[int, int]]
    over_diag: int  # 0: slots 0,2 carry the over-strand; 1: slots 1,3

    def copy(self) -> "Crossing":
        return Crossing(list(self.slots), self.over_diag)


@dataclass
class Edge:
    ends: tuple[End, End]  # (tail, head)


@dataclass
class Loop:
    ccw: bool  # base traversal runs counterclockwise
    host: Dart | None  # dart whose left face contains the loop; None = outer


@dataclass
class Component:
    """One link component: an edge cycle in traversal order, or a bare loop."""

    edges: tuple[int, ...] = ()
    loop: int | None = None


def smoothing_pairs(over_diag: int, r: int) -> list[tuple[int, int]]:
    """Slot pairs joined by smoothing r at a crossing, each ordered so the
    second slot is the counterclockwise successor of the first."""
    u = (over_diag + 1) % 4
    if r == 0:
        return [(u, (u + 1) % 4), ((u + 2) % 4, (u + 3) % 4)]
    return [((u + 3) % 4, u), ((u + 1) % 4, (u + 2) % 4)]


class LinkDiagram:
    def __init__(self) -> None:
        self.crossings: dict[int, Crossing] = {}
        self.edges: dict[int, Edge] = {}
        self.loops: dict[int, Loop] = {}
        # piece key (min crossing id) -> (own outer dart, host dart or None)
        self.piece_data: dict[int, tuple[Dart, Dart | None]] = {}
        self._next_cid = 0
        self._next_eid = 0
        self._next_lid = 0
        self._components: list[Component] | None = None

    # -- low-level construction ------------------------------------------

    def new_crossing(self, over_diag: int) -> int:
        cid = self._next_cid
        self._next_cid += 1
        self.crossings[cid] = Crossing([None] * 4, over_diag)  # type: ignore[list-item]
        self._components = None
        return cid

    def new_edge(self, tail: End, head: End) -> int:
        eid = self._next_eid
        self._next_eid += 1
        self.edges[eid] = Edge((tail, head))
        self.crossings[tail[0]].slots[tail[1]] = (eid, 0)
        self.crossings[head[0]].slots[head[1]] = (eid, 1)
        self._components = None
        return eid

    def new_loop(self, ccw: bool, host: Dart | None) -> int:
        lid = self._next_lid
        self._next_lid += 1
        self.loops[lid] = Loop(ccw, host)
        self._components = None
        return lid

    def copy(self) -> "LinkDiagram":
        D = LinkDiagram()
        D.crossings = {c: x.copy() for c, x in self.crossings.items()}
        D.edges = {e: Edge(x.ends) for e, x in self.edges.items()}
        D.loops = {l: Loop(x.ccw, x.host) for l, x in self.loops.items()}
        D.piece_data = dict(self.piece_data)
        D._next_cid = self._next_cid
        D._next_eid = self._next_eid
        D._next_lid = self._next_lid
        return D

    # -- basic queries ----------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def end_of_dart(self, dart: Dart) -> End:
        eid, toward = dart
        return self.edges[eid].ends[toward]

    def other_end(self, eid: int, end: End) -> End:
        a, b = self.edges[eid].ends
        return b if end == a else a

    def pieces(self) -> dict[int, set[int]]:
        """Connected edged pieces: piece key (min crossing id) -> crossing set."""
        parent: dict[int, int] = {c: c for c in self.crossings}

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.edges.values():
            ra, rb = find(e.ends[0][0]), find(e.ends[1][0])
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, set[int]] = {}
        for c in self.crossings:
            groups.setdefault(find(c), set()).add(c)
        return {min(g): g for g in groups.values()}

    def piece_of_crossing(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for key, grp in self.pieces().items():
            for c in grp:
                out[c] = key
        return out

    # -- components and orientations --------------------------------------

    def components(self) -> list[Component]:
        """Canonically ordered components: edged ones by min edge id, then loops."""
        if self._components is not None:
            return self._components
        seen: set[int] = set()
        comps: list[Component] = []
        for start in sorted(self.edges):
            if start in seen:
                continue
            cycle = []
            e = start
            while True:
                cycle.append(e)
                seen.add(e)
                c, s = self.edges[e].ends[1]
                e2, idx = self.crossings[c].slots[(s + 2) % 4]
                assert idx == 0, "edge directions are not coherent through a crossing"
                e = e2
                if e == start:
                    break
                assert e not in seen, "component traversal revisited an edge"
            comps.append(Component(edges=tuple(cycle)))
        comps.sort(key=lambda comp: comp.edges[0])
        for lid in sorted(self.loops):
            comps.append(Component(loop=lid))
        self._components = comps
        return comps

    def component_of_edge(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, comp in enumerate(self.components()):
            for e in comp.edges:
                out[e] = i
        return out

    def component_of_loop(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, comp in enumerate(self.components()):
            if comp.loop is not None:
                out[comp.loop] = i
        return out

    def incoming_slots(self, cid: int, flips: frozenset[int]) -> dict[int, int]:
        """Map slot -> 1 if the strand arrives at the crossing there under the
        orientation that reverses the components in `flips`."""
        comp = self.component_of_edge()
        out: dict[int, int] = {}
        for s, (eid, idx) in enumerate(self.crossings[cid].slots):
            arriving = (idx == 1) != (comp[eid] in flips)
            out[s] = 1 if arriving else 0
        return out

    def crossing_sign(self, cid: int, flips: frozenset[int] = frozenset()) -> int:
        x = self.crossings[cid]
        inc = self.incoming_slots(cid, flips)
        over = [s for s in (x.over_diag, x.over_diag + 2) if inc[s % 4]]
        under = [s for s in ((x.over_diag + 1) % 4, (x.over_diag + 3) % 4) if inc[s % 4]]
        assert len(over) == 1 and len(under) == 1, "bad incoming structure at crossing"
        return 1 if (over[0] - under[0]) % 4 == 3 else -1

    def signs(self, flips: frozenset[int] = frozenset()) -> dict[int, int]:
        return {c: self.crossing_sign(c, flips) for c in self.crossings}

    def writhe(self, flips: frozenset[int] = frozenset()) -> int:
        return sum(self.signs(flips).values())

    def n_minus(self, flips: frozenset[int] = frozenset()) -> int:
        return sum(1 for v in self.signs(flips).values() if v < 0)

    def n_plus(self, flips: frozenset[int] = frozenset()) -> int:
        return sum(1 for v in self.signs(flips).values() if v > 0)

    def linking_number(
        self,
        comps_a: set[int],
        comps_b: set[int],
        flips: frozenset[int] = frozenset(),
    ) -> int:
        """Total linking number between two disjoint sets of components."""
        assert not (comps_a & comps_b)
        comp = self.component_of_edge()
        total = 0
        for cid, x in self.crossings.items():
            over = comp[x.slots[x.over_diag][0]]
            under = comp[x.slots[(x.over_diag + 1) % 4][0]]
            pair = {over, under}
            if (over in comps_a and under in comps_b) or (
                over in comps_b and under in comps_a
            ):
                total += self.crossing_sign(cid, flips)
            del pair
        assert total % 2 == 0
        return total // 2

    def inter_component_crossings(self, comps_a: set[int]) -> int:
        """Crossings where one strand lies in comps_a and the other outside."""
        comp = self.component_of_edge()
        count = 0
        for x in self.crossings.values():
            over = comp[x.slots[x.over_diag][0]]
            under = comp[x.slots[(x.over_diag + 1) % 4][0]]
            if (over in comps_a) != (under in comps_a):
                count += 1
        return count

    def oriented_smoothings(self, flips: frozenset[int] = frozenset()) -> dict[int, int]:
        """Per crossing, the resolution compatible with the orientation
        (0 for positive crossings, 1 for negative)."""
        return {c: (0 if v > 0 else 1) for c, v in self.signs(flips).items()}

    # -- global moves ------------------------------------------------------

    def mirror(self) -> "LinkDiagram":
        """Switch every crossing (over to under), keeping the projection."""
        D = self.copy()
        for x in D.crossings.values():
            x.over_diag ^= 1
        D._components = None
        return D

    def reverse_all(self) -> "LinkDiagram":
        """Reverse the base orientation of every component (an involution).

        Every edge flips head for tail and every loop swaps handedness;
        placement darts flip with their edges, which keeps each one on the
        same geometric side. Crossing signs, and hence the writhe, are
        unchanged.
        """
        D = self.copy()
        for eid in list(D.edges):
            _flip_edge(D, eid)
        D.loops = {
            l: Loop(not x.ccw, _flip_dart(x.host)) for l, x in D.loops.items()
        }
        D.piece_data = {
            k: (_flip_dart(own), _flip_dart(host))
            for k, (own, host) in D.piece_data.items()
        }
        D._components = None
        return D

    def reverse_all(self) -> "LinkDiagram":
        """Reverse every component's direction."""
        D = LinkDiagram()
        D.crossings = {c: x.copy() for c, x in self.crossings.items()}
        D.edges = {e: Edge((x.ends[1], x.ends[0])) for e, x in self.edges.items()}
        for x in D.crossings.values():
            x.slots = [(e, 1 - idx) for (e, idx) in x.slots]
        D.loops = {l: Loop(not x.ccw, _flip_dart(x.host)) for l, x in self.loops.items()}
        D.piece_data = {
            k: (_flip_dart(own), _flip_dart(host))  # type: ignore[arg-type]
            for k, (own, host) in self.piece_data.items()
        }
        D._next_cid = self._next_cid
        D._next_eid = self._next_eid
        D._next_lid = self._next_lid
        return D

    def disjoint_union(self, other: "LinkDiagram") -> "LinkDiagram":
        """Place `other` beside this diagram in the shared outer face."""
        D = self.copy()
        dc, de, dl = D._next_cid, D._next_eid, D._next_lid

        def se(end: End) -> End:
            return (end[0] + dc, end[1])

        def sd(dart: Dart | None) -> Dart | None:
            return None if dart is None else (dart[0] + de, dart[1])

        for c, x in other.crossings.items():
            D.crossings[c + dc] = Crossing(
                [(e + de, idx) for (e, idx) in x.slots], x.over_diag
            )
        for e, x in other.edges.items():
            D.edges[e + de] = Edge((se(x.ends[0]), se(x.ends[1])))
        for l, x in other.loops.items():
            D.loops[l + dl] = Loop(x.ccw, sd(x.host))
        # at most one piece may claim the outer face, so the incoming
        # top-level pieces sit beside this diagram's own one
        anchor = None
        for k in sorted(self.piece_data):
            own, host = self.piece_data[k]
            if host is None:
                anchor = own
                break
        for k, (own, host) in other.piece_data.items():
            host2 = sd(host)
            if host2 is None:
                host2 = anchor
            D.piece_data[k + dc] = (sd(own), host2)  # type: ignore[arg-type]
        D._next_cid += other._next_cid
        D._next_eid += other._next_eid
        D._next_lid += other._next_lid
        D._components = None
        return D

    def with_free_loop(self, ccw: bool = False) -> "LinkDiagram":
        """Disjoint union with a crossing-free circle in the outer face."""
        D = self.copy()
        D.new_loop(ccw, None)
        return D

    def add_kink(self, eid: int, sign: int) -> "LinkDiagram":
        """Insert a one-crossing curl of the given sign on edge eid."""
        assert sign in (1, -1)
        D = self.copy()
        old = D.edges[eid]
        tail, head = old.ends
        # slot layout: 0 = strand in (head of first half), 1 = curl in,
        # 2 = curl out, 3 = strand out (tail of second half)
        cid = D.new_crossing(0 if sign == 1 else 1)
        del D.edges[eid]
        e1 = D.new_edge(tail, (cid, 0))
        e2 = D.new_edge((cid, 3), head)
        D.new_edge((cid, 2), (cid, 1))
        # old edge references elsewhere: remap darts that named eid
        remap = {eid: e1}
        D.loops = {
            l: Loop(x.ccw, _remap_dart(x.host, remap)) for l, x in D.loops.items()
        }
        D.piece_data = _rebuild_piece_data(D, self.piece_data, {eid: (e1, False)})
        D._components = None
        return D

    # -- one-crossing resolution ------------------------------------------

    def resolve_crossing(
        self, cid: int, smoothing: int
    ) -> tuple["LinkDiagram", dict[int, tuple[int, bool]]]:
        """Smooth one crossing; smoothing 0 joins each under-strand slot to its
        counterclockwise successor, smoothing 1 to its predecessor.

        Returns the new diagram and an edge map old id -> (new id, reversed).
        A smoothing pair whose two slots carry the same edge closes that edge
        into a crossing-free loop; the loop's handedness comes from the old
        embedding and its host from the surviving smoothing arc. When both
        pairs degenerate at once the two loops are placed side by side in the
        outer face (their mutual nesting is not recoverable, and no homology
        of the result depends on it). Edges that became loops are absent from
        the returned edge map. Placement darts sitting on a degenerating edge
        are refused.
        """
        from . import planar

        x = self.crossings[cid]
        pairs = smoothing_pairs(x.over_diag, smoothing)

        D = self.copy()
        edge_map: dict[int, tuple[int, bool]] = {
            e: (e, False) for e in self.edges if not self._touches(e, cid)
        }
        merged_arc_edges: list[int] = []
        live_pairs: list[tuple[int, int]] = []
        curls: list[tuple[tuple[int, int], int]] = []
        for s_a, s_b in pairs:
            # crossing slots stay live through merges (new_edge rewrites them)
            ea, ia = D.crossings[cid].slots[s_a]
            eb, ib = D.crossings[cid].slots[s_b]
            assert ea in D.edges and eb in D.edges
            if ea == eb:
                curls.append(((s_a, s_b), ea))
                continue
            new_eid = _merge_edges(D, ea, ia, eb, ib, edge_map)
            merged_arc_edges.append(new_eid)
            live_pairs.append((s_a, s_b))
        del D.crossings[cid]
        D._components = None

        # a chained merge can retire the first arc's id; chase to the live one
        live_arcs = []
        for e in merged_arc_edges:
            while e not in D.edges:
                e = edge_map[e][0]
            live_arcs.append(e)

        curl_edges = {e for _, e in curls}
        if curls:
            # placement darts may not survive on an edge that curls away
            dissolving = {
                root for root, cids in self.pieces().items() if cids == {cid}
            }
            for lp in self.loops.values():
                if lp.host is None:
                    continue
                h2 = _remap_dart_full(lp.host, _total(edge_map, lp.host[0]))
                if h2[0] in curl_edges:
                    raise NotImplementedError(
                        "a loop is hosted on an edge that closes into a loop"
                    )
            for root, (own, host) in self.piece_data.items():
                own2 = _remap_dart_full(own, _total(edge_map, own[0]))
                if own2[0] in curl_edges and root not in dissolving:
                    raise NotImplementedError(
                        "placement dart on an edge that closes into a loop"
                    )
                if host is None:
                    continue
                h2 = _remap_dart_full(host, _total(edge_map, host[0]))
                if h2[0] in curl_edges:
                    raise NotImplementedError(
                        "placement dart on an edge that closes into a loop"
                    )

        D.loops = {
            l: Loop(x2.ccw, _remap_dart_full(x2.host, edge_map))
            for l, x2 in D.loops.items()
        }

        if curls:
            emb = planar.Embedding(self)
            survivors = [e for e in live_arcs if e not in curl_edges]
            host_dart = (
                _arc_dart(
                    self, D, cid, live_pairs[0][1], survivors[0], edge_map
                )
                if survivors
                else None
            )
            for (s_a, _), e in curls:
                if e in self.edges:
                    # the smoothing arc seals the sector between the pair's
                    # slots inside the freed circle; that fixes handedness
                    sealed = emb.sector(cid, s_a)
                    ccw = emb.left_face((e, 1)) == sealed
                else:
                    # the curl ate a freshly merged arc; the whole circle
                    # came free and any base direction serves
                    ccw = True
                del D.edges[e]
                D.new_loop(ccw, host_dart)

        D.piece_data = _rebuild_piece_data(D, self.piece_data, edge_map)
        if len(live_pairs) == 2:
            _fix_split_placement(self, D, cid, pairs, live_arcs, edge_map)
        # the disoriented smoothing leaves clashing edge directions; re-aim
        # each circle coherently (edge_map's flags absorb the extra flips)
        _make_coherent(D, edge_map)
        if curl_edges:
            edge_map = {
                k: (e2, r) for k, (e2, r) in edge_map.items() if e2 in D.edges
            }
        return D, edge_map

    def _touches(self, eid: int, cid: int) -> bool:
        e = self.edges[eid]
        return e.ends[0][0] == cid or e.ends[1][0] == cid

    # -- validation --------------------------------------------------------

    def validate(self) -> None:
        from . import planar

        for c, x in self.crossings.items():
            assert len(x.slots) == 4 and x.over_diag in (0, 1)
            for s, slot in enumerate(x.slots):
                assert slot is not None, f"crossing {c} slot {s} unset"
                eid, idx = slot
                assert self.edges[eid].ends[idx] == (c, s), "slot/edge mismatch"
        for e, x in self.edges.items():
            for idx in (0, 1):
                c, s = x.ends[idx]
                assert self.crossings[c].slots[s] == (e, idx), "edge/slot mismatch"
        self.components()  # asserts coherent directions
        pieces = self.pieces()
        assert set(self.piece_data) == set(pieces), "placement data out of sync"
        emb = planar.Embedding(self)
        for key, grp in pieces.items():
            V = len(grp)
            piece_edges = [
                e
                for e, x in self.edges.items()
                if x.ends[0][0] in grp
            ]
            E = len(piece_edges)
            F = len({emb.face_of[d] for e in piece_edges for d in ((e, 0), (e, 1))})
            assert V - E + F == 2, f"piece {key} is not planar: V-E+F = {V - E + F}"
        for key, (own, host) in self.piece_data.items():
            assert own[0] in self.edges
            if host is not None:
                assert host[0] in self.edges
                pc = self.piece_of_crossing()
                assert pc[self.edges[host[0]].ends[0][0]] != key, (
                    "piece hosted on its own dart"
                )
        for x in self.loops.values():
            if x.host is not None:
                assert x.host[0] in self.edges


def _flip_dart(d: Dart | None) -> Dart | None:
    return None if d is None else (d[0], 1 - d[1])


def _remap_dart(d: Dart | None, remap: dict[int, int]) -> Dart | None:
    if d is None:
        return None
    return (remap.get(d[0], d[0]), d[1])


def _remap_dart_full(
    d: Dart | None, edge_map: dict[int, tuple[int, bool]]
) -> Dart | None:
    if d is None:
        return None
    eid, toward = d
    new_eid, flipped = edge_map[eid]
    return (new_eid, 1 - toward if flipped else toward)


def _merge_edges(
    D: LinkDiagram,
    ea: int,
    ia: int,
    eb: int,
    ib: int,
    edge_map: dict[int, tuple[int, bool]],
) -> int:
    """Join edge ea (at its end ia) to eb (at end ib); returns the new edge id.

    Keeps ea's direction: the new edge runs from ea's far end toward eb's
    far end. Records eb's reversal if its direction disagreed.
    """
    a_far = D.edges[ea].ends[1 - ia]
    b_far = D.edges[eb].ends[1 - ib]
    # direction bookkeeping: coherent if ea ends (head) where the join starts
    # and eb begins (tail) there, i.e. ia == 1 and ib == 0
    if ia == 1 and ib == 0:
        tail, head = a_far, b_far
        rev_a, rev_b = False, False
    elif ia == 0 and ib == 1:
        tail, head = b_far, a_far
        rev_a, rev_b = False, False
    elif ia == 1 and ib == 1:
        tail, head = a_far, b_far
        rev_a, rev_b = False, True
    else:
        tail, head = a_far, b_far
        rev_a, rev_b = True, False
    del D.edges[ea], D.edges[eb]
    new_eid = D.new_edge(tail, head)
    for old, (cur, flip) in list(edge_map.items()):
        if cur == ea:
            edge_map[old] = (new_eid, flip != rev_a)
        elif cur == eb:
            edge_map[old] = (new_eid, flip != rev_b)
    edge_map.setdefault(ea, (new_eid, rev_a))
    edge_map.setdefault(eb, (new_eid, rev_b))
    return new_eid


def _rebuild_piece_data(
    D: LinkDiagram,
    old_data: dict[int, tuple[Dart, Dart | None]],
    edge_map: dict[int, tuple[int, bool]],
) -> dict[int, tuple[Dart, Dart | None]]:
    """Carry placement darts over to D's recomputed pieces."""
    new_pieces = D.pieces()
    pc = D.piece_of_crossing()
    out: dict[int, tuple[Dart, Dart | None]] = {}
    for own, host in old_data.values():
        own2 = _remap_dart_full(own, _total(edge_map, own[0]))
        host2 = _remap_dart_full(host, _total(edge_map, host[0] if host else None))
        if own2 is None or own2[0] not in D.edges:
            continue
        key = pc[D.edges[own2[0]].ends[0][0]]
        out.setdefault(key, (own2, host2))
    for key in new_pieces:
        if key not in out:
            # a piece whose recorded dart vanished; give it a provisional
            # self-dart in the outer face (resolve-split fixes real cases)
            e0 = min(
                e for e, x in D.edges.items() if pc[x.ends[0][0]] == key
            )
            out[key] = ((e0, 0), None)
    return out


def _total(
    edge_map: dict[int, tuple[int, bool]], eid: int | None
) -> dict[int, tuple[int, bool]]:
    if eid is None:
        return edge_map
    if eid in edge_map:
        return edge_map
    return {**edge_map, eid: (eid, False)}


def _fix_split_placement(
    old: LinkDiagram,
    D: LinkDiagram,
    cid: int,
    pairs: list[tuple[int, int]],
    live_arcs: list[int],
    edge_map: dict[int, tuple[int, bool]],
) -> None:
    """After smoothing, if the crossing's piece split in two, host the piece
    that lost the recorded outer dart inside the face the smoothing opened."""
    pk_old = old.piece_of_crossing()[cid]
    own_old, host_old = old.piece_data[pk_old]
    pc = D.piece_of_crossing()
    e_a, e_b = live_arcs
    key_a = pc[D.edges[e_a].ends[0][0]]
    key_b = pc[D.edges[e_b].ends[0][0]]
    if key_a == key_b:
        return
    own_mapped = _remap_dart_full(own_old, _total(edge_map, own_old[0]))
    keeper = pc[D.edges[own_mapped[0]].ends[0][0]]
    if keeper == key_a:
        orphan, e_keep, e_orph = key_b, e_a, e_b
        exit_keep, exit_orph = pairs[0][1], pairs[1][1]
    else:
        orphan, e_keep, e_orph = key_a, e_b, e_a
        exit_keep, exit_orph = pairs[1][1], pairs[0][1]
    host_mapped = (
        _remap_dart_full(host_old, _total(edge_map, host_old[0]))
        if host_old
        else None
    )
    D.piece_data[keeper] = (own_mapped, host_mapped)
    # walking a smoothing arc from its pair's first slot toward the second
    # keeps the face the smoothing opened on the left; that face is the
    # orphan's outer region and, seen from the keeper arc, contains the orphan
    D.piece_data[orphan] = (
        _arc_dart(old, D, cid, exit_orph, e_orph, edge_map),
        _arc_dart(old, D, cid, exit_keep, e_keep, edge_map),
    )


def _make_coherent(D: LinkDiagram, edge_map: dict[int, tuple[int, bool]]) -> None:
    """Flip edges until every circle of the 4-valent graph runs one way.

    Keeps the direction of the lowest-numbered edge in each circle. Flips
    are folded into edge_map and into any placement darts on flipped edges
    (a dart keeps its geometric side when edge and toward flip together).
    """
    flipped: set[int] = set()
    visited: set[int] = set()
    for start in sorted(D.edges):
        if start in visited:
            continue
        e = start
        while True:
            visited.add(e)
            c, s = D.edges[e].ends[1]
            e2, idx = D.crossings[c].slots[(s + 2) % 4]
            if e2 == start:
                break  # re-entry is via start's remaining end, always the tail
            assert e2 not in visited, "strand walk revisited an edge"
            if idx != 0:
                _flip_edge(D, e2)
                flipped.add(e2)
            e = e2
    if not flipped:
        return
    for old, (cur, rev) in edge_map.items():
        if cur in flipped:
            edge_map[old] = (cur, not rev)
    D.loops = {
        l: Loop(x.ccw, _flip_if(x.host, flipped)) for l, x in D.loops.items()
    }
    D.piece_data = {
        k: (_flip_if(own, flipped), _flip_if(host, flipped))  # type: ignore[arg-type]
        for k, (own, host) in D.piece_data.items()
    }
    D._components = None


def _flip_if(d: Dart | None, flipped: set[int]) -> Dart | None:
    if d is None or d[0] not in flipped:
        return d
    return (d[0], 1 - d[1])


def _flip_edge(D: LinkDiagram, eid: int) -> None:
    t, h = D.edges[eid].ends
    D.edges[eid] = Edge((h, t))
    D.crossings[h[0]].slots[h[1]] = (eid, 0)
    D.crossings[t[0]].slots[t[1]] = (eid, 1)


def _arc_dart(
    old: LinkDiagram,
    D: LinkDiagram,
    cid: int,
    exit_slot: int,
    merged_eid: int,
    edge_map: dict[int, tuple[int, bool]],
) -> Dart:
    """Dart on a merged smoothing arc heading toward the strand that left the
    old crossing through `exit_slot` (the second slot of its pair)."""
    old_eid, old_idx = old.crossings[cid].slots[exit_slot]
    far = old.edges[old_eid].ends[1 - old_idx]
    assert edge_map[old_eid][0] == merged_eid
    for j in (0, 1):
        if far == D.edges[merged_eid].ends[j]:
            return (merged_eid, j)
    raise AssertionError("split arc lost its exit endpoint")
