"""Closed planar trivalent bipartite webs with rotation systems.

A web is stored as a combinatorial map: trivalent vertices carry a
counterclockwise cyclic order of their three incident edges, every edge is
directed, and at each vertex the edges are all incoming (a sink) or all
outgoing (a source).  Vertexless circle components ("loops") are edges with
no endpoints.  Faces are orbits of the usual next-edge permutation; each
connected vertexful component must satisfy V - E + F = 2, which is the
genus-zero (planarity) check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalError, ValidationError

SINK = "in"
SOURCE = "out"


@dataclass(frozen=True)
class Vert:
    pol: str  # SINK: all edges point in; SOURCE: all point out
    rot: tuple  # three edge ids, counterclockwise


class Web:
    """A closed oriented planar web.

    edges: edge id -> (tail vertex id | None, head vertex id | None).
    Loops have (None, None).  verts: vertex id -> Vert.
    """

    __slots__ = ("verts", "edges")

    def __init__(self, verts=None, edges=None):
        self.verts = dict(verts) if verts else {}
        self.edges = dict(edges) if edges else {}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def circle(cls, eid=0):
        return cls(edges={eid: (None, None)})

    @classmethod
    def theta(cls):
        """Standard theta: edges 0,1,2 from source vertex 1 to sink vertex 0.

        Edge 1 is the middle edge of the planar embedding; faces are the
        digons {0,1} and {1,2} and the outer digon {0,2}.
        """
        verts = {
            0: Vert(SINK, (0, 1, 2)),
            1: Vert(SOURCE, (0, 2, 1)),
        }
        edges = {0: (1, 0), 1: (1, 0), 2: (1, 0)}
        return cls(verts, edges)

    def copy(self):
        return Web(self.verts, self.edges)

    def is_empty(self):
        return not self.edges and not self.verts

    def loops(self):
        return sorted(e for e, (t, h) in self.edges.items() if t is None and h is None)

    def fresh_edge_id(self):
        return max(self.edges, default=-1) + 1

    def fresh_vert_id(self):
        return max(self.verts, default=-1) + 1

    # -- validation ------------------------------------------------------------

    def validate(self):
        for vid, v in self.verts.items():
            if v.pol not in (SINK, SOURCE):
                raise ValidationError(f"vertex {vid}: bad polarity {v.pol!r}")
            if len(v.rot) != 3 or len(set(v.rot)) != 3:
                raise ValidationError(f"vertex {vid}: rotation must list 3 distinct edges")
            for e in v.rot:
                if e not in self.edges:
                    raise ValidationError(f"vertex {vid}: unknown edge {e}")
        # Edge endpoints must match vertex rotations and polarities
        # (orientation condition: all incoming or all outgoing).
        tails = {}
        heads = {}
        for vid, v in self.verts.items():
            for e in v.rot:
                if v.pol == SOURCE:
                    if e in tails:
                        raise ValidationError(f"edge {e}: two tails")
                    tails[e] = vid
                else:
                    if e in heads:
                        raise ValidationError(f"edge {e}: two heads")
                    heads[e] = vid
        for e, (t, h) in self.edges.items():
            if t is None and h is None:
                if e in tails or e in heads:
                    raise ValidationError(f"loop edge {e} attached to a vertex")
                continue
            if tails.get(e) != t or heads.get(e) != h:
                raise ValidationError(f"edge {e}: endpoint record disagrees with rotations")
            if t is None or h is None:
                raise ValidationError(f"edge {e}: dangling end")
        for e in set(tails) | set(heads):
            if e not in self.edges:
                raise ValidationError(f"rotation references unknown edge {e}")
            if e not in tails or e not in heads:
                raise ValidationError(f"edge {e}: dangling end")
        self._check_planarity()
        return self

    def _check_planarity(self):
        for comp_verts, comp_edges in self.vertex_components():
            nfaces = len([f for f in self.faces_of(comp_edges) if f])
            v, e = len(comp_verts), len(comp_edges)
            if v - e + nfaces != 2:
                raise ValidationError(
                    f"component with vertices {sorted(comp_verts)} is not planar: "
                    f"V-E+F = {v}-{e}+{nfaces} != 2"
                )

    # -- components ------------------------------------------------------------

    def vertex_components(self):
        """Connected components that contain vertices: (vertex set, edge set)."""
        seen = set()
        out = []
        for start in sorted(self.verts):
            if start in seen:
                continue
            stack = [start]
            comp_v = set()
            comp_e = set()
            while stack:
                vid = stack.pop()
                if vid in comp_v:
                    continue
                comp_v.add(vid)
                for e in self.verts[vid].rot:
                    comp_e.add(e)
                    for w in self.edges[e]:
                        if w is not None and w not in comp_v:
                            stack.append(w)
            seen |= comp_v
            out.append((comp_v, comp_e))
        return out

    def component_count(self):
        return len(self.vertex_components()) + len(self.loops())

    # -- faces -------------------------------------------------------------

    def _rot_step(self, vid, eid, delta):
        rot = self.verts[vid].rot
        i = rot.index(eid)
        return rot[(i + delta) % 3]

    def face_next(self, directed):
        """Next directed edge along the face to the left of `directed`."""
        eid, sgn = directed
        t, h = self.edges[eid]
        v = h if sgn > 0 else t
        nxt = self._rot_step(v, eid, -1)  # clockwise neighbour at arrival
        # Leave v along nxt, directed away from v.
        return (nxt, 1 if self.verts[v].pol == SOURCE else -1)

    def faces_of(self, edge_subset=None):
        """Face boundary walks as tuples of directed edges (loops excluded)."""
        if edge_subset is None:
            edge_subset = [e for e, (t, h) in self.edges.items() if t is not None]
        todo = set()
        for e in edge_subset:
            if self.edges[e][0] is None:
                continue
            todo.add((e, 1))
            todo.add((e, -1))
        faces = []
        while todo:
            start = min(todo)
            walk = []
            cur = start
            while True:
                walk.append(cur)
                todo.discard(cur)
                cur = self.face_next(cur)
                if cur == start:
                    break
            faces.append(tuple(walk))
        return faces

    def faces(self):
        """Census: list of dicts with boundary, length and type.

        Loops are reported as circle components.  Every nonempty web must
        report a circle, digon or square; this is Kuperberg's lemma and a
        failure is an internal error.
        """
        out = []
        for e in self.loops():
            out.append({"type": "circle", "length": 0, "edges": (e,), "boundary": ()})
        for walk in self.faces_of():
            edges = tuple(sorted(e for e, _ in walk))
            kind = {2: "digon", 4: "square"}.get(len(walk), "other")
            out.append({"type": kind, "length": len(walk), "edges": edges, "boundary": walk})
        out.sort(key=lambda f: (f["length"], f["edges"]))
        if self.edges and not any(f["type"] in ("circle", "digon", "square") for f in out):
            raise InternalError("no circle, digon or square face in a nonempty web")
        return out

    # -- canonical form -------------------------------------------------------

    def canonical(self):
        """Canonical relabeling.

        Returns (key, vert_map, edge_map) where key is a hashable canonical
        encoding and the maps send original ids to canonical ids.  Two webs
        are isomorphic (as oriented planar webs, orientation-preserving on
        rotations) iff their keys are equal.
        """
        comps = self.vertex_components()
        results = []
        for comp_v, comp_e in comps:
            best = None
            for seed in sorted(comp_v):
                for rot_shift in range(3):
                    enc, vmap, emap = self._encode_from(seed, rot_shift)
                    cand = (enc, vmap, emap)
                    if best is None or cand[0] < best[0]:
                        best = cand
            results.append(best)
        results.sort(key=lambda r: r[0])
        vert_map = {}
        edge_map = {}
        key_parts = []
        for enc, vmap, emap in results:
            voff, eoff = len(vert_map), len(edge_map)
            for ov, nv in vmap.items():
                vert_map[ov] = nv + voff
            for oe, ne in emap.items():
                edge_map[oe] = ne + eoff
            key_parts.append(enc)
        nloops = len(self.loops())
        for e in self.loops():
            edge_map[e] = len(edge_map)
        key = (tuple(key_parts), nloops)
        return key, vert_map, edge_map

    def _encode_from(self, seed, rot_shift):
        vmap = {seed: 0}
        emap = {}
        order = [seed]
        enc = []
        i = 0
        while i < len(order):
            vid = order[i]
            v = self.verts[vid]
            rot = v.rot
            if vid == seed:
                rot = rot[rot_shift:] + rot[:rot_shift]
            else:
                # Start the rotation at the lowest already-numbered edge.
                known = [(emap[e], k) for k, e in enumerate(rot) if e in emap]
                k0 = min(known)[1]
                rot = rot[k0:] + rot[:k0]
            codes = []
            for e in rot:
                if e not in emap:
                    emap[e] = len(emap)
                codes.append(emap[e])
                t, h = self.edges[e]
                other = h if t == vid else t
                if other is not None and other not in vmap:
                    vmap[other] = len(vmap)
                    order.append(other)
            enc.append((v.pol, tuple(codes)))
            i += 1
        return tuple(enc), vmap, emap

    def canonical_key(self):
        return self.canonical()[0]

    def is_isomorphic(self, other):
        return self.canonical_key() == other.canonical_key()

    def relabeled(self, vert_map, edge_map):
        verts = {
            vert_map[vid]: Vert(v.pol, tuple(edge_map[e] for e in v.rot))
            for vid, v in self.verts.items()
        }
        edges = {}
        for e, (t, h) in self.edges.items():
            edges[edge_map[e]] = (
                vert_map[t] if t is not None else None,
                vert_map[h] if h is not None else None,
            )
        return Web(verts, edges)

    def canonical_web(self):
        key, vmap, emap = self.canonical()
        return self.relabeled(vmap, emap), vmap, emap

    def euler_characteristic(self):
        """chi of the web as a topological space (V - E over vertexful parts)."""
        nonloop = sum(1 for t, h in self.edges.values() if t is not None)
        return len(self.verts) - nonloop

    def __eq__(self, other):
        return isinstance(other, Web) and self.verts == other.verts and self.edges == other.edges

    def __repr__(self):
        return f"Web(V={len(self.verts)}, E={len(self.edges)}, loops={len(self.loops())})"
