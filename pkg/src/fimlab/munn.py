"""Munn trees: the canonical form for free inverse monoid elements.

Reading a word traces a path through the Cayley graph of the free group;
the traversed subgraph is a finite tree with a start vertex α (the
identity) and an end vertex ω, and two words represent the same element
exactly when they trace the same tree with the same ω.

Vertices are named by freely reduced words, stored as tuples of signed
generator indices (α is the empty tuple), so tree equality is plain set
equality.  Every edge is stored from its source in the positive generator
direction: ``(v, i)`` is the edge v →x_i→ v·x_i, which identifies the two
traversal directions of the same edge.
"""

from __future__ import annotations

from typing import NamedTuple

from .rank1 import evaluate_rank1
from .words import MarkedWord, RankError, Word, pretty

Vertex = tuple[int, ...]
Edge = tuple[Vertex, int]

ALPHA: Vertex = ()


class MunnTree(NamedTuple):
    vertices: frozenset[Vertex]
    edges: frozenset[Edge]
    omega: Vertex

    @property
    def is_idempotent(self) -> bool:
        return self.omega == ALPHA


def reduce_concat(a: Vertex, b: Vertex) -> Vertex:
    """Concatenate two freely reduced words, cancelling at the join."""
    i = len(a)
    j = 0
    nb = len(b)
    while i > 0 and j < nb and a[i - 1] == -b[j]:
        i -= 1
        j += 1
    return a[:i] + b[j:]


def munn_tree(w: Word, rank: int) -> MunnTree:
    """Trace the path of ``w`` from α, collecting every traversed edge."""
    vs = {ALPHA}
    es = set()
    cur: Vertex = ALPHA
    for s in w.signed:
        if abs(s) > rank:
            raise RankError(f"generator {abs(s)} beyond rank {rank}")
        if cur and cur[-1] == -s:
            nxt = cur[:-1]
        else:
            nxt = cur + (s,)
        es.add((cur, s) if s > 0 else (nxt, -s))
        vs.add(nxt)
        cur = nxt
    return MunnTree(frozenset(vs), frozenset(es), cur)


def multiply_munn(a: MunnTree, b: MunnTree) -> MunnTree:
    """Attach ``b`` at a.ω: translate b by a.ω and union the edge sets."""
    t = a.omega
    if not t:
        return MunnTree(a.vertices | b.vertices, a.edges | b.edges, b.omega)
    verts = set(a.vertices)
    verts.update(reduce_concat(t, v) for v in b.vertices)
    edges = set(a.edges)
    edges.update((reduce_concat(t, v), i) for v, i in b.edges)
    return MunnTree(frozenset(verts), frozenset(edges), reduce_concat(t, b.omega))


def equal_in_fim(u: Word, v: Word, rank: int) -> bool:
    """Do ``u`` and ``v`` represent the same element of the rank-k monoid?"""
    if rank == 1:
        return evaluate_rank1(u) == evaluate_rank1(v)
    return munn_tree(u, rank) == munn_tree(v, rank)


def is_idempotent(w: Word, rank: int) -> bool:
    if rank == 1:
        return evaluate_rank1(w).m == 0
    return munn_tree(w, rank).omega == ALPHA


def wp_member(mw: MarkedWord, rank: int) -> bool:
    """Is ``left # right`` in the word problem, i.e. left = right^inv?"""
    return equal_in_fim(mw.left, mw.right.inverse(), rank)


def iota_member(u: Word, v: Word, rank: int) -> bool:
    """Two-tape word problem: does the pair (u, v) satisfy u = v?"""
    return equal_in_fim(u, v, rank)


def validate_tree(t: MunnTree) -> MunnTree:
    """Check the tree invariants; used by tests, not by the hot paths."""
    if ALPHA not in t.vertices:
        raise ValueError("α missing from vertex set")
    if t.omega not in t.vertices:
        raise ValueError("ω not a vertex")
    adj: dict[Vertex, list[Vertex]] = {v: [] for v in t.vertices}
    for v, i in t.edges:
        w = reduce_concat(v, (i,))
        if v not in t.vertices or w not in t.vertices:
            raise ValueError(f"edge ({v}, {i}) leaves the vertex set")
        adj[v].append(w)
        adj[w].append(v)
    if len(t.edges) != len(t.vertices) - 1:
        raise ValueError("edge count does not match a tree")
    seen = {ALPHA}
    frontier = [ALPHA]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    if seen != t.vertices:
        raise ValueError("edge graph is not connected")
    return t


def munn_to_dot(t: MunnTree, rank: int | None = None) -> str:
    """Graphviz rendering: α double-circled, ω filled, edges labelled x_i."""
    def label(v: Vertex) -> str:
        return pretty(v, rank)

    def gen_name(i: int) -> str:
        return "x" if rank == 1 else chr(ord("a") + i - 1)

    lines = ["digraph munn {", "  rankdir=LR;", '  node [shape=circle, fontname="Helvetica"];']
    for v in sorted(t.vertices):
        attrs = []
        if v == ALPHA:
            attrs.append("shape=doublecircle")
        if v == t.omega:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightgray")
        attr_str = (" [" + ", ".join(attrs) + "]") if attrs else ""
        lines.append(f'  "{label(v)}"{attr_str};')
    for v, i in sorted(t.edges):
        w = reduce_concat(v, (i,))
        lines.append(f'  "{label(v)}" -> "{label(w)}" [label="{gen_name(i)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
