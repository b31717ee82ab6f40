"""Exchange-graph exploration up to relabeling of exchangeable indices.

Seeds that differ only by a simultaneous permutation of exchangeable
indices (applied to variables, to rows and columns of the exchange
matrix, and to the frame) are the same vertex of the exchange graph.
The canonical form sorts the exchangeable indices by the serialized
form of their variables, which is well defined because variables are
expressed in initial-cluster coordinates and those never move.  Frozen
indices keep their positions: frozen variables are shared by the whole
mutation class, so permuting them would only manufacture spurious
distinctions.

Exploration is breadth-first with ascending mutation directions, so
node numbering, edge sets, and cap behavior are reproducible run to
run.  Stored seeds are the canonical representatives; to replay a path
of recorded edge directions, canonicalize after every step.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from hashlib import blake2b
from typing import Mapping, Sequence

from .errors import NotDivisibleError
from .mutation import mutate
from .seeds import (
    ClassicalSeed,
    ExchangeMatrix,
    QuantumSeed,
    dump_seed,
)
from .torus import SkewMatrix


def _json_bytes(data) -> bytes:
    return json.dumps(data, sort_keys=True, separators=(",", ":")).encode()


def _var_key(v) -> bytes:
    return _json_bytes(v.to_json())


def canonical_form(seed):
    """Canonical representative of a seed's relabeling class.

    OUTPUT: (canonical seed, pi) where pi maps old row indices to new
    ones (identity on frozen indices).
    """
    b = seed.b
    ex = b.ex
    n = b.n
    m = b.m
    var_keys = [_var_key(seed.vars[ex[j]]) for j in range(n)]
    col_keys = [_json_bytes(list(b.column(j))) for j in range(n)]
    order = sorted(range(n), key=lambda j: (var_keys[j], col_keys[j]))
    pi = list(range(m))
    inv = list(range(m))
    for t, j in enumerate(order):
        pi[ex[j]] = ex[t]
        inv[ex[t]] = ex[j]
    if order == list(range(n)):
        return seed, tuple(pi)
    new_vars = tuple(seed.vars[inv[i]] for i in range(m))
    new_rows = [[b.entry(inv[i], order[t]) for t in range(n)] for i in range(m)]
    new_b = ExchangeMatrix(new_rows, ex)
    if isinstance(seed, QuantumSeed):
        lam = seed.lam
        new_lam = SkewMatrix(
            [[lam.entry(inv[i], inv[j]) for j in range(m)] for i in range(m)]
        )
        new_d = tuple(seed.d[j] for j in order)
        return QuantumSeed(new_lam, new_b, new_vars, new_d), tuple(pi)
    return ClassicalSeed(new_b, new_vars), tuple(pi)


def canonical_key(seed) -> bytes:
    """Serialized canonical form; equal iff seeds agree up to relabeling."""
    canon, _ = canonical_form(seed)
    return _json_bytes(dump_seed(canon, full=True))


class GraphStatus(Enum):
    CLOSED = "Closed"
    CAPPED_BY_SEEDS = "CappedBySeeds"
    CAPPED_BY_DEPTH = "CappedByDepth"


@dataclass(frozen=True)
class ExchangeGraph:
    """Result of an exploration: canonical seeds, mutation edges, status.

    nodes maps canonical keys to stored canonical seeds in discovery
    order; edges hold (source key, direction k, target key) triples with
    k a row index of the SOURCE's stored seed.  For a Closed graph every
    (node, k in ex) pair has its edge; capped graphs stop early and say
    why in status.
    """

    root: bytes
    nodes: Mapping[bytes, ClassicalSeed | QuantumSeed]
    depths: Mapping[bytes, int]
    parents: Mapping[bytes, tuple[bytes, int] | None]
    edges: tuple[tuple[bytes, int, bytes], ...]
    status: GraphStatus

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def path_to(self, key: bytes) -> tuple[int, ...]:
        """Mutation directions from the root to a node, one per BFS edge."""
        return _trace_path(self.parents, key)

    def node_ids(self) -> dict[bytes, str]:
        """Short stable display ids (hash prefixes, extended on collision)."""
        size = 6
        while True:
            ids = {key: blake2b(key, digest_size=size).hexdigest() for key in self.nodes}
            if len(set(ids.values())) == len(ids):
                return ids
            size *= 2


def explore(
    root: ClassicalSeed | QuantumSeed,
    max_seeds: int | None = 10000,
    max_depth: int | None = 32,
) -> ExchangeGraph:
    """Breadth-first closure of a seed under all exchange directions.

    Deduplication is by canonical key of the full seed.  The search
    stops with CappedBySeeds the moment one more distinct seed would
    exceed max_seeds, and a node at depth max_depth is recorded but not
    expanded (CappedByDepth if any such node remains unexpanded).  Caps
    of None mean unlimited.  NotDivisibleError from a mutation is
    re-raised with the path from the root attached.
    """
    canon, _ = canonical_form(root)
    rkey = _json_bytes(dump_seed(canon, full=True))
    nodes: dict[bytes, ClassicalSeed | QuantumSeed] = {rkey: canon}
    depths: dict[bytes, int] = {rkey: 0}
    parents: dict[bytes, tuple[bytes, int] | None] = {rkey: None}
    edges: set[tuple[bytes, int, bytes]] = set()
    queue: deque[bytes] = deque([rkey])
    status = None
    depth_capped = False
    while queue and status is None:
        key = queue.popleft()
        seed = nodes[key]
        depth = depths[key]
        if max_depth is not None and depth >= max_depth:
            depth_capped = True
            continue
        for k in seed.b.ex:
            try:
                child = mutate(seed, k)
            except NotDivisibleError as exc:
                raise NotDivisibleError(
                    str(exc),
                    seed=exc.seed,
                    direction=exc.direction,
                    path=_trace_path(parents, key) + (k,),
                ) from None
            child_c, _ = canonical_form(child)
            ckey = _json_bytes(dump_seed(child_c, full=True))
            if ckey not in nodes:
                if max_seeds is not None and len(nodes) >= max_seeds:
                    status = GraphStatus.CAPPED_BY_SEEDS
                    break
                nodes[ckey] = child_c
                depths[ckey] = depth + 1
                parents[ckey] = (key, k)
                queue.append(ckey)
            edges.add((key, k, ckey))
    if status is None:
        status = GraphStatus.CAPPED_BY_DEPTH if depth_capped else GraphStatus.CLOSED
    return ExchangeGraph(
        rkey, nodes, depths, parents, tuple(sorted(edges)), status
    )


def _trace_path(
    parents: Mapping[bytes, tuple[bytes, int] | None], key: bytes
) -> tuple[int, ...]:
    path = []
    cur = key
    while True:
        parent = parents[cur]
        if parent is None:
            break
        cur, k = parent
        path.append(k)
    return tuple(reversed(path))


@dataclass(frozen=True)
class LaurentRow:
    """One produced variable: membership outcome and denominator data.

    step is 0 for rows describing the untouched initial generators,
    otherwise the 1-based position in the mutation sequence.  index is
    the variable slot; direction the mutated one (None on step 0).
    min_exponents is the componentwise support minimum; denominator its
    negative part, i.e. the exponent of the monomial denominator.
    """

    step: int
    index: int
    direction: int | None
    ok: bool
    support: tuple[tuple[int, ...], ...] | None
    min_exponents: tuple[int, ...] | None
    denominator: tuple[int, ...] | None
    error: str | None

    def to_json(self) -> dict:
        out: dict = {
            "step": self.step,
            "index": self.index + 1,
            "ok": self.ok,
        }
        if self.direction is not None:
            out["direction"] = self.direction + 1
        if self.ok:
            out["support"] = [list(e) for e in self.support]
            out["min_exponents"] = list(self.min_exponents)
            out["denominator"] = list(self.denominator)
        else:
            out["error"] = self.error
        return out


@dataclass(frozen=True)
class LaurentReport:
    rows: tuple[LaurentRow, ...]
    completed: bool
    final: ClassicalSeed | QuantumSeed | None

    @property
    def ok(self) -> bool:
        return self.completed and all(row.ok for row in self.rows)

    def to_json(self) -> dict:
        return {
            "completed": self.completed,
            "ok": self.ok,
            "rows": [row.to_json() for row in self.rows],
        }


def _membership_row(step: int, index: int, direction: int | None, v) -> LaurentRow:
    lo = v.min_exponents()
    return LaurentRow(
        step,
        index,
        direction,
        True,
        tuple(v.support()),
        lo,
        tuple(max(0, -x) for x in lo),
        None,
    )


def laurent_report(
    root: ClassicalSeed | QuantumSeed, sequence: Sequence[int]
) -> LaurentReport:
    """Apply a mutation sequence, recording Laurent membership per step.

    An empty sequence reports on the initial generators.  A division
    failure becomes a failing row and stops the walk; it is recorded,
    not raised.
    """
    seed = root
    rows: list[LaurentRow] = []
    if not sequence:
        for i in range(seed.m):
            rows.append(_membership_row(0, i, None, seed.vars[i]))
        return LaurentReport(tuple(rows), True, seed)
    for step, k in enumerate(sequence, start=1):
        try:
            seed = mutate(seed, k)
        except NotDivisibleError as exc:
            rows.append(
                LaurentRow(step, k, k, False, None, None, None, str(exc))
            )
            return LaurentReport(tuple(rows), False, None)
        rows.append(_membership_row(step, k, k, seed.vars[k]))
    return LaurentReport(tuple(rows), True, seed)


def _cluster_summary(seed, limit: int = 28) -> str:
    parts = []
    for k in seed.b.ex:
        s = str(seed.vars[k])
        if len(s) > limit:
            s = s[: limit - 3] + "..."
        parts.append(s)
    return ", ".join(parts)


def export_json(graph: ExchangeGraph, full: bool = False) -> str:
    """Stable JSON rendering of a graph; full=True embeds the variables."""
    ids = graph.node_ids()
    nodes = [
        {
            "id": ids[key],
            "depth": graph.depths[key],
            "seed": dump_seed(graph.nodes[key], full=full),
        }
        for key in sorted(graph.nodes, key=lambda key: (graph.depths[key], ids[key]))
    ]
    edges = [
        {"from": ids[a], "k": k + 1, "to": ids[c]}
        for a, k, c in sorted(graph.edges, key=lambda e: (ids[e[0]], e[1], ids[e[2]]))
    ]
    data = {
        "status": graph.status.value,
        "root": ids[graph.root],
        "node_count": graph.node_count,
        "edge_count": graph.edge_count,
        "nodes": nodes,
        "edges": edges,
    }
    return json.dumps(data, indent=2, sort_keys=True)


def export_dot(graph: ExchangeGraph) -> str:
    """GraphViz rendering: nodes carry id and cluster summary, edges k."""
    ids = graph.node_ids()
    lines = ["digraph exchange {"]
    lines.append('  graph [label="status: %s"];' % graph.status.value)
    for key in sorted(graph.nodes, key=lambda key: (graph.depths[key], ids[key])):
        label = "%s\\n%s" % (ids[key], _cluster_summary(graph.nodes[key]))
        label = label.replace('"', '\\"')
        lines.append('  "%s" [label="%s"];' % (ids[key], label))
    for a, k, c in sorted(graph.edges, key=lambda e: (ids[e[0]], e[1], ids[e[2]])):
        lines.append('  "%s" -> "%s" [label="%d"];' % (ids[a], ids[c], k + 1))
    lines.append("}")
    return "\n".join(lines) + "\n"
