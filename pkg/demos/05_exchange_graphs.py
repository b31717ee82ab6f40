"""Exchange-graph exploration: finite types close, infinite ones cap.

Seeds are deduplicated by a canonical key that is stable under
relabeling of exchangeable positions, so the pentagon really has five
nodes, not five-times-relabeled copies.
"""

from qcluster import (
    ClassicalSeed,
    ExchangeMatrix,
    QuantumSeed,
    SkewMatrix,
    explore,
    export_dot,
)

for name, rows in (("A1", [[0]]), ("A2", [[0, 1], [-1, 0]]),
                   ("A3", [[0, 1, 0], [-1, 0, 1], [0, -1, 0]])):
    graph = explore(ClassicalSeed.initial(ExchangeMatrix(rows)))
    print(f"{name}: {graph.status.value}, {graph.node_count} seeds,"
          f" {graph.edge_count} directed edges")

# the quantum pentagon matches the classical one node for node
qa2 = QuantumSeed.initial(
    ExchangeMatrix([[0, 1], [-1, 0]]), SkewMatrix([[0, 1], [-1, 0]])
)
print("quantum A2:", explore(qa2).node_count, "seeds")

# rank-2 with a double arrow never closes; caps make that observable
kron = ClassicalSeed.initial(ExchangeMatrix([[0, 2], [-2, 0]]))
capped = explore(kron, max_seeds=15, max_depth=None)
print("Kronecker:", capped.status.value, "at", capped.node_count, "seeds")
shallow = explore(kron, max_depth=4)
print("Kronecker, depth <= 4:", shallow.status.value,
      "with", shallow.node_count, "seeds")

# every node remembers how it was first reached
graph = explore(ClassicalSeed.initial(ExchangeMatrix([[0, 1], [-1, 0]])))
for key in graph.nodes:
    path = ",".join(str(k + 1) for k in graph.path_to(key))
    print("  node", graph.node_ids()[key], "via mu-path", path or "(root)")

print()
print(export_dot(graph))
