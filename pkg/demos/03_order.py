"""
The order between classes.  Some verdicts come from closed criteria, some
from a searched and verified witness, and a few stay unknown.
"""
from tanglemoves import ArcDecomposition, leq
from tanglemoves.poset import hasse_export, sh_leq

A = ArcDecomposition.of

for a, b in [(A(2, 2), A(3)), (A(5), A(2, 2)), (A(1, 2), A(2)), (A(2), A(3)), (A(3), A(2)),
             (A(1, 1, 3), A(2, 2))]:
    v = leq(a, b)
    line = f"{a} <= {b}: {v}"
    if v.witness is not None and len(v.witness):
        line += f"   witness {v.witness.notation()}"
    print(line)

print()
print("SH chain:", [(m, n) for m in range(2, 8) for n in range(2, m + 1) if m != n and sh_leq(m, n)])

h = hasse_export(5)
print(f"\ncovering relations among {len(h.nodes)} classes with at most 5 arcs: {len(h.edges)}")
print("undecided pairs:", [(str(a), str(b)) for a, b in h.unknown])
print()
print(h.to_dot())
