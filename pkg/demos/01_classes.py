"""
Walk through the ST(n)-moves for small n: enumerate every move, group by
arc-decomposition, and draw the standard representative of each class.
"""
from collections import Counter

from tanglemoves import arc_decomposition, class_count, enumerate_st_moves, parity_type, standard_move
from tanglemoves.render import render_move

for n in range(2, 6):
    groups = Counter(arc_decomposition(m) for m in enumerate_st_moves(n))
    print(f"n={n}: {sum(groups.values())} moves in {len(groups)} classes (p(n)-1 = {class_count(n)})")
    for lam, size in sorted(groups.items()):
        print(f"   {str(lam):12} {parity_type(lam)}-type  {size} moves")
print()

# the two ST(3) classes, drawn in standard form
for lam in sorted({arc_decomposition(m) for m in enumerate_st_moves(3)}):
    print(lam)
    print(render_move(standard_move(lam)))
