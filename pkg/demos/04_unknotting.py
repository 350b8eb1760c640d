"""
Unknotting indices: each X-type class unknots like some SH-move H_k, and the
index k only depends on the sum of (part - 1).
"""
from collections import defaultdict

from tanglemoves import parity_type, st_partitions, u_index
from tanglemoves.poset import shnr_bounds
from tanglemoves.unknotting import shnr_partition, shnr_u_equal, single_move_partition

fibers = defaultdict(list)
for n in range(2, 8):
    for lam in st_partitions(n):
        if parity_type(lam) == "X":
            fibers[u_index(lam).value].append(str(lam))
for k in sorted(fibers):
    print(f"u = u_H{k}: {', '.join(fibers[k])}")

print()
for a, b in [(2, 2), (3, 2), (5, 2), (3, 4)]:
    print(f"H({a},{b}) = {shnr_partition(a, b)}: index {u_index(shnr_partition(a, b)).value}, "
          f"bounds {shnr_bounds(a, b)}")
print("H(3,2) and H(2,4) share unknotting numbers:", shnr_u_equal(3, 2, 2, 4))

# a knot with u_<3>(K) = 2 is undone by one move of this class
print("one-move class for u_<3> = 2:", single_move_partition(2, shnr_partition(3, 1)))
