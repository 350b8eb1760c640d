"""
Braid a standard move with a random word, then let normalize find a word
that brings it back.  The witness is replayed through the diagram engine.
"""
import random

from tanglemoves import ArcDecomposition, normalize, standard_move, verify_sequence
from tanglemoves.normalize import BraidedMove
from tanglemoves.ops import BraidLetter, OpSequence

rng = random.Random(7)
lam = ArcDecomposition.of(1, 2, 3)
start = standard_move(lam)
word = OpSequence(BraidLetter(rng.randint(1, 2 * lam.n), rng.choice((1, -1))) for _ in range(15))
print("scrambling word:", word.notation())

src = BraidedMove(start, word)
pair = src.pair()
print("crossings after braiding (top + bottom):", pair.crossing_count)

nf = normalize(src)
print("class:", nf.partition)
print("witness:", nf.witness.notation() or "(empty)")
res = verify_sequence(pair, nf.witness, nf.standard)
print("engine replay reaches the standard move:", bool(res))

# a crossingless move in a scrambled labelling needs only the sorting word
m = res.result
print("standard form reached again from the extracted move:", normalize(m).standard == start)
