"""Extended ST-moves on oriented tangle diagrams, classified up to braiding."""
from .moves import (ArcDecomposition, ComponentTrace, LocalMove, MoveError, OrientedMatching,
                    arc_decomposition, class_count, enumerate_st_moves, equivalent, parity_type,
                    standard_move, st_partitions, union_components, validate_move)
from .ops import BraidLetter, Connect, OpSequence, connect_sequence, rotation_word
from .diagram import TangleDiagram, simplify
from .engine import (MovePair, apply_braiding, apply_connecting, apply_sequence,
                     extract_trivial_pair, pair_decomposition, verify_sequence)
from .normalize import BraidedMove, normalize
from .realize import realize_from_sh, realize_to_sh, reduce_to_primitive
from .poset import (OrderVerdict, hasse_export, leq, leq_from_sh, leq_to_sh, parity_obstruction,
                    sh_leq, shnr_bounds, shnr_leq)
from .unknotting import (UIndex, shnr_partition, shnr_u_equal, single_move_partition, u_compare,
                         u_index)
from .io import parse_move_document, serialize_move_document

__version__ = "0.1.0"
