"""Binomial ideals of corner-interval 2-minors: primes, radicality, Hilbert series,
Betti numbers and contingency-table fibers, all in exact arithmetic."""
from .config import DEFAULT_CAPS, Caps, MemoryCap, PreconditionError, ResourceCap
from .poly import Cell, Polynomial, Ring, TermOrder, diagonal_lex, row_major_revlex
from .groebner import (Ideal, ideal_contains, ideal_equals, initial_ideal, intersect, intersect_all,
                       is_groebner_basis, membership, saturate, slices_equal)
from .combinatorics import (Minor, MinorCollection, ParseError, ValidationError, enumerate_chordless_cycles,
                            enumerate_cycles, ideal_of, interval_decomposition, interval_graph,
                            parse_collection, toric_ideal)
from .primes import (NotCornerCollection, decomposition_check, enumerate_admissible, is_radical_corner,
                     minimal_primes, obstruction_cycle, prime_component, radical_witness)
from .fibers import ContingencyTable, certify_connection, fiber_connected, move_basis
from .hilbert import (BettiTable, UnivariatePoly, betti_comparison, betti_koszul,
                      hilbert_of_binomial_quotient, hilbert_of_monomial_quotient, regularity_of,
                      taylor_betti, hilbert_formula_check)

__version__ = "0.1.0"
