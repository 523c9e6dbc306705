"""First Hochschild cohomology of monomial algebras, absolute and relative to
monomial subalgebras, with its Lie structure."""

from .complex import CochainComplex, Subquotient, cochain_complex, hh0, hh1, hh1_report
from .dualext import (DualExtension, JIData, compute_ji, degree_one_split, dualext_report,
                      linear_algebra, structural_checks, verify_exact_sequence)
from .errors import (InputNotInKernel, NotAWalk, NotDirected, NotFiniteDimensional,
                     NotRadicalSquareZero, ParseError, QHHError, UnsupportedField,
                     ValidationError, VerificationError, VertexMismatch)
from .field import QQ, Field
from .fundgroup import (FreeWord, closed_walk, contracted_rank, extended_tree, pi1_rank,
                        pi1_report, relative_parade, theta, verify_pullback, walk_to_word)
from .lie import (LiePresentation, bracket, derived_series, killing_radical,
                  lie_presentation, lower_central_series)
from .parser import format_algebra, format_pair, load, parse_input
from .proptest import SUITES, run_suite
from .quiver import (Arrow, MonomialAlgebra, ParallelPair, ParallelVector, Path, Quiver,
                     SubalgebraPair, opposite_algebra, radical_square_zero)
from .radzero import (classify_complement, closed_form_hh1, cross_check,
                      radical_square_zero_pairs, radzero_report)
from .relative import RelativeResult, embed_into_hh1, relative_hh1

__all__ = [name for name in dir() if not name.startswith("_")]
