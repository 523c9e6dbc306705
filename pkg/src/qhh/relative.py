"""First Hochschild cohomology of A relative to a monomial subalgebra B.

The relative kernel consists of the elements of Ker d1 supported on pairs
``a//p`` whose arrow ``a`` is not an arrow of B; the relative image is the
part of Im d0 inside that coordinate subspace.
"""

from __future__ import annotations

from typing import List

from .complex import Subquotient, cochain_complex, hh1
from .errors import VerificationError
from .lie import LiePresentation, lie_presentation, pair_bracket
from .linalg import Subspace, axpy
from .quiver import SubalgebraPair


def relative_columns(pair: SubalgebraPair) -> List[int]:
    """Indices of the pairs ``a//p`` in ``k(Q1//B)`` with ``a`` outside B."""
    cx = cochain_complex(pair.ambient)
    b = pair.sub_arrow_names
    return [i for i, pp in enumerate(cx.basis1) if pp.left.arrows[0] not in b]


def relative_kernel(pair: SubalgebraPair) -> Subspace:
    cx = cochain_complex(pair.ambient)
    cols = relative_columns(pair)
    k = cx.d1.restrict_columns(cols).kernel()
    return Subspace(len(cx.basis1), cx.field,
                    [{cols[j]: c for j, c in v.items()} for v in k.basis])


def relative_image(pair: SubalgebraPair) -> Subspace:
    """Im d0 intersected with the span of pairs whose arrow is outside B."""
    cx = cochain_complex(pair.ambient)
    b = pair.sub_arrow_names
    brows = [i for i, pp in enumerate(cx.basis1) if pp.left.arrows[0] in b]
    pre = cx.d0.restrict_rows(brows).kernel()
    return Subspace(len(cx.basis1), cx.field, [cx.d0.apply(v) for v in pre.basis])


class RelativeResult:
    """HH^1(A|B) with its Lie structure and its embedding into HH^1(A)."""

    def __init__(self, pair: SubalgebraPair, lie: bool = True):
        self.pair = pair
        A = pair.ambient
        self.complex = cochain_complex(A)
        self.kernel = relative_kernel(pair)
        self.image = relative_image(pair)
        self.subquotient = Subquotient(self.complex.basis1, self.kernel, self.image, A.field)
        self.absolute = hh1(A)
        if not self.kernel.issubspace(self.complex.kernel1):
            raise VerificationError("relative kernel is not inside Ker d1")
        if self.image != self.complex.image0.intersect(self.kernel):
            raise VerificationError("relative image differs from Im d0 meet the relative kernel")
        self._lie = None
        if lie:
            self.lie

    @property
    def dim(self) -> int:
        return self.subquotient.dim

    @property
    def lie(self) -> LiePresentation:
        if self._lie is None:
            self._lie = lie_presentation(self.subquotient, self.pair.ambient)
        return self._lie

    def embedding_matrix(self) -> List[List]:
        """Row i: coordinates of the i-th relative class inside HH^1(A)."""
        return [self.absolute.class_coordinates(t) for t in self.subquotient.transversal_vectors]

    def embedding_rank(self) -> int:
        rows = self.embedding_matrix()
        s = Subspace(self.absolute.dim, self.pair.ambient.field,
                     [{i: c for i, c in enumerate(r) if c} for r in rows])
        return s.dim

    def embedding_commutes(self) -> bool:
        """Check iota([x, y]) = [iota x, iota y] on all pairs of basis classes."""
        f = self.pair.ambient.field
        pb = pair_bracket(self.complex)
        T = self.subquotient.transversal_vectors
        emb = self.embedding_matrix()
        for i in range(len(T)):
            for j in range(i + 1, len(T)):
                v = pb(T[i], T[j])
                rel = self.subquotient.class_coordinates(v)
                lhs = self.absolute.class_coordinates(v)
                rhs = {}
                for k, c in enumerate(rel):
                    rhs = axpy(rhs, c, {m: x for m, x in enumerate(emb[k]) if x}, f)
                if {m: x for m, x in enumerate(lhs) if x} != rhs:
                    return False
        return True

    def report(self, lie_analysis: bool = True) -> dict:
        out = {
            "dim_rel": self.dim,
            "dim_abs": self.absolute.dim,
            "embedding_rank": self.embedding_rank(),
            "embedding_commutes": self.embedding_commutes(),
            "dim_ker_rel": self.kernel.dim,
            "dim_im_rel": self.image.dim,
            "graded_dims": {str(k): v for k, v in self.subquotient.graded_dims().items()},
            "image_rel_basis": [self.complex.vector1(v).to_json() for v in self.image.basis],
            "transversal": [t.to_json() for t in self.subquotient.transversal],
        }
        if lie_analysis:
            out["lie"] = self.lie.analysis()
        return out


def relative_hh1(pair: SubalgebraPair, lie: bool = True) -> RelativeResult:
    return RelativeResult(pair, lie)


def embed_into_hh1(pair: SubalgebraPair) -> dict:
    r = RelativeResult(pair)
    return {
        "dim_rel": r.dim,
        "dim_abs": r.absolute.dim,
        "matrix": [[r.pair.ambient.field.to_str(c) for c in row] for row in r.embedding_matrix()],
        "rank": r.embedding_rank(),
        "injective": r.embedding_rank() == r.dim,
        "bracket_commutes": r.embedding_commutes(),
    }
