"""The parallel-path cochain complex of a monomial algebra.

    k(Q0//B) --d0--> k(Q1//B) --d1--> k(Z//B)

``d0(e//p) = sum_{s(a)=e} a//(p then a) - sum_{t(a)=e} a//(a then p)`` and
``d1(a//g) = sum_r r//r^{a//g}``, keeping only basis paths. HH^0 is the
kernel of d0 and HH^1 is Ker d1 / Im d0.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from .errors import VerificationError
from .linalg import ExactMatrix, Quotient, Subspace, Vector
from .quiver import (MonomialAlgebra, ParallelPair, ParallelVector, Path,
                     arrow_paths, parallel_pairs, vertex_paths)


def substitute(r: Path, a: str, gamma: Path, algebra: MonomialAlgebra) -> Dict[Path, object]:
    """``r^{a//gamma}``: replace each single occurrence of ``a`` in ``r`` by ``gamma``.

    Summands outside the basis are dropped and repeated summands add up
    in the field, so over F_2 two equal summands cancel.
    """
    f = algebra.field
    out: Dict[Path, object] = {}
    for i, name in enumerate(r.arrows):
        if name != a:
            continue
        arrows = r.arrows[:i] + gamma.arrows + r.arrows[i + 1:]
        p = Path(r.source, r.target, arrows)
        if algebra.in_basis(p):
            c = f.norm(out.get(p, 0) + 1)
            if c:
                out[p] = c
            else:
                del out[p]
    return {p: f(c) for p, c in out.items()}


class CochainComplex:
    def __init__(self, algebra: MonomialAlgebra):
        self.algebra = algebra
        self.field = algebra.field
        self.basis0: List[ParallelPair] = parallel_pairs(vertex_paths(algebra), algebra)
        self.basis1: List[ParallelPair] = parallel_pairs(arrow_paths(algebra), algebra)
        self.basis2: List[ParallelPair] = parallel_pairs(algebra.relations, algebra)
        self.index0 = {p: i for i, p in enumerate(self.basis0)}
        self.index1 = {p: i for i, p in enumerate(self.basis1)}
        self.index2 = {p: i for i, p in enumerate(self.basis2)}
        self.d0 = ExactMatrix(len(self.basis1), len(self.basis0), self.field,
                              [self._delta0(pp) for pp in self.basis0])
        self.d1 = ExactMatrix(len(self.basis2), len(self.basis1), self.field,
                              [self._delta1(pp) for pp in self.basis1])
        self._ker1: Optional[Subspace] = None
        self._im0: Optional[Subspace] = None

    def _delta0(self, pp: ParallelPair) -> Vector:
        alg, f = self.algebra, self.field
        v = pp.left.source
        p = pp.right
        out: Vector = {}
        for a in alg.quiver.out_arrows(v):
            q = Path(p.source, a.target, p.arrows + (a.name,))
            if alg.in_basis(q):
                k = self.index1[ParallelPair(alg.quiver.arrow_path(a.name), q)]
                out[k] = f.norm(out.get(k, 0) + 1)
        for a in alg.quiver.in_arrows(v):
            q = Path(a.source, p.target, (a.name,) + p.arrows)
            if alg.in_basis(q):
                k = self.index1[ParallelPair(alg.quiver.arrow_path(a.name), q)]
                out[k] = f.norm(out.get(k, 0) - 1)
        return {k: f(c) for k, c in out.items() if c}

    def _delta1(self, pp: ParallelPair) -> Vector:
        alg, f = self.algebra, self.field
        a = pp.left.arrows[0]
        out: Vector = {}
        for r in alg.relations:
            for q, c in substitute(r, a, pp.right, alg).items():
                k = self.index2[ParallelPair(r, q)]
                out[k] = f.norm(out.get(k, 0) + c)
        return {k: c for k, c in out.items() if c}

    # -- derived objects ------------------------------------------------------
    @property
    def kernel1(self) -> Subspace:
        if self._ker1 is None:
            self._ker1 = self.d1.kernel()
        return self._ker1

    @property
    def image0(self) -> Subspace:
        if self._im0 is None:
            self._im0 = self.d0.image()
        return self._im0

    def vector1(self, vec: Vector) -> ParallelVector:
        return ParallelVector.from_coordinates(self.basis1, vec, self.field)

    def coords1(self, v: ParallelVector) -> Vector:
        return v.coordinates(self.index1)

    def degrees1(self) -> List[int]:
        return [p.degree for p in self.basis1]

    def check(self) -> None:
        """Raise VerificationError unless d1*d0 = 0 and both maps preserve degree."""
        if not (self.d1 @ self.d0).is_zero():
            raise VerificationError("d1 * d0 is not zero")
        for src, dst, m in ((self.basis0, self.basis1, self.d0),
                            (self.basis1, self.basis2, self.d1)):
            for j, pp in enumerate(src):
                for i in m.column(j):
                    if dst[i].degree != pp.degree:
                        raise VerificationError(f"differential does not preserve the degree of {pp}")


def cochain_complex(algebra: MonomialAlgebra) -> CochainComplex:
    """The complex of ``algebra``, built once and cached on the algebra."""
    c = getattr(algebra, "_cochain_complex", None)
    if c is None:
        c = CochainComplex(algebra)
        algebra._cochain_complex = c
    return c


def build_delta0(algebra: MonomialAlgebra) -> ExactMatrix:
    return cochain_complex(algebra).d0


def build_delta1(algebra: MonomialAlgebra) -> ExactMatrix:
    return cochain_complex(algebra).d1


class Subquotient:
    """``numerator / denominator`` inside the span of ``pairs``."""

    def __init__(self, pairs: Sequence[ParallelPair], numerator: Subspace,
                 denominator: Subspace, field):
        if not denominator.issubspace(numerator):
            raise VerificationError("denominator is not contained in the numerator")
        self.pairs = list(pairs)
        self.field = field
        self.numerator = numerator
        self.denominator = denominator
        self.quotient = Quotient(numerator, denominator)
        if self.quotient.dim != numerator.dim - denominator.dim:
            raise VerificationError("transversal size does not match the rank difference")

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def transversal_vectors(self) -> List[Vector]:
        return self.quotient.transversal

    @property
    def transversal(self) -> List[ParallelVector]:
        return [ParallelVector.from_coordinates(self.pairs, t, self.field)
                for t in self.quotient.transversal]

    def class_coordinates(self, vec: Vector) -> List:
        return self.quotient.class_coordinates(vec)

    def graded_dims(self) -> Dict[int, int]:
        """Dimension of each degree component; both spaces must be graded."""
        out = {}
        degs = sorted({p.degree for p in self.pairs})
        total = 0
        for d in degs:
            idx = [i for i, p in enumerate(self.pairs) if p.degree == d]
            n = self.numerator.restrict_support(idx).dim
            m = self.denominator.restrict_support(idx).dim
            if n - m:
                out[d] = n - m
            total += n - m
        if total != self.dim:
            raise VerificationError("subquotient is not graded")
        return out


def hh1(algebra: MonomialAlgebra) -> Subquotient:
    c = cochain_complex(algebra)
    sq = getattr(algebra, "_hh1", None)
    if sq is None:
        sq = Subquotient(c.basis1, c.kernel1, c.image0, algebra.field)
        algebra._hh1 = sq
    return sq


def hh0(algebra: MonomialAlgebra) -> dict:
    """Center of the algebra, found by solving ``xz = zx`` for all generators x."""
    f = algebra.field
    basis = algebra.basis
    gens = vertex_paths(algebra) + arrow_paths(algebra)
    n = len(basis)
    columns = []
    for p in basis:
        col: Vector = {}
        for gi, g in enumerate(gens):
            for prod, sign in ((algebra.product(g, p), 1), (algebra.product(p, g), -1)):
                if prod is not None:
                    k = gi * n + algebra.basis_index(prod)
                    col[k] = f.norm(col.get(k, 0) + sign)
        columns.append({k: v for k, v in col.items() if v})
    m = ExactMatrix(len(gens) * n, n, f, columns)
    center = m.kernel()
    vecs = [{basis[i]: c for i, c in v.items()} for v in center.basis]
    return {"dim": center.dim, "basis": vecs}


def graded_component(v, d: int):
    """Degree ``d`` part of a parallel vector, or of a subquotient's transversal."""
    if isinstance(v, ParallelVector):
        return v.degree_component(d)
    if isinstance(v, Subquotient):
        idx = [i for i, p in enumerate(v.pairs) if p.degree == d]
        num = v.numerator.restrict_support(idx)
        den = v.denominator.restrict_support(idx)
        return Subquotient(v.pairs, num, den, v.field)
    raise TypeError(f"cannot take a graded component of {type(v).__name__}")


def hh1_report(algebra: MonomialAlgebra) -> dict:
    c = cochain_complex(algebra)
    sq = hh1(algebra)
    return {
        "dim_k_Q1_B": len(c.basis1),
        "rank_d0": c.image0.dim,
        "dim_ker_d1": c.kernel1.dim,
        "dim_hh1": sq.dim,
        "graded_dims": {str(k): v for k, v in sq.graded_dims().items()},
        "transversal": [t.to_json() for t in sq.transversal],
    }
