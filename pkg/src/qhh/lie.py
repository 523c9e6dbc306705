"""Lie brackets on parallel-pair derivations and finite-dimensional Lie analysis.

A pair ``a//p`` stands for the derivation sending the arrow ``a`` to ``p``
and every other arrow to zero. The bracket of two such derivations is their
commutator:

    [a//p, b//q] = b//q^{a//p} - a//p^{b//q}
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .complex import CochainComplex, Subquotient, cochain_complex, substitute
from .errors import InputNotInKernel, UnsupportedField, VerificationError
from .field import Field
from .linalg import ExactMatrix, Quotient, Subspace, Vector, axpy, scale
from .quiver import MonomialAlgebra, ParallelPair, ParallelVector


# -- brackets on k(Q1//B) ------------------------------------------------------

class PairBracket:
    """Memoized bracket on the coordinates of ``k(Q1//B)``."""

    def __init__(self, cx: CochainComplex):
        self.cx = cx
        self.field = cx.field
        self._memo: Dict[Tuple[int, int], Vector] = {}

    def pair(self, i: int, j: int) -> Vector:
        if i == j:
            return {}
        if i > j:
            return scale(-1, self.pair(j, i), self.field)
        key = (i, j)
        v = self._memo.get(key)
        if v is None:
            v = self._compute(self.cx.basis1[i], self.cx.basis1[j])
            self._memo[key] = v
        return v

    def _compute(self, x: ParallelPair, y: ParallelPair) -> Vector:
        alg, f, idx = self.cx.algebra, self.field, self.cx.index1
        a, b = x.left.arrows[0], y.left.arrows[0]
        out: Vector = {}
        for path, c in substitute(y.right, a, x.right, alg).items():
            out = axpy(out, c, {idx[ParallelPair(y.left, path)]: f.one}, f)
        for path, c in substitute(x.right, b, y.right, alg).items():
            out = axpy(out, -c, {idx[ParallelPair(x.left, path)]: f.one}, f)
        return out

    def __call__(self, u: Vector, v: Vector) -> Vector:
        f = self.field
        out: Vector = {}
        for i, c in u.items():
            for j, d in v.items():
                if i != j:
                    out = axpy(out, f.norm(c * d), self.pair(i, j), f)
        return out


def pair_bracket(cx: CochainComplex) -> PairBracket:
    pb = getattr(cx, "_pair_bracket", None)
    if pb is None:
        pb = PairBracket(cx)
        cx._pair_bracket = pb
    return pb


def bracket(f: ParallelVector, g: ParallelVector, algebra: MonomialAlgebra,
            check: bool = True) -> ParallelVector:
    """Commutator of two derivations given as combinations of ``a//p`` pairs."""
    cx = cochain_complex(algebra)
    u, v = cx.coords1(f), cx.coords1(g)
    if check:
        for name, w in (("first", u), ("second", v)):
            if w not in cx.kernel1:
                raise InputNotInKernel(f"{name} argument is not in Ker d1")
    return cx.vector1(pair_bracket(cx)(u, v))


# -- abstract presentations ------------------------------------------------------

class LiePresentation:
    """A Lie algebra given by structure constants on a labelled basis.

    ``constants[(i, j)]`` for ``i < j`` is the coordinate vector of
    ``[b_i, b_j]``; the remaining brackets follow from antisymmetry.
    """

    def __init__(self, dim: int, field: Field, constants: Dict[Tuple[int, int], Vector],
                 labels: Optional[Sequence[str]] = None):
        self.dim = dim
        self.field = field
        self.constants = {k: v for k, v in constants.items() if v}
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(dim)]

    @classmethod
    def from_bracket(cls, basis: Sequence[Vector], bracket_fn: Callable[[Vector, Vector], Vector],
                     coords_fn: Callable[[Vector], Vector], field: Field,
                     labels=None) -> "LiePresentation":
        consts = {}
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                consts[(i, j)] = coords_fn(bracket_fn(basis[i], basis[j]))
        return cls(len(basis), field, consts, labels)

    def basis_bracket(self, i: int, j: int) -> Vector:
        if i == j:
            return {}
        if i < j:
            return self.constants.get((i, j), {})
        return scale(-1, self.constants.get((j, i), {}), self.field)

    def bracket(self, u: Vector, v: Vector) -> Vector:
        f = self.field
        out: Vector = {}
        for i, c in u.items():
            for j, d in v.items():
                if i != j:
                    out = axpy(out, f.norm(c * d), self.basis_bracket(i, j), f)
        return out

    def unit(self, i: int) -> Vector:
        return {i: self.field.one}

    def whole(self) -> Subspace:
        return Subspace.coordinate(self.dim, self.field, range(self.dim))

    def span_brackets(self, U: Subspace, V: Subspace) -> Subspace:
        out = Subspace(self.dim, self.field)
        for u in U.basis:
            for v in V.basis:
                out.add(self.bracket(u, v))
        return out

    def is_ideal(self, I: Subspace) -> bool:
        return self.span_brackets(self.whole(), I).issubspace(I)

    def is_subalgebra(self, S: Subspace) -> bool:
        return self.span_brackets(S, S).issubspace(S)

    # -- axioms ----------------------------------------------------------------
    def check_axioms(self) -> None:
        """Raise VerificationError unless antisymmetry and Jacobi hold exactly."""
        n, f = self.dim, self.field
        for i in range(n):
            for j in range(n):
                s = axpy(self.basis_bracket(i, j), 1, self.basis_bracket(j, i), f)
                if s:
                    raise VerificationError(f"antisymmetry fails for ({i},{j})")
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = self.bracket(self.unit(i), self.basis_bracket(j, k))
                    s = axpy(s, 1, self.bracket(self.unit(j), self.basis_bracket(k, i)), f)
                    s = axpy(s, 1, self.bracket(self.unit(k), self.basis_bracket(i, j)), f)
                    if s:
                        raise VerificationError(f"Jacobi identity fails for ({i},{j},{k})")

    # -- series ----------------------------------------------------------------
    def _series(self, start: Subspace, step) -> List[Subspace]:
        terms = [start]
        for _ in range(self.dim + 1):
            if terms[-1].dim == 0:
                break
            nxt = step(terms[-1])
            terms.append(nxt)
            if nxt.dim == terms[-2].dim:
                break
        return terms

    def derived_terms(self, start: Optional[Subspace] = None) -> List[Subspace]:
        return self._series(start or self.whole(), lambda D: self.span_brackets(D, D))

    def lcs_terms(self, start: Optional[Subspace] = None) -> List[Subspace]:
        top = start or self.whole()
        return self._series(top, lambda C: self.span_brackets(top, C))

    def derived_series(self) -> List[int]:
        return [s.dim for s in self.derived_terms()]

    def lower_central_series(self) -> List[int]:
        return [s.dim for s in self.lcs_terms()]

    def derived_algebra(self) -> Subspace:
        W = self.whole()
        return self.span_brackets(W, W)

    def is_abelian(self) -> bool:
        return not self.constants

    def is_solvable(self, sub: Optional[Subspace] = None) -> bool:
        return self.derived_terms(sub)[-1].dim == 0

    def is_nilpotent(self, sub: Optional[Subspace] = None) -> bool:
        return self.lcs_terms(sub)[-1].dim == 0

    def is_strongly_solvable(self) -> bool:
        return self.is_nilpotent(self.derived_algebra())

    # -- sub-objects -------------------------------------------------------------
    def quotient(self, I: Subspace) -> "LiePresentation":
        if not self.is_ideal(I):
            raise VerificationError("quotient by a subspace that is not an ideal")
        q = Quotient(self.whole(), I)
        return LiePresentation.from_bracket(q.transversal, self.bracket,
                                            lambda v: _dense_to_sparse(q.class_coordinates(v)),
                                            self.field)

    def subalgebra(self, S: Subspace) -> "LiePresentation":
        if not self.is_subalgebra(S):
            raise VerificationError("subspace is not closed under the bracket")
        return LiePresentation.from_bracket(S.basis, self.bracket,
                                            lambda v: _dense_to_sparse(S.coordinates(v)),
                                            self.field)

    # -- Killing form and radical -------------------------------------------------
    def killing_matrix(self) -> List[List]:
        n, f = self.dim, self.field
        ad = [[self.basis_bracket(i, k) for k in range(n)] for i in range(n)]
        K = [[f.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                s = f.zero
                for k in range(n):
                    for l, c in ad[j][k].items():
                        d = ad[i][l].get(k)
                        if d:
                            s += c * d
                s = f.norm(s)
                K[i][j] = K[j][i] = s
        return K

    def killing_radical(self, verify: bool = True) -> "RadicalReport":
        """Radical as the Killing-orthogonal of [L, L]; characteristic zero only."""
        if self.field.characteristic != 0:
            raise UnsupportedField("the Killing-form radical criterion needs characteristic zero")
        n, f = self.dim, self.field
        K = self.killing_matrix()
        D = self.derived_algebra()
        rows = []
        for y in D.basis:
            row = {}
            for i in range(n):
                s = f.norm(sum((K[i][m] * c for m, c in y.items()), f.zero))
                if s:
                    row[i] = s
            rows.append(row)
        m = ExactMatrix(len(rows), n, f, [{r: rows[r][i] for r in range(len(rows)) if i in rows[r]}
                                          for i in range(n)])
        R = m.kernel()
        rep = RadicalReport(R, R.dim, n - R.dim)
        if verify:
            if not self.is_ideal(R):
                raise VerificationError("computed radical is not an ideal")
            if not self.is_solvable(R):
                raise VerificationError("computed radical is not solvable")
            if R.dim and n - R.dim:
                rest = self.quotient(R).killing_radical(verify=False)
                if rest.dim:
                    raise VerificationError("quotient by the computed radical is not semisimple")
        return rep

    def analysis(self, radical: Optional[bool] = None) -> dict:
        """Summary of the series, solvability flags and (in char 0) radical dims."""
        if radical is None:
            radical = self.field.characteristic == 0
        out = {
            "dim": self.dim,
            "derived_dims": self.derived_series(),
            "lcs_dims": self.lower_central_series(),
            "solvable": self.is_solvable(),
            "nilpotent": self.is_nilpotent(),
            "abelian": self.is_abelian(),
            "strongly_solvable": self.is_strongly_solvable(),
            "radical_dim": None,
            "semisimple_dim": None,
        }
        if radical:
            r = self.killing_radical()
            out["radical_dim"] = r.dim
            out["semisimple_dim"] = r.semisimple_dim
        return out

    def __repr__(self):
        return f"LiePresentation(dim={self.dim}, nonzero brackets={len(self.constants)})"


class RadicalReport:
    def __init__(self, subspace: Subspace, dim: int, semisimple_dim: int):
        self.subspace = subspace
        self.dim = dim
        self.semisimple_dim = semisimple_dim

    def __repr__(self):
        return f"RadicalReport(dim={self.dim}, semisimple_dim={self.semisimple_dim})"


def killing_radical(L: LiePresentation) -> RadicalReport:
    return L.killing_radical()


def derived_series(L: LiePresentation) -> List[int]:
    return L.derived_series()


def lower_central_series(L: LiePresentation) -> List[int]:
    return L.lower_central_series()


def _dense_to_sparse(coords) -> Vector:
    return {i: c for i, c in enumerate(coords) if c}


# -- presentations of subquotients of k(Q1//B) ------------------------------------

def lie_presentation(sq: Subquotient, algebra: MonomialAlgebra,
                     check_closure: bool = True) -> LiePresentation:
    """Structure constants of ``sq`` using the bracket on ``k(Q1//B)``.

    Raises VerificationError if a bracket of transversal vectors leaves the
    numerator.
    """
    cx = cochain_complex(algebra)
    pb = pair_bracket(cx)

    def coords(v: Vector) -> Vector:
        if check_closure and v not in sq.numerator:
            raise VerificationError("bracket leaves the numerator")
        return _dense_to_sparse(sq.class_coordinates(v))

    labels = [" + ".join(f"{c}*{cx.basis1[i]}" if c != 1 else str(cx.basis1[i])
                         for i, c in sorted(t.items()))
              for t in sq.transversal_vectors]
    return LiePresentation.from_bracket(sq.transversal_vectors, pb, coords, algebra.field, labels)


def subspace_presentation(S: Subspace, algebra: MonomialAlgebra) -> LiePresentation:
    """Presentation of a bracket-closed subspace of ``k(Q1//B)`` itself."""
    cx = cochain_complex(algebra)
    pb = pair_bracket(cx)

    def coords(v: Vector) -> Vector:
        if v not in S:
            raise VerificationError("subspace is not closed under the bracket")
        return _dense_to_sparse(S.coordinates(v))

    return LiePresentation.from_bracket(S.basis, pb, coords, algebra.field)


def brackets_within(U: Subspace, V: Subspace, W: Subspace, algebra: MonomialAlgebra) -> bool:
    """True iff ``[U, V]`` lies in ``W`` (all subspaces of ``k(Q1//B)``)."""
    pb = pair_bracket(cochain_complex(algebra))
    return all(pb(u, v) in W for u in U.basis for v in V.basis)
