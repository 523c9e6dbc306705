"""Dual extensions of directed monomial algebras and the J/I construction.

For directed monomial algebras B and A on the same vertices, the dual
extension has the arrows of B together with the reversed arrows of A
(suffixed ``*``). Besides the relations of B and of the opposite of A it
kills every 2-path that applies an arrow of the opposite of A and then an
arrow of B, so nonzero mixed paths first follow B and then the reversed
arrows.
"""

from __future__ import annotations

from typing import Dict

from .complex import Subquotient, cochain_complex, hh0, hh1
from .errors import NotDirected, ValidationError, VertexMismatch, VerificationError
from .field import QQ
from .lie import brackets_within, pair_bracket
from .linalg import Subspace
from .quiver import (Arrow, MonomialAlgebra, Quiver, SubalgebraPair, is_directed,
                     opposite_algebra)
from .relative import relative_hh1, relative_kernel


class DualExtension:
    def __init__(self, B: MonomialAlgebra, A: MonomialAlgebra):
        if B.quiver.vertices != A.quiver.vertices:
            raise VertexMismatch("B and A must have the same vertices")
        for name, alg in (("B", B), ("A", A)):
            if not is_directed(alg):
                raise NotDirected(f"{name} is not directed: every arrow must go from a smaller "
                                  "to a larger vertex")
        if B.field != A.field:
            raise ValidationError("B and A must be defined over the same field")
        aop = opposite_algebra(A)
        clash = set(B.quiver.arrow_names) & set(aop.quiver.arrow_names)
        if clash:
            raise ValidationError(f"arrow names clash with reversed arrows: {sorted(clash)}")
        self.B = B
        self.A = A
        self.aop = aop
        self.b_arrows = set(B.quiver.arrow_names)
        self.aop_arrows = set(aop.quiver.arrow_names)
        self.mixed_relations = [(x.name, y.name) for x in aop.quiver.arrows
                                for y in B.quiver.out_arrows(x.target)]
        q = Quiver(B.quiver.vertices, list(B.quiver.arrows) + list(aop.quiver.arrows))
        rels = ([r.arrows for r in B.relations] + [r.arrows for r in aop.relations]
                + self.mixed_relations)
        self.lam = MonomialAlgebra(q, rels, B.field, f"Lambda({B.name},{A.name}^op)")
        for p in self.lam.basis:
            kinds = ["b" if n in self.b_arrows else "a" for n in p.arrows]
            if "".join(kinds) != "b" * kinds.count("b") + "a" * kinds.count("a"):
                raise VerificationError(f"basis path {p} has a reversed arrow before an arrow of B")
        self.pair_b = SubalgebraPair.from_arrows(self.lam, B.quiver.arrow_names, B.name)
        self.pair_aop = SubalgebraPair.from_arrows(self.lam, aop.quiver.arrow_names, aop.name)

    @property
    def component_defect(self) -> int:
        """``c(Q_B) - c(Q_Lambda)``: how many B-components the arrows of A join."""
        return len(self.B.quiver.components()) - len(self.lam.quiver.components())

    def is_mixed(self, p) -> bool:
        names = set(p.arrows)
        return bool(names & self.b_arrows) and bool(names & self.aop_arrows)

    def mixed_basis(self):
        return [p for p in self.lam.basis if self.is_mixed(p)]


def build_dual_extension(B: MonomialAlgebra, A: MonomialAlgebra) -> DualExtension:
    return DualExtension(B, A)


class JIData:
    """The subspaces J', J and I of ``k(Q1//B)`` for the dual extension."""

    def __init__(self, de: DualExtension):
        self.de = de
        lam = de.lam
        cx = cochain_complex(lam)
        n = len(cx.basis1)
        self.complex = cx
        jcols = [i for i, pp in enumerate(cx.basis1)
                 if pp.left.arrows[0] in de.b_arrows and de.is_mixed(pp.right)]
        self.j_prime = cx.kernel1.restrict_support(jcols)
        self.ker_rel_b = relative_kernel(de.pair_b)
        self.J = self.j_prime + self.ker_rel_b
        if self.J.dim != self.j_prime.dim + self.ker_rel_b.dim:
            raise VerificationError("J' and Ker d1(Lambda|B) are not independent")
        high = [j for j, pp in enumerate(cx.basis0) if pp.degree >= 2]
        self.I = Subspace(n, lam.field, [cx.d0.column(j) for j in high])
        if not self.I.issubspace(self.J):
            raise VerificationError("I is not contained in J")
        self.quotient = Subquotient(cx.basis1, self.J, self.I, lam.field)

    @property
    def dim(self) -> int:
        return self.quotient.dim


def compute_ji(de: DualExtension) -> dict:
    ji = JIData(de)
    hl = hh1(de.lam)
    return {
        "dim_J_prime": ji.j_prime.dim,
        "dim_ker_rel_B": ji.ker_rel_b.dim,
        "dim_J": ji.J.dim,
        "dim_I": ji.I.dim,
        "dim_J_over_I": ji.dim,
        "dim_hh1_lambda": hl.dim,
        "dim_hh1_B": hh1(de.B).dim,
        "dim_hh1_rel_B": relative_hh1(de.pair_b, lie=False).dim,
        "graded_J_over_I": {str(k): v for k, v in ji.quotient.graded_dims().items()},
        "graded_hh1_lambda": {str(k): v for k, v in hl.graded_dims().items()},
    }


def verify_exact_sequence(de: DualExtension) -> dict:
    ji = JIData(de)
    lam_dim = hh1(de.lam).dim
    b_dim = hh1(de.B).dim
    ker = ji.complex.kernel1
    ideal = brackets_within(ker, ji.J, ji.J, de.lam)
    defect = de.component_defect
    return {
        "dim_hh1_lambda": lam_dim,
        "dim_J_over_I": ji.dim,
        "dim_hh1_B": b_dim,
        "component_defect": defect,
        "dimension_identity": lam_dim == ji.dim + b_dim,
        "corrected_identity": lam_dim == ji.dim + b_dim - defect,
        "J_is_ideal": ideal,
        "ok": lam_dim == ji.dim + b_dim and ideal,
    }


def _degree_one(sq: Subquotient) -> int:
    return sq.graded_dims().get(1, 0)


def degree_one_split(de: DualExtension) -> dict:
    lam = de.lam
    cx = cochain_complex(lam)
    hl = hh1(lam)
    rel = relative_hh1(de.pair_b, lie=False)
    hb = hh1(de.B)
    d_lam, d_b, d_rel = _degree_one(hl), _degree_one(hb), _degree_one(rel.subquotient)
    # degree-one representatives of HH^1(B) pushed into k(Q1//B) of Lambda
    bcx = cochain_complex(de.B)
    b_reps = []
    for t in hb.transversal_vectors:
        if all(bcx.basis1[i].degree == 1 for i in t):
            b_reps.append({cx.index1[bcx.basis1[i]]: c for i, c in t.items()})
    r_reps = [t for t in rel.subquotient.transversal_vectors
              if all(cx.basis1[i].degree == 1 for i in t)]
    pb = pair_bracket(cx)
    commute = True
    for u in b_reps:
        if u not in cx.kernel1:
            raise VerificationError("a derivation of B does not extend to Lambda")
        for v in r_reps:
            if pb(u, v) not in cx.image0:
                commute = False
    return {
        "dim_hh1_lambda_deg1": d_lam,
        "dim_hh1_B_deg1": d_b,
        "dim_hh1_rel_B_deg1": d_rel,
        "additive": d_lam == d_b + d_rel,
        "summands_commute": commute,
        "ok": d_lam == d_b + d_rel and commute,
    }


def structural_checks(de: DualExtension) -> Dict[str, bool]:
    """Coordinate-level facts about the dual extension."""
    lam = de.lam
    cx = cochain_complex(lam)
    out = {}
    out["no_reversed_arrow_parallel_to_B_path"] = all(
        not de.B.parallel_basis(a.source, a.target) for a in de.aop.quiver.arrows)
    out["no_B_arrow_parallel_to_reversed_path"] = all(
        not de.aop.parallel_basis(a.source, a.target) for a in de.B.quiver.arrows)
    k_aop = relative_kernel(de.pair_aop)
    k_b = relative_kernel(de.pair_b)
    s = k_aop + k_b
    out["kernel_splits"] = (s == cx.kernel1 and s.dim == k_aop.dim + k_b.dim)
    deg1 = [j for j, pp in enumerate(cx.basis0) if pp.degree == 1]
    im1 = Subspace(len(cx.basis1), lam.field, [cx.d0.column(j) for j in deg1])
    out["degree_one_image_matches_B"] = im1.dim == cochain_complex(de.B).image0.dim
    return out


def dualext_report(de: DualExtension) -> dict:
    out = {"dim_lambda": de.lam.dim,
           "hh0_lambda": _hh0_dim(de.lam)}
    out.update(compute_ji(de))
    out["exact_sequence"] = verify_exact_sequence(de)
    out["degree_one"] = degree_one_split(de)
    out["structure"] = structural_checks(de)
    return out


def _hh0_dim(alg: MonomialAlgebra) -> int:
    return hh0(alg)["dim"]


def linear_algebra(n: int, field=None, name: str = "A") -> MonomialAlgebra:
    """Path algebra of 1 -> 2 -> ... -> n."""
    arrows = [Arrow(f"a{i}", i, i + 1) for i in range(1, n)]
    return MonomialAlgebra(Quiver(range(1, n + 1), arrows), (), field or QQ, name)

