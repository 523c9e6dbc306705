"""Seeded random monomial algebras and subalgebra pairs for property tests."""

from __future__ import annotations

import random
from typing import List, Optional, Sequence, Tuple

from .errors import NotFiniteDimensional
from .field import QQ, Field
from .quiver import Arrow, MonomialAlgebra, Path, Quiver, SubalgebraPair, enumerate_basis


def _random_path(rng: random.Random, q: Quiver, length: int) -> Optional[Tuple[str, ...]]:
    if not q.arrows:
        return None
    a = rng.choice(q.arrows)
    names = [a.name]
    for _ in range(length - 1):
        outs = q.out_arrows(q.arrow(names[-1]).target)
        if not outs:
            return None
        names.append(rng.choice(outs).name)
    return tuple(names)


def _avoids(p: Tuple[str, ...], rels: Sequence[Tuple[str, ...]]) -> bool:
    for r in rels:
        k = len(r)
        if any(p[i:i + k] == r for i in range(len(p) - k + 1)):
            return False
    return True


def _irredundant(rels: Sequence[Tuple[str, ...]]) -> List[Tuple[str, ...]]:
    out = []
    for r in rels:
        if r not in out and _avoids(r, [s for s in rels if len(s) < len(r)]):
            out.append(r)
    return out


def bound_relations(rng: random.Random, q: Quiver, rels: List[Tuple[str, ...]],
                    max_dim: int) -> List[Tuple[str, ...]]:
    """Add random length-2 relations until the basis is finite and small."""
    rels = list(rels)
    while True:
        try:
            if len(enumerate_basis(q, rels)) <= max_dim:
                return rels
        except NotFiniteDimensional:
            pass
        twos = [(a.name, b.name) for a in q.arrows for b in q.out_arrows(a.target)]
        live = [p for p in twos if _avoids(p, rels)]
        if not live:
            return rels
        rels.append(rng.choice(live))


def random_quiver(rng: random.Random, max_vertices: int = 6, max_arrows: int = 8,
                  loops: bool = True, directed: bool = False, prefix: str = "a",
                  n_vertices: Optional[int] = None) -> Quiver:
    n = n_vertices or rng.randint(1, max_vertices)
    m = rng.randint(0, max_arrows)
    arrows = []
    for i in range(m):
        if directed:
            if n < 2:
                break
            s, t = sorted(rng.sample(range(1, n + 1), 2))
        else:
            s, t = rng.randint(1, n), rng.randint(1, n)
            if s == t and not loops:
                continue
        arrows.append(Arrow(f"{prefix}{len(arrows) + 1}", s, t))
    return Quiver(range(1, n + 1), arrows)


def random_monomial_algebra(rng: random.Random, max_vertices: int = 6, max_arrows: int = 8,
                            field: Field = QQ, loops: bool = True, directed: bool = False,
                            max_dim: int = 40, prefix: str = "a", name: str = "A",
                            n_vertices: Optional[int] = None) -> MonomialAlgebra:
    q = random_quiver(rng, max_vertices, max_arrows, loops, directed, prefix, n_vertices)
    rels = []
    for _ in range(rng.randint(0, 4)):
        p = _random_path(rng, q, rng.choice((2, 2, 3)))
        if p is not None and p not in rels:
            rels.append(p)
    rels = bound_relations(rng, q, _irredundant(rels), max_dim)
    return MonomialAlgebra(q, _irredundant(rels), field, name)


def complement_is_simple(pair: SubalgebraPair) -> bool:
    """No two complement arrows share both endpoints (this also caps loops at one)."""
    seen = set()
    b = pair.sub_arrow_names
    for a in pair.ambient.quiver.arrows:
        if a.name in b:
            continue
        key = (a.source, a.target)
        if key in seen:
            return False
        seen.add(key)
    return True


def random_pair(rng: random.Random, max_vertices: int = 6, max_arrows: int = 8,
                field: Field = QQ, loops: bool = True, simple_complement: bool = False,
                max_dim: int = 40) -> SubalgebraPair:
    A = random_monomial_algebra(rng, max_vertices, max_arrows, field, loops, max_dim=max_dim)
    names = [a.name for a in A.quiver.arrows if rng.random() < 0.5]
    if simple_complement:
        seen = set()
        keep = set(names)
        for a in A.quiver.arrows:
            if a.name in keep:
                continue
            key = (a.source, a.target)
            if key in seen:
                keep.add(a.name)
            seen.add(key)
        names = [a.name for a in A.quiver.arrows if a.name in keep]
    return SubalgebraPair.from_arrows(A, names)


def random_directed_pair(rng: random.Random, max_vertices: int = 5, max_arrows: int = 5,
                         field: Field = QQ, max_dim: int = 20,
                         within_components: bool = False) -> Tuple[MonomialAlgebra, MonomialAlgebra]:
    """Directed algebras B and A on the same vertices, with disjoint arrow names.

    With ``within_components`` every arrow of A joins two vertices in the
    same connected component of Q_B.
    """
    n = rng.randint(1, max_vertices)
    B = random_monomial_algebra(rng, n, max_arrows, field, directed=True, max_dim=max_dim,
                                prefix="b", name="B", n_vertices=n)
    A = random_monomial_algebra(rng, n, max_arrows, field, directed=True, max_dim=max_dim,
                                prefix="a", name="A", n_vertices=n)
    if within_components:
        comp = {v: i for i, c in enumerate(B.quiver.components()) for v in c}
        keep = [a for a in A.quiver.arrows if comp[a.source] == comp[a.target]]
        q = Quiver(A.quiver.vertices, keep)
        names = {a.name for a in keep}
        rels = [r.arrows for r in A.relations if set(r.arrows) <= names]
        A = MonomialAlgebra(q, rels, field, "A")
    return B, A


def shrink_algebra(alg: MonomialAlgebra) -> List[Tuple[MonomialAlgebra, str]]:
    """Algebras one arrow or one relation smaller, labelled by what was removed."""
    out = []
    q = alg.quiver
    for a in q.arrows:
        nq = Quiver(q.vertices, [b for b in q.arrows if b.name != a.name])
        rels = [r for r in alg.relations if a.name not in r.arrows]
        try:
            out.append((MonomialAlgebra(nq, rels, alg.field, alg.name), a.name))
        except NotFiniteDimensional:
            continue
    for r in alg.relations:
        rels = [s for s in alg.relations if s != r]
        try:
            out.append((MonomialAlgebra(q, rels, alg.field, alg.name), None))
        except NotFiniteDimensional:
            continue
    return out


def relation_path(q: Quiver, names: Sequence[str]) -> Path:
    return q.path(names)
