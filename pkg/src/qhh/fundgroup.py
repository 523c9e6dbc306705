"""Fundamental groups of monomial bound quivers relative to a subquiver.

For a monomial ideal the fundamental group is free on the arrows outside a
maximal tree. Relative to B we first pick a maximal forest of Q_B and extend
it to a maximal forest T of Q_A; the contracted group is then free on the
arrows that are neither in B nor in T. Walks are lists of ``(arrow, +1/-1)``
steps in traversal order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .complex import cochain_complex, hh1
from .errors import NotAWalk, ValidationError, VerificationError
from .linalg import Subspace, Vector
from .quiver import (MonomialAlgebra, ParallelPair, ParallelVector, Quiver,
                     SubalgebraPair, betti_number)
from .relative import relative_hh1

Walk = List[Tuple[str, int]]


# -- free words ----------------------------------------------------------------

class FreeWord:
    """A freely reduced word in named generators."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Tuple[str, int]] = ()):
        stack: List[Tuple[str, int]] = []
        for g, e in letters:
            if e not in (1, -1):
                raise ValueError("exponents must be +1 or -1")
            if stack and stack[-1][0] == g and stack[-1][1] == -e:
                stack.pop()
            else:
                stack.append((g, e))
        self.letters = tuple(stack)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord((g, -e) for g, e in reversed(self.letters))

    def exponent_sum(self, g: str) -> int:
        return sum(e for h, e in self.letters if h == g)

    def __eq__(self, other):
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^-1" for g, e in self.letters)

    __repr__ = __str__


def invert_walk(w: Walk) -> Walk:
    return [(a, -e) for a, e in reversed(w)]


def walk_endpoints(w: Walk, quiver: Quiver, start: Optional[int] = None) -> Tuple[int, int]:
    """Check that ``w`` is a walk and return its (start, end)."""
    cur = start
    first = start
    for a, e in w:
        if e not in (1, -1):
            raise NotAWalk(f"step ({a}, {e}) must have exponent +1 or -1")
        if not quiver.has_arrow(a):
            raise NotAWalk(f"unknown arrow {a!r}")
        arr = quiver.arrow(a)
        s, t = (arr.source, arr.target) if e == 1 else (arr.target, arr.source)
        if cur is not None and s != cur:
            raise NotAWalk(f"step {a}^{e} starts at {s} but the walk is at {cur}")
        if first is None:
            first = s
        cur = t
    if first is None:
        raise NotAWalk("empty walk needs an explicit start vertex")
    return first, cur


# -- spanning forests ------------------------------------------------------------

@dataclass
class SpanningForestData:
    forest_b: List[str]
    tree_a: List[str]
    components_b: List[List[int]]
    roots: Dict[int, int]           # component index -> root vertex
    component_of: Dict[int, int]    # vertex -> component index of Q_B
    b_arrows: frozenset
    quiver: Quiver

    def contracted_quiver(self) -> Quiver:
        keep = set(self.tree_a) | {a.name for a in self.quiver.arrows if a.name not in self.b_arrows}
        return Quiver(self.quiver.vertices, [a for a in self.quiver.arrows if a.name in keep])

    @property
    def generators(self) -> List[str]:
        """Free generators of the contracted group: arrows outside B and T."""
        t = set(self.tree_a)
        return [a.name for a in self.quiver.arrows if a.name not in self.b_arrows and a.name not in t]

    def to_json(self) -> dict:
        return {"forest_B": list(self.forest_b), "tree_A": list(self.tree_a),
                "components_B": [list(c) for c in self.components_b],
                "roots": [self.roots[i] for i in range(len(self.components_b))],
                "generators": self.generators}


def _incident(quiver: Quiver, arrows: Sequence[str]) -> Dict[int, List[Tuple[str, int]]]:
    inc: Dict[int, List[Tuple[str, int]]] = {v: [] for v in quiver.vertices}
    for name in arrows:
        a = quiver.arrow(name)
        inc[a.source].append((name, a.target))
        if a.target != a.source:
            inc[a.target].append((name, a.source))
    return inc


def _traverse(starts: Sequence[int], inc, visited: set, order: str) -> List[str]:
    """Tree arrows found by BFS or DFS from each unvisited start."""
    tree = []
    for s in starts:
        if s in visited:
            continue
        visited.add(s)
        pending = deque([s])
        while pending:
            v = pending.popleft() if order == "bfs" else pending.pop()
            nbrs = inc[v] if order == "bfs" else list(reversed(inc[v]))
            for name, w in nbrs:
                if w not in visited:
                    visited.add(w)
                    tree.append(name)
                    pending.append(w)
    return tree


def extended_tree(pair: SubalgebraPair, order: str = "bfs",
                  arrow_order: Optional[Sequence[str]] = None,
                  roots: Optional[Dict[int, int]] = None) -> SpanningForestData:
    """Maximal forest of Q_B extended to a maximal forest of Q_A.

    ``order`` is ``bfs`` or ``dfs``; ``arrow_order`` overrides the canonical
    arrow order used to scan neighbours. ``roots`` maps any vertex of a
    component of Q_B to the root chosen for that component.
    """
    if order not in ("bfs", "dfs"):
        raise ValidationError(f"unknown traversal order {order!r}")
    qa = pair.ambient.quiver
    names = list(arrow_order) if arrow_order is not None else qa.arrow_names
    if sorted(names) != sorted(qa.arrow_names):
        raise ValidationError("arrow_order must list every arrow exactly once")
    b = frozenset(pair.sub_arrow_names)
    comps = pair.sub.quiver.components()
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    root_of = {i: c[0] for i, c in enumerate(comps)}
    for v, r in (roots or {}).items():
        if comp_of.get(r) != comp_of.get(v):
            raise ValidationError(f"root {r} is not in the component of vertex {v}")
        root_of[comp_of[v]] = r
    inc_b = _incident(qa, [n for n in names if n in b])
    forest = _traverse([root_of[i] for i in range(len(comps))], inc_b, set(), order)
    # contract each component of Q_B and span the resulting graph
    inc_c: Dict[int, List[Tuple[str, int]]] = {i: [] for i in range(len(comps))}
    for n in names:
        if n in b:
            continue
        a = qa.arrow(n)
        x, y = comp_of[a.source], comp_of[a.target]
        if x != y:
            inc_c[x].append((n, y))
            inc_c[y].append((n, x))
    ext = _traverse(list(range(len(comps))), inc_c, set(), order)
    data = SpanningForestData(forest, forest + ext, comps, root_of, comp_of, b, qa)
    _check_forest(data)
    return data


def _check_forest(data: SpanningForestData) -> None:
    qa = data.quiver
    parent = {v: v for v in qa.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for n in data.tree_a:
        a = qa.arrow(n)
        ra, rb = find(a.source), find(a.target)
        if ra == rb:
            raise VerificationError(f"tree arrow {n} closes a cycle")
        parent[ra] = rb
    if len(data.tree_a) != len(qa.vertices) - len(qa.components()):
        raise VerificationError("extended tree does not span every component")


# -- parade data and the word map -------------------------------------------------

def _tree_walks(quiver: Quiver, arrows: Sequence[str], roots: Sequence[int]) -> Dict[int, Walk]:
    """Walk from the root of its component to every vertex, inside ``arrows``."""
    inc = _incident(quiver, arrows)
    walks: Dict[int, Walk] = {}
    for r in roots:
        if r in walks:
            continue
        walks[r] = []
        pending = deque([r])
        while pending:
            v = pending.popleft()
            for name, w in inc[v]:
                if w in walks:
                    continue
                a = quiver.arrow(name)
                step = (name, 1) if a.source == v else (name, -1)
                walks[w] = walks[v] + [step]
                pending.append(w)
    return walks


@dataclass
class ParadeData:
    basepoints: Dict[int, int]      # vertex -> basepoint of its component of Q_A
    connecting: Dict[int, Walk]     # root x_i -> walk from the basepoint inside T
    local: Dict[int, Walk]          # vertex y -> walk from its root inside forest_B
    roots: Dict[int, int]           # vertex -> root of its component of Q_B

    def walk(self, y: int) -> Walk:
        return self.connecting[self.roots[y]] + self.local[y]

    def to_json(self) -> dict:
        return {str(y): [[a, e] for a, e in self.walk(y)] for y in sorted(self.local)}


def relative_parade(pair: SubalgebraPair, data: SpanningForestData,
                    basepoint: Optional[int] = None) -> ParadeData:
    qa = pair.ambient.quiver
    comps_a = qa.components()
    base: Dict[int, int] = {}
    for c in comps_a:
        bp = basepoint if basepoint is not None and basepoint in c else c[0]
        for v in c:
            base[v] = bp
    if basepoint is not None and basepoint not in base:
        raise ValidationError(f"basepoint {basepoint} is not a vertex")
    from_base = _tree_walks(qa, data.tree_a, sorted(set(base.values())))
    roots_list = [data.roots[i] for i in range(len(data.components_b))]
    local = _tree_walks(qa, data.forest_b, roots_list)
    root_of = {v: data.roots[data.component_of[v]] for v in qa.vertices}
    connecting = {r: from_base[r] for r in roots_list}
    parade = ParadeData(base, connecting, local, root_of)
    for y in qa.vertices:
        t = walk_endpoints(parade.walk(y), qa, base[y])[1] if parade.walk(y) else base[y]
        if t != y:
            raise VerificationError(f"parade walk does not end at {y}")
        if any(a not in data.b_arrows for a, _ in local[y]):
            raise VerificationError("local parade walk leaves Q_B")
    return parade


def walk_to_word(w: Walk, data: SpanningForestData, start: Optional[int] = None) -> FreeWord:
    """Image of a walk in the contracted free group."""
    if w or start is not None:
        walk_endpoints(w, data.quiver, start)
    t = set(data.tree_a)
    return FreeWord((a, e) for a, e in w if a not in data.b_arrows and a not in t)


def closed_walk(arrow: str, parade: ParadeData, quiver: Quiver) -> Walk:
    """``cl(a)``: out along the parade walk, across ``a``, back along the parade walk."""
    a = quiver.arrow(arrow)
    return parade.walk(a.source) + [(arrow, 1)] + invert_walk(parade.walk(a.target))


# -- ranks ------------------------------------------------------------------------

def pi1_rank(algebra: MonomialAlgebra) -> int:
    return betti_number(algebra.quiver)


def contracted_rank(pair: SubalgebraPair, data: Optional[SpanningForestData] = None) -> int:
    data = data or extended_tree(pair)
    return betti_number(data.contracted_quiver())


# -- theta -----------------------------------------------------------------------

def _theta_vector(value, pair: SubalgebraPair, parade: ParadeData) -> Vector:
    """Coordinates of ``a -> value(cl(a)) a`` in ``k(Q1//B)``."""
    A = pair.ambient
    cx = cochain_complex(A)
    f = A.field
    out: Vector = {}
    for a in A.quiver.arrows:
        c = f(value(closed_walk(a.name, parade, A.quiver)))
        if c:
            p = A.quiver.arrow_path(a.name)
            out[cx.index1[ParallelPair(p, p)]] = c
    return out


def _dual(g: str, data: SpanningForestData):
    """The functional dual to generator ``g``, evaluated on walks."""
    return lambda walk: walk_to_word(walk, data).exponent_sum(g)


def theta(generator: str, pair: SubalgebraPair, data: Optional[SpanningForestData] = None,
          parade: Optional[ParadeData] = None) -> ParallelVector:
    """Diagonal derivation attached to the dual of a contracted generator."""
    data = data or extended_tree(pair)
    if generator not in data.generators:
        raise ValidationError(f"{generator!r} is not a generator of the contracted group; "
                              f"generators are {data.generators}")
    parade = parade or relative_parade(pair, data)
    vec = _theta_vector(_dual(generator, data), pair, parade)
    rel = relative_hh1(pair, lie=False)
    if vec not in rel.kernel:
        raise VerificationError("theta image is not in the relative kernel")
    return cochain_complex(pair.ambient).vector1(vec)


def _absolute_data(pair: SubalgebraPair, data: SpanningForestData) -> Tuple[SubalgebraPair, SpanningForestData]:
    """The same tree viewed for the trivial subalgebra (vertices only)."""
    A = pair.ambient
    e_pair = SubalgebraPair.from_arrows(A, [], "E")
    comps = [[v] for v in A.quiver.vertices]
    absd = SpanningForestData([], list(data.tree_a), comps,
                              {i: c[0] for i, c in enumerate(comps)},
                              {c[0]: i for i, c in enumerate(comps)}, frozenset(), A.quiver)
    return e_pair, absd


def verify_pullback(pair: SubalgebraPair, data: Optional[SpanningForestData] = None,
                    basepoint: Optional[int] = None) -> dict:
    A = pair.ambient
    data = data or extended_tree(pair)
    parade = relative_parade(pair, data, basepoint)
    cx = cochain_complex(A)
    rel = relative_hh1(pair, lie=False)
    absolute = hh1(A)
    gens = data.generators
    images = [_theta_vector(_dual(g, data), pair, parade) for g in gens]

    in_kernel = all(v in rel.kernel for v in images)
    diagonal = all(cx.basis1[i].left == cx.basis1[i].right for v in images for i in v)
    b_zero = all(cx.basis1[i].left.arrows[0] not in data.b_arrows for v in images for i in v)
    classes = Subspace(rel.dim, A.field,
                       [{k: c for k, c in enumerate(rel.subquotient.class_coordinates(v)) if c}
                        for v in images]) if in_kernel else None
    injective = classes is not None and classes.dim == len(gens)

    # pull each dual generator back to the absolute group and apply the
    # absolute map built from the same tree
    e_pair, absd = _absolute_data(pair, data)
    abs_parade = relative_parade(e_pair, absd, basepoint)
    commutes = True
    for g, v in zip(gens, images):
        u = _theta_vector(_dual(g, data), e_pair, abs_parade)
        if absolute.class_coordinates(u) != absolute.class_coordinates(v):
            commutes = False
    rank = betti_number(A.quiver) - betti_number(pair.sub.quiver)
    dfs_rank = contracted_rank(pair, extended_tree(pair, "dfs",
                                                   list(reversed(A.quiver.arrow_names))))
    image_dim = classes.dim if classes is not None else 0
    checks = {
        "in_relative_kernel": in_kernel,
        "diagonal": diagonal,
        "vanish_on_B": b_zero,
        "injective": injective,
        "commutes_with_absolute": commutes,
        "image_dim_equals_rank": image_dim == rank,
        "tree_independent": dfs_rank == contracted_rank(pair, data) == rank,
    }
    checks["ok"] = all(checks.values())
    return {"generators": gens, "theta_image_dim": image_dim, "contracted_rank": rank,
            "checks": checks,
            "images": {g: cx.vector1(v).to_json() for g, v in zip(gens, images)}}


def pi1_report(pair: SubalgebraPair, order: str = "bfs", basepoint: Optional[int] = None) -> dict:
    data = extended_tree(pair, order)
    pb = verify_pullback(pair, data, basepoint)
    return {
        "betti_A": betti_number(pair.ambient.quiver),
        "betti_B": betti_number(pair.sub.quiver),
        "contracted_rank": contracted_rank(pair, data),
        "theta_image_dim": pb["theta_image_dim"],
        "tree": data.to_json(),
        "parade": relative_parade(pair, data, basepoint).to_json(),
        "theta_images": pb["images"],
        "pullback_checks": pb["checks"],
    }
