"""Quivers, paths, monomial algebras and parallel-pair spaces.

Paths are stored in application order: ``Path(1, 1, ("a", "b"))`` applies
``a`` first, so it is the path written ``ba`` in right-to-left notation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import NotFiniteDimensional, ValidationError
from .field import QQ, Field

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    source: int
    target: int
    arrows: Tuple[str, ...] = ()

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def is_parallel(self, other: "Path") -> bool:
        return self.source == other.source and self.target == other.target

    def __str__(self):
        if not self.arrows:
            return f"e_{self.source}"
        return "*".join(self.arrows)

    def written(self) -> str:
        """Right-to-left notation, e.g. ``b a`` for ``a`` then ``b``."""
        if not self.arrows:
            return f"e_{self.source}"
        return " ".join(reversed(self.arrows))


class Quiver:
    """A finite quiver with ordered vertices and named arrows."""

    def __init__(self, vertices: Iterable[int], arrows: Iterable):
        self.vertices: Tuple[int, ...] = tuple(vertices)
        self.arrows: Tuple[Arrow, ...] = tuple(
            a if isinstance(a, Arrow) else Arrow(*a) for a in arrows)
        for v in self.vertices:
            if not isinstance(v, int) or v < 1:
                raise ValidationError(f"vertex ids must be positive integers, got {v!r}")
        if any(b <= a for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValidationError("vertex ids must be strictly increasing")
        vs = set(self.vertices)
        self._by_name: Dict[str, Arrow] = {}
        self._order: Dict[str, int] = {}
        for i, a in enumerate(self.arrows):
            if a.name in self._by_name:
                raise ValidationError(f"duplicate arrow name {a.name!r}")
            if a.source not in vs or a.target not in vs:
                raise ValidationError(f"arrow {a.name!r} has an undeclared endpoint")
            self._by_name[a.name] = a
            self._order[a.name] = i
        self._out = {v: [a for a in self.arrows if a.source == v] for v in self.vertices}
        self._in = {v: [a for a in self.arrows if a.target == v] for v in self.vertices}

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        arr = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}; {arr})"

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValidationError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    @property
    def arrow_names(self) -> List[str]:
        return [a.name for a in self.arrows]

    def arrow_index(self, name: str) -> int:
        return self._order[name]

    def out_arrows(self, v: int) -> List[Arrow]:
        return self._out[v]

    def in_arrows(self, v: int) -> List[Arrow]:
        return self._in[v]

    def trivial(self, v: int) -> Path:
        return Path(v, v)

    def path(self, names: Sequence[str]) -> Path:
        """Build a path from arrow names in application order."""
        names = tuple(names)
        if not names:
            raise ValidationError("empty arrow sequence; use trivial()")
        arrows = [self.arrow(n) for n in names]
        for x, y in zip(arrows, arrows[1:]):
            if x.target != y.source:
                raise ValidationError(
                    f"arrows {x.name!r} and {y.name!r} do not compose "
                    f"(target {x.target} != source {y.source})")
        return Path(arrows[0].source, arrows[-1].target, names)

    def arrow_path(self, name: str) -> Path:
        a = self.arrow(name)
        return Path(a.source, a.target, (name,))

    def path_key(self, p: Path):
        """Canonical order: length, then arrow declaration order, then source."""
        order = self._order
        return (len(p.arrows), tuple([order[n] for n in p.arrows]), p.source)

    def subquiver(self, names: Iterable[str]) -> "Quiver":
        keep = set(names)
        for n in keep:
            self.arrow(n)
        return Quiver(self.vertices, [a for a in self.arrows if a.name in keep])

    def components(self) -> List[List[int]]:
        """Connected components of the underlying undirected graph."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arrows:
            ra, rb = find(a.source), find(a.target)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: Dict[int, List[int]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def has_oriented_cycle(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        stack = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for a in self._out[v]:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    stack.append(a.target)
        return seen < len(self.vertices)


def normalize_relations(quiver: Quiver, relations: Iterable) -> List[Path]:
    """Validate relations and drop those containing another relation."""
    rels: List[Path] = []
    for r in relations:
        if isinstance(r, Path):
            p = quiver.path(r.arrows) if r.arrows else r
        elif isinstance(r, str):
            p = quiver.path((r,))
        else:
            p = quiver.path(tuple(r))
        if len(p) < 2:
            raise ValidationError(f"relation {p} has length {len(p)}; relations need length at least two")
        if p not in rels:
            rels.append(p)
    relset = {r.arrows for r in rels}
    keep = []
    for r in rels:
        n = len(r.arrows)
        if any(r.arrows[i:i + k] in relset for k in range(2, n) for i in range(n - k + 1)):
            log.warning("relation %s contains a shorter relation and was dropped", r)
            continue
        keep.append(r)
    keep.sort(key=quiver.path_key)
    return keep


def _check_finite(quiver: Quiver, rels: Sequence[Tuple[str, ...]]) -> None:
    """Raise NotFiniteDimensional iff arbitrarily long relation-avoiding paths exist.

    With maximal relation length L, a path of length >= L avoids Z iff all of
    its length-L windows do, so long basis paths are walks in the graph whose
    nodes are basis paths of length L-1 and whose edges are basis paths of
    length L. The basis is infinite iff that graph has a cycle.
    """
    if not rels:
        if quiver.has_oriented_cycle():
            raise NotFiniteDimensional("quiver has an oriented cycle and no relations")
        return
    L = max(len(r) for r in rels)
    relset = set(rels)
    layer = [(a.name,) for a in quiver.arrows]
    by_len = {1: layer}
    for n in range(2, L + 1):
        nxt = []
        for p in by_len[n - 1]:
            t = quiver.arrow(p[-1]).target
            for a in quiver.out_arrows(t):
                q = p + (a.name,)
                if any(q[-k:] in relset for k in range(2, n + 1)):
                    continue
                nxt.append(q)
        by_len[n] = nxt
    succ: Dict[Tuple[str, ...], List[Tuple[str, ...]]] = {p: [] for p in by_len[L - 1]}
    for q in by_len[L]:
        succ[q[:-1]].append(q[1:])
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {p: WHITE for p in succ}
    for start in succ:
        if colour[start] != WHITE:
            continue
        stack = [(start, iter(succ[start]))]
        colour[start] = GREY
        while stack:
            node, it = stack[-1]
            for nb in it:
                if colour[nb] == GREY:
                    raise NotFiniteDimensional(
                        "a relation-avoiding cycle repeats indefinitely through "
                        + "*".join(nb))
                if colour[nb] == WHITE:
                    colour[nb] = GREY
                    stack.append((nb, iter(succ[nb])))
                    break
            else:
                colour[node] = BLACK
                stack.pop()


def enumerate_basis(quiver: Quiver, relations: Iterable) -> List[Path]:
    """All paths containing no relation, in canonical order."""
    rels = [r.arrows if isinstance(r, Path) else tuple(r) for r in relations]
    _check_finite(quiver, rels)
    relset = set(rels)
    maxlen = max((len(r) for r in rels), default=0)
    basis = [quiver.trivial(v) for v in quiver.vertices]
    layer = [quiver.arrow_path(a.name) for a in quiver.arrows]
    while layer:
        basis.extend(layer)
        nxt = []
        for p in layer:
            for a in quiver.out_arrows(p.target):
                arrows = p.arrows + (a.name,)
                if any(arrows[-k:] in relset for k in range(2, min(maxlen, len(arrows)) + 1)):
                    continue
                nxt.append(Path(p.source, a.target, arrows))
        layer = nxt
    basis.sort(key=quiver.path_key)
    return basis


class MonomialAlgebra:
    """``kQ/<Z>`` for a set Z of paths of length >= 2 with finite basis."""

    def __init__(self, quiver: Quiver, relations: Iterable = (), field: Field = QQ,
                 name: str = "A"):
        self.quiver = quiver
        self.field = field
        self.name = name
        self.relations: List[Path] = normalize_relations(quiver, relations)
        self._relset = {r.arrows for r in self.relations}
        self.basis: List[Path] = enumerate_basis(quiver, self.relations)
        self._index = {p: i for i, p in enumerate(self.basis)}
        self._parallel: Dict[Tuple[int, int], List[Path]] = {}
        for p in self.basis:
            self._parallel.setdefault((p.source, p.target), []).append(p)

    def __repr__(self):
        return (f"MonomialAlgebra({self.name!r}, {self.quiver!r}, "
                f"Z={[str(r) for r in self.relations]}, {self.field!r})")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def with_field(self, field: Field) -> "MonomialAlgebra":
        return MonomialAlgebra(self.quiver, self.relations, field, self.name)

    def in_basis(self, p: Path) -> bool:
        return p in self._index

    def basis_index(self, p: Path) -> int:
        return self._index[p]

    def parallel_basis(self, source: int, target: int) -> List[Path]:
        return self._parallel.get((source, target), [])

    def product(self, x: Path, y: Path) -> Optional[Path]:
        """The product ``xy`` (apply ``y`` first); ``None`` if it vanishes."""
        if y.target != x.source:
            return None
        p = Path(y.source, x.target, y.arrows + x.arrows)
        return p if p in self._index else None

    def is_radical_square_zero(self) -> bool:
        q = self.quiver
        for a in q.arrows:
            for b in q.out_arrows(a.target):
                if (a.name, b.name) not in self._relset:
                    return False
        return True

    def is_connected(self) -> bool:
        return len(self.quiver.components()) <= 1


def radical_square_zero(quiver: Quiver, field: Field = QQ, name: str = "A") -> MonomialAlgebra:
    rels = [(a.name, b.name) for a in quiver.arrows for b in quiver.out_arrows(a.target)]
    return MonomialAlgebra(quiver, rels, field, name)


class SubalgebraPair:
    """A monomial algebra A with a monomial subalgebra B on a subset of its arrows.

    B always carries the relations of A supported on its arrows.
    """

    def __init__(self, ambient: MonomialAlgebra, sub: MonomialAlgebra):
        qa, qb = ambient.quiver, sub.quiver
        if qa.vertices != qb.vertices:
            raise ValidationError("subalgebra must have the same vertices as the ambient algebra")
        for a in qb.arrows:
            if not qa.has_arrow(a.name) or qa.arrow(a.name) != a:
                raise ValidationError(f"arrow {a.name!r} of B is not an arrow of A with the same endpoints")
        names = {a.name for a in qb.arrows}
        inherited = {r.arrows for r in ambient.relations if set(r.arrows) <= names}
        if {r.arrows for r in sub.relations} != inherited:
            raise ValidationError(
                "relations of B must be exactly the relations of A supported on B's arrows")
        for p in sub.basis:
            if not ambient.in_basis(p):
                raise ValidationError(f"basis path {p} of B lies in the ideal of A")
        if sub.field != ambient.field:
            raise ValidationError("A and B must be defined over the same field")
        self.ambient = ambient
        self.sub = sub

    @classmethod
    def from_arrows(cls, ambient: MonomialAlgebra, names: Iterable[str],
                    name: str = "B") -> "SubalgebraPair":
        names = list(names)
        q = ambient.quiver.subquiver(names)
        keep = set(names)
        rels = [r for r in ambient.relations if set(r.arrows) <= keep]
        return cls(ambient, MonomialAlgebra(q, rels, ambient.field, name))

    @property
    def sub_arrow_names(self) -> set:
        return {a.name for a in self.sub.quiver.arrows}

    def __repr__(self):
        return f"SubalgebraPair(A={self.ambient.name!r}, B arrows={sorted(self.sub_arrow_names)})"


@dataclass(frozen=True)
class ParallelPair:
    left: Path
    right: Path

    def __post_init__(self):
        if not self.left.is_parallel(self.right):
            raise ValidationError(f"{self.left} and {self.right} are not parallel")

    @property
    def degree(self) -> int:
        return len(self.right) - len(self.left) + 1

    def __str__(self):
        return f"{self.left}//{self.right}"


def parallel_pairs(K: Sequence[Path], algebra: MonomialAlgebra) -> List[ParallelPair]:
    """All ``x//q`` with ``x`` in K and ``q`` a parallel basis path."""
    return [ParallelPair(x, q) for x in K for q in algebra.parallel_basis(x.source, x.target)]


def vertex_paths(algebra: MonomialAlgebra) -> List[Path]:
    return [algebra.quiver.trivial(v) for v in algebra.quiver.vertices]


def arrow_paths(algebra: MonomialAlgebra) -> List[Path]:
    return [algebra.quiver.arrow_path(a.name) for a in algebra.quiver.arrows]


class ParallelVector:
    """A finite linear combination of parallel pairs."""

    __slots__ = ("terms", "field")

    def __init__(self, terms: Optional[Dict[ParallelPair, object]] = None, field: Field = QQ):
        self.field = field
        self.terms: Dict[ParallelPair, object] = {}
        for k, v in (terms or {}).items():
            v = field(v)
            if v:
                self.terms[k] = v

    @classmethod
    def from_coordinates(cls, pairs: Sequence[ParallelPair], vec: Dict[int, object],
                         field: Field) -> "ParallelVector":
        return cls({pairs[i]: c for i, c in vec.items()}, field)

    def coordinates(self, index: Dict[ParallelPair, int]) -> Dict[int, object]:
        return {index[k]: v for k, v in self.terms.items()}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, ParallelVector):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "ParallelVector") -> "ParallelVector":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = self.field.norm(out.get(k, 0) + v)
        return ParallelVector(out, self.field)

    def __neg__(self):
        return ParallelVector({k: -v for k, v in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c) -> "ParallelVector":
        return ParallelVector({k: c * v for k, v in self.terms.items()}, self.field)

    def degree_component(self, d: int) -> "ParallelVector":
        return ParallelVector({k: v for k, v in self.terms.items() if k.degree == d}, self.field)

    def degrees(self) -> set:
        return {k.degree for k in self.terms}

    def to_json(self) -> List[dict]:
        return [{"left": str(k.left), "right": str(k.right), "coeff": self.field.to_str(v)}
                for k, v in self.terms.items()]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*({k})" for k, v in self.terms.items())


# -- quiver-level operations ---------------------------------------------------

def complement_quiver(pair: SubalgebraPair) -> Quiver:
    b = pair.sub_arrow_names
    qa = pair.ambient.quiver
    return Quiver(qa.vertices, [a for a in qa.arrows if a.name not in b])


def parallel_classes(q: Quiver) -> List[Tuple[List[str], int]]:
    """Arrows grouped by (source, target), in order of first appearance."""
    groups: Dict[Tuple[int, int], List[str]] = {}
    for a in q.arrows:
        groups.setdefault((a.source, a.target), []).append(a.name)
    return [(names, len(names)) for names in groups.values()]


def betti_number(q: Quiver) -> int:
    return len(q.arrows) - len(q.vertices) + len(q.components())


def is_directed(algebra) -> bool:
    q = algebra.quiver if isinstance(algebra, MonomialAlgebra) else algebra
    return all(a.source < a.target for a in q.arrows)


OP_SUFFIX = "*"


def opposite_algebra(algebra: MonomialAlgebra, suffix: str = OP_SUFFIX) -> MonomialAlgebra:
    q = algebra.quiver
    arrows = [Arrow(a.name + suffix, a.target, a.source) for a in q.arrows]
    rels = [tuple(n + suffix for n in reversed(r.arrows)) for r in algebra.relations]
    return MonomialAlgebra(Quiver(q.vertices, arrows), rels, algebra.field,
                           algebra.name + "^op")
