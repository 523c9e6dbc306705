"""Closed-form dimensions of HH^1(A|B) for radical-square-zero pairs.

Complement arrows are grouped into parallel classes. For a class [a] with
``n`` complement arrows and ``m`` parallel arrows of B:

* the relative kernel gets ``n*m + n*n`` dimensions (an ``n x m`` block
  on which gl_n acts),
* if ``n > 1`` the class carries a copy of sl_n,
* if ``m > 0`` the scalar matrix survives in the radical next to the
  ``n*m`` block; if ``m == 0`` the scalar joins an abelian tail that is cut
  down by the relative image.

The relative image has dimension ``c(Q_B) - c(Q_A)`` where ``c`` counts
connected components: it is spanned by the coboundaries of vertex
functions that are constant on the components of Q_B.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from .errors import NotRadicalSquareZero, UnsupportedField, VerificationError
from .field import QQ, Field
from .quiver import Arrow, Quiver, SubalgebraPair, radical_square_zero
from .relative import relative_hh1


@dataclass(frozen=True)
class ComplementClass:
    source: int
    target: int
    arrows: Tuple[str, ...]
    size: int
    b_size: int
    ambient_size: int

    @property
    def kind(self) -> str:
        """``D`` when no arrow of B is parallel, ``E`` otherwise."""
        return "D" if self.b_size == 0 else "E"

    @property
    def in_S(self) -> bool:
        return self.size > 1

    def to_json(self) -> dict:
        return {"source": self.source, "target": self.target, "arrows": list(self.arrows),
                "size": self.size, "b_size": self.b_size, "ambient_size": self.ambient_size,
                "kind": self.kind, "parallel": self.in_S}


def classify_complement(pair: SubalgebraPair) -> List[ComplementClass]:
    if not pair.ambient.is_radical_square_zero():
        raise NotRadicalSquareZero("the ambient algebra is not radical square zero")
    if not pair.sub.is_radical_square_zero():
        raise NotRadicalSquareZero("the subalgebra is not radical square zero")
    b = pair.sub_arrow_names
    groups: Dict[Tuple[int, int], List[str]] = {}
    for a in pair.ambient.quiver.arrows:
        groups.setdefault((a.source, a.target), []).append(a.name)
    out = []
    for (s, t), names in groups.items():
        comp = tuple(n for n in names if n not in b)
        if comp:
            out.append(ComplementClass(s, t, comp, len(comp), len(names) - len(comp), len(names)))
    return out


@dataclass
class StructureDescriptor:
    semisimple: List[Tuple[str, int]] = field(default_factory=list)
    radical_blocks: List[Tuple[int, int]] = field(default_factory=list)
    abelian_tail: int = 0
    kernel_dim: int = 0
    image_dim: int = 0

    @property
    def semisimple_dim(self) -> int:
        return sum(n * n - 1 for _, n in self.semisimple)

    @property
    def radical_dim(self) -> int:
        return sum(i + s for i, s in self.radical_blocks) + self.abelian_tail

    @property
    def total_dim(self) -> int:
        return self.semisimple_dim + self.radical_dim

    def to_json(self) -> dict:
        return {
            "semisimple": [{"type": t, "size": n} for t, n in self.semisimple],
            "radical_blocks": [{"ideal_dim": i, "scalar": s} for i, s in self.radical_blocks],
            "abelian_tail": self.abelian_tail,
            "kernel_dim": self.kernel_dim,
            "image_dim": self.image_dim,
            "total_dim": self.total_dim,
            "semisimple_dim": self.semisimple_dim,
            "radical_dim": self.radical_dim,
        }


def closed_form_hh1(pair: SubalgebraPair) -> StructureDescriptor:
    if pair.ambient.field.characteristic != 0:
        raise UnsupportedField("the closed form is stated for characteristic zero")
    classes = classify_complement(pair)
    rank = len(pair.sub.quiver.components()) - len(pair.ambient.quiver.components())
    d = StructureDescriptor()
    n_d = 0
    for c in classes:
        if c.in_S:
            d.semisimple.append(("sl", c.size))
        if c.kind == "E":
            d.radical_blocks.append((c.size * c.b_size, 1))
        else:
            n_d += 1
        d.kernel_dim += c.size * c.b_size + c.size * c.size
    d.image_dim = rank
    d.abelian_tail = n_d - rank
    if d.abelian_tail < 0:
        raise VerificationError("relative image is larger than the abelian scalar part")
    return d


def generic_dims(pair: SubalgebraPair) -> Tuple[int, int, int]:
    """(total, semisimple, radical) from the complex and the Killing radical."""
    r = relative_hh1(pair)
    rad = r.lie.killing_radical()
    return r.dim, rad.semisimple_dim, rad.dim


def cross_check(pair: SubalgebraPair) -> dict:
    d = closed_form_hh1(pair)
    total, ss, rad = generic_dims(pair)
    diff = {}
    for key, mine, theirs in (("total_dim", d.total_dim, total),
                              ("semisimple_dim", d.semisimple_dim, ss),
                              ("radical_dim", d.radical_dim, rad)):
        if mine != theirs:
            diff[key] = {"closed_form": mine, "generic": theirs}
    return {"closed_form": [d.total_dim, d.semisimple_dim, d.radical_dim],
            "generic": [total, ss, rad], "crosscheck": "ok" if not diff else diff}


def radzero_report(pair: SubalgebraPair) -> dict:
    classes = classify_complement(pair)
    out = {"classes": [c.to_json() for c in classes]}
    d = closed_form_hh1(pair)
    out["descriptor"] = d.to_json()
    out.update({k: v for k, v in cross_check(pair).items()})
    return out


# -- exhaustive enumeration -----------------------------------------------------

def _relabel(cells, p) -> Tuple:
    return tuple(sorted(((p[c[0][0]], p[c[0][1]]),) + tuple(c[1:]) for c in cells))


def _matrices(n: int, max_arrows: int) -> Iterator[Dict[Tuple[int, int], int]]:
    cells = [(i, j) for i in range(n) for j in range(n)]

    def go(k, left, acc):
        if k == len(cells):
            yield dict(acc)
            return
        for m in range(left + 1):
            if m:
                acc[cells[k]] = m
            yield from go(k + 1, left - m, acc)
            acc.pop(cells[k], None)

    yield from go(0, max_arrows, {})


def radical_square_zero_pairs(max_vertices: int = 4, max_arrows: int = 5,
                              field: Field = QQ) -> Iterator[SubalgebraPair]:
    """Every radical-square-zero pair with the given bounds, up to isomorphism.

    Arrows between the same vertices are interchangeable, so a pair is
    determined by two multiplicity matrices ``N <= M`` (B inside A); pairs
    that differ by a relabelling of vertices are yielded once.
    """
    for n in range(1, max_vertices + 1):
        perms = list(itertools.permutations(range(n)))
        for M in _matrices(n, max_arrows):
            mcells = tuple(sorted(M.items()))
            keys = [_relabel(mcells, p) for p in perms]
            if min(keys) != mcells:
                continue
            autos = [p for p, k in zip(perms, keys) if k == mcells]
            seen = set()
            for sub in itertools.product(*(range(m + 1) for _, m in mcells)):
                cells = tuple((c, m, s) for (c, m), s in zip(mcells, sub))
                key = min(_relabel(cells, p) for p in autos)
                if key in seen:
                    continue
                seen.add(key)
                yield _build_pair(n, key, field)


def _build_pair(n: int, cells, field: Field) -> SubalgebraPair:
    arrows, bnames = [], []
    for (i, j), m, k in cells:
        for r in range(m):
            name = f"x{i + 1}{j + 1}_{r + 1}"
            arrows.append(Arrow(name, i + 1, j + 1))
            if r < k:
                bnames.append(name)
    A = radical_square_zero(Quiver(range(1, n + 1), arrows), field)
    return SubalgebraPair.from_arrows(A, bnames)
