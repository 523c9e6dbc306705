"""Seeded property suites over random monomial instances.

Each suite draws one instance per case from ``random.Random`` seeded by
``(seed, suite, case)``, so a case can be rerun on its own. Instances that
miss the suite's hypothesis are skipped. A failing instance is shrunk by
greedily deleting arrows and relations while the failure persists, and both
the original and the shrunk instance are serialized in the input format.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .complex import cochain_complex, hh1
from .dualext import DualExtension, degree_one_split, verify_exact_sequence
from .errors import QHHError
from .field import QQ, Field
from .fundgroup import extended_tree, verify_pullback
from .generators import (complement_is_simple, random_directed_pair, random_monomial_algebra,
                         random_pair, shrink_algebra)
from .lie import brackets_within, lie_presentation
from .parser import format_algebra, format_pair
from .quiver import MonomialAlgebra, SubalgebraPair, betti_number, radical_square_zero
from .radzero import cross_check
from .relative import relative_hh1

DEFAULT_SEED = 7


def default_seed() -> int:
    """The seed from ``QHH_SEED`` if set, otherwise :data:`DEFAULT_SEED`."""
    v = os.environ.get("QHH_SEED")
    return int(v) if v not in (None, "") else DEFAULT_SEED


# -- instance helpers ------------------------------------------------------------

def _shrink_pair(pair: SubalgebraPair) -> List[SubalgebraPair]:
    b = pair.sub_arrow_names
    out = []
    for alg, removed in shrink_algebra(pair.ambient):
        out.append(SubalgebraPair.from_arrows(alg, [n for n in b if n != removed], pair.sub.name))
    return out


def _shrink_dual(inst) -> list:
    B, A = inst
    return [(b, A) for b, _ in shrink_algebra(B)] + [(B, a) for a, _ in shrink_algebra(A)]


def _shrink_alg(alg):
    return [a for a, _ in shrink_algebra(alg)]


def _format_dual(inst) -> str:
    B, A = inst
    return format_algebra(B) + "\n" + format_algebra(A)


def _prime_for(case: int, field: Optional[Field]) -> Field:
    if field is not None and field.characteristic:
        return field
    return Field(2 if case % 2 == 0 else 3)


# -- suites ----------------------------------------------------------------------

@dataclass
class Suite:
    name: str
    generate: Callable[[random.Random, int, Optional[Field]], object]
    check: Callable[[object], Optional[str]]
    serialize: Callable[[object], str]
    shrink: Callable[[object], list]
    precondition: Callable[[object], Optional[str]] = lambda inst: None


def _simple_complement(pair: SubalgebraPair) -> Optional[str]:
    if not complement_is_simple(pair):
        return "complement has parallel arrows or several loops at a vertex"
    return None


def _theorem_a_pre(pair: SubalgebraPair) -> Optional[str]:
    if pair.ambient.field.characteristic != 0:
        return "field is not of characteristic zero"
    return _simple_complement(pair)


def _theorem_b_pre(pair: SubalgebraPair) -> Optional[str]:
    if pair.ambient.field.characteristic == 0:
        return "field is not of positive characteristic"
    if any(a.source == a.target for a in pair.ambient.quiver.arrows):
        return "ambient quiver has a loop"
    return _simple_complement(pair)


def _check_solvable(pair: SubalgebraPair) -> Optional[str]:
    L = relative_hh1(pair).lie
    if not L.is_solvable():
        return f"relative HH1 is not solvable: derived series {L.derived_series()}"
    return None


def _check_strongly_solvable(pair: SubalgebraPair) -> Optional[str]:
    L = relative_hh1(pair).lie
    if not L.is_strongly_solvable():
        return f"relative HH1 is not strongly solvable: derived series {L.derived_series()}"
    return None


def _check_jacobi(alg: MonomialAlgebra) -> Optional[str]:
    cx = cochain_complex(alg)
    cx.check()
    lie_presentation(hh1(alg), alg).check_axioms()
    if not brackets_within(cx.kernel1, cx.image0, cx.image0, alg):
        return "[Ker d1, Im d0] is not inside Im d0"
    if not brackets_within(cx.kernel1, cx.kernel1, cx.kernel1, alg):
        return "Ker d1 is not closed under the bracket"
    return None


def _dual_pre(inst) -> Optional[str]:
    B, A = inst
    comp = {v: i for i, c in enumerate(B.quiver.components()) for v in c}
    if any(comp[a.source] != comp[a.target] for a in A.quiver.arrows):
        return "an arrow of A joins two components of Q_B"
    return None


def _check_dual(inst) -> Optional[str]:
    de = DualExtension(*inst)
    ex = verify_exact_sequence(de)
    if not ex["ok"]:
        return f"exact sequence fails: {ex}"
    d1 = degree_one_split(de)
    if not d1["ok"]:
        return f"degree-one split fails: {d1}"
    return None


def _check_dual_defect(inst) -> Optional[str]:
    ex = verify_exact_sequence(DualExtension(*inst))
    if not (ex["corrected_identity"] and ex["J_is_ideal"]):
        return f"component-corrected identity fails: {ex}"
    return None


def _check_contracted(pair: SubalgebraPair) -> Optional[str]:
    A = pair.ambient
    data = extended_tree(pair)
    rank = len(data.generators)
    expected = betti_number(A.quiver) - betti_number(pair.sub.quiver)
    if rank != expected:
        return f"contracted rank {rank} but betti difference {expected}"
    res = verify_pullback(pair, data)
    if not res["checks"]["ok"]:
        return f"pullback checks fail: {res['checks']}"
    return None


def _check_embedding(pair: SubalgebraPair) -> Optional[str]:
    r = relative_hh1(pair)
    if r.embedding_rank() != r.dim:
        return "embedding into HH1(A) is not injective"
    if not r.embedding_commutes():
        return "embedding does not preserve brackets"
    return None


def _check_radzero(pair: SubalgebraPair) -> Optional[str]:
    res = cross_check(pair)
    if res["crosscheck"] != "ok":
        return f"closed form disagrees: {res}"
    return None


def _rsz_pair(rng: random.Random, case: int, field: Optional[Field]) -> SubalgebraPair:
    A = random_monomial_algebra(rng, 4, 5, QQ, max_dim=60)
    A = radical_square_zero(A.quiver, QQ)
    names = [a.name for a in A.quiver.arrows if rng.random() < 0.5]
    return SubalgebraPair.from_arrows(A, names)


def _shrink_rsz(pair: SubalgebraPair) -> List[SubalgebraPair]:
    out = []
    for p in _shrink_pair(pair):
        A = radical_square_zero(p.ambient.quiver, p.ambient.field)
        out.append(SubalgebraPair.from_arrows(A, p.sub_arrow_names))
    return out


SUITES: Dict[str, Suite] = {
    "theoremA": Suite(
        "theoremA",
        lambda rng, i, f: random_pair(rng, field=QQ, simple_complement=True, max_dim=30),
        _check_solvable, format_pair, _shrink_pair, _theorem_a_pre),
    "theoremB": Suite(
        "theoremB",
        lambda rng, i, f: random_pair(rng, field=_prime_for(i, f), loops=False,
                                      simple_complement=True, max_dim=30),
        _check_strongly_solvable, format_pair, _shrink_pair, _theorem_b_pre),
    "jacobi": Suite(
        "jacobi",
        lambda rng, i, f: random_monomial_algebra(rng, 5, 7, f or QQ, max_dim=25),
        _check_jacobi, format_algebra, _shrink_alg),
    "dualmain": Suite(
        "dualmain",
        lambda rng, i, f: random_directed_pair(rng, field=f or QQ, within_components=True),
        _check_dual, _format_dual, _shrink_dual, _dual_pre),
    "dualdefect": Suite(
        "dualdefect",
        lambda rng, i, f: random_directed_pair(rng, field=f or QQ),
        _check_dual_defect, _format_dual, _shrink_dual),
    "contracted": Suite(
        "contracted",
        lambda rng, i, f: random_pair(rng, field=f or QQ, max_dim=25),
        _check_contracted, format_pair, _shrink_pair),
    "embedding": Suite(
        "embedding",
        lambda rng, i, f: random_pair(rng, field=f or QQ, max_dim=25),
        _check_embedding, format_pair, _shrink_pair),
    "radzero": Suite("radzero", _rsz_pair, _check_radzero, format_pair, _shrink_rsz),
}


# -- runner ----------------------------------------------------------------------

def case_rng(seed: int, suite: str, case: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{case}")


def _evaluate(suite: Suite, inst) -> Tuple[str, Optional[str]]:
    """``(status, message)`` with status ``pass``, ``fail`` or ``skip``."""
    try:
        reason = suite.precondition(inst)
    except QHHError as e:
        return "skip", str(e)
    if reason:
        return "skip", reason
    try:
        msg = suite.check(inst)
    except QHHError as e:
        msg = f"{type(e).__name__}: {e}"
    return ("fail", msg) if msg else ("pass", None)


def minimize(suite: Suite, inst):
    """Greedily delete arrows and relations while the instance keeps failing."""
    changed = True
    while changed:
        changed = False
        for smaller in suite.shrink(inst):
            if _evaluate(suite, smaller)[0] == "fail":
                inst, changed = smaller, True
                break
    return inst


def run_suite(name: str, cases: int = 100, seed: Optional[int] = None,
              field: Optional[Field] = None, extra: Iterable = ()) -> dict:
    """Run ``cases`` random cases of suite ``name`` plus any ``extra`` instances.

    The summary lists every case's status in order; failures carry the
    serialized instance and its minimized form.
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known suites: {sorted(SUITES)}")
    suite = SUITES[name]
    seed = default_seed() if seed is None else seed
    instances = [suite.generate(case_rng(seed, name, i), i, field) for i in range(cases)]
    instances += list(extra)
    statuses, failures, skips = [], [], []
    for i, inst in enumerate(instances):
        status, msg = _evaluate(suite, inst)
        statuses.append(status)
        if status == "skip":
            skips.append({"case": i, "reason": msg})
        elif status == "fail":
            small = minimize(suite, inst)
            failures.append({"case": i, "message": msg, "instance": suite.serialize(inst),
                             "minimized": suite.serialize(small),
                             "minimized_message": _evaluate(suite, small)[1]})
    return {
        "suite": name,
        "seed": seed,
        "field": field.describe() if field is not None else "default",
        "cases": len(instances),
        "passed": statuses.count("pass"),
        "failed": statuses.count("fail"),
        "skipped": statuses.count("skip"),
        "status": "".join(s[0] for s in statuses),
        "skips": skips,
        "failures": failures,
    }
