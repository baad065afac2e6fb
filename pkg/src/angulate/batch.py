"""Batch verification over a corpus of surfaces and complexes.

A corpus is a dict with an ``entries`` list.  Each entry is either a
signature to build::

    {"signature": [g, b, c, p], "m": 2, "walk": 40, "seed": 1}

or an explicit complex ``{"complex": {...complex JSON...}, "walk": 10}``.
For each entry the complex is validated, its arc count is compared with
the formula, and every flip of a seeded walk is checked for
compatibility and for d^2 = 0 of the Ginzburg presentation.
Signatures without an angulation are reported as expected skips.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .arc_count import NoAngulation, NegativeCount, arc_count
from .builder import build
from .flips import random_flip_walk
from .formats import SchemaError, complex_from_data
from .ginzburg import double, verify_d_squared
from .mutation import check_flip_compatibility
from .qp import qp_of
from .surface import SurfaceSignature, signature, validate

__all__ = ["DEFAULT_CORPUS", "EntryResult", "BatchReport", "batch_verify", "verify_entry"]

DEFAULT_CORPUS = {
    "entries": [
        {"signature": [0, 1, 8, 0], "m": 2, "walk": 30, "seed": 1},
        {"signature": [0, 1, 11, 0], "m": 3, "walk": 30, "seed": 1},
        {"signature": [0, 2, 4, 0], "m": 2, "walk": 30, "seed": 2},
        {"signature": [1, 1, 2, 0], "m": 2, "walk": 30, "seed": 3},
        {"signature": [1, 1, 1, 0], "m": 1, "walk": 30, "seed": 4},
        {"signature": [0, 1, 5, 0], "m": 2, "walk": 10, "seed": 5},
    ]
}


@dataclass
class EntryResult:
    label: str
    status: str  # "pass" | "fail" | "skip"
    flips_checked: int = 0
    flips_out_of_scope: int = 0
    d2_checked: int = 0
    d2_looped_skipped: int = 0
    messages: list[str] = field(default_factory=list)


@dataclass
class BatchReport:
    results: list[EntryResult]

    @property
    def exit_code(self) -> int:
        return 1 if any(r.status == "fail" for r in self.results) else 0

    def as_dict(self) -> dict:
        return {
            "exit_code": self.exit_code,
            "results": [asdict(r) for r in self.results],
        }


def _label(entry: dict) -> str:
    if "signature" in entry:
        return f"sig={tuple(entry['signature'])} m={entry.get('m')}"
    return "complex"


def verify_entry(entry: dict) -> EntryResult:
    res = EntryResult(_label(entry), "pass")
    try:
        if "complex" in entry:
            cx = complex_from_data(entry["complex"])
        else:
            g, b, c, *rest = entry["signature"]
            sig = SurfaceSignature(g, b, c, rest[0] if rest else 0)
            cx = build(sig, int(entry["m"]))
    except (NoAngulation, NegativeCount) as e:
        res.status = "skip"
        res.messages.append(f"expected skip: {e}")
        return res
    except (SchemaError, ValueError, KeyError, TypeError) as e:
        res.status = "fail"
        res.messages.append(f"bad entry: {e}")
        return res

    walk: list = []
    try:
        random_flip_walk(cx, int(entry.get("walk", 0)), int(entry.get("seed", 0)), trace=walk)
    except ValueError as e:
        res.status = "fail"
        res.messages.append(f"walk failed: {e}")
        return res
    complexes = [cur for cur, _ in walk] or [cx]
    for cur in complexes:
        rep = validate(cur)
        if not rep.ok:
            res.status = "fail"
            res.messages.append("invalid complex: " + "; ".join(rep.problems))
            return res
        n = arc_count(signature(cur), cur.m).n
        if n != cur.n_arcs:
            res.status = "fail"
            res.messages.append(f"arc count {cur.n_arcs} != formula {n}")
        q, w = qp_of(cur)
        if q.looped:
            res.d2_looped_skipped += 1
        else:
            res.d2_checked += 1
            if not verify_d_squared(double(q, w)).ok:
                res.status = "fail"
                res.messages.append("d^2 != 0")
    for cur, a in walk:
        rep = check_flip_compatibility(cur, a)
        if not rep.in_scope:
            res.flips_out_of_scope += 1
        elif rep.ok:
            res.flips_checked += 1
        else:
            res.flips_checked += 1
            res.status = "fail"
            res.messages.append(rep.summary())
    return res


def batch_verify(corpus: dict | None = None, *, workers: int = 1) -> BatchReport:
    """Run :func:`verify_entry` on every entry; results keep corpus order."""
    entries = (corpus or DEFAULT_CORPUS)["entries"]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(verify_entry, entries))
    else:
        results = [verify_entry(e) for e in entries]
    return BatchReport(results)
