"""Ginzburg-type dg presentation of a symmetric graded quiver with potential.

Each symmetric pair ``x: i -> j`` (grade r), ``x*: j -> i`` (grade m-r)
becomes an Original and a Dual generator; their degrees are ``-r`` and
``-(m-r)``.  Every vertex gets a loop ``t`` of degree ``-(m+1)``.

Paths are tuples of generator names in travel order (``dst`` of one
generator is ``src`` of the next).  The differential is a graded
derivation, ``d(ab) = d(a) b + (-1)^{|a|} a d(b)``, with

* ``d(x*) = (-1)^{|x|} dW/dx``,
* ``d(x)  = -(-1)^{|x*|(|x|+1)} dW/dx*``,
* ``d(t_v) = (-1)^{m+2} sum over pairs at v of e_v [x, x*] e_v``,
  where ``[x, y] = xy - (-1)^{|x||y|} yx``.

Both members of a pair get a differential because the potential is a sum
of cycles in the whole symmetric quiver, so it contains Duals as well as
Originals.  Then ``d^2 = 0`` amounts to the vanishing of the necklace
bracket ``{W, W}``.

Over a field of characteristic other than 2 that bracket depends on the
signs of the potential's terms: with every coefficient +1 it fails as
soon as a polygon carries four arcs.  :func:`double` therefore gives each
term a coefficient +1 or -1.  Every d^2 identity pairs two terms, so the
signs solve a linear system over GF(2); free signs are +1, earliest
terms first.  :func:`verify_d_squared` checks the result independently.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .qp import AsymmetricInput, GradedQuiver, Superpotential

__all__ = [
    "DgGenerator",
    "GinzburgPresentation",
    "DSquaredReport",
    "double",
    "cyclic_derivative",
    "apply_d",
    "verify_d_squared",
    "export_presentation",
    "import_presentation",
]

Path = tuple[str, ...]
Chain = dict[Path, int]

ORIGINAL, DUAL, LOOP = "original", "dual", "loop"


@dataclass(frozen=True)
class DgGenerator:
    name: str
    kind: str  # ORIGINAL | DUAL | LOOP
    degree: int
    src: int
    dst: int
    grade: Optional[int] = None  # quiver grade for arrow generators
    partner: Optional[str] = None


@dataclass
class GinzburgPresentation:
    m: int
    generators: tuple[DgGenerator, ...]
    differential: dict[str, Chain]
    term_signs: tuple[int, ...] = ()  # coefficient of each potential term

    def __post_init__(self):
        self._by_name = {g.name: g for g in self.generators}

    def generator(self, name: str) -> DgGenerator:
        return self._by_name[name]

    def of_kind(self, kind: str) -> list[DgGenerator]:
        return [g for g in self.generators if g.kind == kind]

    def degree(self, path: Path) -> int:
        return sum(self._by_name[n].degree for n in path)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _names(q: GradedQuiver, orientation: str) -> tuple[list[str], set[int]]:
    originals: set[int] = set()
    for x, a in enumerate(q.arrows):
        y = q.partner[x]
        lower = (a.key, x) < (q.arrows[y].key, y)
        if lower == (orientation == "lowest"):
            originals.add(x)
    names = [""] * len(q.arrows)
    for x in originals:
        names[x] = f"a{x}"
        names[q.partner[x]] = f"a{x}*"
    return names, originals


def cyclic_derivative(terms: list[Path], gen: str, degree) -> Chain:
    """Graded cyclic derivative of a sum of cyclic words.

    Rotating ``w[k]`` to the front costs the Koszul sign of moving
    ``w[:k]`` past ``w[k:]``; the derivative is the rest of the rotated
    word.
    """
    out: dict[Path, int] = defaultdict(int)
    for w in terms:
        for k, g in enumerate(w):
            if g == gen:
                head = sum(degree(n) for n in w[:k])
                tail = sum(degree(n) for n in w[k:])
                out[w[k + 1:] + w[:k]] += _sign(head * tail)
    return {p: c for p, c in out.items() if c}


def _assemble(gens, W, deg, m, coeffs):
    """Differential for potential terms ``W`` with coefficients ``coeffs``.

    Coefficients may be ints or any ring elements supporting ``*`` by an
    int and ``+``; the sign solver passes symbolic monomials.
    """
    def derivative(x, s):
        out: dict[Path, object] = {}
        for w, c in zip(W, coeffs):
            for p, e in cyclic_derivative([w], x, deg.get).items():
                term = c * (s * e)
                out[p] = out[p] + term if p in out else term
        return out

    d: dict[str, dict] = {}
    for g in gens:
        if g.kind == DUAL:
            d[g.name] = derivative(g.partner, _sign(deg[g.partner]))
        elif g.kind == ORIGINAL:
            d[g.name] = derivative(g.partner, -_sign(deg[g.partner] * (deg[g.name] + 1)))
    sgn = _sign(m + 2)
    for v in sorted({g.src for g in gens if g.kind == LOOP}):
        img: dict[Path, int] = defaultdict(int)
        for g in gens:
            if g.kind != ORIGINAL:
                continue
            x, y = g.name, g.partner
            if g.src == v:
                img[(x, y)] += sgn
            if g.dst == v:
                img[(y, x)] -= sgn * _sign(deg[x] * deg[y])
        d[f"t{v}"] = {p: c for p, c in img.items() if c}
    return d


class _Mono:
    """Signed product of term signs: ``coef * prod(s_T for T in terms)``."""

    __slots__ = ("poly",)

    def __init__(self, poly):
        self.poly = poly  # {frozenset(term ids): int}

    def __mul__(self, other):
        if isinstance(other, int):
            return _Mono({k: v * other for k, v in self.poly.items()})
        out: dict[frozenset, int] = defaultdict(int)
        for k1, v1 in self.poly.items():
            for k2, v2 in other.poly.items():
                out[k1 ^ k2] += v1 * v2
        return _Mono(dict(out))

    __rmul__ = __mul__

    def __add__(self, other):
        out = dict(self.poly)
        for k, v in other.poly.items():
            out[k] = out.get(k, 0) + v
        return _Mono(out)


def _solve_gf2(rows: list[tuple[int, int]]) -> Optional[int]:
    """Solve ``parity(mask & x) == rhs`` for all rows; free bits are 0."""
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        for col, (pm, pr) in pivots.items():
            if mask >> col & 1:
                mask ^= pm
                rhs ^= pr
        if not mask:
            if rhs:
                return None
            continue
        col = mask.bit_length() - 1
        for c2, (pm, pr) in list(pivots.items()):
            if pm >> col & 1:
                pivots[c2] = (pm ^ mask, pr ^ rhs)
        pivots[col] = (mask, rhs)
    x = 0
    for col, (pm, pr) in pivots.items():
        if pr:
            x |= 1 << col
    return x


def _term_signs(gens, W, deg, m) -> tuple[int, ...]:
    """Signs of the potential terms making d^2 vanish, or all +1 if none do."""
    if not W:
        return ()
    monos = [_Mono({frozenset([k]): 1}) for k in range(len(W))]
    d = _assemble(gens, W, deg, m, monos)
    rows = []
    for name, chain in d.items():
        out: dict[Path, dict] = defaultdict(lambda: defaultdict(int))
        for path, coef in chain.items():
            coef = coef if isinstance(coef, _Mono) else _Mono({frozenset(): coef})
            head = 0
            for k, g in enumerate(path):
                s = _sign(head)
                for q, c2 in d.get(g, {}).items():
                    c2 = c2 if isinstance(c2, _Mono) else _Mono({frozenset(): c2})
                    for key, v in (coef * c2).poly.items():
                        out[path[:k] + q + path[k + 1:]][key] += s * v
                head += deg[g]
        for poly in out.values():
            live = [(key, v) for key, v in poly.items() if v]
            if len(live) == 2 and all(abs(v) == 1 for _, v in live):
                (k1, v1), (k2, v2) = live
                mask = sum(1 << t for t in k1 ^ k2)
                rows.append((mask, 0 if v1 * v2 < 0 else 1))
    x = _solve_gf2(rows)
    if x is None:
        return (1,) * len(W)
    return tuple(-1 if x >> k & 1 else 1 for k in range(len(W)))


def double(
    q: GradedQuiver,
    w: Superpotential,
    *,
    orientation: str = "lowest",
    signs: Optional[tuple[int, ...]] = None,
) -> GinzburgPresentation:
    """Ginzburg presentation of ``(q, w)``.

    In each symmetric pair the arrow with the lower ``(src, dst, grade)``
    is the Original (``orientation="highest"`` picks the other one).
    ``signs`` overrides the solved term coefficients (one +1/-1 per term
    of ``w.terms``).
    """
    if orientation not in ("lowest", "highest"):
        raise ValueError("orientation must be 'lowest' or 'highest'")
    problems = q.symmetry_problems()
    if problems:
        raise AsymmetricInput("; ".join(problems))
    m = q.m
    names, originals = _names(q, orientation)
    gens: list[DgGenerator] = []
    for x in sorted(originals, key=lambda x: (q.arrows[x].key, x)):
        a, b = q.arrows[x], q.arrows[q.partner[x]]
        gens.append(DgGenerator(names[x], ORIGINAL, -a.grade, a.src, a.dst, a.grade, names[q.partner[x]]))
        gens.append(DgGenerator(names[q.partner[x]], DUAL, -(m - a.grade), b.src, b.dst, b.grade, names[x]))
    for v in sorted(q.vertices):
        gens.append(DgGenerator(f"t{v}", LOOP, -(m + 1), v, v))
    deg = {g.name: g.degree for g in gens}
    W = [tuple(names[x] for x in t) for t in w.terms]
    if signs is None:
        signs = _term_signs(gens, W, deg, m)
    elif len(signs) != len(W) or any(c not in (1, -1) for c in signs):
        raise ValueError("signs must give +1 or -1 for every potential term")
    d = _assemble(gens, W, deg, m, signs)
    d = {name: {p: c for p, c in chain.items() if c} for name, chain in d.items()}
    return GinzburgPresentation(m, tuple(gens), d, tuple(signs))


def apply_d(p: GinzburgPresentation, chain: Chain) -> Chain:
    """Extend d to a linear combination of paths as a graded derivation."""
    out: dict[Path, int] = defaultdict(int)
    for path, c in chain.items():
        head = 0
        for k, g in enumerate(path):
            s = _sign(head)
            for q, c2 in p.differential.get(g, {}).items():
                out[path[:k] + q + path[k + 1:]] += s * c * c2
            head += p.generator(g).degree
    return {q: c for q, c in out.items() if c}


@dataclass
class DSquaredReport:
    pair_degrees_ok: bool
    homogeneous: bool
    d_squared_zero: bool
    failures: list[tuple[str, Chain]] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.pair_degrees_ok and self.homogeneous and self.d_squared_zero

    def __bool__(self) -> bool:
        return self.ok


def verify_d_squared(p: GinzburgPresentation) -> DSquaredReport:
    """Degree pairing, homogeneity of d, and d^2 = 0 on every generator."""
    problems: list[str] = []
    pairs_ok = True
    for g in p.generators:
        if g.kind == ORIGINAL:
            h = p.generator(g.partner)
            if g.degree + h.degree != -p.m:
                pairs_ok = False
                problems.append(f"deg({g.name}) + deg({h.name}) = {g.degree + h.degree} != {-p.m}")
        elif g.kind == LOOP and g.degree != -(p.m + 1):
            pairs_ok = False
            problems.append(f"loop {g.name} has degree {g.degree}")
    homogeneous = True
    for g in p.generators:
        for path, _ in p.differential.get(g.name, {}).items():
            gs = [p.generator(n) for n in path]
            ok = (
                bool(gs)
                and gs[0].src == g.src
                and gs[-1].dst == g.dst
                and all(a.dst == b.src for a, b in zip(gs, gs[1:]))
                and p.degree(path) == g.degree + 1
            )
            if not ok:
                homogeneous = False
                problems.append(f"d({g.name}) term {path} is not a path of degree {g.degree + 1}")
    failures = []
    for g in p.generators:
        dd = apply_d(p, p.differential.get(g.name, {}))
        if dd:
            failures.append((g.name, dd))
            problems.append(f"d^2({g.name}) = {dd}")
    return DSquaredReport(pairs_ok, homogeneous, not failures, failures, problems)


def export_presentation(p: GinzburgPresentation) -> str:
    data = {
        "m": p.m,
        "term_signs": list(p.term_signs),
        "generators": [
            {
                "name": g.name,
                "kind": g.kind,
                "degree": g.degree,
                "src": g.src,
                "dst": g.dst,
                "grade": g.grade,
                "partner": g.partner,
            }
            for g in p.generators
        ],
        "differential": {
            name: [{"path": list(path), "coeff": c} for path, c in sorted(chain.items())]
            for name, chain in sorted(p.differential.items())
        },
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def import_presentation(text: str) -> GinzburgPresentation:
    data = json.loads(text)
    gens = tuple(
        DgGenerator(g["name"], g["kind"], g["degree"], g["src"], g["dst"], g.get("grade"), g.get("partner"))
        for g in data["generators"]
    )
    diff = {
        name: {tuple(t["path"]): t["coeff"] for t in terms}
        for name, terms in data["differential"].items()
    }
    return GinzburgPresentation(data["m"], gens, diff, tuple(data.get("term_signs", ())))
