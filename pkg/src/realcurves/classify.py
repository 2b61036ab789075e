"""Enumerate candidate schemes and run the congruence filter pipeline.

Rooted oval forests are generated through canonical level sequences in
decreasing lexicographic order (one sequence per isomorphism class), so
two runs are byte-identical.  Drivers label every generated scheme with
the verdicts of the applicable checkers; a scheme counts as admissible
unless some applicable congruence fails.  Admissible never means
realizable: survivors outside the catalog of explicitly constructed
schemes are flagged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .congruence import (
    FAIL,
    FORCES_TYPE_I,
    CongruenceReport,
    disjoint_cubic_filter,
    ellipsoid_check,
    fiedler_check,
)
from .models import ellipsoid_model, harnack_bound
from .scheme import (
    Oval,
    RealScheme,
    SchemeComponent,
    SchemeError,
    print_scheme,
    single_component,
)

ENUMERATION_GUARD = 20

# Schemes realized by explicit constructions (classical results): the
# construction catalog used to annotate survivors.
BIDEGREE33_CONSTRUCTED = ("1<1<1>>", "2", "3", "4", "5")
CUBIC_DEGREE2_CONSTRUCTED = tuple(
    ["@rp2(3u1<1>) u @s2(0)", "@rp2(1<4>) u @s2(0)"]
    + [f"@rp2({a}) u @s2({5 - a})" for a in range(6)]
)
M55_OPEN_SCHEMES = ("1u1<6>u1<8>", "1u1<5>u1<9>")


def tree_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences of rooted trees on n nodes, root level 1."""
    if n <= 0:
        return
    levels = list(range(1, n + 1))
    while True:
        yield tuple(levels)
        p = -1
        for i in range(n - 1, 0, -1):
            if levels[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        d = p - q
        for i in range(p, n):
            levels[i] = levels[i - d]


def forest_from_levels(levels: tuple[int, ...]) -> tuple[Oval, ...]:
    """Oval forest of the tree rooted at the virtual level-1 node."""
    n = len(levels)
    children: list[list[int]] = [[] for _ in range(n)]
    stack = [0]
    for i in range(1, n):
        while levels[stack[-1]] != levels[i] - 1:
            stack.pop()
        children[stack[-1]].append(i)
        stack.append(i)

    def build(i: int) -> Oval:
        return Oval(None, tuple(build(c) for c in children[i]))

    return tuple(build(c) for c in children[0])


def _merge_groups(items: list[tuple[int, str]]) -> str:
    items.sort()
    parts = []
    i = 0
    while i < len(items):
        j = i
        while j < len(items) and items[j] == items[i]:
            j += 1
        text = items[i][1]
        count = j - i
        parts.append(text if count == 1 else str(count) + text[1:])
        i = j
    return "u".join(parts) if parts else "0"


def scheme_text_from_levels(levels: tuple[int, ...]) -> str:
    """Canonical scheme text straight from a level sequence.

    Equivalent to printing the forest built by forest_from_levels, but
    without constructing oval objects; used on large enumerations.
    """
    n = len(levels)
    children: list[list[int]] = [[] for _ in range(n)]
    stack = [0]
    for i in range(1, n):
        while levels[stack[-1]] != levels[i] - 1:
            stack.pop()
        children[stack[-1]].append(i)
        stack.append(i)
    size = [1] * n
    text = [""] * n
    for i in range(n - 1, 0, -1):
        kids = children[i]
        if kids:
            for c in kids:
                size[i] += size[c]
            inner = _merge_groups([(size[c], text[c]) for c in kids])
            text[i] = f"1<{inner}>"
        else:
            text[i] = "1"
    return _merge_groups([(size[c], text[c]) for c in children[0]])


def iter_forests(n_ovals: int) -> Iterator[tuple[Oval, ...]]:
    if n_ovals == 0:
        yield ()
        return
    for levels in tree_level_sequences(n_ovals + 1):
        yield forest_from_levels(levels)


def enumerate_forests(n_ovals: int, carrier: str = "sphere") -> list[RealScheme]:
    """All rooted oval forests with n ovals, as schemes on the carrier."""
    if n_ovals < 0:
        raise SchemeError("oval count must be nonnegative")
    if n_ovals > ENUMERATION_GUARD:
        raise SchemeError(f"enumeration guard: {n_ovals} > {ENUMERATION_GUARD}")
    if carrier not in ("sphere", "rp2", "torus"):
        raise SchemeError(f"unknown carrier {carrier!r}")
    return [single_component(forest) for forest in iter_forests(n_ovals)]


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate and which filters to run."""

    model_kind: str
    degrees: tuple[int, ...]
    jmax: int | None = None
    max_ovals: int | None = None
    filters: tuple[str, ...] = ()
    type_flag: str = "unknown"


@dataclass(frozen=True)
class SchemeEntry:
    scheme: str
    ovals: int
    deficiency: int
    verdicts: tuple[CongruenceReport, ...]
    admissible: bool
    notes: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "ovals": self.ovals,
            "deficiency": self.deficiency,
            "verdicts": [v.to_json_dict() for v in self.verdicts],
            "admissible": self.admissible,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ClassificationResult:
    entries: tuple[SchemeEntry, ...]

    def survivors(self) -> tuple[str, ...]:
        return tuple(e.scheme for e in self.entries if e.admissible)

    def rejected(self) -> tuple[str, ...]:
        return tuple(e.scheme for e in self.entries if not e.admissible)

    def entry(self, text: str) -> SchemeEntry:
        from .scheme import parse_scheme

        canonical = print_scheme(parse_scheme(text))
        for e in self.entries:
            if e.scheme == canonical:
                return e
        raise KeyError(text)

    def to_json_rows(self) -> list[dict]:
        return [e.to_json_dict() for e in self.entries]


def _entry_from_reports(
    scheme: RealScheme,
    deficiency: int,
    reports: tuple[CongruenceReport, ...],
    catalog: tuple[str, ...] | None,
) -> SchemeEntry:
    text = print_scheme(scheme)
    admissible = not any(r.verdict == FAIL for r in reports)
    notes = []
    if any(r.verdict == FORCES_TYPE_I for r in reports):
        notes.append("forces-type-I")
    if catalog is not None:
        if text in catalog:
            notes.append("in-construction-catalog")
        elif admissible:
            notes.append("admissible-but-not-in-construction-catalog")
    if not admissible:
        failing = next(r for r in reports if r.verdict == FAIL)
        notes.append(f"rejected-by:{failing.theorem}")
    return SchemeEntry(
        scheme=text,
        ovals=scheme.oval_count,
        deficiency=deficiency,
        verdicts=reports,
        admissible=admissible,
        notes=tuple(notes),
    )


def run_filters(
    scheme: RealScheme, spec: EnumerationSpec
) -> tuple[CongruenceReport, ...]:
    """Apply each named filter; every residue is reported, nothing short-circuits."""
    reports: list[CongruenceReport] = []
    for name in spec.filters:
        if name == "ellipsoid":
            reports.append(ellipsoid_check(scheme, spec.degrees[0]))
        elif name == "fiedler":
            reports.append(fiedler_check(scheme, spec.degrees[0]))
        elif name == "cubic":
            reports.append(disjoint_cubic_filter(scheme))
        else:
            raise SchemeError(f"unknown filter {name!r}")
    return tuple(reports)


def classify_ellipsoid(
    d: int, jmax: int | None = None, filters: tuple[str, ...] = ("ellipsoid",)
) -> ClassificationResult:
    """Label every scheme up to the component bound for bidegree (d, d)."""
    model = ellipsoid_model(d)
    bound = harnack_bound(model)
    if jmax is None:
        jmax = bound
    spec = EnumerationSpec(
        model_kind="ellipsoid", degrees=(d, d), jmax=jmax, filters=tuple(filters)
    )
    catalog = BIDEGREE33_CONSTRUCTED if d == 3 else None
    entries = []
    for n in range(max(0, bound - jmax), bound + 1):
        for scheme in enumerate_forests(n):
            reports = run_filters(scheme, spec)
            entries.append(
                _entry_from_reports(scheme, bound - n, reports, catalog)
            )
    return ClassificationResult(tuple(entries))


def classify_cubic_degree2(
    filters: tuple[str, ...] = ("cubic",)
) -> ClassificationResult:
    """Label all distributions of five ovals over the rp2 and sphere halves."""
    spec = EnumerationSpec(
        model_kind="cubic-disjoint", degrees=(3, 2), filters=tuple(filters)
    )
    entries = []
    for on_rp2 in range(6):
        for f1 in iter_forests(on_rp2):
            for f2 in iter_forests(5 - on_rp2):
                scheme = RealScheme(
                    (SchemeComponent("rp2", f1), SchemeComponent("s2", f2))
                )
                reports = run_filters(scheme, spec)
                entries.append(
                    _entry_from_reports(scheme, 0, reports, CUBIC_DEGREE2_CONSTRUCTED)
                )
    return ClassificationResult(tuple(entries))


@dataclass(frozen=True)
class M55Result:
    """Streamed survey of the 17-oval M-schemes of bidegree (5, 5)."""

    total: int
    survivor_count: int
    survivors: tuple[str, ...]
    rejected_count: int
    budget_exhausted: bool
    target_residue: int

    def to_json_dict(self, survivor_cap: int | None = 50) -> dict:
        shown = (
            list(self.survivors)
            if survivor_cap is None
            else list(self.survivors[:survivor_cap])
        )
        return {
            "total": self.total,
            "survivor_count": self.survivor_count,
            "rejected_count": self.rejected_count,
            "budget_exhausted": self.budget_exhausted,
            "target_residue": self.target_residue,
            "survivors_shown": len(shown),
            "survivors": shown,
        }


def _m55_survives(levels: tuple[int, ...]) -> bool:
    # chi of color 1 is 2 + (#ovals at odd levels) - (#ovals at even levels),
    # root at level 1; the M clause chi = 13 mod 8 reduces to
    # (#ovals at even levels) = 3 mod 4 for seventeen ovals
    even = 0
    for lev in levels:
        if lev % 2 == 0:
            even += 1
    return even % 4 == 3


def classify_m55(node_budget: int = 2_000_000) -> M55Result:
    """Run the halves congruence over all 17-oval schemes of bidegree (5, 5).

    Streams the enumeration under a forest budget; survivors are collected
    as canonical strings, rejected schemes only counted.
    """
    total = 0
    survivors: list[str] = []
    exhausted = False
    for levels in tree_level_sequences(18):
        if total >= node_budget:
            exhausted = True
            break
        total += 1
        if _m55_survives(levels):
            survivors.append(scheme_text_from_levels(levels))
    return M55Result(
        total=total,
        survivor_count=len(survivors),
        survivors=tuple(survivors),
        rejected_count=total - len(survivors),
        budget_exhausted=exhausted,
        target_residue=13 % 8,
    )


def forest_count_reference(n: int) -> int:
    """Rooted-forest count by the standard convolution recurrence.

    Used as the independent oracle for the enumerator: forests on n nodes
    correspond to rooted trees on n+1 nodes.
    """
    trees = [0, 1]
    for size in range(2, n + 2):
        total = 0
        for k in range(1, size):
            s = sum(d * trees[d] for d in range(1, k + 1) if k % d == 0)
            total += s * trees[size - k]
        trees.append(total // (size - 1))
    return trees[n + 1]
