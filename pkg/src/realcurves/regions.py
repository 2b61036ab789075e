"""Regions of the complement of a curve, colorings, index functions.

Cutting the surface along the ovals leaves one region per forest node plus
a base region per component (the l' annuli replace the base region on a
torus carrying noncontractible circles).  Region Euler characteristics
follow the carrier table: sphere 2, rp2 1, torus or annulus 0, oval
interior 1, each minus the number of ovals immediately inside.  Colors
alternate across every curve circle; color 1 contains the base region.
"""

from __future__ import annotations

from dataclasses import dataclass

from .models import CARRIER_CHI, SurfaceModel
from .scheme import (
    Oval,
    RealScheme,
    SchemeComponent,
    SchemeError,
    UnorientedSchemeError,
)


class IndexUndefinedError(SchemeError):
    """The requested index function does not exist for this scheme."""


@dataclass(frozen=True)
class Region:
    rid: int
    component: int
    chi: int
    depth: int
    color: int  # 1 or 2
    kind: str  # "root" | "interior" | "annulus"
    nonorientable: bool
    boundary: tuple[int, ...]


@dataclass(frozen=True)
class OvalInfo:
    oid: int
    component: int
    sign: int | None
    exterior_region: int
    interior_region: int


@dataclass(frozen=True)
class RegionDecomposition:
    regions: tuple[Region, ...]
    ovals: tuple[OvalInfo, ...]
    # (annulus_rid, next_annulus_rid, circle id, circle sign) per crossing
    torus_links: tuple[tuple[int, int, int, int | None], ...]
    component_count: int

    @property
    def chi_total(self) -> int:
        return sum(r.chi for r in self.regions)

    def color_chi(self, color: int) -> int:
        return sum(r.chi for r in self.regions if r.color == color)

    def component_color_chi(self, component: int, color: int) -> int:
        return sum(
            r.chi
            for r in self.regions
            if r.component == component and r.color == color
        )

    def component_regions(self, component: int) -> tuple[Region, ...]:
        return tuple(r for r in self.regions if r.component == component)

    def to_json_rows(self, index_values=None) -> list[dict]:
        rows = []
        for r in self.regions:
            rows.append(
                {
                    "chi": r.chi,
                    "depth": r.depth,
                    "color": r.color,
                    "index": None if index_values is None else index_values[r.rid],
                }
            )
        return rows


def _match_components(scheme: RealScheme, model: SurfaceModel) -> list[tuple[SchemeComponent, str]]:
    carriers = model.carriers()
    tags = model.tags()
    comps = scheme.components
    if len(comps) != len(carriers):
        raise SchemeError(
            f"scheme has {len(comps)} components, model expects {len(carriers)}"
        )
    if any(c.tag for c in comps) and any(tags):
        by_tag = dict(zip(tags, carriers))
        matched = []
        for comp in comps:
            if comp.tag not in by_tag:
                raise SchemeError(f"model has no component tagged {comp.tag!r}")
            matched.append((comp, by_tag[comp.tag]))
        return matched
    return list(zip(comps, carriers))


def decompose(scheme: RealScheme, model: SurfaceModel) -> RegionDecomposition:
    """One region per face of the curve arrangement, with chi and colors."""
    regions: list[Region] = []
    ovals: list[OvalInfo] = []
    links: list[tuple[int, int, int, int | None]] = []
    next_rid = 0
    next_oid = 0

    def add_region(component, chi, depth, kind, nonorientable, boundary):
        nonlocal next_rid
        region = Region(
            rid=next_rid,
            component=component,
            chi=chi,
            depth=depth,
            color=1 + depth % 2,
            kind=kind,
            nonorientable=nonorientable,
            boundary=tuple(boundary),
        )
        regions.append(region)
        next_rid += 1
        return region.rid

    def walk(component: int, forest: tuple[Oval, ...], exterior_rid: int, depth: int):
        nonlocal next_oid
        ids = []
        for oval in forest:
            oid = next_oid
            next_oid += 1
            ids.append(oid)
            interior = add_region(
                component,
                chi=1 - len(oval.children),
                depth=depth,
                kind="interior",
                nonorientable=False,
                boundary=(oid,),
            )
            child_ids = walk(component, oval.children, interior, depth + 1)
            regions[interior] = Region(
                rid=interior,
                component=component,
                chi=regions[interior].chi,
                depth=depth,
                color=regions[interior].color,
                kind="interior",
                nonorientable=False,
                boundary=(oid, *child_ids),
            )
            ovals.append(OvalInfo(oid, component, oval.sign, exterior_rid, interior))
        return ids

    for comp_index, (comp, carrier) in enumerate(_match_components(scheme, model)):
        if comp.noncontractible is not None:
            if carrier != "torus":
                raise SchemeError("noncontractible circles need a torus carrier")
            nc = comp.noncontractible
            circle_ids = list(range(next_oid, next_oid + nc.count))
            next_oid += nc.count
            annulus_rids = []
            for i, annulus in enumerate(nc.annuli):
                rid = add_region(
                    comp_index,
                    chi=-len(annulus),
                    depth=i,
                    kind="annulus",
                    nonorientable=False,
                    boundary=(),
                )
                annulus_rids.append(rid)
                root_ids = walk(comp_index, annulus, rid, i + 1)
                regions[rid] = Region(
                    rid=rid,
                    component=comp_index,
                    chi=regions[rid].chi,
                    depth=i,
                    color=regions[rid].color,
                    kind="annulus",
                    nonorientable=False,
                    boundary=(
                        circle_ids[i],
                        circle_ids[(i + 1) % nc.count],
                        *root_ids,
                    ),
                )
            for i in range(nc.count):
                links.append(
                    (
                        annulus_rids[i],
                        annulus_rids[(i + 1) % nc.count],
                        circle_ids[(i + 1) % nc.count],
                        nc.sign,
                    )
                )
        else:
            rid = add_region(
                comp_index,
                chi=CARRIER_CHI[carrier] - len(comp.forest),
                depth=0,
                kind="root",
                nonorientable=carrier == "rp2",
                boundary=(),
            )
            root_ids = walk(comp_index, comp.forest, rid, 1)
            regions[rid] = Region(
                rid=rid,
                component=comp_index,
                chi=regions[rid].chi,
                depth=0,
                color=1,
                kind="root",
                nonorientable=carrier == "rp2",
                boundary=tuple(root_ids),
            )

    return RegionDecomposition(
        regions=tuple(regions),
        ovals=tuple(ovals),
        torus_links=tuple(links),
        component_count=len(scheme.components),
    )


@dataclass(frozen=True)
class TwoColoring:
    """Euler characteristics of the two checkerboard halves."""

    chi1: int
    chi2: int
    per_component: tuple[tuple[int, int], ...]

    def swapped(self) -> "TwoColoring":
        return TwoColoring(
            self.chi2, self.chi1, tuple((b, a) for a, b in self.per_component)
        )

    def to_json_dict(self) -> dict:
        return {"chi1": self.chi1, "chi2": self.chi2}


def two_coloring(scheme: RealScheme, model: SurfaceModel) -> TwoColoring:
    """Checkerboard coloring sums; color 1 holds the marked base region."""
    for comp in scheme.components:
        nc = comp.noncontractible
        if nc is not None and nc.count % 2:
            raise SchemeError(
                "no checkerboard coloring: odd number of noncontractible circles"
            )
    deco = decompose(scheme, model)
    per = tuple(
        (deco.component_color_chi(c, 1), deco.component_color_chi(c, 2))
        for c in range(deco.component_count)
    )
    return TwoColoring(deco.color_chi(1), deco.color_chi(2), per)


_RING_MODULUS = {"Z": 0, "Z2": 2, "Z4": 4, "Z8": 8}


@dataclass(frozen=True)
class IndexFunction:
    ring: str
    modulus: int  # 0 means the integers
    values: tuple[int, ...]
    x_infinity: int
    decomposition: RegionDecomposition


def index_function(
    scheme: RealScheme,
    model: SurfaceModel,
    ring: str = "Z",
    x_infinity: int | None = None,
) -> IndexFunction:
    """Linking index of each region relative to the base region.

    The value jumps by the oval's sign entering its interior and by the
    family sign crossing a noncontractible circle.  Needs an oriented
    scheme on a connected carrier; on a torus with l' circles the ring
    must satisfy l' = 0, and on an rp2 carrier the base region must be
    the nonorientable root so its complement is orientable.
    """
    if ring not in _RING_MODULUS:
        raise SchemeError(f"unknown ring {ring!r}")
    if len(scheme.components) != 1:
        raise SchemeError("index functions need a connected carrier")
    if not scheme.oriented and scheme.curve_component_count > 0:
        raise UnorientedSchemeError("index functions need an oriented scheme")
    modulus = _RING_MODULUS[ring]
    deco = decompose(scheme, model)
    carrier = model.carriers()[0]
    base = 0 if x_infinity is None else x_infinity
    if not 0 <= base < len(deco.regions):
        raise SchemeError(f"no region {base}")
    if carrier == "rp2" and deco.regions[base].kind != "root":
        raise SchemeError(
            "on a nonorientable carrier the base region must be the root"
        )
    comp = scheme.components[0]
    if comp.noncontractible is not None:
        count = comp.noncontractible.count
        if modulus == 0 or count % modulus != 0:
            raise IndexUndefinedError(
                f"index over {ring} needs the winding count {count} to vanish"
            )

    values: dict[int, int] = {base: 0}
    edges: dict[int, list[tuple[int, int]]] = {r.rid: [] for r in deco.regions}
    for info in deco.ovals:
        jump = info.sign if info.sign is not None else 0
        edges[info.exterior_region].append((info.interior_region, jump))
        edges[info.interior_region].append((info.exterior_region, -jump))
    for rid_from, rid_to, _, sign in deco.torus_links:
        jump = sign if sign is not None else 0
        edges[rid_from].append((rid_to, jump))
        edges[rid_to].append((rid_from, -jump))

    queue = [base]
    while queue:
        rid = queue.pop()
        for nxt, jump in edges[rid]:
            value = values[rid] + jump
            if modulus:
                value %= modulus
            if nxt in values:
                if values[nxt] != value:
                    raise IndexUndefinedError("index values are inconsistent")
            else:
                values[nxt] = value
                queue.append(nxt)

    return IndexFunction(
        ring=ring,
        modulus=modulus,
        values=tuple(values[r.rid] for r in deco.regions),
        x_infinity=base,
        decomposition=deco,
    )


def square_modulus(modulus: int) -> int:
    """Squares of residues mod m are well defined mod 2m (m even)."""
    return 2 * modulus if modulus else 0


def euler_integral_sq(
    f: IndexFunction, decomposition: RegionDecomposition | None = None
) -> int:
    """Integral of the squared index against the Euler characteristic."""
    deco = decomposition if decomposition is not None else f.decomposition
    if len(deco.regions) != len(f.values):
        raise SchemeError("index function does not match the decomposition")
    sq_mod = square_modulus(f.modulus)
    total = 0
    for region in deco.regions:
        v = f.values[region.rid]
        sq = v * v
        if sq_mod:
            sq %= sq_mod
        total += region.chi * sq
    return total % sq_mod if sq_mod else total


def curve_component_ids(scheme: RealScheme) -> tuple[tuple[int, ...], ...]:
    """Curve component ids grouped by surface component.

    Ids follow the decomposition numbering: on a winding component the
    noncontractible circles come first, then the ovals in canonical
    depth-first order.
    """
    groups = []
    next_id = 0

    def count_forest(forest):
        nonlocal next_id
        for oval in forest:
            next_id += 1
            count_forest(oval.children)

    for comp in scheme.components:
        start = next_id
        if comp.noncontractible is not None:
            next_id += comp.noncontractible.count
            for annulus in comp.noncontractible.annuli:
                count_forest(annulus)
        else:
            count_forest(comp.forest)
        groups.append(tuple(range(start, next_id)))
    return tuple(groups)


def disorienting_count_check(scheme: RealScheme, disorienting_ids) -> bool:
    """True when every surface component holds an even number of marks."""
    marks = set(disorienting_ids)
    for group in curve_component_ids(scheme):
        if len(marks.intersection(group)) % 2:
            return False
    return True
