"""Ambient surface models and curve class data.

A SurfaceModel bundles the numeric constants of the ambient pair that the
congruence checkers consume: Euler characteristic of the real part,
signature of the complexification, normal Euler number of the complex
curve, degree data, and the carrier type of each real component.  The
catalog constructors supply certified constants for the standard models;
``custom_model`` accepts raw numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod


class ModelError(ValueError):
    """Inconsistent model data."""


CARRIER_CHI = {"sphere": 2, "rp2": 1, "torus": 0}


@dataclass(frozen=True)
class SurfaceModel:
    kind: str
    chi_rb: int | None
    sigma_cb: int | None
    e_a: int | None
    degrees: tuple[int, ...]
    components: tuple[tuple[str, str], ...]  # (tag, carrier)
    characteristic_type: bool
    characteristic_reason: str = ""

    def __post_init__(self) -> None:
        for _, carrier in self.components:
            if carrier not in CARRIER_CHI:
                raise ModelError(f"unknown carrier {carrier!r}")
        if self.chi_rb is not None and self.components:
            total = sum(CARRIER_CHI[c] for _, c in self.components)
            if total != self.chi_rb:
                raise ModelError(
                    f"chi of components sums to {total}, model declares {self.chi_rb}"
                )

    @property
    def e_rb(self) -> int | None:
        # algebraic convention: the normal obstruction equals -chi
        return None if self.chi_rb is None else -self.chi_rb

    def carriers(self) -> tuple[str, ...]:
        return tuple(carrier for _, carrier in self.components)

    def tags(self) -> tuple[str, ...]:
        return tuple(tag for tag, _ in self.components)


def ellipsoid_model(d: int) -> SurfaceModel:
    """Sphere in the quadric, curves of bidegree (d, d)."""
    if d < 1:
        raise ModelError("degree must be positive")
    odd = d % 2 == 1
    return SurfaceModel(
        kind="ellipsoid",
        chi_rb=2,
        sigma_cb=0,
        e_a=2 * d * d,
        degrees=(d, d),
        components=(("", "sphere"),),
        characteristic_type=odd,
        characteristic_reason="relative type I" if odd else "even bidegree",
    )


def hyperboloid_model(d: int, r: int) -> SurfaceModel:
    """Torus in the quadric, curves of bidegree (d, r)."""
    if d < 1 or r < 1:
        raise ModelError("bidegree entries must be positive")
    return SurfaceModel(
        kind="hyperboloid",
        chi_rb=0,
        sigma_cb=0,
        e_a=2 * d * r,
        degrees=(d, r),
        components=(("", "torus"),),
        characteristic_type=True,
        characteristic_reason="holds when the winding count is 0 mod 4",
    )


def plane_double_cover_model(k: int) -> SurfaceModel:
    """Double cover of the plane branched along a degree-2k curve."""
    if k < 1:
        raise ModelError("k must be positive")
    return SurfaceModel(
        kind="plane-double-cover",
        chi_rb=None,
        sigma_cb=2 - 2 * k * k,
        e_a=None,
        degrees=(2 * k,),
        components=(("", "rp2"),),
        characteristic_type=True,
        characteristic_reason="branched double cover of the plane",
    )


def cubic_disjoint_model() -> SurfaceModel:
    """Non-connected cubic surface (rp2 plus sphere), degree-2 curves."""
    return SurfaceModel(
        kind="cubic-disjoint",
        chi_rb=3,
        sigma_cb=-5,
        e_a=12,
        degrees=(3, 2),
        components=(("rp2", "rp2"), ("s2", "sphere")),
        characteristic_type=True,
        characteristic_reason="relative type I",
    )


def complete_intersection_model(
    degrees: tuple[int, ...],
    chi_rb: int | None = None,
    sigma_cb: int | None = None,
    components: tuple[tuple[str, str], ...] = (),
    characteristic_type: bool = True,
) -> SurfaceModel:
    if len(degrees) < 2:
        raise ModelError("need surface degrees plus the curve degree")
    ms = degrees[-1]
    return SurfaceModel(
        kind="complete-intersection",
        chi_rb=chi_rb,
        sigma_cb=sigma_cb,
        e_a=prod(degrees[:-1]) * ms * ms,
        degrees=tuple(degrees),
        components=components,
        characteristic_type=characteristic_type,
        characteristic_reason="supplied",
    )


def custom_model(
    chi_rb: int,
    sigma_cb: int,
    e_a: int,
    characteristic_type: bool = True,
    components: tuple[tuple[str, str], ...] = (),
) -> SurfaceModel:
    return SurfaceModel(
        kind="custom",
        chi_rb=chi_rb,
        sigma_cb=sigma_cb,
        e_a=e_a,
        degrees=(),
        components=components,
        characteristic_type=characteristic_type,
        characteristic_reason="supplied",
    )


def harnack_bound(model: SurfaceModel) -> int:
    """Largest possible number of curve components (genus plus one)."""
    if model.kind in ("ellipsoid", "hyperboloid"):
        d, r = model.degrees
        return (d - 1) * (r - 1) + 1
    if model.kind == "plane-double-cover":
        (m,) = model.degrees
        return (m - 1) * (m - 2) // 2 + 1
    if model.kind in ("cubic-disjoint", "complete-intersection"):
        degrees = model.degrees
        deg = prod(degrees)
        twice = deg * (sum(degrees) - len(degrees) - 2)
        if twice % 2:
            raise ModelError("degree data gives a non-integral genus")
        return twice // 2 + 2
    raise ModelError(f"no genus data for model kind {model.kind!r}")


@dataclass(frozen=True)
class CurveClass:
    """Deficiency j in "(M-j)-curve", separation type, component data."""

    deficiency: int | None
    type_flag: str = "unknown"  # "I" | "II" | "unknown"
    component_count: int | None = None
    disorienting: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.type_flag not in ("I", "II", "unknown"):
            raise ModelError("type_flag must be I, II or unknown")
        if self.deficiency is not None and self.deficiency < 0:
            raise ModelError("deficiency must be nonnegative")


def curve_class_for(
    model: SurfaceModel, component_count: int, type_flag: str = "unknown"
) -> CurveClass:
    """Curve class with the deficiency derived from the Harnack bound."""
    bound = harnack_bound(model)
    j = bound - component_count
    if j < 0:
        raise ModelError(
            f"{component_count} components exceed the bound {bound} for this model"
        )
    return CurveClass(deficiency=j, type_flag=type_flag, component_count=component_count)
