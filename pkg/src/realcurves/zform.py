"""Z4-valued quadratic forms on finite Z2 vector spaces.

A form is stored by a symmetric Z2 intersection pairing together with the
Z4 values on a chosen basis; values on arbitrary vectors are forced by the
quadratic law q(x+y) = q(x) + q(y) + 2(x.y).  The Brown invariant is read
off the complex Gauss sum S = sum_x i^q(x), computed in exact integer
arithmetic: S is either zero (degenerate radical, no invariant) or a
positive real multiple of an eighth root of unity e^(2*pi*i*beta/8).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class FormError(ValueError):
    """Malformed form data or an invalid form operation."""


@dataclass(frozen=True)
class BrownValue:
    """A residue mod 8, or None when the Gauss sum vanishes."""

    value: int | None

    @property
    def informative(self) -> bool:
        return self.value is not None

    def to_json(self) -> int | str:
        return self.value if self.value is not None else "non-informative"

    def __str__(self) -> str:
        return str(self.to_json())


@dataclass(frozen=True)
class Z4Form:
    """Quadratic refinement of a symmetric Z2 pairing, valued in Z4.

    ``pairing`` is a dim x dim symmetric 0/1 matrix, ``values`` the Z4
    values on the basis vectors.  Parity compatibility q(e_i) = e_i.e_i
    (mod 2) is required; together with the quadratic law it gives
    q(x) = x.x (mod 2) for every x.
    """

    dim: int
    pairing: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise FormError("dim must be nonnegative")
        if len(self.pairing) != self.dim or len(self.values) != self.dim:
            raise FormError("pairing/values size does not match dim")
        for i, row in enumerate(self.pairing):
            if len(row) != self.dim:
                raise FormError("pairing is not square")
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise FormError("pairing entries must be 0 or 1")
                if self.pairing[j][i] != entry:
                    raise FormError("pairing must be symmetric")
        for i, v in enumerate(self.values):
            if v not in (0, 1, 2, 3):
                raise FormError("basis values must lie in Z4")
            if v % 2 != self.pairing[i][i] % 2:
                raise FormError(
                    f"value q(e_{i})={v} has wrong parity for self-intersection "
                    f"{self.pairing[i][i]}"
                )

    @classmethod
    def from_lists(cls, pairing: Sequence[Sequence[int]], values: Sequence[int]) -> "Z4Form":
        return cls(
            dim=len(values),
            pairing=tuple(tuple(int(e) for e in row) for row in pairing),
            values=tuple(int(v) for v in values),
        )

    @classmethod
    def from_json_dict(cls, data: dict) -> "Z4Form":
        try:
            dim = int(data["dim"])
            pairing = data["pairing"]
            values = data["values"]
        except (KeyError, TypeError) as exc:
            raise FormError(f"form object needs dim/pairing/values: {exc}") from exc
        form = cls.from_lists(pairing, values)
        if form.dim != dim:
            raise FormError("declared dim does not match pairing/values")
        return form

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "pairing": [list(row) for row in self.pairing],
            "values": list(self.values),
        }


EMPTY_FORM = Z4Form(0, (), ())


def evaluate(form: Z4Form, x: Sequence[int]) -> int:
    """Value of the form on a Z2 vector, extended by the quadratic law.

    Expanding x over the support gives the closed form
    q(x) = sum_i q(e_i) + 2 * sum_{i<j} e_i.e_j, independent of expansion
    order.
    """
    if len(x) != form.dim:
        raise FormError(f"vector has length {len(x)}, form has dim {form.dim}")
    support = [i for i, bit in enumerate(x) if bit % 2]
    total = 0
    for a, i in enumerate(support):
        total += form.values[i]
        for j in support[a + 1 :]:
            total += 2 * form.pairing[i][j]
    return total % 4


def pair(form: Z4Form, x: Sequence[int], y: Sequence[int]) -> int:
    """Z2 intersection pairing x.y."""
    if len(x) != form.dim or len(y) != form.dim:
        raise FormError("vector length does not match form dim")
    total = 0
    for i, xi in enumerate(x):
        if xi % 2 == 0:
            continue
        for j, yj in enumerate(y):
            if yj % 2:
                total += form.pairing[i][j]
    return total % 2


def gauss_sum(form: Z4Form) -> tuple[int, int]:
    """The complex Gauss sum sum_x i^q(x) as an exact (re, im) pair."""
    re, im = 0, 0
    for mask in range(1 << form.dim):
        q = evaluate(form, [(mask >> i) & 1 for i in range(form.dim)])
        if q == 0:
            re += 1
        elif q == 1:
            im += 1
        elif q == 2:
            re -= 1
        else:
            im -= 1
    return re, im


def brown_invariant(form: Z4Form) -> BrownValue:
    """Brown invariant beta mod 8, or non-informative when the sum is 0."""
    re, im = gauss_sum(form)
    if re == 0 and im == 0:
        return BrownValue(None)
    if im == 0:
        return BrownValue(0 if re > 0 else 4)
    if re == 0:
        return BrownValue(2 if im > 0 else 6)
    if abs(re) == abs(im):
        if re > 0:
            return BrownValue(1 if im > 0 else 7)
        return BrownValue(3 if im > 0 else 5)
    raise FormError("Gauss sum is not a scaled eighth root of unity")


def direct_sum(a: Z4Form, b: Z4Form) -> Z4Form:
    """Block-diagonal sum; the Brown invariant is additive over it."""
    n, m = a.dim, b.dim
    pairing = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            pairing[i][j] = a.pairing[i][j]
    for i in range(m):
        for j in range(m):
            pairing[n + i][n + j] = b.pairing[i][j]
    return Z4Form(n + m, tuple(tuple(row) for row in pairing), a.values + b.values)


def _z2_rank(vectors: Iterable[Sequence[int]], dim: int) -> int:
    rows = []
    for v in vectors:
        mask = 0
        for i, bit in enumerate(v):
            if bit % 2:
                mask |= 1 << i
        rows.append(mask)
    rank = 0
    for col in range(dim):
        pivot = None
        for r in range(rank, len(rows)):
            if (rows[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and (rows[r] >> col) & 1:
                rows[r] ^= rows[rank]
        rank += 1
    return rank


def restrict(form: Z4Form, basis: Sequence[Sequence[int]]) -> Z4Form:
    """The induced form on the subspace spanned by independent vectors."""
    vectors = [tuple(int(b) % 2 for b in v) for v in basis]
    for v in vectors:
        if len(v) != form.dim:
            raise FormError("basis vector length does not match form dim")
    if _z2_rank(vectors, form.dim) != len(vectors):
        raise FormError("spanning set is linearly dependent over Z2")
    k = len(vectors)
    pairing = tuple(
        tuple(pair(form, vectors[i], vectors[j]) for j in range(k)) for i in range(k)
    )
    values = tuple(evaluate(form, v) for v in vectors)
    return Z4Form(k, pairing, values)


def is_even(form: Z4Form) -> bool:
    """True when every value of the form lies in {0, 2}."""
    for mask in range(1 << form.dim):
        q = evaluate(form, [(mask >> i) & 1 for i in range(form.dim)])
        if q % 2:
            return False
    return True


def klein_bottle_form(variant: int) -> Z4Form:
    """Standard Klein bottle summand with the chosen value on the null fiber.

    The pairing is [[1,0],[0,0]]; the disorienting core carries value 1 and
    ``variant`` in {0, 2} is the value on the fiber class.
    """
    if variant not in (0, 2):
        raise FormError("variant must be 0 or 2")
    return Z4Form(2, ((1, 0), (0, 0)), (1, variant))
