"""Real schemes: oval forests on surface components, with notation.

A scheme records the topological type of a curve on a surface as a forest
of ovals per surface component, optionally decorated with orientation
signs, plus an optional family of noncontractible circles on a torus
component (count l', primitive class (s, t), and the oval contents of the
l' annuli between consecutive circles).

Text notation (ASCII, whitespace ignored, "⊔" accepted for "u"):

    scheme     := "0" | item ("u" item)*
    item       := NUM SIGN? ("<" scheme ">")?
    component  := "@" TAG "(" body ")"
    input      := body | component ("u" component)*
    body       := scheme | winding
    winding    := "nc(" L "," S "," T ")" SIGN? "{" scheme ("|" scheme)* "}"

"n" means n empty ovals, "n<S>" n disjoint ovals each containing an
independent copy of S, SIGN in {+, -} an orientation flag ("index rises
by one entering the interior" when +).  A winding wrapper must supply
exactly L annulus slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class SchemeError(ValueError):
    """Invalid scheme data."""


class SchemeSyntaxError(SchemeError):
    """Notation that does not match the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class UnorientedSchemeError(SchemeError):
    """An operation needing orientations got an unoriented scheme."""


_SIGN_CHAR = {1: "+", -1: "-", None: ""}


@dataclass(frozen=True)
class Oval:
    """One oval with the forest of ovals immediately inside it."""

    sign: int | None = None
    children: tuple["Oval", ...] = ()

    def __post_init__(self) -> None:
        if self.sign not in (None, 1, -1):
            raise SchemeError("oval sign must be +1, -1 or None")
        object.__setattr__(self, "children", sort_forest(self.children))

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)


def _oval_text(oval: Oval, count: int = 1) -> str:
    text = f"{count}{_SIGN_CHAR[oval.sign]}"
    if oval.children:
        text += f"<{forest_text(oval.children)}>"
    return text


def _oval_key(oval: Oval) -> tuple[int, str]:
    return (oval.size, _oval_text(oval))


def sort_forest(ovals: tuple[Oval, ...]) -> tuple[Oval, ...]:
    """Canonical sibling order: subtree size, then printed form."""
    return tuple(sorted(ovals, key=_oval_key))


def forest_text(ovals: tuple[Oval, ...]) -> str:
    """Canonical text of a forest; equal siblings merge into counts."""
    if not ovals:
        return "0"
    parts = []
    i = 0
    while i < len(ovals):
        j = i
        while j < len(ovals) and ovals[j] == ovals[i]:
            j += 1
        parts.append(_oval_text(ovals[i], count=j - i))
        i = j
    return "u".join(parts)


@dataclass(frozen=True)
class NoncontractibleFamily:
    """l' parallel noncontractible circles of class (s, t) on a torus."""

    count: int
    s: int
    t: int
    sign: int | None
    annuli: tuple[tuple[Oval, ...], ...]

    def __post_init__(self) -> None:
        if self.count < 1:
            raise SchemeError("noncontractible count must be at least 1")
        if len(self.annuli) != self.count:
            raise SchemeError(
                f"expected {self.count} annulus slots, got {len(self.annuli)}"
            )
        if self.s < 0 or self.t < 0 or (self.s == 0 and self.t == 0):
            raise SchemeError("class (s, t) must be nonnegative and nonzero")
        if gcd(self.s, self.t) != 1:
            raise SchemeError("s and t must be coprime")
        if self.sign not in (None, 1, -1):
            raise SchemeError("orientation sign must be +1, -1 or None")
        object.__setattr__(self, "annuli", tuple(sort_forest(a) for a in self.annuli))


@dataclass(frozen=True)
class SchemeComponent:
    """Scheme on one surface component."""

    tag: str = ""
    forest: tuple[Oval, ...] = ()
    noncontractible: NoncontractibleFamily | None = None

    def __post_init__(self) -> None:
        if self.noncontractible is not None and self.forest:
            raise SchemeError(
                "a component with noncontractible circles keeps its ovals "
                "inside the annulus slots"
            )
        object.__setattr__(self, "forest", sort_forest(self.forest))

    def oval_forests(self) -> tuple[tuple[Oval, ...], ...]:
        if self.noncontractible is not None:
            return self.noncontractible.annuli
        return (self.forest,)

    @property
    def oval_count(self) -> int:
        return sum(o.size for forest in self.oval_forests() for o in forest)

    @property
    def curve_component_count(self) -> int:
        extra = self.noncontractible.count if self.noncontractible else 0
        return self.oval_count + extra


@dataclass(frozen=True)
class RealScheme:
    """A real scheme: one oval forest per surface component."""

    components: tuple[SchemeComponent, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise SchemeError("a scheme needs at least one component")
        tags = [c.tag for c in self.components]
        if len(set(tags)) != len(tags):
            raise SchemeError("component tags must be distinct")
        if len(self.components) > 1 and any(t == "" for t in tags):
            raise SchemeError("multi-component schemes need tags on every component")
        object.__setattr__(
            self, "components", tuple(sorted(self.components, key=lambda c: c.tag))
        )
        signs = self._signs()
        if any(s is None for s in signs) and any(s is not None for s in signs):
            raise SchemeError("orientation signs must appear on all ovals or none")

    def _signs(self) -> list[int | None]:
        signs: list[int | None] = []

        def walk(ovals):
            for o in ovals:
                signs.append(o.sign)
                walk(o.children)

        for comp in self.components:
            if comp.noncontractible is not None:
                signs.append(comp.noncontractible.sign)
                for annulus in comp.noncontractible.annuli:
                    walk(annulus)
            else:
                walk(comp.forest)
        return signs

    @property
    def oriented(self) -> bool:
        signs = self._signs()
        return bool(signs) and all(s is not None for s in signs)

    @property
    def oval_count(self) -> int:
        return sum(c.oval_count for c in self.components)

    @property
    def curve_component_count(self) -> int:
        return sum(c.curve_component_count for c in self.components)

    def forget_orientations(self) -> "RealScheme":
        def strip(o: Oval) -> Oval:
            return Oval(None, tuple(strip(c) for c in o.children))

        comps = []
        for comp in self.components:
            if comp.noncontractible is not None:
                nc = comp.noncontractible
                comps.append(
                    SchemeComponent(
                        comp.tag,
                        (),
                        NoncontractibleFamily(
                            nc.count,
                            nc.s,
                            nc.t,
                            None,
                            tuple(tuple(strip(o) for o in a) for a in nc.annuli),
                        ),
                    )
                )
            else:
                comps.append(SchemeComponent(comp.tag, tuple(strip(o) for o in comp.forest)))
        return RealScheme(tuple(comps))

    def reverse_orientations(self) -> "RealScheme":
        def flip(o: Oval) -> Oval:
            s = None if o.sign is None else -o.sign
            return Oval(s, tuple(flip(c) for c in o.children))

        comps = []
        for comp in self.components:
            if comp.noncontractible is not None:
                nc = comp.noncontractible
                s = None if nc.sign is None else -nc.sign
                comps.append(
                    SchemeComponent(
                        comp.tag,
                        (),
                        NoncontractibleFamily(
                            nc.count,
                            nc.s,
                            nc.t,
                            s,
                            tuple(tuple(flip(o) for o in a) for a in nc.annuli),
                        ),
                    )
                )
            else:
                comps.append(SchemeComponent(comp.tag, tuple(flip(o) for o in comp.forest)))
        return RealScheme(tuple(comps))


def single_component(
    forest: tuple[Oval, ...] = (),
    noncontractible: NoncontractibleFamily | None = None,
    tag: str = "",
) -> RealScheme:
    return RealScheme((SchemeComponent(tag, forest, noncontractible),))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> SchemeSyntaxError:
        return SchemeSyntaxError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_separator(self) -> bool:
        ch = self.peek()
        return ch in ("u", "⊔")

    def take(self, expected: str) -> None:
        self.skip_ws()
        if not self.text.startswith(expected, self.pos):
            raise self.error(f"expected '{expected}'")
        self.pos += len(expected)

    def take_separator(self) -> None:
        self.skip_ws()
        ch = self.peek()
        if ch not in ("u", "⊔"):
            raise self.error("expected 'u'")
        self.pos += 1

    def number(self, allow_zero: bool = False) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        value = int(self.text[start : self.pos])
        if value == 0 and not allow_zero:
            self.pos = start
            raise self.error("count must be positive")
        return value

    def sign(self) -> int | None:
        ch = self.peek()
        if ch == "+":
            self.pos += 1
            return 1
        if ch == "-":
            self.pos += 1
            return -1
        return None

    def forest(self) -> tuple[Oval, ...]:
        self.skip_ws()
        if self.peek() == "0":
            mark = self.pos
            self.pos += 1
            if self.peek().isdigit():
                self.pos = mark
                raise self.error("count must not have leading zero")
            if self.at_separator():
                raise self.error("'0' stands alone, it cannot join other items")
            return ()
        ovals = list(self.item())
        while self.at_separator():
            self.take_separator()
            ovals.extend(self.item())
        return tuple(ovals)

    def item(self) -> tuple[Oval, ...]:
        count = self.number()
        sign = self.sign()
        children: tuple[Oval, ...] = ()
        if self.peek() == "<":
            self.take("<")
            children = self.forest()
            self.take(">")
        return tuple(Oval(sign, children) for _ in range(count))

    def winding(self) -> NoncontractibleFamily:
        self.take("nc")
        self.take("(")
        count = self.number()
        self.take(",")
        s = self.number(allow_zero=True)
        self.take(",")
        t = self.number(allow_zero=True)
        self.take(")")
        sign = self.sign()
        self.take("{")
        annuli = [self.forest()]
        while self.peek() == "|":
            self.take("|")
            annuli.append(self.forest())
        self.take("}")
        if len(annuli) != count:
            raise self.error(f"winding declares {count} annuli, found {len(annuli)}")
        try:
            return NoncontractibleFamily(count, s, t, sign, tuple(annuli))
        except SchemeError as exc:
            raise self.error(str(exc)) from exc

    def body(self, tag: str) -> SchemeComponent:
        self.skip_ws()
        if self.text.startswith("nc", self.pos):
            return SchemeComponent(tag, (), self.winding())
        return SchemeComponent(tag, self.forest())

    def component(self) -> SchemeComponent:
        self.take("@")
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        tag = self.text[start : self.pos]
        if not tag:
            raise self.error("expected a component tag after '@'")
        self.take("(")
        comp = self.body(tag)
        self.take(")")
        return comp

    def parse(self) -> RealScheme:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("empty input")
        if self.peek() == "@":
            comps = [self.component()]
            while self.at_separator():
                self.take_separator()
                comps.append(self.component())
            scheme = RealScheme(tuple(comps))
        else:
            scheme = RealScheme((self.body(""),))
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input after scheme")
        return scheme


def parse_scheme(text: str) -> RealScheme:
    """Parse scheme notation; see the module docstring for the grammar."""
    try:
        return _Parser(text).parse()
    except SchemeError as exc:
        if isinstance(exc, SchemeSyntaxError):
            raise
        raise SchemeSyntaxError(str(exc), 0) from exc


def _component_text(comp: SchemeComponent) -> str:
    if comp.noncontractible is not None:
        nc = comp.noncontractible
        slots = "|".join(forest_text(a) for a in nc.annuli)
        return f"nc({nc.count},{nc.s},{nc.t}){_SIGN_CHAR[nc.sign]}{{{slots}}}"
    return forest_text(comp.forest)


def print_scheme(scheme: RealScheme) -> str:
    """Canonical text form; parse(print(s)) == s."""
    if len(scheme.components) == 1 and scheme.components[0].tag == "":
        return _component_text(scheme.components[0])
    return " u ".join(
        f"@{c.tag}({_component_text(c)})" for c in scheme.components
    )
