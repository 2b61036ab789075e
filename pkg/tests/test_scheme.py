import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realcurves.scheme import (
    NoncontractibleFamily,
    Oval,
    RealScheme,
    SchemeComponent,
    SchemeError,
    SchemeSyntaxError,
    parse_scheme,
    print_scheme,
    single_component,
)


def test_parse_nest_of_three():
    s = parse_scheme("1<1<1>>")
    assert s.oval_count == 3
    (comp,) = s.components
    (root,) = comp.forest
    (mid,) = root.children
    (inner,) = mid.children
    assert inner.children == ()


def test_parse_empty_scheme():
    s = parse_scheme("0")
    assert s.oval_count == 0
    assert print_scheme(s) == "0"


def test_parse_cubic_two_components():
    s = parse_scheme("@rp2(3u1<1>) u @s2(0)")
    assert len(s.components) == 2
    tags = [c.tag for c in s.components]
    assert tags == ["rp2", "s2"]
    assert s.components[0].oval_count == 5
    assert s.components[1].oval_count == 0


def test_round_trip_is_canonical():
    assert print_scheme(parse_scheme("2u1<2>")) == "2u1<2>"


def test_separate_empty_ovals_merge():
    assert print_scheme(parse_scheme("1u1")) == "2"
    assert print_scheme(parse_scheme("1 u 1 u 1")) == "3"


def test_sibling_order_is_canonical():
    assert print_scheme(parse_scheme("1<1>u3")) == print_scheme(parse_scheme("3u1<1>"))
    assert print_scheme(parse_scheme("1<1>u3")) == "3u1<1>"


def test_unicode_union_alias():
    assert parse_scheme("2⊔1<2>") == parse_scheme("2u1<2>")


def test_whitespace_ignored():
    assert parse_scheme(" 2 u 1 < 2 > ") == parse_scheme("2u1<2>")


def test_signs_round_trip():
    s = parse_scheme("1+<1->")
    assert print_scheme(s) == "1+<1->"
    assert s.oriented


def test_mixed_orientation_rejected():
    with pytest.raises(SchemeError):
        parse_scheme("1+u1")


def test_unbalanced_bracket_position():
    with pytest.raises(SchemeSyntaxError) as err:
        parse_scheme("2u1<2")
    assert err.value.position == 5


def test_zero_count_rejected():
    with pytest.raises(SchemeSyntaxError):
        parse_scheme("0u1")
    with pytest.raises(SchemeSyntaxError):
        parse_scheme("3u0")


def test_trailing_garbage_rejected():
    with pytest.raises(SchemeSyntaxError):
        parse_scheme("2u1<2>)")


def test_winding_parse_and_print():
    s = parse_scheme("nc(4,1,0)+{0|2+|0|0}")
    comp = s.components[0]
    nc = comp.noncontractible
    assert nc is not None
    assert (nc.count, nc.s, nc.t, nc.sign) == (4, 1, 0, 1)
    assert [len(a) for a in nc.annuli] == [0, 2, 0, 0]
    assert print_scheme(s) == "nc(4,1,0)+{0|2+|0|0}"


def test_winding_slot_count_must_match():
    with pytest.raises(SchemeSyntaxError):
        parse_scheme("nc(3,1,0){0|0}")


def test_winding_class_must_be_primitive():
    with pytest.raises(SchemeSyntaxError):
        parse_scheme("nc(2,2,4){0|0}")
    with pytest.raises(SchemeSyntaxError):
        parse_scheme("nc(2,0,0){0|0}")


def test_empty_input_rejected():
    with pytest.raises(SchemeSyntaxError):
        parse_scheme("   ")


def test_nested_zero_is_empty_interior():
    assert print_scheme(parse_scheme("1<0>")) == "1"


def test_orientation_helpers():
    s = parse_scheme("1+<1+>")
    assert print_scheme(s.reverse_orientations()) == "1-<1->"
    assert print_scheme(s.forget_orientations()) == "1<1>"


def test_component_tags_unique():
    with pytest.raises(SchemeError):
        RealScheme(
            (
                SchemeComponent("a", (Oval(),)),
                SchemeComponent("a", ()),
            )
        )


def test_single_component_helper():
    s = single_component((Oval(), Oval()))
    assert print_scheme(s) == "2"


@st.composite
def oval_forests(draw, max_ovals=8, signed=False):
    n = draw(st.integers(min_value=0, max_value=max_ovals))
    ovals = []
    for _ in range(n):
        parent = draw(st.integers(min_value=-1, max_value=len(ovals) - 1))
        sign = draw(st.sampled_from([1, -1])) if signed else None
        ovals.append((parent, sign))

    def build(idx):
        children = tuple(build(j) for j, (p, _) in enumerate(ovals) if p == idx)
        return Oval(ovals[idx][1], children)

    return tuple(build(i) for i, (p, _) in enumerate(ovals) if p == -1)


@given(oval_forests())
@settings(max_examples=300)
def test_parse_print_round_trip(forest):
    scheme = single_component(forest)
    assert parse_scheme(print_scheme(scheme)) == scheme


@given(oval_forests(signed=True))
@settings(max_examples=200)
def test_parse_print_round_trip_signed(forest):
    scheme = single_component(forest)
    assert parse_scheme(print_scheme(scheme)) == scheme


@given(oval_forests(max_ovals=5), oval_forests(max_ovals=5))
@settings(max_examples=100)
def test_multi_component_round_trip(f1, f2):
    scheme = RealScheme(
        (SchemeComponent("rp2", f1), SchemeComponent("s2", f2))
    )
    assert parse_scheme(print_scheme(scheme)) == scheme
