import pytest

from realcurves.classify import (
    BIDEGREE33_CONSTRUCTED,
    CUBIC_DEGREE2_CONSTRUCTED,
    M55_OPEN_SCHEMES,
    ClassificationResult,
    EnumerationSpec,
    classify_cubic_degree2,
    classify_ellipsoid,
    classify_m55,
    enumerate_forests,
    forest_count_reference,
    forest_from_levels,
    iter_forests,
    run_filters,
    tree_level_sequences,
    _m55_survives,
)
from realcurves.congruence import FAIL, PASS
from realcurves.models import curve_class_for, ellipsoid_model
from realcurves.regions import two_coloring
from realcurves.scheme import SchemeError, parse_scheme, print_scheme, single_component


def test_enumerate_single_oval():
    assert [print_scheme(s) for s in enumerate_forests(1)] == ["1"]


def test_enumerate_empty():
    assert [print_scheme(s) for s in enumerate_forests(0)] == ["0"]


def test_enumerate_three_ovals():
    texts = {print_scheme(s) for s in enumerate_forests(3)}
    assert texts == {"3", "1u1<1>", "1<2>", "1<1<1>>"}


def test_enumerate_counts_match_reference():
    for n in range(13):
        assert len(list(iter_forests(n))) == forest_count_reference(n), n


def test_reference_counts_first_values():
    # rooted forests on n nodes: 1, 1, 2, 4, 9, 20, 48, 115, ...
    expected = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842]
    assert [forest_count_reference(n) for n in range(11)] == expected


def test_enumerate_no_duplicates():
    for n in range(9):
        texts = [print_scheme(s) for s in enumerate_forests(n)]
        assert len(texts) == len(set(texts))


def test_enumeration_guard():
    with pytest.raises(SchemeError):
        enumerate_forests(21)


def test_classify_ellipsoid_d3_restrictions():
    result = classify_ellipsoid(3)
    rejected = set(result.rejected())
    survivors = set(result.survivors())
    for text in ["2u1<2>", "3u1<1>", "2u1<1>"]:
        assert print_scheme(parse_scheme(text)) in rejected, text
    for text in BIDEGREE33_CONSTRUCTED:
        assert text in survivors, text


def test_classify_ellipsoid_d3_family_members():
    # alpha ovals next to one oval with beta inside, alpha > beta,
    # alpha + beta <= 4, dropping the two schemes the congruence rejects
    result = classify_ellipsoid(3)
    family = [
        (alpha, beta)
        for alpha in range(5)
        for beta in range(5)
        if alpha > beta and alpha + beta <= 4
    ]
    for alpha, beta in family:
        text = f"{alpha}u1<{beta}>" if beta else f"{alpha}u1"
        entry = result.entry(text)
        if (alpha, beta) in ((2, 1), (3, 1)):
            assert not entry.admissible, (alpha, beta)
        else:
            assert entry.admissible, (alpha, beta)


def test_classify_ellipsoid_nest_forces_type_one():
    result = classify_ellipsoid(3)
    entry = result.entry("1<1<1>>")
    assert entry.admissible
    assert "forces-type-I" in entry.notes


def test_classify_is_deterministic():
    a = classify_ellipsoid(3)
    b = classify_ellipsoid(3)
    assert a.to_json_rows() == b.to_json_rows()


def test_classify_partition():
    result = classify_ellipsoid(3)
    total = len(result.survivors()) + len(result.rejected())
    assert total == len(result.entries)
    expected = sum(forest_count_reference(n) for n in range(6))
    assert total == expected


def test_rejection_notes_name_the_theorem():
    result = classify_ellipsoid(3)
    entry = result.entry("2u1<2>")
    assert any(n.startswith("rejected-by:") for n in entry.notes)


def test_filter_monotonicity():
    # adding the fiedler filter (inapplicable at odd degree) keeps the set
    base = classify_ellipsoid(3, filters=("ellipsoid",))
    more = classify_ellipsoid(3, filters=("ellipsoid", "fiedler"))
    assert set(more.survivors()) <= set(base.survivors())


def test_classify_cubic_all_listed_survive():
    result = classify_cubic_degree2()
    survivors = set(result.survivors())
    for text in CUBIC_DEGREE2_CONSTRUCTED:
        assert text in survivors, text


def test_classify_cubic_catalog_notes():
    result = classify_cubic_degree2()
    for entry in result.entries:
        if entry.admissible and entry.scheme not in CUBIC_DEGREE2_CONSTRUCTED:
            assert "admissible-but-not-in-construction-catalog" in entry.notes
        if entry.scheme in CUBIC_DEGREE2_CONSTRUCTED:
            assert "in-construction-catalog" in entry.notes


def test_classify_cubic_rejects_something():
    result = classify_cubic_degree2()
    assert len(result.rejected()) > 0
    assert print_scheme(parse_scheme("@rp2(1<1>) u @s2(3)")) in result.rejected()


def test_classify_cubic_row_count():
    # distributions of five ovals over the two components
    result = classify_cubic_degree2()
    counts = [forest_count_reference(n) for n in range(6)]
    assert len(result.entries) == sum(counts[a] * counts[5 - a] for a in range(6))


def test_m55_shortcut_matches_full_filter():
    # the level-parity shortcut agrees with the halves congruence
    model = ellipsoid_model(5)
    for n in range(0, 8):
        for levels in tree_level_sequences(n + 1):
            scheme = single_component(forest_from_levels(levels))
            col = two_coloring(scheme, model)
            even = sum(1 for lev in levels if lev % 2 == 0)
            ovals = n
            chi1 = 2 + (ovals - even) - even
            assert chi1 == col.chi1, levels


def test_m55_named_schemes_survive_shortcut():
    for text in M55_OPEN_SCHEMES:
        scheme = parse_scheme(text)
        col = two_coloring(scheme, ellipsoid_model(5))
        assert col.chi1 % 8 == 5 and col.chi2 % 8 == 5


def test_fast_printer_matches_object_path():
    from realcurves.classify import scheme_text_from_levels

    for n in range(0, 8):
        for levels in tree_level_sequences(n + 1):
            fast = scheme_text_from_levels(levels)
            slow = print_scheme(single_component(forest_from_levels(levels)))
            assert fast == slow, levels


def test_m55_small_budget_stops_early():
    result = classify_m55(node_budget=1000)
    assert result.total == 1000
    assert result.budget_exhausted


def test_run_filters_unknown_name():
    spec = EnumerationSpec("ellipsoid", (3, 3), filters=("nope",))
    with pytest.raises(SchemeError):
        run_filters(parse_scheme("1"), spec)


def test_run_filters_reports_everything():
    spec = EnumerationSpec("ellipsoid", (3, 3), filters=("ellipsoid", "fiedler"))
    reports = run_filters(parse_scheme("4u1"), spec)
    assert [r.theorem for r in reports] == [
        "ellipsoid-congruence",
        "fiedler-congruence",
    ]
