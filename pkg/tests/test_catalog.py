from pathlib import Path

import pytest

from conftest import catalog_groups
from grouplab.catalog import (
    BUILTIN_CATALOG,
    CatalogEntry,
    CatalogError,
    builtin,
    builtin_catalog,
    fixture_problems,
    load_catalog,
    write_catalog,
)
from grouplab.classes import is_p_supersolvable, is_solvable
from grouplab.core import all_subgroups, normalizer
from grouplab.embeddings import is_s_semipermutable
from grouplab.groupfile import GroupFileError, parse_group_file, write_group_file
from grouplab.structure import nilpotency_class, sylow_subgroup

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def test_parse_s3():
    gf = parse_group_file("group s3\ndegree 3\ngen (1 2 3)\ngen (1 2)\nend\n")
    assert gf.name == "s3" and gf.build().order == 6


def test_comments_blank_lines_and_identity():
    text = "# header\n\ngroup triv  # inline\ndegree 2\ngen ()\nend\n"
    assert parse_group_file(text).build().order == 1


@pytest.mark.parametrize("text, message", [
    ("group g\ndegree 3\ngen (1 2 2)\nend\n", "repeated point in cycle"),
    ("group g\ndegree 3\ngen (1 4)\nend\n", "out of range"),
    ("group g\ngen (1 2)\ndegree 3\nend\n", "'gen' before 'degree'"),
    ("group g\ndegree 3\ngen (1 2)\n", "missing 'end'"),
    ("group g\ndegree 3\nfoo (1 2)\nend\n", "unknown keyword 'foo'"),
    ("degree 3\ngen (1 2)\nend\n", "missing 'group"),
    ("group g\ndegree x\ngen (1 2)\nend\n", "bad degree"),
    ("group g\ndegree 3\nend\n", "at least one 'gen'"),
    ("group g\ndegree 3\ngen (1 2)\nend\ngen (1 3)\n", "after 'end'"),
])
def test_grammar_errors(text, message):
    with pytest.raises(GroupFileError, match=message):
        parse_group_file(text)


def test_error_reports_line_number():
    with pytest.raises(GroupFileError) as info:
        parse_group_file("group g\ndegree 3\ngen (1 2 2)\nend\n")
    assert info.value.line == 3


def test_round_trip_every_builtin():
    for G in catalog_groups():
        back = parse_group_file(write_group_file(G)).build()
        assert set(back.elements) == set(G.elements), G.name


@pytest.mark.parametrize("name, order", [
    ("symmetric4", 24), ("symmetric3*cyclic3", 18), ("elementary_abelian2^3", 8),
    ("dihedral4", 4), ("alternating5", 60), ("cyclic1", 1),
])
def test_builtin_orders(name, order):
    assert builtin(name).order == order


def test_builtin_parameter_forms():
    assert builtin("symmetric", 4).order == 24
    assert builtin("direct_product", "symmetric3", "cyclic3").order == 18
    assert builtin("elementary_abelian", 3, 2).order == 9
    with pytest.raises(CatalogError):
        builtin("monster")


def test_quaternion_has_unique_minimal_subgroup():
    Q8 = builtin("quaternion8")
    assert Q8.order == 8 and Q8.degree == 8
    assert [H.order for H in all_subgroups(Q8)].count(2) == 1


def test_fixture_properties(fixture216):
    G = fixture216
    assert G.order == 216
    assert is_solvable(G).holds
    P = sylow_subgroup(G, 3)
    assert P.order == 27 and nilpotency_class(P) == 2
    assert is_s_semipermutable(G.trivial_subgroup(), G).holds
    assert is_p_supersolvable(normalizer(G, P), 3).holds
    assert not is_p_supersolvable(G, 3).holds
    assert fixture_problems(G) == []


def test_fixture_check_rejects_wrong_group():
    assert fixture_problems(builtin("symmetric3*symmetric3*symmetric3"))
    assert fixture_problems(builtin("symmetric4")) == ["order 24 != 216"]


def test_builtin_catalog_shape():
    entries = builtin_catalog()
    assert len(entries) == len(BUILTIN_CATALOG) + 1 >= 40
    assert all(e.build().order == e.expected_order for e in entries[:20])


def test_expected_order_mismatch_is_an_error():
    with pytest.raises(CatalogError, match="expected 7"):
        CatalogEntry("bad", "builtin:symmetric3", 7).build()


def test_write_and_load_catalog(tmp_path):
    entries = builtin_catalog(include_fixture=False)[:5]
    write_catalog(entries, tmp_path)
    loaded = load_catalog(tmp_path)
    assert [e.name for e in loaded] == [e.name for e in entries]
    assert [e.expected_order for e in loaded] == [e.expected_order for e in entries]
    assert [e.build().order for e in loaded] == [e.expected_order for e in entries]


def test_missing_catalog_directory(tmp_path):
    with pytest.raises(CatalogError):
        load_catalog(tmp_path / "absent")


def test_shipped_fixture_directory():
    entries = load_catalog(FIXTURES)
    assert len(entries) >= 56
    names = {e.name for e in entries}
    assert "smallgroup216_153" in names and "sl2_3" in names
    for e in entries:
        assert e.build().order == e.expected_order
