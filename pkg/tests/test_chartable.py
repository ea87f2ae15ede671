import json
from fractions import Fraction as Q

import pytest

from mckaylab.chartable import (
    Character,
    CharacterTable,
    ConjugacyClass,
    InvalidTableError,
    SteinbergError,
    TableFormatError,
    export_table,
    identify_steinberg,
    import_table,
    p_part,
    validate_table,
)
from mckaylab.exactnum import Cyclotomic

C = Cyclotomic.from_rational


def s3_table(perturb: bool = False) -> CharacterTable:
    std = [C(2), C(0), C(-1)]
    if perturb:
        std[1] = C(3)
    return CharacterTable(
        name="S3",
        order=6,
        classes=[
            ConjugacyClass("1", 1, 1, central=True),
            ConjugacyClass("2a", 3, 2),
            ConjugacyClass("3a", 2, 3),
        ],
        characters=[
            Character("triv", (C(1), C(1), C(1))),
            Character("std", tuple(std)),
            Character("sgn", (C(1), C(-1), C(1))),
        ],
    )


def test_s3_is_valid():
    assert validate_table(s3_table()).ok


def test_perturbed_value_breaks_row_orthogonality():
    report = validate_table(s3_table(perturb=True))
    assert any(v.kind == "row-orthogonality" for v in report.violations)


def test_degree_sum_violation_detected():
    t = CharacterTable(
        name="bad",
        order=6,
        classes=[
            ConjugacyClass("1", 1, 1, central=True),
            ConjugacyClass("2a", 3, 2),
            ConjugacyClass("3a", 2, 3),
        ],
        characters=[
            Character("a", (C(1), C(1), C(1))),
            Character("b", (C(2), C(0), C(-1))),
            Character("c", (C(2), C(-1), C(1))),
        ],
    )
    report = validate_table(t)
    assert any(v.kind == "degree-sum" for v in report.violations)


@pytest.mark.parametrize("m,p,want", [(168, 7, 7), (168, 2, 8), (60, 7, 1), (360, 3, 9)])
def test_p_part(m, p, want):
    assert p_part(m, p) == want


def test_p_part_rejects_composite():
    with pytest.raises(ValueError):
        p_part(100, 6)


# ---------------------------------------------------------------------------
# Steinberg identification against the reference tables


def test_steinberg_on_psl2_7_reference(psl2_7_ref):
    st = identify_steinberg(psl2_7_ref)
    chi = psl2_7_ref.characters[st.st_index]
    assert chi.degree == 7
    for name in ["2a", "3a", "4a"]:
        i = psl2_7_ref.class_index(name)
        assert abs(chi.values[i].integer()) == 1
        assert st.cent_p_part[i] == 1
    for name in ["7a", "7b"]:
        i = psl2_7_ref.class_index(name)
        assert chi.values[i].is_zero()
        assert i not in st.epsilon


def test_steinberg_requires_characteristic(a5_ref):
    with pytest.raises(SteinbergError):
        identify_steinberg(a5_ref)


def test_steinberg_on_a5_as_psl2_4(a5_ref):
    # A5 is PSL2(4); with p = 2 the degree-4 character carries the exact
    # characteristic-2 Steinberg pattern.
    t = CharacterTable(
        name="A5p2",
        order=60,
        classes=list(a5_ref.classes),
        characters=list(a5_ref.characters),
        characteristic=2,
    )
    st = identify_steinberg(t)
    assert t.characters[st.st_index].degree == 4


def dihedral10() -> CharacterTable:
    from mckaylab.exactnum import E

    z1 = E(5) + E(5, 4)
    z2 = E(5, 2) + E(5, 3)
    return CharacterTable(
        name="D10",
        order=10,
        classes=[
            ConjugacyClass("1", 1, 1, central=True),
            ConjugacyClass("5a", 2, 5),
            ConjugacyClass("5b", 2, 5),
            ConjugacyClass("2a", 5, 2),
        ],
        characters=[
            Character("triv", (C(1), C(1), C(1), C(1))),
            Character("sgn", (C(1), C(1), C(1), C(-1))),
            Character("St", (C(2), z1, z2, C(0))),
            Character("rot2", (C(2), z2, z1, C(0))),
        ],
        characteristic=2,
    )


def test_steinberg_pattern_violation_detected():
    # D10 in "characteristic 2": the degree-2 character named St has
    # irrational values on the rotation classes, violating the pattern.
    t = dihedral10()
    assert validate_table(t).ok
    with pytest.raises(SteinbergError, match="pattern violated"):
        identify_steinberg(t)


def test_steinberg_on_a5_as_psl2_4(a5_ref):
    # With p = 5 the A5 table is PSL2(5): degree-5 character vanishing
    # exactly on the two order-5 classes.
    t = CharacterTable(
        name="A5p5",
        order=60,
        classes=list(a5_ref.classes),
        characters=list(a5_ref.characters),
        characteristic=5,
    )
    st = identify_steinberg(t)
    chi = t.characters[st.st_index]
    assert chi.degree == 5
    assert [i for i, v in enumerate(chi.values) if v.is_zero()] == [
        t.class_index("5a"),
        t.class_index("5b"),
    ]


# ---------------------------------------------------------------------------
# exchange format


def test_minimal_trivial_group_document():
    doc = {
        "name": "1",
        "order": 1,
        "classes": [{"name": "1", "size": 1, "order": 1, "central": True}],
        "characters": [{"name": "1", "values": ["1"]}],
    }
    t = import_table(json.dumps(doc))
    assert t.k == 1 and t.order == 1


def test_import_reference_psl2_7(psl2_7_ref):
    assert psl2_7_ref.k == 6
    assert validate_table(psl2_7_ref).ok


def test_duplicate_class_name_rejected():
    doc = {
        "name": "dup",
        "order": 2,
        "classes": [
            {"name": "1", "size": 1, "order": 1, "central": True},
            {"name": "1", "size": 1, "order": 2, "central": True},
        ],
        "characters": [
            {"name": "a", "values": ["1", "1"]},
            {"name": "b", "values": ["1", "-1"]},
        ],
    }
    with pytest.raises(TableFormatError):
        import_table(json.dumps(doc))


def test_import_export_round_trip(psl2_7_ref, a5_ref, q8):
    for t in (psl2_7_ref, a5_ref, q8):
        text = export_table(t)
        again = import_table(text)
        assert export_table(again) == text


def test_import_validates():
    doc = {
        "name": "broken",
        "order": 6,
        "classes": [
            {"name": "1", "size": 1, "order": 1, "central": True},
            {"name": "2a", "size": 3, "order": 2},
            {"name": "3a", "size": 2, "order": 3},
        ],
        "characters": [
            {"name": "a", "values": ["1", "1", "1"]},
            {"name": "b", "values": ["2", "1", "-1"]},
            {"name": "c", "values": ["1", "-1", "1"]},
        ],
    }
    with pytest.raises(InvalidTableError) as exc:
        import_table(json.dumps(doc))
    assert not exc.value.report.ok


def test_import_rejects_bad_literal_with_location():
    doc = {
        "name": "badlit",
        "order": 1,
        "classes": [{"name": "1", "size": 1, "order": 1, "central": True}],
        "characters": [{"name": "1", "values": ["E(0)"]}],
    }
    with pytest.raises(TableFormatError) as exc:
        import_table(json.dumps(doc))
    assert "characters[0].values[0]" in str(exc.value)


# ---------------------------------------------------------------------------
# magnitude and centrality cross-checks


def test_value_magnitudes_bounded_by_degree(psl2_7_ref, a5_ref, q8):
    for t in (psl2_7_ref, a5_ref, q8):
        for chi in t.characters:
            deg = chi.degree
            for v in chi.values:
                assert abs(v.embed()) <= deg + 1e-9


def test_central_classes_match_magnitude_criterion(q8):
    for idx, cls in enumerate(q8.classes):
        derived = all(
            abs(abs(chi.values[idx].embed()) - chi.degree) < 1e-9 for chi in q8.characters
        )
        assert derived == cls.central


def test_is_simple_derivation(psl2_7_ref, a5_ref, q8):
    assert psl2_7_ref.is_simple()
    assert a5_ref.is_simple()
    assert not q8.is_simple()


def test_faithfulness(q8, a5_ref):
    assert q8.is_faithful(q8.character("2a"))
    assert not q8.is_faithful(q8.character("chi_i"))
    assert a5_ref.is_faithful(a5_ref.character("3a"))
