import json

import pytest

import nquandle as nq


def test_fixture_size_and_orbits():
    q = nq.quandle("T33", (2, 3, 4))
    assert len(q) == 26
    assert sorted(q.orbit_sizes()) == [6, 8, 12]
    assert q.verify_axioms() == "pass"
    assert q.verify_orders() == "pass"


def test_parse_and_print_round_trip():
    text = "gens a b; comp a:1 b:2; N 3 4; rel a^[b a b]=a; rel b^[a b a]=b"
    p = nq.parse_presentation(text)
    assert p.generator_names == ["a", "b"]
    assert nq.parse_presentation(str(p)) == p
    out = nq.enumerate(p)
    assert out.finite and out.quandle.size == 14
    assert out.quandle.verify_relations(p) == "pass"


def test_cap_is_reported():
    p = nq.augment_orders(nq.builtin_family("Wirtinger:trefoil"), [6])
    out = nq.enumerate(p, max_vertices=10000)
    assert not out.finite
    assert out.quandle is None
    assert out.exceeded_cap == "vertices"
    assert out.vertex_count > 10000


def test_operation_table():
    q = nq.quandle("T24", (3, 3))
    t = q.table()
    for x in range(len(q)):
        assert t[x][x] == x
        for y in range(len(q)):
            assert q.op(t[x][y], y, inverse=True) == x


def test_mirror_isomorphism():
    assert nq.is_isomorphic(nq.quandle("Lk", (2, 3), k=3), nq.quandle("Lk", (2, 3), k=-3))
    assert nq.is_isomorphic(nq.quandle("Mk", (2, 3), k=2), nq.quandle("Mk", (2, 3), k=-1))


def test_catalog_lookup():
    assert nq.expected_cardinality("Lk", [2, 4], k=5) == 22
    assert nq.expected_cardinality("T(2,3)", [5]) == 12
    with pytest.raises(nq.CatalogError):
        nq.expected_cardinality("Lpq", [2])


def test_errors():
    with pytest.raises(nq.PresentationError):
        nq.parse_presentation("gens a; comp a:1; rel a^[q]=a")
    with pytest.raises(nq.PresentationError):
        nq.builtin_family("Lk", 0)


def test_exports():
    q = nq.quandle("T26", (2, 3))
    assert q.to_dot().startswith("digraph")
    data = json.loads(q.to_json())
    assert data["size"] == 10
    assert q.witness(q.generator_element(0)) == "a"


def test_diagram_conversion():
    jsonl = "\n".join([
        '{"over":0,"sign":"+","under_in":1,"under_out":2}',
        '{"over":2,"sign":"+","under_in":0,"under_out":1}',
        '{"over":1,"sign":"+","under_in":2,"under_out":0}',
        '{"arc_components":{"0":1,"1":1,"2":1}}',
    ])
    p = nq.diagram_to_presentation(jsonl)
    assert p.relation_count == 3
    q = nq.enumerate(nq.augment_orders(p, [5])).quandle
    assert len(q) == 12
