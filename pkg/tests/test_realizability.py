import pytest

from usomat import (
    Branching,
    Face,
    ForbiddenWitness,
    InfluenceGraph,
    build_matousek,
    containment_graph,
    find_forbidden,
    holt_klee_3face,
    is_branching_closure,
    synthesize_extension,
    validate_conditions,
)
from usomat.enumeration import all_branchings, all_dags
from usomat.matousek import orientation_from_rows

G1 = InfluenceGraph(3, [(1, 2), (2, 3)])
G2 = InfluenceGraph(3, [(1, 3), (2, 3)])


def test_witness_validation():
    ForbiddenWitness("G1", (1, 2, 3))
    with pytest.raises(ValueError):
        ForbiddenWitness("G3", (1, 2, 3))
    with pytest.raises(ValueError):
        ForbiddenWitness("G1", (1, 1, 2))


def test_witness_json():
    w = ForbiddenWitness("G2", (3, 1, 2))
    assert w.to_json_obj() == {"kind": "G2", "vertices": [3, 1, 2]}


def test_find_forbidden_loops_only():
    assert find_forbidden(InfluenceGraph(4)) is None


def test_find_forbidden_g1():
    w = find_forbidden(G1)
    assert w == ForbiddenWitness("G1", (1, 2, 3))


def test_find_forbidden_g2():
    w = find_forbidden(G2)
    assert w == ForbiddenWitness("G2", (3, 1, 2))


def test_find_forbidden_prefers_g1():
    g = InfluenceGraph(4, [(1, 2), (2, 3), (1, 4), (3, 4)])
    w = find_forbidden(g)
    assert w is not None and w.kind == "G1"


def test_transitive_chain_has_no_witness():
    g = InfluenceGraph(3, [(1, 2), (2, 3), (1, 3)])
    assert find_forbidden(g) is None


def test_branching_validation():
    b = Branching(3, {2: 1, 3: 2})
    assert b.roots() == [1]
    assert b.children(1) == [2]
    assert b.ancestors(3) == [2, 1]
    assert b.descendants(1) == {2, 3}
    with pytest.raises(ValueError):
        Branching(2, {1: 2, 2: 1})
    with pytest.raises(ValueError):
        Branching(2, {1: 1})
    with pytest.raises(ValueError):
        Branching(2, {1: 3})


def test_branching_closure():
    b = Branching(3, {2: 1, 3: 2})
    assert b.transitive_closure() == InfluenceGraph(3, [(1, 2), (2, 3), (1, 3)])


def test_is_branching_closure_loops_only():
    b = is_branching_closure(InfluenceGraph(3))
    assert b == Branching(3, {})
    assert b.roots() == [1, 2, 3]


def test_is_branching_closure_chain():
    g = InfluenceGraph(3, [(1, 2), (2, 3), (1, 3)])
    assert is_branching_closure(g) == Branching(3, {2: 1, 3: 2})


def test_is_branching_closure_rejects_g1_g2():
    assert is_branching_closure(G1) is None
    assert is_branching_closure(G2) is None


def test_characterization_agreement_small():
    """Forbidden-pattern freeness coincides with being a branching closure."""
    for n in (1, 2, 3, 4):
        for g in all_dags(n):
            b = is_branching_closure(g)
            if find_forbidden(g) is None:
                assert b is not None
                assert b.transitive_closure() == g
            else:
                assert b is None


def test_branching_closure_round_trip():
    for n in (1, 2, 3, 4):
        for b in all_branchings(n):
            assert is_branching_closure(b.transitive_closure()) == b


def test_holt_klee_uniform():
    o = build_matousek(InfluenceGraph(3))
    assert holt_klee_3face(o, Face(0, 0b111))


def test_holt_klee_fails_on_g1_and_g2():
    for g in (G1, G2):
        o = build_matousek(g)
        assert not holt_klee_3face(o, Face(0, 0b111))


def test_holt_klee_needs_3face():
    o = build_matousek(InfluenceGraph(3))
    with pytest.raises(ValueError):
        holt_klee_3face(o, Face(0, 0b011))


def test_holt_klee_rejects_double_sink_face():
    o = orientation_from_rows(3, [0b011, 0b011, 0b100])  # 2-cycle between 1 and 2
    with pytest.raises(ValueError):
        holt_klee_3face(o, Face(0, 0b111))


def test_realizable_n3_passes_holt_klee():
    for b in all_branchings(3):
        o = build_matousek(b.transitive_closure())
        assert holt_klee_3face(o, Face(0, 0b111))


def test_witness_face_fails_holt_klee():
    """The 3-face spanned by a forbidden triple, fixed at zero, fails the check."""
    for n in (3, 4):
        for g in all_dags(n):
            w = find_forbidden(g)
            if w is None:
                continue
            span = 0
            for d in w.vertices:
                span |= 1 << (d - 1)
            o = build_matousek(g)
            assert not holt_klee_3face(o, Face(0, span))


def test_synthesize_trivial():
    ext = synthesize_extension(Branching(1, {}))
    assert ext.order == (1, 2, "q")
    assert ext.flipped == frozenset({2})


def test_synthesize_two_roots():
    ext = synthesize_extension(Branching(2, {}))
    assert ext.order == (1, 3, 2, 4, "q")
    assert ext.flipped == frozenset({3, 4})


def test_synthesize_chain():
    ext = synthesize_extension(Branching(2, {2: 1}))
    assert ext.order == (1, 2, 4, 3, "q")
    assert ext.flipped == frozenset({4})


def test_synthesize_is_valid_and_round_trips():
    for n in (1, 2, 3, 4):
        for b in all_branchings(n):
            ext = synthesize_extension(b)
            assert validate_conditions(ext)
            assert containment_graph(ext) == b.transitive_closure()
