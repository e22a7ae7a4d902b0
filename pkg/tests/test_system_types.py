import itertools

import pytest

from domain.errors import InvalidTypeError
from domain.partition_table import (
    PARTITION_ORDER,
    EncodingVerdict,
    all_partition_types,
    encoding_cell,
    encoding_table,
    partition_encodes,
)
from domain.system_types import GlobalType, Party, PartitionType, SystemType, Wire, WireKind, is_lose_trivial_type

I, C, Q = SystemType.trivial(), SystemType.classical(2), SystemType.quantum(2)


def test_trivial_wire_has_dim_one():
    """Trivial wires reject any other dimension"""
    with pytest.raises(InvalidTypeError):
        SystemType(WireKind.TRIVIAL, 2)


@pytest.mark.parametrize("kind", [WireKind.CLASSICAL, WireKind.QUANTUM])
def test_nontrivial_wire_needs_dim_two(kind):
    """Classical and quantum wires need dim >= 2"""
    with pytest.raises(InvalidTypeError):
        SystemType(kind, 1)


def test_of_kind_collapses_dim_one_to_trivial():
    """A dim-1 wire of any kind is trivial"""
    assert SystemType.of_kind(WireKind.QUANTUM, 1) == I


def test_combine_takes_the_richest_kind():
    """Q beats C beats I; dims multiply"""
    assert C.combine(Q) == SystemType.quantum(4)
    assert I.combine(C) == C
    assert I.combine(I) == I


def test_system_type_dict_roundtrip():
    """to_dict/from_dict preserve kind and dim"""
    st = SystemType.quantum(3)
    assert SystemType.from_dict(st.to_dict()) == st


def test_wire_kind_parse():
    """Long and short spellings parse; garbage raises"""
    assert WireKind.parse("quantum") is WireKind.QUANTUM
    assert WireKind.parse("c") is WireKind.CLASSICAL
    with pytest.raises(InvalidTypeError):
        WireKind.parse("z")


def test_party_parse_and_wires():
    """Parties map to their input and output wires"""
    assert Party.parse("Bob") is Party.BOB
    assert Party.ALICE.input_wire is Wire.X and Party.ALICE.output_wire is Wire.A
    with pytest.raises(InvalidTypeError):
        Party.parse("eve")


def test_global_type_dims_follow_choi_order():
    """choi_dims is (A, B, X, Y)"""
    g = GlobalType(x=SystemType.classical(3), y=C, a=C, b=Q)
    assert g.choi_dims == (2, 2, 3, 2)
    assert g.input_dim == 6 and g.output_dim == 4 and g.choi_dim == 24
    assert g.partition_a == PartitionType(WireKind.CLASSICAL, WireKind.CLASSICAL)
    assert g.kind_signature == "CC→CQ"


def test_single_party_type():
    """A Bob-only channel has trivial Alice wires"""
    g = GlobalType.single_party(Party.BOB, Q, C)
    assert g.x.is_trivial and g.a.is_trivial and g.y == Q and g.b == C


def test_global_type_dict_roundtrip():
    """GlobalType survives serialization"""
    g = GlobalType.box(3, 2, 2, 2)
    assert GlobalType.from_dict(g.to_dict()) == g


def test_global_type_missing_wire():
    """from_dict names the missing wire"""
    with pytest.raises(InvalidTypeError):
        GlobalType.from_dict({"x": C.to_dict()})


def test_teleportage_type_is_trivial():
    """QI->CQ has a trivial wire"""
    assert is_lose_trivial_type(GlobalType(x=Q, y=I, a=C, b=Q))


def test_box_type_is_not_trivial():
    """CC->CC has no trivial wire"""
    assert not is_lose_trivial_type(GlobalType.box(2, 2, 2, 2))


def test_state_type_is_trivial():
    """II->QQ is a bipartite state"""
    assert is_lose_trivial_type(GlobalType(x=I, y=I, a=Q, b=Q))


def test_trivial_predicate_on_all_kind_combinations():
    """True exactly when some wire is trivial, over all 81 kind tuples"""
    for kinds in itertools.product(WireKind, repeat=4):
        wires = [SystemType.of_kind(k, 1 if k is WireKind.TRIVIAL else 2) for k in kinds]
        g = GlobalType(x=wires[0], y=wires[1], a=wires[2], b=wires[3])
        assert is_lose_trivial_type(g) == (WireKind.TRIVIAL in kinds)


def test_partition_type_parse():
    """Arrow and compact spellings parse alike"""
    assert PartitionType.parse("Q->C") == PartitionType.parse("QC") == PartitionType.parse("Q→C")
    with pytest.raises(InvalidTypeError):
        PartitionType.parse("QCQ")


def test_table_has_81_cells():
    """Every ordered pair of partition types has a cell"""
    assert len(encoding_table()) == 81
    assert [str(t).replace("→", "") for t in all_partition_types()] == list(PARTITION_ORDER)


def test_top_class_encodes_each_other():
    """Q->C and Q->Q encode each other"""
    qc, qq = PartitionType.parse("QC"), PartitionType.parse("QQ")
    assert partition_encodes(qc, qq) is EncodingVerdict.YES
    assert partition_encodes(qq, qc) is EncodingVerdict.YES


def test_classical_box_above_top_is_open():
    """C->C encoding Q->Q is unknown and linked to C->C encoding Q->C"""
    cc = PartitionType.parse("CC")
    cell_qq = encoding_cell(cc, PartitionType.parse("QQ"))
    cell_qc = encoding_cell(cc, PartitionType.parse("QC"))
    assert cell_qq.verdict is EncodingVerdict.UNKNOWN
    assert cell_qq.link is not None and cell_qq.link == cell_qc.link


def test_top_encodes_bottom():
    """Q->Q encodes I->I"""
    assert partition_encodes(PartitionType.parse("QQ"), PartitionType.parse("II")) is EncodingVerdict.YES


def test_table_is_reflexive():
    """Every type encodes itself"""
    for t in all_partition_types():
        assert partition_encodes(t, t) is EncodingVerdict.YES


def test_trivial_side_never_encodes_nontrivial_types():
    """A type with a trivial side is not above C->C"""
    cc = PartitionType.parse("CC")
    for t in all_partition_types():
        if t.has_trivial_side:
            assert partition_encodes(t, cc) is EncodingVerdict.NO


def test_yes_entries_are_transitive():
    """t1 above t2 above t3 puts t1 above t3"""
    types = all_partition_types()
    yes = EncodingVerdict.YES
    for t1, t2, t3 in itertools.product(types, repeat=3):
        if partition_encodes(t1, t2) is yes and partition_encodes(t2, t3) is yes:
            assert partition_encodes(t1, t3) is yes, (str(t1), str(t2), str(t3))
