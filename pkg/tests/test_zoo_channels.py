import numpy as np
import pytest
from numpy.testing import assert_allclose

from domain.box_distribution import BoxDistribution, box_from_distribution, distribution_from_box
from domain.channel import Channel, apply, choi_distance
from domain.channel_factory import ChannelFactory, parse_real, parse_unitary
from domain.constants import DFP_DEFAULT_ALPHA
from domain.errors import ChannelValidationError, InvalidTypeError, MalformedTypeError, NonUnitaryError, ParameterError
from domain.linalg_core import HADAMARD, IDENTITY_2, PAULIS, basis_ket, bell_ket, partial_trace, projector
from domain.validators import Direction, is_cptp, is_nonsignaling
from domain.witnesses import is_fixed_point, phi_plus_ff, subspace_swap
from domain import zoo_channels as zoo


def _classical_input(dx: int, dy: int, x: int, y: int) -> np.ndarray:
    return projector(np.kron(basis_ket(dx, x), basis_ket(dy, y)))


def test_pr_box_table():
    """p(ab|xy) = 1/2 iff a xor b = xy"""
    d = distribution_from_box(zoo.pr_box())
    assert d.probability(0, 0, 0, 0) == pytest.approx(0.5)
    assert d.probability(0, 1, 1, 1) == pytest.approx(0.5)
    assert d.probability(0, 0, 1, 1) == 0.0


def test_pr_correlators():
    """Correlators are +1 except at x = y = 1"""
    assert_allclose(BoxDistribution.pr().chsh_correlators(), [[1, 1], [1, -1]])


def test_box_roundtrip():
    """PR and uniform boxes survive box -> channel -> box"""
    for d in (BoxDistribution.pr(), BoxDistribution.uniform(3, 2, 2, 3)):
        assert_allclose(distribution_from_box(box_from_distribution(d)).table, d.table)


def test_box_rejects_signaling_table():
    """Bob's marginal may not depend on x"""
    t = np.zeros((2, 2, 2, 2))
    for x in range(2):
        for y in range(2):
            t[0, x, x, y] = 1.0
    with pytest.raises(InvalidTypeError):
        BoxDistribution(t)


def test_box_rejects_negative_entries():
    """Probabilities are nonnegative"""
    t = np.full((2, 2, 2, 2), 0.25)
    t[0, 0, 0, 0], t[1, 1, 0, 0] = -0.25, 0.75
    with pytest.raises(InvalidTypeError):
        BoxDistribution(t)


def test_isotropic_visibility_range():
    """Visibility outside [0, 1] raises"""
    with pytest.raises(InvalidTypeError):
        BoxDistribution.isotropic(1.5)


def test_distribution_from_quantum_channel_fails():
    """Quantum outputs are not a box"""
    with pytest.raises(MalformedTypeError):
        distribution_from_box(zoo.phhh())


def test_phhh_outputs():
    """xy = 0 gives phi+, xy = 1 gives psi+"""
    ch = zoo.phhh()
    assert_allclose(apply(ch, _classical_input(2, 2, 1, 0)), projector(bell_ket("phi+")), atol=1e-14)
    assert_allclose(apply(ch, _classical_input(2, 2, 1, 1)), projector(bell_ket("psi+")), atol=1e-14)


def test_phhh_marginals_are_maximally_mixed():
    """Every output has I/2 marginals"""
    ch = zoo.phhh()
    for x in range(2):
        for y in range(2):
            out = apply(ch, _classical_input(2, 2, x, y))
            assert_allclose(partial_trace(out, [2, 2], [0]), np.eye(2) / 2, atol=1e-14)
            assert_allclose(partial_trace(out, [2, 2], [1]), np.eye(2) / 2, atol=1e-14)


def test_shsa_states():
    """Steered states follow the Pauli assemblage, transposed for y = 1"""
    assert_allclose(zoo.shsa_state(0, 0, 0), (IDENTITY_2 + PAULIS[0]) / 4)
    for a in range(2):
        assert_allclose(zoo.shsa_state(a, 1, 1), (IDENTITY_2 - (-1) ** a * PAULIS[1]) / 4)


def test_shsa_marginals():
    """sum_a rho_a|xy = I/2 and tr rho_a|xy = 1/2"""
    for x in range(3):
        for y in range(2):
            assert_allclose(sum(zoo.shsa_state(a, x, y) for a in range(2)), np.eye(2) / 2)
            for a in range(2):
                assert np.trace(zoo.shsa_state(a, x, y)).real == pytest.approx(0.5)


def test_shsa_type():
    """Alice has 3 inputs and a classical bit, Bob a steered qubit"""
    g = zoo.shsa().gtype
    assert g.choi_dims == (2, 2, 3, 2)
    assert g.kind_signature == "CC→CQ"


def test_bgnp_basis_is_orthonormal():
    """The sixteen twisted Bell kets form a basis"""
    assert_allclose(zoo.gram_matrix(zoo.bgnp_basis(HADAMARD)), np.eye(16), atol=1e-12)


def test_bgnp_fixed_points():
    """phi+ in ff, sf, fs subspaces is fixed; in ss it is not"""
    ch = zoo.bgnp(HADAMARD)
    swap = subspace_swap()
    psi_ff = phi_plus_ff()
    psi_sf = np.kron(swap, np.eye(4)) @ psi_ff
    psi_fs = np.kron(np.eye(4), swap) @ psi_ff
    psi_ss = np.kron(swap, swap) @ psi_ff
    assert is_fixed_point(ch, psi_ff) and is_fixed_point(ch, psi_sf) and is_fixed_point(ch, psi_fs)
    assert not is_fixed_point(ch, psi_ss)


def test_bgnp_untwisted_keeps_ss_fixed():
    """With u_b = I the ss Bell state stays fixed"""
    psi_ss = np.kron(subspace_swap(), subspace_swap()) @ phi_plus_ff()
    assert is_fixed_point(zoo.bgnp(IDENTITY_2), psi_ss)


def test_bgnp_rejects_non_unitary():
    """u_b must be unitary"""
    with pytest.raises(NonUnitaryError):
        zoo.bgnp(2 * IDENTITY_2)


def test_dfp_alpha_zero_is_identity_with_zero_controls():
    """alpha = 0 passes the data qubits and leaves both controls in |0>"""
    ch = zoo.dfp(0.0)
    for a in range(2):
        for b in range(2):
            out = apply(ch, projector(np.kron(basis_ket(2, a), basis_ket(2, b))))
            expected = projector(np.kron(np.kron(basis_ket(2, 0), basis_ket(2, a)), np.kron(basis_ket(2, 0), basis_ket(2, b))))
            assert_allclose(out, expected, atol=1e-12)


def test_dfp_alpha_range():
    """alpha must lie in [0, 1]"""
    with pytest.raises(ParameterError):
        zoo.dfp(1.5)


def test_dfp_default_type():
    """Qubit inputs, (control, data) outputs"""
    ch = zoo.dfp(DFP_DEFAULT_ALPHA)
    assert ch.gtype.choi_dims == (4, 4, 2, 2)
    assert ch.metadata["params"]["alpha"] == pytest.approx(1 / 6)


def test_bennett_basis_orthonormal():
    """The nine product states are orthonormal"""
    assert_allclose(zoo.gram_matrix(zoo.bennett_basis()), np.eye(9), atol=1e-12)


def test_bennett_center_is_fixed():
    """|1>|1> is a fixed point of the Bennett channel"""
    assert is_fixed_point(zoo.bennett(), np.kron(basis_ket(3, 1), basis_ket(3, 1)))


def test_bennett_is_cptp_but_signaling():
    """Alice's output marginal for input |1> depends on Bob's input"""
    ch = zoo.bennett()
    assert is_cptp(ch, 1e-9).passed
    assert ch.metadata["signaling"] is True
    assert all(is_nonsignaling(ch, d, 1e-9).deviation > 1.0 for d in Direction)
    marginals = []
    for y in range(2):
        out = apply(ch, projector(np.kron(basis_ket(3, 1), basis_ket(3, y))))
        marginals.append(np.real(np.diag(partial_trace(out, [3, 3], keep=[0]))))
    assert_allclose(marginals[0], [0.0, 0.5, 0.5], atol=1e-12)
    assert_allclose(marginals[1], [0.0, 1.0, 0.0], atol=1e-12)


def test_bennett_rejected_by_full_validation():
    """The exhibit fails the eager constructor path"""
    ch = zoo.bennett()
    with pytest.raises(ChannelValidationError, match="alice->bob"):
        Channel(ch.gtype, ch.choi)


@pytest.mark.parametrize("name", zoo.nonsignaling_zoo_names())
def test_zoo_channels_are_valid(name):
    """Every nonsignaling zoo channel passes all validators"""
    ch = ChannelFactory.create(name)
    assert ch.validate(1e-9).passed
    assert all(is_nonsignaling(ch, d).passed for d in Direction)


def test_signaling_exhibits_are_listed():
    """Only bennett sits outside the nonsignaling set"""
    assert zoo.SIGNALING_ZOO == {"bennett"}
    assert set(zoo.nonsignaling_zoo_names()) == set(zoo.zoo_names()) - {"bennett"}



def test_factory_parameters():
    """Fractions parse; unknown names and keys raise"""
    assert parse_real("1/6", "alpha") == pytest.approx(1 / 6)
    assert_allclose(parse_unitary("hadamard"), HADAMARD)
    assert choi_distance(ChannelFactory.create("dfp", {"alpha": "1/6"}), zoo.dfp(1 / 6)) < 1e-12
    with pytest.raises(ParameterError):
        ChannelFactory.create("nope")
    with pytest.raises(ParameterError):
        ChannelFactory.create("pr", {"alpha": "1"})
    with pytest.raises(ParameterError):
        parse_unitary("rotate")


def test_factory_lists_zoo():
    """Every zoo identifier is available from the factory"""
    assert set(zoo.zoo_names()) <= set(ChannelFactory.get_available_channels())
    assert ChannelFactory.get_default_params("bgnp") == {"ub": "hadamard"}
