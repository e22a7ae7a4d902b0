"""
Acceptance criteria as commands
Each command rebuilds what it needs from the zoo, measures one claim and
reports pass/fail with the measured value
"""

import itertools
from typing import List

import numpy as np

from domain.box_distribution import BoxDistribution, distribution_from_box
from domain.channel import Channel, apply, choi_distance, factorize_trivial_output
from domain.channel_file import dumps_channel, loads_channel
from domain.channel_factory import ChannelFactory, parse_unitary
from domain.chsh_strategies import optimize_branch_chsh
from domain.constants import CLASSICAL_CHSH_BOUND, DEFAULT_SEED, DFP_DEFAULT_ALPHA, TSIRELSON_BOUND
from domain.conversions import phhh_to_dfp, phhh_to_shsa, pr_to_phhh, q_output_to_classical, teleport_left_inverse
from domain.games import chsh_game, lhv_bound, score
from domain.linalg_core import IDENTITY_2, basis_ket, projector, trace_distance
from domain.lose_transforms import apply_lose, dephase_outputs_to_box
from domain.random_channels import random_global_type, random_local_channel, random_nonsignaling_channel, random_system_type
from domain.system_types import GlobalType, Party, SystemType, WireKind, is_lose_trivial_type
from domain.validators import Direction, is_cptp, is_nonsignaling
from domain.witnesses import Verdict, eigenstate_condition_check, phi_plus_ff, ppt_min_eigenvalue, subspace_swap
from domain import zoo_channels as zoo

from .command import Command, CommandResult


class PrChshCommand(Command):
    number, title = 1, "PR box CHSH score is 4"

    def execute(self) -> CommandResult:
        value = score(chsh_game(), zoo.pr_box())
        return self.result(abs(value - 4.0) <= 1e-12, f"{value:.12f}")


class LhvBoundCommand(Command):
    number, title = 2, "CHSH classical bound is 2 < 2sqrt2"

    def execute(self) -> CommandResult:
        bound = lhv_bound(chsh_game())
        ok = abs(bound - CLASSICAL_CHSH_BOUND) <= 1e-12 and bound < TSIRELSON_BOUND < 4.0
        return self.result(ok, f"lhv={bound:.12f}, 2sqrt2={TSIRELSON_BOUND:.12f}")


class DephasedPhhhCommand(Command):
    number, title = 3, "dephased PHHH equals the PR box"

    def execute(self) -> CommandResult:
        box = distribution_from_box(dephase_outputs_to_box(zoo.phhh()))
        delta = float(np.max(np.abs(box.table - BoxDistribution.pr().table)))
        return self.result(delta < 1e-12, f"max|dp|={delta:.3e}")


class PrToPhhhCommand(Command):
    number, title = 4, "PR box converts to PHHH"

    def execute(self) -> CommandResult:
        d = choi_distance(apply_lose(pr_to_phhh(), zoo.pr_box()), zoo.phhh())
        return self.result(d < 1e-10, f"distance={d:.3e}")


class PhhhToShsaCommand(Command):
    number, title = 5, "PHHH converts to the SHSA assemblage"

    def execute(self) -> CommandResult:
        ch = apply_lose(phhh_to_shsa(), zoo.phhh())
        worst = 0.0
        for a, x, y in itertools.product(range(2), range(3), range(2)):
            inp = projector(np.kron(basis_ket(3, x), basis_ket(2, y)))
            out = apply(ch, inp).reshape(2, 2, 2, 2)
            steered = out[a, :, a, :]
            worst = max(worst, trace_distance(steered, zoo.shsa_state(a, x, y)))
        return self.result(worst < 1e-10, f"max trace distance={worst:.3e} over 12 states")


class PhhhToDfpCommand(Command):
    number, title = 6, "PHHH converts to DFP(1/6)"

    def execute(self) -> CommandResult:
        d = choi_distance(apply_lose(phhh_to_dfp(DFP_DEFAULT_ALPHA), zoo.phhh()), zoo.dfp(DFP_DEFAULT_ALPHA))
        return self.result(d < 1e-9, f"distance={d:.3e}")


class PptCommand(Command):
    number, title = 7, "DFP is NPT, measure-and-prepare zoo channels are PPT"

    def execute(self) -> CommandResult:
        dfp_min = ppt_min_eigenvalue(zoo.dfp(DFP_DEFAULT_ALPHA))
        others = {
            name: ppt_min_eigenvalue(ChannelFactory.create(name))
            for name in ("pr", "phhh", "shsa", "bgnp", "bennett")
        }
        ok = dfp_min < -1e-6 and all(v >= -1e-10 for v in others.values())
        rest = ", ".join(f"{k}={v:.2e}" for k, v in others.items())
        return self.result(ok, f"dfp={dfp_min:.4e}; {rest}")


class DfpChshCommand(Command):
    number, title = 8, "DFP branch strategy lands strictly between 2sqrt2 and 4"

    def __init__(self, seed: int = DEFAULT_SEED):
        self.seed = seed

    def execute(self) -> CommandResult:
        result = optimize_branch_chsh(zoo.dfp(DFP_DEFAULT_ALPHA), seed=self.seed)
        s = result.score
        return self.result(TSIRELSON_BOUND + 1e-3 < s < 4.0 - 1e-3, f"{s:.9f}")


class EigenstateCommand(Command):
    number, title = 9, "eigenstate condition flags the twisted BGNP channel"

    def __init__(self, ub: str = "hadamard"):
        self.ub = ub

    def execute(self) -> CommandResult:
        swap, psi = subspace_swap(), phi_plus_ff()
        twisted = eigenstate_condition_check(zoo.bgnp(parse_unitary(self.ub)), psi, swap, swap).verdict
        plain = eigenstate_condition_check(zoo.bgnp(IDENTITY_2), psi, swap, swap).verdict
        ok = twisted is Verdict.VIOLATION and plain is Verdict.CONSISTENT
        return self.result(ok, f"bgnp({self.ub})={twisted.value}, bgnp(identity)={plain.value}")


class TeleportRoundTripCommand(Command):
    number, title = 10, "teleportation round trip is the identity"

    def __init__(self, seed: int = DEFAULT_SEED, trials: int = 20):
        self.seed = seed
        self.trials = trials

    def execute(self) -> CommandResult:
        rng = np.random.default_rng(self.seed)
        cases = [(zoo.phhh(), Party.ALICE), (zoo.identity_channel(2), Party.BOB)]
        for i in range(self.trials):
            party = Party.ALICE if i % 2 == 0 else Party.BOB
            gtype = random_global_type(rng, max_dim=3, quantum_output=party)
            cases.append((random_nonsignaling_channel(gtype, rng), party))
        worst = max(
            choi_distance(teleport_left_inverse(q_output_to_classical(ch, party), party), ch)
            for ch, party in cases
        )
        return self.result(worst < 1e-9, f"max distance={worst:.3e} over {len(cases)} channels")


class TrivialTypeCommand(Command):
    number, title = 11, "trivial-type predicate on all 81 kind combinations"

    def execute(self) -> CommandResult:
        mismatches = 0
        for kinds in itertools.product(WireKind, repeat=4):
            wires = [SystemType.of_kind(k, 1 if k is WireKind.TRIVIAL else 2) for k in kinds]
            gtype = GlobalType(x=wires[0], y=wires[1], a=wires[2], b=wires[3])
            if is_lose_trivial_type(gtype) != (WireKind.TRIVIAL in kinds):
                mismatches += 1
        return self.result(mismatches == 0, f"{mismatches} mismatches / 81")


class FactorizationCommand(Command):
    number, title = 12, "trivial-output channels factorize"

    def __init__(self, seed: int = DEFAULT_SEED, trials: int = 100):
        self.seed = seed
        self.trials = trials

    def execute(self) -> CommandResult:
        rng = np.random.default_rng(self.seed)
        worst = 0.0
        for _ in range(self.trials):
            x = random_system_type(rng, 3)
            trace_x = Channel.local(Party.ALICE, x, SystemType.trivial(), np.eye(x.dim))
            bob = random_local_channel(Party.BOB, random_system_type(rng, 3), random_system_type(rng, 3), rng)
            _, recovered = factorize_trivial_output(Channel.product(trace_x, bob))
            worst = max(worst, choi_distance(recovered, bob))
        return self.result(worst < 1e-9, f"max error={worst:.3e} over {self.trials} channels")


class ZooValidityCommand(Command):
    number, title = 13, "zoo channels valid, Bennett CPTP but signaling, Bennett basis orthonormal"

    def execute(self) -> CommandResult:
        failing = [
            name
            for name in zoo.nonsignaling_zoo_names()
            if not ChannelFactory.create(name).validate(1e-9).passed
        ]
        # signaling exhibits must still be CPTP and must actually signal
        for name in sorted(zoo.SIGNALING_ZOO):
            ch = ChannelFactory.create(name)
            signals = any(not is_nonsignaling(ch, d, 1e-9).passed for d in Direction)
            if not (is_cptp(ch, 1e-9).passed and signals):
                failing.append(name)
        gram = zoo.gram_matrix(zoo.bennett_basis())
        gram_error = float(np.max(np.abs(gram - np.eye(9))))
        ok = not failing and gram_error < 1e-12
        exhibits = ", ".join(sorted(zoo.SIGNALING_ZOO))
        return self.result(ok, f"failing={failing or 'none'}, signaling exhibits={exhibits}, gram error={gram_error:.3e}")


class SerializationCommand(Command):
    number, title = 14, "canonical files round-trip byte for byte"

    def execute(self) -> CommandResult:
        differing = []
        for name in zoo.zoo_names():
            text = dumps_channel(ChannelFactory.create(name))
            if dumps_channel(loads_channel(text, validate=name not in zoo.SIGNALING_ZOO)) != text:
                differing.append(name)
        return self.result(not differing, f"differing={differing or 'none'}")



def acceptance_commands(seed: int = DEFAULT_SEED, bgnp_ub: str = "hadamard") -> List[Command]:
    """All criteria in report order"""
    return [
        PrChshCommand(),
        LhvBoundCommand(),
        DephasedPhhhCommand(),
        PrToPhhhCommand(),
        PhhhToShsaCommand(),
        PhhhToDfpCommand(),
        PptCommand(),
        DfpChshCommand(seed),
        EigenstateCommand(bgnp_ub),
        TeleportRoundTripCommand(seed),
        TrivialTypeCommand(),
        FactorizationCommand(seed),
        ZooValidityCommand(),
        SerializationCommand(),
    ]
