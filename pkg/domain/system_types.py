"""
Type Calculus
Wire kinds, per-party partition types and bipartite global types
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, Tuple

from .errors import InvalidTypeError


class WireKind(Enum):
    """Kind of a system: trivial (I), classical (C) or quantum (Q)"""

    TRIVIAL = "I"
    CLASSICAL = "C"
    QUANTUM = "Q"

    @property
    def rank(self) -> int:
        """Embedding order I < C < Q"""
        return {"I": 0, "C": 1, "Q": 2}[self.value]

    @classmethod
    def parse(cls, text: str) -> "WireKind":
        key = text.strip().upper()
        aliases = {"I": "I", "TRIVIAL": "I", "C": "C", "CLASSICAL": "C", "Q": "Q", "QUANTUM": "Q"}
        if key not in aliases:
            raise InvalidTypeError(f"Unknown wire kind: {text}. Valid kinds: I, C, Q")
        return cls(aliases[key])


class Wire(Enum):
    """The four wires of a bipartite resource, valued by Choi factor index"""

    A = 0
    B = 1
    X = 2
    Y = 3


class Party(Enum):
    ALICE = "alice"
    BOB = "bob"

    @classmethod
    def parse(cls, text: str) -> "Party":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise InvalidTypeError(f"Unknown party: {text}. Valid parties: alice, bob")

    @property
    def input_wire(self) -> Wire:
        return Wire.X if self is Party.ALICE else Wire.Y

    @property
    def output_wire(self) -> Wire:
        return Wire.A if self is Party.ALICE else Wire.B


@dataclass(frozen=True)
class SystemType:
    """
    A typed wire. Trivial wires have dim 1, all others dim >= 2.
    """

    kind: WireKind
    dim: int = 1

    def __post_init__(self):
        if not isinstance(self.kind, WireKind):
            raise InvalidTypeError(f"kind must be a WireKind, got {self.kind!r}")
        if int(self.dim) != self.dim:
            raise InvalidTypeError(f"dim must be an integer, got {self.dim!r}")
        if self.kind is WireKind.TRIVIAL and self.dim != 1:
            raise InvalidTypeError(f"Trivial wires have dim 1, got {self.dim}")
        if self.kind is not WireKind.TRIVIAL and self.dim < 2:
            raise InvalidTypeError(f"{self.kind.name.title()} wires need dim >= 2, got {self.dim}")

    @classmethod
    def trivial(cls) -> "SystemType":
        return cls(WireKind.TRIVIAL, 1)

    @classmethod
    def classical(cls, dim: int) -> "SystemType":
        return cls(WireKind.CLASSICAL, dim)

    @classmethod
    def quantum(cls, dim: int) -> "SystemType":
        return cls(WireKind.QUANTUM, dim)

    @classmethod
    def of_kind(cls, kind: WireKind, dim: int) -> "SystemType":
        """Build a wire of the given kind; kind is ignored when dim == 1"""
        if dim == 1:
            return cls.trivial()
        return cls(kind, dim)

    @property
    def is_trivial(self) -> bool:
        return self.kind is WireKind.TRIVIAL

    @property
    def symbol(self) -> str:
        return self.kind.value

    def combine(self, other: "SystemType") -> "SystemType":
        """
        Composite wire self (x) other. Quantum if any part is quantum,
        classical if any part is classical, trivial otherwise.
        """
        kind = max((self.kind, other.kind), key=lambda k: k.rank)
        return SystemType.of_kind(kind, self.dim * other.dim)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "dim": int(self.dim)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SystemType":
        try:
            return cls(WireKind.parse(str(data["kind"])), int(data["dim"]))
        except KeyError as e:
            raise InvalidTypeError(f"Wire record missing field {e}")

    def __str__(self) -> str:
        return self.symbol if self.is_trivial else f"{self.symbol}{self.dim}"


@dataclass(frozen=True)
class PartitionType:
    """One party's input -> output kind pair, e.g. Q->C"""

    input: WireKind
    output: WireKind

    @classmethod
    def parse(cls, text: str) -> "PartitionType":
        cleaned = text.replace("→", "->").replace(" ", "")
        if "->" in cleaned:
            left, right = cleaned.split("->", 1)
        elif len(cleaned) == 2:
            left, right = cleaned[0], cleaned[1]
        else:
            raise InvalidTypeError(f"Cannot parse partition type: {text}")
        return cls(WireKind.parse(left), WireKind.parse(right))

    @property
    def has_trivial_side(self) -> bool:
        return WireKind.TRIVIAL in (self.input, self.output)

    def __str__(self) -> str:
        return f"{self.input.value}→{self.output.value}"


@dataclass(frozen=True)
class GlobalType:
    """
    Global type of a bipartite resource

    x, y: Alice's and Bob's inputs; a, b: Alice's and Bob's outputs.
    """

    x: SystemType
    y: SystemType
    a: SystemType
    b: SystemType

    @property
    def choi_dims(self) -> Tuple[int, int, int, int]:
        """Factor dimensions in Choi order (A_out, B_out, X_in, Y_in)"""
        return (self.a.dim, self.b.dim, self.x.dim, self.y.dim)

    @property
    def input_dim(self) -> int:
        return self.x.dim * self.y.dim

    @property
    def output_dim(self) -> int:
        return self.a.dim * self.b.dim

    @property
    def choi_dim(self) -> int:
        return self.input_dim * self.output_dim

    @property
    def partition_a(self) -> PartitionType:
        return PartitionType(self.x.kind, self.a.kind)

    @property
    def partition_b(self) -> PartitionType:
        return PartitionType(self.y.kind, self.b.kind)

    def wire(self, w: Wire) -> SystemType:
        return {Wire.A: self.a, Wire.B: self.b, Wire.X: self.x, Wire.Y: self.y}[w]

    def with_wire(self, w: Wire, st: SystemType) -> "GlobalType":
        return replace(self, **{w.name.lower(): st})

    def wires(self) -> Tuple[Tuple[Wire, SystemType], ...]:
        return tuple((w, self.wire(w)) for w in Wire)

    @property
    def kind_signature(self) -> str:
        """Kinds in the XY->AB notation, e.g. CC->QQ"""
        return f"{self.x.symbol}{self.y.symbol}→{self.a.symbol}{self.b.symbol}"

    @classmethod
    def single_party(cls, party: "Party", inp: SystemType, out: SystemType) -> "GlobalType":
        """Type of a channel acting on one party only"""
        t = SystemType.trivial()
        if party is Party.ALICE:
            return cls(x=inp, y=t, a=out, b=t)
        return cls(x=t, y=inp, a=t, b=out)

    @classmethod
    def box(cls, nx: int, ny: int, na: int, nb: int) -> "GlobalType":
        """Classical type with the given alphabet sizes"""
        c = SystemType.of_kind
        k = WireKind.CLASSICAL
        return cls(x=c(k, nx), y=c(k, ny), a=c(k, na), b=c(k, nb))

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name).to_dict() for name in ("x", "y", "a", "b")}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GlobalType":
        try:
            return cls(**{name: SystemType.from_dict(data[name]) for name in ("x", "y", "a", "b")})
        except KeyError as e:
            raise InvalidTypeError(f"Global type missing wire {e}")

    def __str__(self) -> str:
        return f"{self.kind_signature} ({self.x.dim},{self.y.dim}→{self.a.dim},{self.b.dim})"


def is_lose_trivial_type(t: GlobalType) -> bool:
    """
    True iff some wire is trivial. Every resource of such a type can be
    generated by local operations and shared entanglement.
    """
    return any(st.is_trivial for _, st in t.wires())
