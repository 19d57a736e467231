"""Categorical circuits over categorical-bit wires.

A register of n categorical bits is the n-fold tensor power of the
two-simple category; its 2^n simples are indexed by bitstrings, row-major
with wire 0 as the most significant bit. Gates are arbitrary endofunctors
of a k-wire register, placed on distinct wires; layers listed first act
first, so the elaborated endofunctor composes layers rightmost-first.

Within one layer, gates act on contiguized wires: a wire permutation moves
each placement's wires, in listed order, to the lowest positions, the gate
product (padded by the identity on untouched wires) acts there, and the
permutation is undone. Wire permutations themselves are the evident
2^n x 2^n permutation functors on bit indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Mapping, Sequence

import numpy as np

from . import intmat
from .core import Morphism, ObjectExpr, SemisimpleCategory, vect
from .deligne import deligne_category, deligne_functor
from .diagnostics import Diagnostic, ValidationError
from .functors import LinearFunctor, apply_to_morphism, apply_to_object, compose_functors, identity_functor

__all__ = [
    "Circuit",
    "Gate",
    "Layer",
    "Placement",
    "catbit_register",
    "elaborate",
    "gate_from_matrix",
    "k0_of_circuit",
    "k0_of_functor",
    "lift_boolean_function",
    "permutation_functor",
    "run_morphism",
    "run_object",
    "validate_circuit",
]


def catbit_register(n_catbits: int) -> SemisimpleCategory:
    """The category of a register of `n_catbits` categorical bits.

    Left fold of the two-simple category with itself; 2^n simples indexed
    by bitstrings, wire 0 most significant.
    """
    if n_catbits < 0:
        raise ValueError(f"register size must be non-negative, got {n_catbits}")
    if n_catbits == 0:
        return vect(1)
    register = vect(2)
    for _ in range(n_catbits - 1):
        register = deligne_category(register, vect(2))
    return register


@dataclass(frozen=True)
class Gate:
    """A named gate: an arbitrary endofunctor of a k-wire register."""

    name: str
    arity: int
    functor: LinearFunctor

    def __post_init__(self):
        if not self.name:
            raise ValueError("gate name must be non-empty")
        if self.arity < 1:
            raise ValueError(f"gate arity must be positive, got {self.arity}")
        want = catbit_register(self.arity)
        if self.functor.src != want or self.functor.tgt != want:
            raise ValueError(
                f"gate {self.name!r} must be an endofunctor of the {self.arity}-wire register"
            )


def gate_from_matrix(name: str, arity: int, matrix) -> Gate:
    """Build a gate from a 2^k x 2^k non-negative integer matrix."""
    register = catbit_register(arity)
    return Gate(name, arity, LinearFunctor(register, register, matrix))


@dataclass(frozen=True)
class Placement:
    """One gate applied to a list of distinct wires, in gate-input order."""

    gate: str
    wires: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "wires", tuple(int(w) for w in self.wires))


@dataclass(frozen=True)
class Layer:
    placements: tuple[Placement, ...]

    def __post_init__(self):
        object.__setattr__(self, "placements", tuple(self.placements))


@dataclass(frozen=True)
class Circuit:
    """A layered categorical circuit on `n_catbits` wires.

    Layers act in listed order (earliest first). Structural validity is
    checked by `validate_circuit`; `elaborate` refuses invalid circuits
    with structured diagnostics.
    """

    n_catbits: int
    gates: Mapping[str, Gate]
    layers: tuple[Layer, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gates", dict(self.gates))
        object.__setattr__(self, "layers", tuple(self.layers))


def validate_circuit(circuit: Circuit) -> list[Diagnostic]:
    """Structural rules for circuits; one primary diagnostic per failure."""
    diags = []
    if circuit.n_catbits < 1:
        diags.append(Diagnostic("catbits", f"need at least one categorical bit, got {circuit.n_catbits}", "$.catbits"))
    for name, gate in circuit.gates.items():
        if gate.name != name:
            diags.append(Diagnostic("gate-name", f"gate registered as {name!r} is named {gate.name!r}", f"$.gates.{name}"))
    for t, layer in enumerate(circuit.layers):
        seen: dict[int, str] = {}
        for p_idx, placement in enumerate(layer.placements):
            loc = f"$.layers[{t}][{p_idx}]"
            gate = circuit.gates.get(placement.gate)
            if gate is None:
                diags.append(Diagnostic("undeclared-gate", f"gate {placement.gate!r} is not declared", loc + ".gate"))
            elif len(placement.wires) != gate.arity:
                diags.append(Diagnostic(
                    "arity",
                    f"gate {placement.gate!r} has arity {gate.arity} but {len(placement.wires)} wires were given",
                    loc + ".wires",
                ))
            if len(set(placement.wires)) != len(placement.wires):
                diags.append(Diagnostic("wire-duplicate", f"wires {list(placement.wires)} repeat a wire", loc + ".wires"))
            out_of_range = [w for w in placement.wires if not 0 <= w < circuit.n_catbits]
            if out_of_range:
                diags.append(Diagnostic(
                    "wire-range",
                    f"wires {out_of_range} fall outside 0..{circuit.n_catbits - 1}",
                    loc + ".wires",
                ))
            clashes = sorted(set(w for w in placement.wires if w in seen))
            if clashes:
                diags.append(Diagnostic(
                    "wire-clash",
                    f"wires {clashes} are already used by gate {seen[clashes[0]]!r} in the same layer",
                    loc + ".wires",
                ))
            for w in placement.wires:
                seen.setdefault(w, placement.gate)
    return diags


def permutation_functor(perm: Sequence[int]) -> LinearFunctor:
    """The functor permuting register wires: wire i moves to position perm[i].

    On simple bit indices it sends the bitstring (b_0 .. b_{n-1}) to the one
    with b_i at position perm[i]; composing these functors matches
    composing permutations.
    """
    perm = tuple(int(p) for p in perm)
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
    size = 2**n
    rows = [[0] * size for _ in range(size)]
    for x in range(size):
        y = 0
        for i in range(n):
            bit = (x >> (n - 1 - i)) & 1
            y |= bit << (n - 1 - perm[i])
        rows[y][x] = 1
    register = catbit_register(n)
    return LinearFunctor(register, register, rows)


def _layer_functor(circuit: Circuit, layer: Layer) -> LinearFunctor:
    n = circuit.n_catbits
    register = catbit_register(n)
    if not layer.placements:
        return identity_functor(register)
    placed = [w for p in layer.placements for w in p.wires]
    rest = [w for w in range(n) if w not in placed]
    perm = [0] * n
    for pos, w in enumerate(placed + rest):
        perm[w] = pos
    inverse = [0] * n
    for w, pos in enumerate(perm):
        inverse[pos] = w
    to_front = permutation_functor(perm)
    factors = [circuit.gates[p.gate].functor for p in layer.placements]
    if rest:
        factors.append(identity_functor(catbit_register(len(rest))))
    middle = reduce(deligne_functor, factors)
    return compose_functors(permutation_functor(inverse), compose_functors(middle, to_front))


def elaborate(circuit: Circuit) -> LinearFunctor:
    """Collapse a circuit to a single endofunctor of its register.

    Earliest layer applied first: the result is L_k ∘ ... ∘ L_1 for layer
    functors L_t. Raises ValidationError with structured diagnostics if the
    circuit is structurally invalid.
    """
    diags = validate_circuit(circuit)
    if diags:
        raise ValidationError(diags)
    register = catbit_register(circuit.n_catbits)
    result = identity_functor(register)
    for layer in circuit.layers:
        result = compose_functors(_layer_functor(circuit, layer), result)
    return result


def run_object(circuit: Circuit, a: ObjectExpr) -> ObjectExpr:
    """Send an object of the register through the elaborated circuit."""
    return apply_to_object(elaborate(circuit), a)


def run_morphism(circuit: Circuit, f: Morphism) -> Morphism:
    """Transport a morphism of the register through the elaborated circuit."""
    return apply_to_morphism(elaborate(circuit), f)


def lift_boolean_function(n: int, table: Sequence[int]) -> LinearFunctor:
    """Lift a function on n-bit strings to a functor on the n-wire register.

    `table[x]` is the image of input x; the multiplicity matrix has a single
    1 per column, at row table[x], so basis objects map along the table.
    """
    if n < 1:
        raise ValueError(f"need at least one bit, got {n}")
    size = 2**n
    table = list(table)
    if len(table) != size:
        raise ValueError(f"table must list {size} outputs, got {len(table)}")
    rows = [[0] * size for _ in range(size)]
    for x, fx in enumerate(table):
        if not isinstance(fx, (int, np.integer)) or isinstance(fx, bool) or not 0 <= fx < size:
            raise ValueError(f"table entry {fx!r} at input {x} is not in 0..{size - 1}")
        rows[int(fx)][x] = 1
    register = catbit_register(n)
    return LinearFunctor(register, register, rows)


def k0_of_functor(f: LinearFunctor) -> np.ndarray:
    """Decategorify a functor: the induced integer matrix on multiplicity vectors."""
    return intmat.asmatrix(f.mult_matrix)


def k0_of_circuit(circuit: Circuit) -> np.ndarray:
    """Decategorify a whole circuit; equals the time-ordered product of layer matrices."""
    return k0_of_functor(elaborate(circuit))
