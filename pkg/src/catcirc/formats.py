"""JSON file formats and deterministic serialization.

Circuit files::

    {"catbits": n,
     "gates": {"name": {"arity": k, "matrix": [[...], ...]}, ...},
     "layers": [[{"gate": "name", "wires": [w, ...]}, ...], ...]}

where each gate matrix is 2^k x 2^k with non-negative integer entries and
layers are listed earliest-first. Morphism files carry one block per
register simple, complex entries written as [re, im] pairs (plain numbers
are accepted on input)::

    {"src": [...], "tgt": [...], "blocks": [[[entry, ...], ...], ...]}

Boundary states are ``{"category": n, "particle": [...]}`` with an optional
``"history"`` list; defect scripts are
``{"defects": [{"name": "...", "matrix": [[...], ...]}, ...]}`` with n x n
non-negative integer matrices.

All emitted JSON is deterministic: keys sorted, compact separators, floats
rounded to 12 decimal places, complex numbers as [re, im].
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .circuit import Circuit, Gate, Layer, Placement, gate_from_matrix, validate_circuit
from .core import Morphism, ObjectExpr, SemisimpleCategory, vect
from .defects import BoundaryState, DefectScript
from .diagnostics import Diagnostic, ValidationError

__all__ = [
    "dump_json",
    "load_boundary_state",
    "load_circuit",
    "load_defect_script",
    "load_json",
    "load_morphism",
    "morphism_payload",
    "parse_boundary_state",
    "parse_circuit_document",
    "parse_defect_script",
    "parse_morphism",
    "state_payload",
]


# ---------------------------------------------------------------------------
# deterministic output

def _round12(x: float) -> float:
    r = round(float(x), 12)
    return 0.0 if r == 0 else r


def _clean(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return _round12(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [_round12(value.real), _round12(value.imag)]
    if isinstance(value, np.ndarray):
        return _clean(value.tolist())
    if value is None or isinstance(value, str):
        return value
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dump_json(payload: Any) -> str:
    """Serialize deterministically: sorted keys, compact, 1e-12-rounded floats."""
    return json.dumps(_clean(payload), sort_keys=True, separators=(",", ":"))


def morphism_payload(m: Morphism) -> dict:
    return {
        "src": list(m.src.mult),
        "tgt": list(m.tgt.mult),
        "blocks": [b.tolist() for b in m.blocks],
    }


def state_payload(s: BoundaryState) -> dict:
    return {
        "category": s.category.simple_count,
        "particle": list(s.particle.mult),
        "history": list(s.history),
    }


# ---------------------------------------------------------------------------
# parsing helpers

def load_json(path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _as_index(value) -> int | None:
    if isinstance(value, bool) or not isinstance(value, int):
        return None
    return value


def _int_entry(value) -> int | None:
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return None


def _parse_int_matrix(value, rows: int, cols: int, loc: str, diags: list[Diagnostic]) -> list[list[int]] | None:
    if not isinstance(value, list) or len(value) != rows or any(
        not isinstance(r, list) or len(r) != cols for r in value
    ):
        diags.append(Diagnostic("shape", f"expected a {rows}x{cols} matrix", loc))
        return None
    out = []
    for r_idx, row in enumerate(value):
        out_row = []
        for c_idx, v in enumerate(row):
            iv = _int_entry(v)
            if iv is None or iv < 0:
                diags.append(Diagnostic(
                    "matrix-entry",
                    f"entries must be non-negative integers, got {v!r}",
                    f"{loc}[{r_idx}][{c_idx}]",
                ))
                return None
            out_row.append(iv)
        out.append(out_row)
    return out


def _parse_mult_vector(value, length: int, loc: str, diags: list[Diagnostic]) -> tuple[int, ...] | None:
    if not isinstance(value, list) or len(value) != length:
        diags.append(Diagnostic("shape", f"expected a list of {length} multiplicities", loc))
        return None
    out = []
    for idx, v in enumerate(value):
        iv = _int_entry(v)
        if iv is None or iv < 0:
            diags.append(Diagnostic("entry", f"multiplicities must be non-negative integers, got {v!r}", f"{loc}[{idx}]"))
            return None
        out.append(iv)
    return tuple(out)


def _parse_complex(value, loc: str, diags: list[Diagnostic]) -> complex | None:
    if isinstance(value, bool):
        diags.append(Diagnostic("entry", f"expected a complex entry, got {value!r}", loc))
        return None
    if isinstance(value, (int, float)):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in value)
    ):
        return complex(value[0], value[1])
    diags.append(Diagnostic("entry", f"expected a number or [re, im] pair, got {value!r}", loc))
    return None


# ---------------------------------------------------------------------------
# circuit files

def parse_circuit_document(doc: Any) -> tuple[Circuit | None, list[Diagnostic]]:
    """Parse a circuit document; returns the circuit (when structurally sound)
    together with all validation diagnostics, structural ones first."""
    diags: list[Diagnostic] = []
    if not isinstance(doc, dict):
        return None, [Diagnostic("schema", "circuit file must be a JSON object", "$")]

    catbits = doc.get("catbits")
    n = _as_index(catbits)
    if n is None or n < 1:
        diags.append(Diagnostic("catbits", f"\"catbits\" must be a positive integer, got {catbits!r}", "$.catbits"))
        n = None

    gates: dict[str, Gate] = {}
    raw_gates = doc.get("gates", {})
    if not isinstance(raw_gates, dict):
        diags.append(Diagnostic("schema", "\"gates\" must be an object", "$.gates"))
        raw_gates = {}
    for name, spec in sorted(raw_gates.items()):
        loc = f"$.gates.{name}"
        if not isinstance(spec, dict):
            diags.append(Diagnostic("schema", "gate entries must be objects", loc))
            continue
        arity = _as_index(spec.get("arity"))
        if arity is None or arity < 1:
            diags.append(Diagnostic("gate-arity", f"\"arity\" must be a positive integer, got {spec.get('arity')!r}", loc + ".arity"))
            continue
        size = 2**arity
        matrix = _parse_int_matrix(spec.get("matrix"), size, size, loc + ".matrix", diags)
        if matrix is None:
            continue
        gates[name] = gate_from_matrix(name, arity, matrix)

    layers: list[Layer] = []
    raw_layers = doc.get("layers", [])
    if not isinstance(raw_layers, list):
        diags.append(Diagnostic("schema", "\"layers\" must be an array of layers", "$.layers"))
        raw_layers = []
    for t, raw_layer in enumerate(raw_layers):
        if not isinstance(raw_layer, list):
            diags.append(Diagnostic("schema", "each layer must be an array of placements", f"$.layers[{t}]"))
            continue
        placements = []
        for p_idx, raw in enumerate(raw_layer):
            loc = f"$.layers[{t}][{p_idx}]"
            if not isinstance(raw, dict) or not isinstance(raw.get("gate"), str):
                diags.append(Diagnostic("schema", "a placement is {\"gate\": name, \"wires\": [...]}", loc))
                continue
            wires = raw.get("wires")
            if not isinstance(wires, list) or any(_as_index(w) is None for w in wires):
                diags.append(Diagnostic("schema", "\"wires\" must be a list of integers", loc + ".wires"))
                continue
            placements.append(Placement(raw["gate"], tuple(wires)))
        layers.append(Layer(tuple(placements)))

    if diags or n is None:
        return None, diags
    circuit = Circuit(n, gates, tuple(layers))
    return circuit, validate_circuit(circuit)


def load_circuit(path) -> Circuit:
    """Read and validate a circuit file; raises ValidationError on any failure."""
    circuit, diags = parse_circuit_document(load_json(path))
    if diags or circuit is None:
        raise ValidationError(diags)
    return circuit


# ---------------------------------------------------------------------------
# morphism files

def parse_morphism(doc: Any, register: SemisimpleCategory) -> Morphism:
    diags: list[Diagnostic] = []
    if not isinstance(doc, dict):
        raise ValidationError([Diagnostic("schema", "morphism file must be a JSON object", "$")])
    n = register.simple_count
    src = _parse_mult_vector(doc.get("src"), n, "$.src", diags)
    tgt = _parse_mult_vector(doc.get("tgt"), n, "$.tgt", diags)
    raw_blocks = doc.get("blocks")
    if not isinstance(raw_blocks, list) or len(raw_blocks) != n:
        diags.append(Diagnostic("shape", f"\"blocks\" must list {n} blocks", "$.blocks"))
    if diags:
        raise ValidationError(diags)
    blocks = []
    for i, raw in enumerate(raw_blocks):
        rows, cols = tgt[i], src[i]
        loc = f"$.blocks[{i}]"
        if not isinstance(raw, list) or len(raw) != rows or any(
            not isinstance(r, list) or len(r) != cols for r in raw
        ):
            diags.append(Diagnostic("shape", f"block {i} must be {rows}x{cols}", loc))
            raise ValidationError(diags)
        block = np.zeros((rows, cols), dtype=complex)
        for r, row in enumerate(raw):
            for c, v in enumerate(row):
                entry = _parse_complex(v, f"{loc}[{r}][{c}]", diags)
                if entry is None:
                    raise ValidationError(diags)
                block[r, c] = entry
        blocks.append(block)
    return Morphism(ObjectExpr(register, src), ObjectExpr(register, tgt), tuple(blocks))


def load_morphism(path, register: SemisimpleCategory) -> Morphism:
    return parse_morphism(load_json(path), register)


# ---------------------------------------------------------------------------
# boundary states and defect scripts

def parse_boundary_state(doc: Any) -> BoundaryState:
    diags: list[Diagnostic] = []
    if not isinstance(doc, dict):
        raise ValidationError([Diagnostic("schema", "state file must be a JSON object", "$")])
    n = _as_index(doc.get("category"))
    if n is None or n < 0:
        raise ValidationError([Diagnostic(
            "schema", f"\"category\" must be a non-negative simple count, got {doc.get('category')!r}", "$.category"
        )])
    particle = _parse_mult_vector(doc.get("particle"), n, "$.particle", diags)
    history = doc.get("history", [])
    if not isinstance(history, list) or any(not isinstance(h, str) for h in history):
        diags.append(Diagnostic("schema", "\"history\" must be a list of strings", "$.history"))
    if diags:
        raise ValidationError(diags)
    category = vect(n)
    return BoundaryState(category, ObjectExpr(category, particle), tuple(history))


def load_boundary_state(path) -> BoundaryState:
    return parse_boundary_state(load_json(path))


def parse_defect_script(doc: Any, category: SemisimpleCategory) -> DefectScript:
    from .functors import LinearFunctor

    diags: list[Diagnostic] = []
    if not isinstance(doc, dict) or not isinstance(doc.get("defects"), list):
        raise ValidationError([Diagnostic("schema", "script file must be {\"defects\": [...]}", "$")])
    n = category.simple_count
    steps = []
    for idx, raw in enumerate(doc["defects"]):
        loc = f"$.defects[{idx}]"
        if not isinstance(raw, dict) or not isinstance(raw.get("name"), str) or not raw.get("name"):
            diags.append(Diagnostic("schema", "a defect is {\"name\": ..., \"matrix\": [[...]]}", loc))
            continue
        matrix = _parse_int_matrix(raw.get("matrix"), n, n, loc + ".matrix", diags)
        if matrix is None:
            continue
        steps.append((raw["name"], LinearFunctor(category, category, matrix)))
    if diags:
        raise ValidationError(diags)
    return DefectScript(tuple(steps))


def load_defect_script(path, category: SemisimpleCategory) -> DefectScript:
    return parse_defect_script(load_json(path), category)
