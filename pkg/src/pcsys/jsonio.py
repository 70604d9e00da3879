"""JSON wire formats for monoids, traces, lassos, systems, nets, valuations.

Documents carry a schema_version field; loaders are strict about field
names and raise SchemaError on anything malformed.  Valuation weights
travel as exact decimal or fraction strings.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SchemaError
from .monoid import TraceMonoid
from .petri import PetriNet
from .system import ConcurrentSystem, build_system
from .traces import Lasso, Trace, make_lasso, trace_from_layers
from .valuation import Valuation

SCHEMA_VERSION = 1


def _require(doc: dict, fields: set[str], kind: str) -> None:
    if not isinstance(doc, dict):
        raise SchemaError(f"{kind} document must be an object")
    missing = fields - set(doc)
    if missing:
        raise SchemaError(f"{kind} document is missing fields {sorted(missing)}")
    extra = set(doc) - fields - {"schema_version"}
    if extra:
        raise SchemaError(f"{kind} document has unknown fields {sorted(extra)}")
    version = doc.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r}")


def _stamp(payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, **payload}


# -- monoid ------------------------------------------------------------------


def load_monoid(doc: dict) -> TraceMonoid:
    _require(doc, {"alphabet", "independence"}, "monoid")
    pairs = []
    for pair in doc["independence"]:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise SchemaError(f"independence entry {pair!r} is not a pair")
        pairs.append((pair[0], pair[1]))
    return TraceMonoid(doc["alphabet"], pairs)


def dump_monoid(m: TraceMonoid) -> dict:
    return _stamp({"alphabet": list(m.letters), "independence": [list(p) for p in m.independence]})


# -- traces and lassos -------------------------------------------------------


def load_trace(m: TraceMonoid, doc: dict) -> Trace:
    _require(doc, {"layers"}, "trace")
    return trace_from_layers(m, doc["layers"])


def dump_trace(x: Trace) -> dict:
    return _stamp(x.to_json())


def load_lasso(m: TraceMonoid, doc: dict) -> Lasso:
    _require(doc, {"prefix", "cycle"}, "lasso")
    return make_lasso(m, doc["prefix"], doc["cycle"])


def dump_lasso(w: Lasso) -> dict:
    return _stamp(w.to_json())


# -- systems -----------------------------------------------------------------


def load_system(doc: dict) -> ConcurrentSystem:
    _require(doc, {"monoid", "states", "action"}, "system")
    m = load_monoid(doc["monoid"])
    entries = []
    for entry in doc["action"]:
        _require(entry, {"from", "letter", "to"}, "action entry")
        entries.append((entry["from"], entry["letter"], entry["to"]))
    return build_system(m, doc["states"], entries)


def dump_system(s: ConcurrentSystem) -> dict:
    entries = [
        {"from": alpha, "letter": a, "to": beta}
        for (alpha, a), beta in sorted(
            s.action.items(),
            key=lambda kv: (s.states.index(kv[0][0]), s.monoid.index[kv[0][1]]),
        )
    ]
    return _stamp(
        {
            "monoid": {k: v for k, v in dump_monoid(s.monoid).items() if k != "schema_version"},
            "states": list(s.states),
            "action": entries,
        }
    )


# -- Petri nets --------------------------------------------------------------


def load_petri(doc: dict) -> PetriNet:
    _require(doc, {"places", "transitions", "initial"}, "petri")
    transitions = []
    for entry in doc["transitions"]:
        _require(entry, {"name", "pre", "post"}, "transition")
        transitions.append((entry["name"], entry["pre"], entry["post"]))
    return PetriNet(doc["places"], transitions, doc["initial"])


def dump_petri(net: PetriNet) -> dict:
    return _stamp(
        {
            "places": list(net.places),
            "transitions": [
                {"name": t.name, "pre": sorted(t.pre), "post": sorted(t.post)}
                for t in net.transitions
            ],
            "initial": sorted(net.initial),
        }
    )


# -- valuations --------------------------------------------------------------


def _parse_weight(text) -> Fraction:
    if isinstance(text, (int, str)):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad weight value {text!r}") from exc
    raise SchemaError(f"weight value {text!r} must be a string")


def load_valuation(s: ConcurrentSystem, doc: dict) -> Valuation:
    _require(doc, {"weights"}, "valuation")
    weights = {}
    for entry in doc["weights"]:
        _require(entry, {"state", "letter", "value"}, "weight entry")
        key = (entry["state"], entry["letter"])
        if key in weights:
            raise SchemaError(f"duplicate weight entry for {key}")
        weights[key] = _parse_weight(entry["value"])
    return Valuation(s, weights)


def dump_valuation(v: Valuation) -> dict:
    return _stamp(v.to_json())
