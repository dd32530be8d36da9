"""The .lsab document format.

A document is JSON::

    {"version": 1, "objects": [ {...}, ... ]}

Every object has a unique "name" and a "type":

algebra   {"dim": n, "kind": "left-symmetric", "entries": [{"i","j","k","c"}]}
          entry (i, j, k, c) means e_i e_j has coefficient c on e_k, 0-based.
          Example: A2 (e1 e2 = e2) is {"dim": 2, "entries": [{"i":0,"j":1,"k":1,"c":"1"}]}.
tensor2   {"dims": [p, q], "entries": [{"i","j","c"}]}, r = sum c e_i (x) e_j
form      {"dim": n, "entries": [{"i","j","c"}]}, B(e_i, e_j) = c
rep       {"algebra": name, "dim": m, "entries": [{"i","j","k","c"}]},
          rho(e_i) has entry c in row j, column k
bimodule  {"algebra": name, "dim": m, "left": [...], "right": [...]}, entries as for rep
pair      {"algebra": name, "dual": name}
ooperator {"algebra": name, "rep": name, "entries": [{"i","j","c"}]},
          T(v_j) has coefficient c on e_i

Rationals are strings "p" or "p/q" with q > 0 in lowest terms; lenient mode
also accepts unreduced fractions and bare JSON integers.  Omitted entries are
zero.  Every error is reported as a ParseError carrying a line and column.
"""
from __future__ import annotations

import json
import json.decoder
import json.scanner
from dataclasses import dataclass, field

import numpy as np

from .algebra import KINDS, Algebra
from .arith import format_rational, parse_rational, qarray, zeros
from .bialgebra import BialgebraPair
from .yangbaxter import OOperatorData

VERSION = 1
TYPES = ("algebra", "tensor2", "form", "rep", "bimodule", "pair", "ooperator")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, field_name: str = "", expected: str = ""):
        self.message = message
        self.line = line
        self.column = column
        self.field = field_name
        self.expected = expected
        loc = f"line {line}, column {column}: " if line else ""
        extra = f" (field {field_name!r}" + (f", expected {expected}" if expected else "") + ")" if field_name else ""
        super().__init__(f"{loc}{message}{extra}")


def _a(want: str) -> str:
    return f"name of an {want}" if want[0] in "aeiou" else f"name of a {want}"


class _Obj(dict):
    """A JSON object that remembers the offset of its opening brace."""

    pos = 0


def _parse_object(s_and_end, *args):
    s, end = s_and_end
    obj, new_end = json.decoder.JSONObject(s_and_end, *args)
    out = _Obj(obj)
    out.pos = end - 1
    return out, new_end


def _decoder() -> json.JSONDecoder:
    dec = json.JSONDecoder()
    dec.parse_object = _parse_object
    dec.scan_once = json.scanner.py_make_scanner(dec)
    return dec


@dataclass(frozen=True, eq=False)
class DocObject:
    name: str
    type: str
    value: object
    refs: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, DocObject):
            return NotImplemented
        if (self.name, self.type, self.refs) != (other.name, other.type, other.refs):
            return False
        return _value_key(self) == _value_key(other)


def _value_key(o: DocObject):
    v = o.value
    if o.type == "algebra":
        return ("algebra", v.kind, v.c.shape, tuple(v.c.flat))
    if o.type in ("tensor2", "form", "rep"):
        return (v.shape, tuple(v.flat))
    if o.type == "bimodule":
        return (v[0].shape, tuple(v[0].flat), tuple(v[1].flat))
    if o.type == "ooperator":
        return (v.T.shape, tuple(v.T.flat))
    return ()


@dataclass(frozen=True, eq=False)
class Document:
    version: int
    objects: dict

    def __getitem__(self, name: str) -> DocObject:
        return self.objects[name]

    def get(self, name: str, type_: str | None = None):
        """The value named ``name``, optionally requiring a type."""
        if name not in self.objects:
            raise KeyError(f"no object named {name!r}")
        o = self.objects[name]
        if type_ is not None and o.type != type_:
            raise KeyError(f"object {name!r} is a {o.type}, expected {type_}")
        return o.value

    def names(self, type_: str | None = None) -> list[str]:
        return [n for n, o in self.objects.items() if type_ is None or o.type == type_]

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return self.version == other.version and list(self.objects) == list(other.objects) and all(
            self.objects[n] == other.objects[n] for n in self.objects
        )


class _Ctx:
    def __init__(self, text: str, lenient: bool):
        self.text = text
        self.lenient = lenient

    def where(self, node) -> tuple[int, int]:
        pos = getattr(node, "pos", 0)
        line = self.text.count("\n", 0, pos) + 1
        col = pos - self.text.rfind("\n", 0, pos)
        return line, col

    def fail(self, node, message, field_name="", expected=""):
        line, col = self.where(node)
        raise ParseError(message, line, col, field_name, expected)

    def field(self, node, key, kind, expected):
        if key not in node:
            self.fail(node, f"missing field {key!r}", key, expected)
        v = node[key]
        if kind is int and (not isinstance(v, int) or isinstance(v, bool) or v < 0):
            self.fail(node, f"field {key!r} must be a non-negative integer", key, expected)
        if kind is str and not isinstance(v, str):
            self.fail(node, f"field {key!r} must be a string", key, expected)
        if kind is list and not isinstance(v, list):
            self.fail(node, f"field {key!r} must be a list", key, expected)
        return v

    def rational(self, node, v):
        if self.lenient and isinstance(v, int) and not isinstance(v, bool):
            return parse_rational(str(v))
        try:
            return parse_rational(v, lenient=self.lenient)
        except ValueError as exc:
            self.fail(node, str(exc), "c", "a rational 'p' or 'p/q'")

    def entries(self, node, key, shape, names):
        out = np.array(zeros(shape))
        seen = set()
        expected = "{" + ", ".join(f'"{n}"' for n in names) + ', "c"}'
        for e in self.field(node, key, list, "a list of entries " + expected):
            if not isinstance(e, dict):
                self.fail(node, f"entry in {key!r} is not an object", key, expected)
            extra = set(e) - set(names) - {"c"}
            if extra:
                self.fail(e, f"unexpected entry field(s) {sorted(extra)}", key, expected)
            idx = []
            for n, bound in zip(names, shape):
                v = self.field(e, n, int, f"integer in [0, {bound})")
                if v >= bound:
                    self.fail(e, f"index {n}={v} out of range for dimension {bound}", n, f"integer in [0, {bound})")
                idx.append(v)
            if "c" not in e:
                self.fail(e, "missing field 'c'", "c", "a rational 'p' or 'p/q'")
            t = tuple(idx)
            if t in seen:
                self.fail(e, f"duplicate entry at {t}", key)
            seen.add(t)
            out[t] = self.rational(e, e["c"])
        return qarray(out)


def parse_document(text: str, lenient: bool = False) -> Document:
    """Parse and validate a document; raises ParseError with a position."""
    ctx = _Ctx(text, lenient)
    try:
        root = _decoder().decode(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(root, dict):
        raise ParseError("top level must be an object", 1, 1, "", '{"version": 1, "objects": [...]}')
    version = ctx.field(root, "version", int, "1")
    if version != VERSION:
        ctx.fail(root, f"unsupported format version {version}", "version", "1")
    raw = ctx.field(root, "objects", list, "a list of objects")
    by_name: dict = {}
    for node in raw:
        if not isinstance(node, dict):
            ctx.fail(root, "object entries must be JSON objects", "objects")
        name = ctx.field(node, "name", str, "a string")
        if name in by_name:
            ctx.fail(node, f"duplicate name {name!r}", "name", "a unique name")
        typ = ctx.field(node, "type", str, " | ".join(TYPES))
        if typ not in TYPES:
            ctx.fail(node, f"unknown type {typ!r}", "type", " | ".join(TYPES))
        by_name[name] = node
    done: dict = {}

    def resolve(node, key, want):
        ref = ctx.field(node, key, str, _a(want))
        if ref not in by_name:
            ctx.fail(node, f"reference {ref!r} does not resolve", key, _a(want))
        if by_name[ref]["type"] != want:
            ctx.fail(node, f"reference {ref!r} is a {by_name[ref]['type']}, not a {want}", key, _a(want))
        return build(ref)

    def build(name, stack=()):
        if name in done:
            return done[name].value
        node = by_name[name]
        typ = node["type"]
        refs = {}
        if typ == "algebra":
            n = ctx.field(node, "dim", int, "a non-negative integer")
            kind = node.get("kind", "generic")
            if kind not in KINDS:
                ctx.fail(node, f"unknown algebra kind {kind!r}", "kind", " | ".join(KINDS))
            c = ctx.entries(node, "entries", (n, n, n), ("i", "j", "k"))
            try:
                value = Algebra(c, name, kind)
            except ValueError as exc:
                ctx.fail(node, str(exc), "entries")
        elif typ == "tensor2":
            dims = ctx.field(node, "dims", list, "[p, q]")
            if len(dims) != 2 or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 0 for d in dims):
                ctx.fail(node, "dims must be two non-negative integers", "dims", "[p, q]")
            value = ctx.entries(node, "entries", tuple(dims), ("i", "j"))
        elif typ == "form":
            n = ctx.field(node, "dim", int, "a non-negative integer")
            value = ctx.entries(node, "entries", (n, n), ("i", "j"))
        elif typ in ("rep", "bimodule"):
            A = resolve(node, "algebra", "algebra")
            refs["algebra"] = node["algebra"]
            m = ctx.field(node, "dim", int, "a non-negative integer")
            shape = (A.dim, m, m)
            if typ == "rep":
                value = ctx.entries(node, "entries", shape, ("i", "j", "k"))
            else:
                value = (ctx.entries(node, "left", shape, ("i", "j", "k")), ctx.entries(node, "right", shape, ("i", "j", "k")))
        elif typ == "pair":
            A = resolve(node, "algebra", "algebra")
            B = resolve(node, "dual", "algebra")
            refs = {"algebra": node["algebra"], "dual": node["dual"]}
            if A.dim != B.dim:
                ctx.fail(node, f"dimension mismatch: {A.dim} vs {B.dim}", "dual", f"an algebra of dimension {A.dim}")
            value = BialgebraPair(A, B)
        else:  # ooperator
            G = resolve(node, "algebra", "algebra")
            rho = resolve(node, "rep", "rep")
            refs = {"algebra": node["algebra"], "rep": node["rep"]}
            if by_name[node["rep"]]["algebra"] != node["algebra"]:
                ctx.fail(node, f"representation {node['rep']!r} is not over {node['algebra']!r}", "rep")
            m = rho.shape[1]
            T = ctx.entries(node, "entries", (G.dim, m), ("i", "j"))
            value = OOperatorData(G, rho, T)
        done[name] = DocObject(name, typ, value, refs)
        return value

    for name in by_name:
        build(name)
    return Document(version, {n: done[n] for n in by_name})


def read_document(path, lenient: bool = False) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read(), lenient)


# ---------------------------------------------------------------------------
# emitting
# ---------------------------------------------------------------------------


def _sparse(arr, names) -> list[dict]:
    out = []
    for idx in np.ndindex(*arr.shape):
        v = arr[idx]
        if v != 0:
            e = {n: int(i) for n, i in zip(names, idx)}
            e["c"] = format_rational(v)
            out.append(e)
    return out


def object_to_json(o: DocObject) -> dict:
    d: dict = {"name": o.name, "type": o.type}
    v = o.value
    if o.type == "algebra":
        d.update(dim=v.dim, kind=v.kind, entries=_sparse(v.c, "ijk"))
    elif o.type == "tensor2":
        d.update(dims=list(v.shape), entries=_sparse(v, "ij"))
    elif o.type == "form":
        d.update(dim=v.shape[0], entries=_sparse(v, "ij"))
    elif o.type == "rep":
        d.update(algebra=o.refs["algebra"], dim=v.shape[1], entries=_sparse(v, "ijk"))
    elif o.type == "bimodule":
        d.update(algebra=o.refs["algebra"], dim=v[0].shape[1], left=_sparse(v[0], "ijk"), right=_sparse(v[1], "ijk"))
    elif o.type == "pair":
        d.update(o.refs)
    elif o.type == "ooperator":
        d.update(o.refs)
        d["entries"] = _sparse(v.T, "ij")
    else:
        raise ValueError(f"unknown type {o.type!r}")
    return d


def emit_document(doc: Document) -> str:
    """Stable text: one line per entry, object fields in a fixed order."""
    lines = ["{", f' "version": {doc.version},', ' "objects": [']
    objs = [object_to_json(o) for o in doc.objects.values()]
    for n, d in enumerate(objs):
        head = {k: v for k, v in d.items() if not isinstance(v, list) or k == "dims"}
        lists = [(k, v) for k, v in d.items() if isinstance(v, list) and k != "dims"]
        parts = [f"  {json.dumps(head)[:-1]}"]
        for k, v in lists:
            body = ",\n".join(f"    {json.dumps(e)}" for e in v)
            parts.append(f', "{k}": [\n{body}\n   ]' if v else f', "{k}": []')
        lines.append("".join(parts) + "}" + ("," if n < len(objs) - 1 else ""))
    lines += [" ]", "}"]
    return "\n".join(lines) + "\n"


def document_of(*objects: DocObject) -> Document:
    return Document(VERSION, {o.name: o for o in objects})


def algebra_object(A: Algebra, name: str | None = None) -> DocObject:
    name = name or A.name or "A"
    return DocObject(name, "algebra", A.renamed(name))


def tensor_object(name: str, r) -> DocObject:
    return DocObject(name, "tensor2", qarray(r))


def form_object(name: str, B) -> DocObject:
    return DocObject(name, "form", qarray(B))


__all__ = [
    "DocObject",
    "Document",
    "ParseError",
    "TYPES",
    "VERSION",
    "algebra_object",
    "document_of",
    "emit_document",
    "form_object",
    "object_to_json",
    "parse_document",
    "read_document",
    "tensor_object",
]
