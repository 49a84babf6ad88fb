"""JSON structure documents: one self-contained file holding a field, a grading and named objects.

Scalars are strings ("a" or "a/b"), degrees are integer arrays. Parsing
checks shapes and references only; mathematical validity is the job of the
``check`` command so that a broken structure yields a witness, not a crash.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .altmaps import AltMap, alt_from_function, canonical_tuples
from .colour_lie import ColourLieAlgebra
from .graded_linalg import FormEps, GradedSpace
from .grading import AbelianGroup, CommutationFactor
from .representations import OrthRep
from .scalars import Field, FieldError


class DocumentError(ValueError):
    pass


@dataclass
class Document:
    field: Field
    cf: CommutationFactor
    spaces: dict = field(default_factory=dict)
    forms: dict = field(default_factory=dict)        # name -> (space name, FormEps)
    algebras: dict = field(default_factory=dict)
    reps: dict = field(default_factory=dict)         # name -> (algebra, space, form names, OrthRep)
    phis: dict = field(default_factory=dict)         # name -> (rep name, AltMap, raw table)

    def rep(self, name: str) -> OrthRep:
        if name not in self.reps:
            raise DocumentError(f"no representation named {name!r}")
        return self.reps[name][3]

    def phi(self, name: str):
        if name not in self.phis:
            raise DocumentError(f"no phi named {name!r}")
        return self.phis[name]


# ------------------------------------------------------------------ parsing

def _need(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentError(f"{where}: missing key {key!r}")
    return obj[key]


def _scalar(f: Field, text, where):
    if not isinstance(text, str):
        raise DocumentError(f"{where}: scalars must be strings, got {text!r}")
    try:
        return f.parse(text)
    except (FieldError, ZeroDivisionError) as e:
        raise DocumentError(f"{where}: {e}") from None


def _matrix(f: Field, rows, n, m, where):
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != m for r in rows):
        raise DocumentError(f"{where}: expected a {n}x{m} matrix")
    return [[_scalar(f, x, where) for x in r] for r in rows]


def _degree(group: AbelianGroup, d, where):
    if not isinstance(d, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in d):
        raise DocumentError(f"{where}: degrees are integer arrays")
    if len(d) != group.ngens:
        raise DocumentError(f"{where}: degree needs {group.ngens} entries")
    return group.elem(d)


def _basis(cf, items, where):
    if not isinstance(items, list):
        raise DocumentError(f"{where}: basis must be a list")
    names, degs = [], []
    for k, it in enumerate(items):
        nm = _need(it, "name", f"{where}[{k}]")
        if not isinstance(nm, str):
            raise DocumentError(f"{where}[{k}]: names are strings")
        names.append(nm)
        degs.append(_degree(cf.group, _need(it, "degree", f"{where}[{k}]"), f"{where}[{k}]"))
    try:
        return GradedSpace(cf, names, degs)
    except ValueError as e:
        raise DocumentError(f"{where}: {e}") from None


def _sparse(f: Field, space: GradedSpace, entries, where):
    out = [f.zero] * space.dim
    if not isinstance(entries, list):
        raise DocumentError(f"{where}: value must be a list of {{k, c}}")
    for e in entries:
        k = _need(e, "k", where)
        if k not in space.names:
            raise DocumentError(f"{where}: unknown basis element {k!r}")
        i = space.index(k)
        out[i] = out[i] + _scalar(f, _need(e, "c", where), where)
    return out


def _index(space, name, where):
    if name not in space.names:
        raise DocumentError(f"{where}: unknown basis element {name!r}")
    return space.index(name)


def parse_field(obj) -> Field:
    kind = _need(obj, "kind", "field")
    try:
        if kind == "rational":
            return Field.rational()
        if kind == "prime":
            p = _need(obj, "p", "field")
            if not isinstance(p, int):
                raise DocumentError("field: p must be an integer")
            return Field.prime(p)
    except FieldError as e:
        raise DocumentError(f"field: {e}") from None
    raise DocumentError(f"field: unknown kind {kind!r}")


def parse_grading(obj, f: Field) -> CommutationFactor:
    r = _need(obj, "free_rank", "grading")
    tors = _need(obj, "torsion", "grading")
    if not isinstance(r, int) or not isinstance(tors, list) or any(not isinstance(m, int) for m in tors):
        raise DocumentError("grading: free_rank is an integer and torsion an integer list")
    try:
        group = AbelianGroup(r, tors)
    except ValueError as e:
        raise DocumentError(f"grading: {e}") from None
    n = group.ngens
    E = _matrix(f, _need(obj, "epsilon", "grading"), n, n, "grading.epsilon")
    return CommutationFactor(group, E, f)


def parse_document(data) -> Document:
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    f = parse_field(_need(data, "field", "document"))
    cf = parse_grading(_need(data, "grading", "document"), f)
    doc = Document(f, cf)
    for name, items in data.get("spaces", {}).items():
        doc.spaces[name] = _basis(cf, items, f"spaces.{name}")
    for name, obj in data.get("forms", {}).items():
        where = f"forms.{name}"
        sname = _need(obj, "space", where)
        if sname not in doc.spaces:
            raise DocumentError(f"{where}: unknown space {sname!r}")
        sp = doc.spaces[sname]
        doc.forms[name] = (sname, FormEps(sp, _matrix(f, _need(obj, "gram", where), sp.dim, sp.dim, where)))
    for name, obj in data.get("algebras", {}).items():
        doc.algebras[name] = _parse_algebra(f, cf, obj, f"algebras.{name}")
    for name, obj in data.get("reps", {}).items():
        doc.reps[name] = _parse_rep(doc, obj, f"reps.{name}")
    for name, obj in data.get("phis", {}).items():
        doc.phis[name] = _parse_phi(doc, obj, f"phis.{name}")
    return doc


def _parse_algebra(f, cf, obj, where) -> ColourLieAlgebra:
    sp = _basis(cf, _need(obj, "basis", where), f"{where}.basis")
    n = sp.dim
    table = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for k, e in enumerate(_need(obj, "bracket", where)):
        w = f"{where}.bracket[{k}]"
        i = _index(sp, _need(e, "x", w), w)
        j = _index(sp, _need(e, "y", w), w)
        if (i, j) in seen:
            raise DocumentError(f"{w}: duplicate bracket entry")
        seen.add((i, j))
        table[i][j] = _sparse(f, sp, _need(e, "value", w), w)
    form = None
    if obj.get("form") is not None:
        form = FormEps(sp, _matrix(f, obj["form"], n, n, f"{where}.form"))
    return ColourLieAlgebra(sp, table, form)


def _parse_rep(doc: Document, obj, where):
    an, sn, fn = (_need(obj, k, where) for k in ("algebra", "space", "form"))
    for nm, pool, kind in ((an, doc.algebras, "algebra"), (sn, doc.spaces, "space"), (fn, doc.forms, "form")):
        if nm not in pool:
            raise DocumentError(f"{where}: unknown {kind} {nm!r}")
    alg, sp = doc.algebras[an], doc.spaces[sn]
    fsp, form = doc.forms[fn]
    if fsp != sn:
        raise DocumentError(f"{where}: form {fn!r} lives on {fsp!r}, not {sn!r}")
    f = doc.field
    mats = [[[f.zero] * sp.dim for _ in range(sp.dim)] for _ in range(alg.dim)]
    seen = set()
    for k, e in enumerate(_need(obj, "action", where)):
        w = f"{where}.action[{k}]"
        x = _index(alg.space, _need(e, "x", w), w)
        if x in seen:
            raise DocumentError(f"{w}: duplicate action entry")
        seen.add(x)
        mats[x] = _matrix(f, _need(e, "matrix", w), sp.dim, sp.dim, w)
    return an, sn, fn, OrthRep(alg, sp, form, mats)


def _parse_phi(doc: Document, obj, where):
    rn = _need(obj, "rep", where)
    r = doc.rep(rn)
    V = r.space
    f = doc.field
    raw = {}
    for k, e in enumerate(_need(obj, "values", where)):
        w = f"{where}.values[{k}]"
        a = _index(V, _need(e, "v", w), w)
        b = _index(V, _need(e, "w", w), w)
        raw[(a, b)] = _sparse(f, V, _need(e, "value", w), w)
    zero = [f.zero] * V.dim

    def ev(t):
        return raw.get(tuple(t), zero)

    phi = alt_from_function(V, V, 2, ev)
    return rn, phi, ev


def load_document(path) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: not valid JSON ({e})") from None
    return parse_document(data)


# ------------------------------------------------------------ serialization

def _fmt(f: Field, x) -> str:
    return f.format(x)


def _basis_json(sp: GradedSpace):
    return [{"name": n, "degree": list(d)} for n, d in zip(sp.names, sp.degrees)]


def _sparse_json(f: Field, sp: GradedSpace, vec):
    return [{"k": sp.names[k], "c": _fmt(f, c)} for k, c in enumerate(vec) if c]


def _matrix_json(f: Field, m):
    return [[_fmt(f, x) for x in row] for row in m]


def algebra_json(g: ColourLieAlgebra):
    f = g.field
    sp = g.space
    bracket = []
    for i in range(g.dim):
        for j in range(g.dim):
            v = g.table[i][j]
            if any(v):
                bracket.append({"x": sp.names[i], "y": sp.names[j], "value": _sparse_json(f, sp, v)})
    return {
        "basis": _basis_json(sp),
        "bracket": bracket,
        "form": _matrix_json(f, g.form.gram) if g.form is not None else None,
    }


def document_json(doc: Document):
    f = doc.field
    cf = doc.cf
    out = {
        "field": {"kind": "rational"} if f.kind == "rational" else {"kind": "prime", "p": f.p},
        "grading": {
            "free_rank": cf.group.free_rank,
            "torsion": list(cf.group.torsion),
            "epsilon": _matrix_json(f, cf.gen_values),
        },
        "spaces": {n: _basis_json(sp) for n, sp in doc.spaces.items()},
        "forms": {n: {"space": sn, "gram": _matrix_json(f, b.gram)} for n, (sn, b) in doc.forms.items()},
        "algebras": {n: algebra_json(g) for n, g in doc.algebras.items()},
        "reps": {},
    }
    for n, (an, sn, fn, r) in doc.reps.items():
        alg = r.algebra
        action = [{"x": alg.space.names[k], "matrix": _matrix_json(f, m)}
                  for k, m in enumerate(r.action) if any(any(row) for row in m)]
        out["reps"][n] = {"algebra": an, "space": sn, "form": fn, "action": action}
    if doc.phis:
        out["phis"] = {}
        for n, (rn, _, ev) in doc.phis.items():
            V = doc.rep(rn).space
            values = []
            for a in range(V.dim):
                for b in range(V.dim):
                    v = ev((a, b))
                    if any(v):
                        values.append({"v": V.names[a], "w": V.names[b], "value": _sparse_json(f, V, v)})
            out["phis"][n] = {"rep": rn, "values": values}
    return out


def _pretty(obj, indent: int) -> str:
    flat = json.dumps(obj, ensure_ascii=False)
    if len(flat) + indent <= 96 or not isinstance(obj, (list, dict)) or not obj:
        return flat
    pad = " " * (indent + 2)
    if isinstance(obj, list):
        items = [pad + _pretty(x, indent + 2) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"
    items = [pad + json.dumps(k, ensure_ascii=False) + ": " + _pretty(v, indent + 2) for k, v in obj.items()]
    return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"


def dumps(obj) -> str:
    """Canonical text: keys in construction order, short containers on one line."""
    return _pretty(obj, 0) + "\n"


def document_from_rep(r: OrthRep) -> Document:
    """A document holding one representation under the names V, B, g and rho."""
    doc = Document(r.field, r.space.cf)
    doc.spaces["V"] = r.space
    doc.forms["B"] = ("V", r.form)
    doc.algebras["g"] = r.algebra
    doc.reps["rho"] = ("g", "V", "B", r)
    return doc


def altmap_json(f: AltMap):
    fld = f.field
    values = []
    for t, v in f.items():
        values.append({"tuple": [f.domain.names[i] for i in t],
                       "value": _sparse_json(fld, f.codomain, v)})
    return {"arity": f.arity, "values": values}


def altmap_from_json(obj, domain: GradedSpace, codomain: GradedSpace) -> AltMap:
    fld = domain.field
    n = _need(obj, "arity", "altmap")
    vals = {}
    for k, e in enumerate(_need(obj, "values", "altmap")):
        w = f"altmap.values[{k}]"
        t = tuple(_index(domain, nm, w) for nm in _need(e, "tuple", w))
        if len(t) != n:
            raise DocumentError(f"{w}: tuple length differs from the arity")
        vals[t] = _sparse(fld, codomain, _need(e, "value", w), w)
    zero = [fld.zero] * codomain.dim
    stored = {t: vals.get(t, zero) for t in canonical_tuples(domain, n)}
    return alt_from_function(domain, codomain, n, lambda t: stored[t])
