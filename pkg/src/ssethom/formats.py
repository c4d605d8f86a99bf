"""Tagged JSON documents for the objects the command line reads and writes.

One document per file, UTF-8 JSON with a top-level "type" tag.  Loading
checks shapes, integer types, and index ranges, and names the offending
field on failure.  The structural laws (simplicial identities,
associativity, functoriality) are the validators' business, not the
loader's.  ``save_document`` followed by ``load_document`` is the identity
on every supported object.
"""

from __future__ import annotations

import json

from .cat import FinMonoid, FinNonUnitalCategory, FunctorData, MonoidAction, NatTransData
from .snf import SparseIntMatrix
from .sset import BiSemiSimplicialSet, SemiSimplicialSet, SimplexRef, SimplicialSet


class FormatError(ValueError):
    """A malformed document; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path or "$"
        super().__init__(f"{self.path}: {message}")


def _obj(x, path: str) -> dict:
    if not isinstance(x, dict):
        raise FormatError(path, f"expected an object, got {type(x).__name__}")
    return x


def _list(x, path: str) -> list:
    if not isinstance(x, list):
        raise FormatError(path, f"expected an array, got {type(x).__name__}")
    return x


def _field(obj: dict, key: str, path: str):
    if key not in obj:
        raise FormatError(path, f"missing field {key!r}")
    return obj[key]


def _sub(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _int(x, path: str, low: int | None = None, high: int | None = None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(path, f"expected an integer, got {x!r}")
    if low is not None and x < low:
        raise FormatError(path, f"value {x} below minimum {low}")
    if high is not None and x >= high:
        raise FormatError(path, f"value {x} out of range (must be < {high})")
    return x


def _int_list(x, path: str, length: int | None = None,
              low: int | None = None, high: int | None = None) -> tuple:
    xs = _list(x, path)
    if length is not None and len(xs) != length:
        raise FormatError(path, f"expected {length} entries, got {len(xs)}")
    return tuple(_int(v, f"{path}[{i}]", low, high) for i, v in enumerate(xs))


# ---------------------------------------------------------------------------
# semi-simplicial sets


def _load_sset(data: dict, path: str) -> SemiSimplicialSet:
    levels = _list(_field(data, "levels", path), _sub(path, "levels"))
    sizes: list[int] = []
    faces: list[tuple] = []
    for p, entry in enumerate(levels):
        lp = f"{_sub(path, 'levels')}[{p}]"
        entry = _obj(entry, lp)
        size = _int(_field(entry, "size", lp), _sub(lp, "size"), low=0)
        sizes.append(size)
        if p == 0:
            if "faces" in entry and _list(entry["faces"], _sub(lp, "faces")):
                raise FormatError(_sub(lp, "faces"), "level 0 has no faces")
            faces.append(())
            continue
        tabs = _list(_field(entry, "faces", lp), _sub(lp, "faces"))
        if len(tabs) != p + 1:
            raise FormatError(_sub(lp, "faces"),
                              f"level {p} needs {p + 1} face tables, got {len(tabs)}")
        faces.append(tuple(
            _int_list(tab, f"{_sub(lp, 'faces')}[{i}]", length=size, low=0, high=sizes[p - 1])
            for i, tab in enumerate(tabs)))
    trunc = data.get("truncated_at")
    if trunc is not None:
        trunc = _int(trunc, _sub(path, "truncated_at"), low=0)
    return SemiSimplicialSet(tuple(sizes), tuple(faces), truncated_at=trunc)


def _save_sset(X: SemiSimplicialSet) -> dict:
    levels = []
    for p, size in enumerate(X.sizes):
        entry: dict = {"size": size}
        if p > 0:
            entry["faces"] = [list(tab) for tab in X.faces[p]]
        levels.append(entry)
    doc: dict = {"type": "sset", "levels": levels}
    if X.truncated_at is not None:
        doc["truncated_at"] = X.truncated_at
    return doc


# ---------------------------------------------------------------------------
# simplicial sets by generators


def _load_ref(data, path: str, gen_sizes: list[int]) -> SimplexRef:
    data = _obj(data, path)
    word = _int_list(_field(data, "word", path), _sub(path, "word"), low=0)
    for a, b in zip(word, word[1:]):
        if a <= b:
            raise FormatError(_sub(path, "word"),
                              f"degeneracy word {list(word)} must be strictly decreasing")
    deg = _int(_field(data, "deg", path), _sub(path, "deg"), low=0, high=len(gen_sizes))
    idx = _int(_field(data, "idx", path), _sub(path, "idx"), low=0, high=gen_sizes[deg])
    return SimplexRef(word, deg, idx)


def _load_simplicial(data: dict, path: str) -> SimplicialSet:
    gens = _list(_field(data, "generators", path), _sub(path, "generators"))
    sizes: list[int] = []
    for q, entry in enumerate(gens):
        gp = f"{_sub(path, 'generators')}[{q}]"
        sizes.append(_int(_field(_obj(entry, gp), "size", gp), _sub(gp, "size"), low=0))
    faces: list[tuple] = []
    for q, entry in enumerate(gens):
        gp = f"{_sub(path, 'generators')}[{q}]"
        if q == 0:
            faces.append(())
            continue
        tabs = _list(_field(_obj(entry, gp), "faces", gp), _sub(gp, "faces"))
        if len(tabs) != q + 1:
            raise FormatError(_sub(gp, "faces"),
                              f"degree {q} needs {q + 1} face tables, got {len(tabs)}")
        level = []
        for i, tab in enumerate(tabs):
            tp = f"{_sub(gp, 'faces')}[{i}]"
            tab = _list(tab, tp)
            if len(tab) != sizes[q]:
                raise FormatError(tp, f"expected {sizes[q]} entries, got {len(tab)}")
            level.append(tuple(_load_ref(ref, f"{tp}[{g}]", sizes)
                               for g, ref in enumerate(tab)))
        faces.append(tuple(level))
    trunc = data.get("truncated_at")
    if trunc is not None:
        trunc = _int(trunc, _sub(path, "truncated_at"), low=0)
    return SimplicialSet(tuple(sizes), tuple(faces), truncated_at=trunc)


def _save_simplicial(Y: SimplicialSet) -> dict:
    gens = []
    for q, size in enumerate(Y.gen_sizes):
        entry: dict = {"size": size}
        if q > 0:
            entry["faces"] = [
                [{"word": list(r.word), "deg": r.deg, "idx": r.gen} for r in tab]
                for tab in Y.gen_faces[q]]
        gens.append(entry)
    doc: dict = {"type": "simplicial", "generators": gens}
    if Y.truncated_at is not None:
        doc["truncated_at"] = Y.truncated_at
    return doc


# ---------------------------------------------------------------------------
# bi-semi-simplicial sets


def _load_bisset(data: dict, path: str) -> BiSemiSimplicialSet:
    rows = _list(_field(data, "sizes", path), _sub(path, "sizes"))
    if not rows:
        raise FormatError(_sub(path, "sizes"), "needs at least one row")
    sizes = []
    width = None
    for p, row in enumerate(rows):
        rp = f"{_sub(path, 'sizes')}[{p}]"
        got = _int_list(row, rp, low=0)
        if width is None:
            width = len(got)
            if width == 0:
                raise FormatError(rp, "rows must be nonempty")
        elif len(got) != width:
            raise FormatError(rp, f"expected {width} entries, got {len(got)}")
        sizes.append(got)
    P, Q = len(sizes), width

    def tables(key: str, count, prev_size):
        out = []
        grid = _list(_field(data, key, path), _sub(path, key))
        if len(grid) != P:
            raise FormatError(_sub(path, key), f"expected {P} rows, got {len(grid)}")
        for p, row in enumerate(grid):
            rp = f"{_sub(path, key)}[{p}]"
            row = _list(row, rp)
            if len(row) != Q:
                raise FormatError(rp, f"expected {Q} entries, got {len(row)}")
            level = []
            for q, cell in enumerate(row):
                cp = f"{rp}[{q}]"
                cell = _list(cell, cp)
                want = count(p, q)
                if len(cell) != want:
                    raise FormatError(cp, f"expected {want} face tables, got {len(cell)}")
                level.append(tuple(
                    _int_list(tab, f"{cp}[{i}]", length=sizes[p][q],
                              low=0, high=prev_size(p, q))
                    for i, tab in enumerate(cell)))
            out.append(tuple(level))
        return tuple(out)

    dh = tables("dh", lambda p, q: 0 if p == 0 else p + 1,
                lambda p, q: sizes[p - 1][q] if p > 0 else 1)
    dv = tables("dv", lambda p, q: 0 if q == 0 else q + 1,
                lambda p, q: sizes[p][q - 1] if q > 0 else 1)
    trunc_p = data.get("trunc_p")
    if trunc_p is not None:
        trunc_p = _int(trunc_p, _sub(path, "trunc_p"), low=0)
    trunc_q = data.get("trunc_q")
    if trunc_q is not None:
        trunc_q = _int(trunc_q, _sub(path, "trunc_q"), low=0)
    return BiSemiSimplicialSet(tuple(tuple(r) for r in sizes), dh, dv,
                               trunc_p=trunc_p, trunc_q=trunc_q)


def _save_bisset(B: BiSemiSimplicialSet) -> dict:
    def grid(d):
        return [[[list(tab) for tab in cell] for cell in row] for row in d]

    doc: dict = {"type": "bisset", "sizes": [list(r) for r in B.sizes],
                 "dh": grid(B.dh), "dv": grid(B.dv)}
    if B.trunc_p is not None:
        doc["trunc_p"] = B.trunc_p
    if B.trunc_q is not None:
        doc["trunc_q"] = B.trunc_q
    return doc


# ---------------------------------------------------------------------------
# categories, functors, natural transformations


def _load_category(data: dict, path: str) -> FinNonUnitalCategory:
    n_obj = _int(_field(data, "objects", path), _sub(path, "objects"), low=0)
    mors = _list(_field(data, "morphisms", path), _sub(path, "morphisms"))
    src, tgt = [], []
    for i, m in enumerate(mors):
        mp = f"{_sub(path, 'morphisms')}[{i}]"
        m = _obj(m, mp)
        src.append(_int(_field(m, "src", mp), _sub(mp, "src"), low=0, high=n_obj))
        tgt.append(_int(_field(m, "tgt", mp), _sub(mp, "tgt"), low=0, high=n_obj))
    n_mor = len(mors)
    comp: dict = {}
    for i, c in enumerate(_list(_field(data, "compose", path), _sub(path, "compose"))):
        cp = f"{_sub(path, 'compose')}[{i}]"
        c = _obj(c, cp)
        f = _int(_field(c, "f", cp), _sub(cp, "f"), low=0, high=n_mor)
        g = _int(_field(c, "g", cp), _sub(cp, "g"), low=0, high=n_mor)
        gf = _int(_field(c, "gf", cp), _sub(cp, "gf"), low=0, high=n_mor)
        if (f, g) in comp:
            raise FormatError(cp, f"duplicate composition entry for f={f}, g={g}")
        comp[(f, g)] = gf
    units = data.get("units")
    if units is not None:
        units = _int_list(units, _sub(path, "units"), length=n_obj, low=0, high=n_mor)
    return FinNonUnitalCategory(n_obj, tuple(src), tuple(tgt), comp, units=units)


def _save_category(C: FinNonUnitalCategory) -> dict:
    return {
        "type": "category",
        "objects": C.n_objects,
        "morphisms": [{"src": C.src[m], "tgt": C.tgt[m]} for m in range(C.n_morphisms)],
        "compose": [{"f": f, "g": g, "gf": gf}
                    for (f, g), gf in sorted(C.comp.items())],
        "units": list(C.units) if C.units is not None else None,
    }


def _load_functor(data: dict, path: str) -> FunctorData:
    sp, tp = _sub(path, "source"), _sub(path, "target")
    source = load_document(_obj(_field(data, "source", path), sp), sp)
    target = load_document(_obj(_field(data, "target", path), tp), tp)
    if not isinstance(source, FinNonUnitalCategory):
        raise FormatError(sp, "functor source must be a category document")
    if not isinstance(target, FinNonUnitalCategory):
        raise FormatError(tp, "functor target must be a category document")
    obj_map = _int_list(_field(data, "obj_map", path), _sub(path, "obj_map"),
                        length=source.n_objects, low=0, high=target.n_objects)
    mor_map = _int_list(_field(data, "mor_map", path), _sub(path, "mor_map"),
                        length=source.n_morphisms, low=0, high=target.n_morphisms)
    return FunctorData(source, target, obj_map, mor_map)


def _save_functor(F: FunctorData) -> dict:
    return {
        "type": "functor",
        "source": _save_category(F.source),
        "target": _save_category(F.target),
        "obj_map": list(F.obj_map),
        "mor_map": list(F.mor_map),
    }


def _load_nat_trans(data: dict, path: str) -> NatTransData:
    fp, gp = _sub(path, "F"), _sub(path, "G")
    F = load_document(_obj(_field(data, "F", path), fp), fp)
    G = load_document(_obj(_field(data, "G", path), gp), gp)
    if not isinstance(F, FunctorData):
        raise FormatError(fp, "expected a functor document")
    if not isinstance(G, FunctorData):
        raise FormatError(gp, "expected a functor document")
    components = _int_list(_field(data, "components", path), _sub(path, "components"),
                           length=F.source.n_objects, low=0,
                           high=F.target.n_morphisms)
    return NatTransData(F, G, components)


def _save_nat_trans(eta: NatTransData) -> dict:
    return {
        "type": "nat-trans",
        "F": _save_functor(eta.F),
        "G": _save_functor(eta.G),
        "components": list(eta.components),
    }


# ---------------------------------------------------------------------------
# monoids and actions


def _load_monoid(data: dict, path: str) -> FinMonoid:
    rows = _list(_field(data, "table", path), _sub(path, "table"))
    n = len(rows)
    table = tuple(_int_list(row, f"{_sub(path, 'table')}[{i}]", length=n, low=0, high=n)
                  for i, row in enumerate(rows))
    if n == 0:
        raise FormatError(_sub(path, "table"), "a monoid needs at least the unit")
    unit = _int(_field(data, "unit", path), _sub(path, "unit"), low=0, high=n)
    return FinMonoid(table=table, unit=unit)


def _save_monoid(M: FinMonoid) -> dict:
    if M.is_table:
        return {"type": "monoid", "table": [list(r) for r in M.table], "unit": M.unit}
    return {
        "type": "monoid-presentation",
        "generators": M.gens,
        "relations": [[list(lhs), list(rhs)] for lhs, rhs in M.relations],
    }


def _load_presentation(data: dict, path: str) -> FinMonoid:
    k = _int(_field(data, "generators", path), _sub(path, "generators"), low=0)
    rels = []
    for i, rel in enumerate(_list(_field(data, "relations", path), _sub(path, "relations"))):
        rp = f"{_sub(path, 'relations')}[{i}]"
        rel = _list(rel, rp)
        if len(rel) != 2:
            raise FormatError(rp, "a relation is a pair of exponent vectors")
        lhs = _int_list(rel[0], f"{rp}[0]", length=k, low=0)
        rhs = _int_list(rel[1], f"{rp}[1]", length=k, low=0)
        rels.append((lhs, rhs))
    return FinMonoid(gens=k, relations=tuple(rels))


def _load_action(data: dict, path: str) -> MonoidAction:
    mp = _sub(path, "monoid")
    M = load_document(_obj(_field(data, "monoid", path), mp), mp)
    if not isinstance(M, FinMonoid) or not M.is_table:
        raise FormatError(mp, "expected a table-form monoid document")
    size = _int(_field(data, "size", path), _sub(path, "size"), low=0)
    side = _field(data, "side", path)
    if side not in ("left", "right"):
        raise FormatError(_sub(path, "side"), f"side must be 'left' or 'right', got {side!r}")
    rows, cols = (M.size, size) if side == "left" else (size, M.size)
    raw = _list(_field(data, "table", path), _sub(path, "table"))
    if len(raw) != rows:
        raise FormatError(_sub(path, "table"), f"expected {rows} rows, got {len(raw)}")
    table = tuple(_int_list(row, f"{_sub(path, 'table')}[{i}]", length=cols, low=0, high=size)
                  for i, row in enumerate(raw))
    return MonoidAction(M, size, table, side)


def _save_action(A: MonoidAction) -> dict:
    return {
        "type": "action",
        "monoid": _save_monoid(A.monoid),
        "size": A.size,
        "side": A.side,
        "table": [list(r) for r in A.table],
    }


# ---------------------------------------------------------------------------
# integer matrices


def _load_matrix(data: dict, path: str) -> SparseIntMatrix:
    rows = _int(_field(data, "rows", path), _sub(path, "rows"), low=0)
    cols = _int(_field(data, "cols", path), _sub(path, "cols"), low=0)
    entries = []
    for k, e in enumerate(_list(_field(data, "entries", path), _sub(path, "entries"))):
        ep = f"{_sub(path, 'entries')}[{k}]"
        e = _list(e, ep)
        if len(e) != 3:
            raise FormatError(ep, "an entry is [row, col, value]")
        i = _int(e[0], f"{ep}[0]", low=0, high=rows)
        j = _int(e[1], f"{ep}[1]", low=0, high=cols)
        v = _int(e[2], f"{ep}[2]")
        entries.append((i, j, v))
    return SparseIntMatrix.from_entries(rows, cols, entries)


def _save_matrix(A: SparseIntMatrix) -> dict:
    entries = sorted([i, j, v] for i, row in A.data.items() for j, v in row.items())
    return {"type": "matrix", "rows": A.rows, "cols": A.cols, "entries": entries}


# ---------------------------------------------------------------------------
# dispatch


_LOADERS = {
    "sset": _load_sset,
    "simplicial": _load_simplicial,
    "bisset": _load_bisset,
    "category": _load_category,
    "functor": _load_functor,
    "nat-trans": _load_nat_trans,
    "monoid": _load_monoid,
    "monoid-presentation": _load_presentation,
    "action": _load_action,
    "matrix": _load_matrix,
}


def load_document(data, path: str = ""):
    """Parse one tagged document (already JSON-decoded) into its object."""
    data = _obj(data, path)
    tag = _field(data, "type", path)
    loader = _LOADERS.get(tag)
    if loader is None:
        known = ", ".join(sorted(_LOADERS))
        raise FormatError(_sub(path, "type"), f"unknown document type {tag!r} (known: {known})")
    return loader(data, path)


def save_document(obj) -> dict:
    """The inverse of load_document, up to field ordering."""
    if isinstance(obj, SemiSimplicialSet):
        return _save_sset(obj)
    if isinstance(obj, SimplicialSet):
        return _save_simplicial(obj)
    if isinstance(obj, BiSemiSimplicialSet):
        return _save_bisset(obj)
    if isinstance(obj, FunctorData):
        return _save_functor(obj)
    if isinstance(obj, NatTransData):
        return _save_nat_trans(obj)
    if isinstance(obj, FinNonUnitalCategory):
        return _save_category(obj)
    if isinstance(obj, FinMonoid):
        return _save_monoid(obj)
    if isinstance(obj, MonoidAction):
        return _save_action(obj)
    if isinstance(obj, SparseIntMatrix):
        return _save_matrix(obj)
    raise TypeError(f"no document form for {type(obj).__name__}")


def read_document(filename: str):
    """Load one document from a file; I/O problems propagate as OSError."""
    with open(filename, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise FormatError("", f"not valid JSON: {e}") from e
    return load_document(data)


def write_document(filename: str, obj) -> None:
    with open(filename, "w", encoding="utf-8") as fh:
        fh.write(dumps_document(obj))


def dumps_document(obj) -> str:
    return json.dumps(save_document(obj), indent=2, sort_keys=True) + "\n"
