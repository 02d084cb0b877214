"""JSON file formats: algebras (.hopf.json), groups, actions and ideals.

Scalars serialize as "p/q" strings when rational and as
{"order": n, "coeffs": ["p/q", ...]} otherwise; loading accepts either form
(plus plain integers) in any scalar position.  Structure tensors are written
sparsely with entries ordered lexicographically by index, so saved files are
byte-deterministic; dense tensors are accepted on input.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .constructions import FiniteGroup, GroupAction, subgroup_ideal
from .cyclotomic import CycField, CycScalar
from .errors import SchemaError
from .hopf import HopfStarAlgebra
from .linalg import Subspace


def scalar_to_json(x: CycScalar):
    if x.is_rational():
        return str(x.as_fraction())
    return {"order": x.field.n, "coeffs": [str(c) for c in x.coeffs]}


def scalar_from_json(field: CycField, obj):
    if isinstance(obj, bool):
        raise SchemaError("boolean is not a scalar")
    if isinstance(obj, int):
        return field.from_rational(Fraction(obj))
    if isinstance(obj, str):
        try:
            return field.from_rational(Fraction(obj))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError("bad rational %r" % obj) from exc
    if isinstance(obj, dict):
        try:
            order = int(obj["order"])
            coeffs = [Fraction(c) for c in obj["coeffs"]]
        except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
            raise SchemaError("bad scalar object %r" % obj) from exc
        src = CycField(order).scalar(coeffs)
        if field.n % order:
            raise SchemaError(
                "scalar of order %d cannot live in the order-%d field" % (order, field.n)
            )
        return field.lift(src)
    raise SchemaError("unsupported scalar %r" % obj)


def _require(data, key):
    if key not in data:
        raise SchemaError("missing field %r" % key)
    return data[key]


def _parse_vector(field, obj, d, what):
    if not isinstance(obj, list) or len(obj) != d:
        raise SchemaError("%s must be a list of %d scalars" % (what, d))
    return [scalar_from_json(field, x) for x in obj]


def _parse_matrix(field, obj, d, what):
    if not isinstance(obj, list) or len(obj) != d:
        raise SchemaError("%s must be a %d x %d matrix" % (what, d, d))
    return [_parse_vector(field, row, d, what + " row") for row in obj]


def _parse_mult(field, obj, d):
    if not isinstance(obj, list):
        raise SchemaError("mult must be a list")
    dense = bool(obj) and isinstance(obj[0], list) and obj[0] and isinstance(obj[0][0], list)
    if dense or not obj:
        if len(obj) != d:
            raise SchemaError("dense mult must have %d layers" % d)
        return [
            [_parse_vector(field, obj[i][j], d, "mult[%d][%d]" % (i, j)) for j in range(d)]
            for i in range(d)
        ]
    out = [[[field.zero] * d for _ in range(d)] for _ in range(d)]
    for entry in obj:
        if not isinstance(entry, list) or len(entry) != 4:
            raise SchemaError("sparse mult entries are [i, j, k, scalar]")
        i, j, k = entry[0], entry[1], entry[2]
        if not all(isinstance(x, int) and 0 <= x < d for x in (i, j, k)):
            raise SchemaError("mult index out of range in %r" % entry)
        out[i][j][k] = scalar_from_json(field, entry[3])
    return out


def _parse_comult(field, obj, d):
    if not isinstance(obj, list):
        raise SchemaError("comult must be a list")
    dense = bool(obj) and isinstance(obj[0], list) and obj[0] and isinstance(obj[0][0], list)
    if dense or not obj:
        if len(obj) != d:
            raise SchemaError("dense comult must have %d layers" % d)
        return [_parse_matrix(field, obj[i], d, "comult[%d]" % i) for i in range(d)]
    out = [[[field.zero] * d for _ in range(d)] for _ in range(d)]
    for entry in obj:
        if not isinstance(entry, list) or len(entry) != 4:
            raise SchemaError("sparse comult entries are [i, j, k, scalar]")
        i, j, k = entry[0], entry[1], entry[2]
        if not all(isinstance(x, int) and 0 <= x < d for x in (i, j, k)):
            raise SchemaError("comult index out of range in %r" % entry)
        out[i][j][k] = scalar_from_json(field, entry[3])
    return out


def algebra_to_dict(H: HopfStarAlgebra) -> dict:
    d = H.dim
    mult = []
    for i in range(d):
        for j in range(d):
            for k, c in enumerate(H.mult[i][j]):
                if c:
                    mult.append([i, j, k, scalar_to_json(c)])
    comult = []
    for i in range(d):
        for j in range(d):
            for k, c in enumerate(H.comult[i][j]):
                if c:
                    comult.append([i, j, k, scalar_to_json(c)])
    return {
        "dim": d,
        "field_order": H.field.n,
        "basis_labels": list(H.labels),
        "mult": mult,
        "unit": [scalar_to_json(x) for x in H.unit],
        "comult": comult,
        "counit": [scalar_to_json(x) for x in H.counit],
        "antipode": [[scalar_to_json(x) for x in row] for row in H.antipode.rows],
        "star": [[scalar_to_json(x) for x in row] for row in H.star.rows],
    }


def algebra_from_dict(data: dict) -> HopfStarAlgebra:
    if not isinstance(data, dict):
        raise SchemaError("algebra file must contain a JSON object")
    d = _require(data, "dim")
    if not isinstance(d, int) or d < 1:
        raise SchemaError("dim must be a positive integer")
    n = _require(data, "field_order")
    if not isinstance(n, int) or n < 1:
        raise SchemaError("field_order must be a positive integer")
    field = CycField(n)
    labels = _require(data, "basis_labels")
    if not isinstance(labels, list) or len(labels) != d:
        raise SchemaError("basis_labels must list %d strings" % d)
    mult = _parse_mult(field, _require(data, "mult"), d)
    unit = _parse_vector(field, _require(data, "unit"), d, "unit")
    comult = _parse_comult(field, _require(data, "comult"), d)
    counit = _parse_vector(field, _require(data, "counit"), d, "counit")
    antipode = _parse_matrix(field, _require(data, "antipode"), d, "antipode")
    star = _parse_matrix(field, _require(data, "star"), d, "star")
    return HopfStarAlgebra(
        field, mult, unit, comult, counit, antipode, star, labels=[str(x) for x in labels]
    )


def dump_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError("invalid JSON in %s: %s" % (path, exc)) from exc


def save_algebra(H: HopfStarAlgebra, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(algebra_to_dict(H)))


def load_algebra(path) -> HopfStarAlgebra:
    return algebra_from_dict(_read_json(path))


def group_to_dict(G: FiniteGroup) -> dict:
    return G.as_dict()


def group_from_dict(data) -> FiniteGroup:
    if not isinstance(data, dict):
        raise SchemaError("group file must contain a JSON object")
    table = _require(data, "table")
    labels = data.get("labels")
    order = _require(data, "order")
    if not isinstance(table, list) or len(table) != order:
        raise SchemaError("table must be an order x order index matrix")
    try:
        return FiniteGroup(table, labels)
    except AssertionError as exc:
        raise SchemaError("invalid group table: %s" % exc) from exc


def save_group(G: FiniteGroup, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(group_to_dict(G)))


def load_group(path) -> FiniteGroup:
    return group_from_dict(_read_json(path))


def action_to_dict(act: GroupAction) -> dict:
    return {
        "group": group_to_dict(act.group),
        "maps": [
            [[scalar_to_json(x) for x in row] for row in m.rows] for m in act.maps
        ],
    }


def action_from_dict(data, target: HopfStarAlgebra) -> GroupAction:
    if not isinstance(data, dict):
        raise SchemaError("action file must contain a JSON object")
    group = group_from_dict(_require(data, "group"))
    maps_raw = _require(data, "maps")
    if not isinstance(maps_raw, list) or len(maps_raw) != group.order:
        raise SchemaError("maps must list one matrix per group element")
    maps = [
        _parse_matrix(target.field, m, target.dim, "action map %d" % t)
        for t, m in enumerate(maps_raw)
    ]
    return GroupAction(group, target, maps)


def save_action(act: GroupAction, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(action_to_dict(act)))


def load_action(path, target: HopfStarAlgebra) -> GroupAction:
    return action_from_dict(_read_json(path), target)


def ideal_from_dict(data, H: HopfStarAlgebra) -> Subspace:
    if not isinstance(data, dict):
        raise SchemaError("ideal file must contain a JSON object")
    if "subgroup" in data:
        return subgroup_ideal(H, data["subgroup"])
    basis = _require(data, "ideal_basis")
    if not isinstance(basis, list):
        raise SchemaError("ideal_basis must be a list of coefficient vectors")
    vecs = [_parse_vector(H.field, v, H.dim, "ideal vector") for v in basis]
    return Subspace.from_vectors(H.field, H.dim, vecs)


def load_ideal(path, H: HopfStarAlgebra) -> Subspace:
    return ideal_from_dict(_read_json(path), H)


def ideal_to_dict(I: Subspace) -> dict:
    return {"ideal_basis": [[scalar_to_json(x) for x in row] for row in I.basis()]}


def save_ideal(I: Subspace, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(ideal_to_dict(I)))
