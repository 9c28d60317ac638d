"""Descriptor files: strict JSON parsing, validation, and serialization.

Schema version 1.  Top level: {"schema_version": 1, "type": ..., ...} with
type one of "group", "manifold", "knot", "link".  Unknown fields are
rejected; all numbers must be exact integers.  Error messages carry the
JSON path of the offending value.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional

from .groups import (
    Amalgam,
    AmalgamEdge,
    CyclicPowerEdge,
    DirectWithFinite,
    FiniteCyclic,
    FiniteGroupTable,
    FiniteHnnEdge,
    FreeProduct,
    GroupUsageError,
    Hnn,
    InfiniteCyclic,
    SemidirectZnByZ,
    StructuredGroup,
    SurfaceGroup,
)
from .groups.base import INFINITE, Letter
from .eisenstein import MatrixGroupSL2Eisenstein, figure8_group
from .manifolds import (
    HomotopySpherePiece,
    HyperbolicKnot,
    HyperbolicPiece,
    KnotDescriptor,
    LinkDescriptor,
    ManifoldDescriptor,
    OtherIrreduciblePiece,
    OtherKnot,
    PrimePiece,
    SeifertInvariants,
    SeifertPiece,
    SphereBundlePiece,
    TorusBundlePiece,
    TorusKnot,
)

SCHEMA_VERSION = 1


class DescriptorError(ValueError):
    """A parse or schema violation, annotated with its JSON path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class Descriptor:
    kind: str  # "group" | "manifold" | "knot" | "link"
    group: Optional[StructuredGroup] = None
    manifold: Optional[ManifoldDescriptor] = None
    knot: Optional[KnotDescriptor] = None
    link: Optional[LinkDescriptor] = None


# ---------------------------------------------------------------------------
# word syntax: whitespace-separated generator names, ' for inverse, ^k powers

_TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)('?)(?:\^(-?\d+))?$")


def parse_word(text: str) -> list[Letter]:
    """e.g. "a b' a^2" -> [("a", 1), ("b", -1), ("a", 2)]."""
    letters: list[Letter] = []
    stripped = text.strip()
    if stripped in ("", "1"):
        return letters
    for token in stripped.split():
        match = _TOKEN.match(token)
        if match is None:
            raise GroupUsageError(
                f"bad word token {token!r}: expected NAME, NAME', or NAME^k"
            )
        name, inverse, power = match.groups()
        exponent = int(power) if power is not None else 1
        if inverse:
            exponent = -exponent
        if exponent:
            letters.append((name, exponent))
    return letters


def format_word(letters: list[Letter]) -> str:
    if not letters:
        return "1"
    parts = []
    for name, exp in letters:
        if exp == 1:
            parts.append(name)
        elif exp == -1:
            parts.append(f"{name}'")
        else:
            parts.append(f"{name}^{exp}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# strict field access


def _expect_object(value, path) -> dict:
    if not isinstance(value, dict):
        raise DescriptorError(path, f"expected an object, got {type(value).__name__}")
    return value


def _expect_list(value, path) -> list:
    if not isinstance(value, list):
        raise DescriptorError(path, f"expected an array, got {type(value).__name__}")
    return value


def _expect_int(value, path) -> int:
    if type(value) is not int:
        raise DescriptorError(path, "expected an exact integer")
    return value


def _expect_bool(value, path) -> bool:
    if type(value) is not bool:
        raise DescriptorError(path, "expected a boolean")
    return value


def _expect_str(value, path) -> str:
    if not isinstance(value, str):
        raise DescriptorError(path, "expected a string")
    return value


class _Fields:
    """Tracks consumed keys so unknown fields are rejected."""

    def __init__(self, data: dict, path: str):
        self.data = _expect_object(data, path)
        self.path = path
        self.used: set[str] = set()

    def take(self, key: str, required: bool = True):
        self.used.add(key)
        if key not in self.data:
            if required:
                raise DescriptorError(self.path, f"missing required field {key!r}")
            return None
        return self.data[key]

    def finish(self):
        unknown = set(self.data) - self.used
        if unknown:
            raise DescriptorError(
                self.path, f"unknown field(s) {sorted(unknown)!r} rejected"
            )


# ---------------------------------------------------------------------------
# group constructions


_DEFAULT_NAMES = "abcdefghijklmnopqrstuvwxyz"


class _NamePool:
    def __init__(self):
        self.used: set[str] = set()
        self.cursor = 0

    def claim(self, name: str, path: str) -> str:
        if name in self.used:
            raise DescriptorError(path, f"generator name {name!r} is not unique")
        self.used.add(name)
        return name

    def fresh(self, path: str) -> str:
        while self.cursor < len(_DEFAULT_NAMES):
            candidate = _DEFAULT_NAMES[self.cursor]
            self.cursor += 1
            if candidate not in self.used:
                self.used.add(candidate)
                return candidate
        raise DescriptorError(path, "ran out of default generator names; name them explicitly")


def _parse_table(fields: _Fields, path: str) -> FiniteGroupTable:
    order = _expect_int(fields.take("order"), f"{path}.order")
    rows = _expect_list(fields.take("table"), f"{path}.table")
    table = [
        [_expect_int(x, f"{path}.table[{i}][{j}]") for j, x in enumerate(_expect_list(row, f"{path}.table[{i}]"))]
        for i, row in enumerate(rows)
    ]
    if len(table) != order:
        raise DescriptorError(f"{path}.table", f"table must have {order} rows")
    names_raw = fields.take("names", required=False)
    names = None
    if names_raw is not None:
        names = [_expect_str(n, f"{path}.names[{i}]") for i, n in enumerate(_expect_list(names_raw, f"{path}.names"))]
    try:
        return FiniteGroupTable(table, names)
    except GroupUsageError as exc:
        raise DescriptorError(path, str(exc)) from None


def _embed_words(group: StructuredGroup, words, path: str) -> list:
    payloads = []
    for i, text in enumerate(_expect_list(words, path)):
        word = parse_word(_expect_str(text, f"{path}[{i}]"))
        try:
            payloads.append(group.reduce_letters(word).payload)
        except GroupUsageError as exc:
            raise DescriptorError(f"{path}[{i}]", str(exc)) from None
    return payloads


def _parse_construction(data, path: str, pool: _NamePool) -> StructuredGroup:
    fields = _Fields(data, path)
    keys = [
        k
        for k in (
            "cyclic",
            "infinite_cyclic",
            "free_product",
            "amalgam",
            "hnn",
            "semidirect_zn_by_z",
            "direct_with_finite",
            "surface_group",
            "matrix_group_sl2_eisenstein",
            "figure_eight_matrix_group",
        )
        if k in fields.data
    ]
    if len(keys) != 1:
        raise DescriptorError(
            path, f"expected exactly one construction key, found {keys or sorted(fields.data)}"
        )
    kind = keys[0]
    try:
        if kind == "cyclic":
            order = _expect_int(fields.take("cyclic"), f"{path}.cyclic")
            name_raw = fields.take("name", required=False)
            name = (
                pool.claim(_expect_str(name_raw, f"{path}.name"), f"{path}.name")
                if name_raw is not None
                else pool.fresh(path)
            )
            fields.finish()
            return FiniteCyclic(order, name)
        if kind == "infinite_cyclic":
            body = _Fields(fields.take("infinite_cyclic"), f"{path}.infinite_cyclic")
            name_raw = body.take("name", required=False)
            name = (
                pool.claim(_expect_str(name_raw, f"{path}.infinite_cyclic.name"), path)
                if name_raw is not None
                else pool.fresh(path)
            )
            body.finish()
            fields.finish()
            return InfiniteCyclic(name)
        if kind == "free_product":
            factors_raw = _expect_list(fields.take("free_product"), f"{path}.free_product")
            fields.finish()
            if len(factors_raw) < 2:
                raise DescriptorError(f"{path}.free_product", "needs at least two factors")
            factors = [
                _parse_construction(f, f"{path}.free_product[{i}]", pool)
                for i, f in enumerate(factors_raw)
            ]
            acc = factors[0]
            for factor in factors[1:]:
                acc = FreeProduct(acc, factor)
            return acc
        if kind == "amalgam":
            body = _Fields(fields.take("amalgam"), f"{path}.amalgam")
            fields.finish()
            left = _parse_construction(body.take("left"), f"{path}.amalgam.left", pool)
            right = _parse_construction(body.take("right"), f"{path}.amalgam.right", pool)
            edge_fields = _Fields(body.take("edge"), f"{path}.amalgam.edge")
            table = _parse_table(edge_fields, f"{path}.amalgam.edge")
            embed_left = _embed_words(
                left, edge_fields.take("embed_left"), f"{path}.amalgam.edge.embed_left"
            )
            embed_right = _embed_words(
                right, edge_fields.take("embed_right"), f"{path}.amalgam.edge.embed_right"
            )
            edge_fields.finish()
            body.finish()
            return Amalgam(left, right, AmalgamEdge(table, embed_left, embed_right))
        if kind == "hnn":
            body = _Fields(fields.take("hnn"), f"{path}.hnn")
            fields.finish()
            base = _parse_construction(body.take("base"), f"{path}.hnn.base", pool)
            letter_raw = body.take("stable_letter", required=False)
            letter = (
                pool.claim(_expect_str(letter_raw, f"{path}.hnn.stable_letter"), path)
                if letter_raw is not None
                else ("t" if "t" not in pool.used else pool.fresh(path))
            )
            if letter == "t":
                pool.used.add("t")
            edge_fields = _Fields(body.take("edge"), f"{path}.hnn.edge")
            body.finish()
            edge_kind = _expect_str(edge_fields.take("kind"), f"{path}.hnn.edge.kind")
            if edge_kind == "cyclic_power":
                m = _expect_int(edge_fields.take("domain_power"), f"{path}.hnn.edge.domain_power")
                n = _expect_int(edge_fields.take("range_power"), f"{path}.hnn.edge.range_power")
                edge_fields.finish()
                return Hnn(base, CyclicPowerEdge(m, n), stable_letter=letter)
            if edge_kind == "finite":
                table = _parse_table(edge_fields, f"{path}.hnn.edge")
                embed_domain = _embed_words(
                    base, edge_fields.take("embed_domain"), f"{path}.hnn.edge.embed_domain"
                )
                embed_range = _embed_words(
                    base, edge_fields.take("embed_range"), f"{path}.hnn.edge.embed_range"
                )
                iso_raw = edge_fields.take("iso", required=False)
                iso = None
                if iso_raw is not None:
                    iso = [
                        _expect_int(x, f"{path}.hnn.edge.iso[{i}]")
                        for i, x in enumerate(_expect_list(iso_raw, f"{path}.hnn.edge.iso"))
                    ]
                edge_fields.finish()
                return Hnn(base, FiniteHnnEdge(table, embed_domain, embed_range, iso), stable_letter=letter)
            raise DescriptorError(f"{path}.hnn.edge.kind", f"unknown edge kind {edge_kind!r}")
        if kind == "semidirect_zn_by_z":
            body = _Fields(fields.take("semidirect_zn_by_z"), f"{path}.semidirect_zn_by_z")
            fields.finish()
            rank = _expect_int(body.take("rank"), f"{path}.semidirect_zn_by_z.rank")
            rows = _expect_list(body.take("matrix"), f"{path}.semidirect_zn_by_z.matrix")
            matrix = [
                [_expect_int(x, f"{path}.semidirect_zn_by_z.matrix[{i}][{j}]") for j, x in enumerate(_expect_list(row, f"{path}.semidirect_zn_by_z.matrix[{i}]"))]
                for i, row in enumerate(rows)
            ]
            body.finish()
            group = SemidirectZnByZ(rank, matrix)
            for name, _ in group.generator_payloads():
                pool.claim(name, path)
            return group
        if kind == "direct_with_finite":
            body = _Fields(fields.take("direct_with_finite"), f"{path}.direct_with_finite")
            fields.finish()
            h = _parse_construction(body.take("h"), f"{path}.direct_with_finite.h", pool)
            f_fields = _Fields(body.take("f"), f"{path}.direct_with_finite.f")
            table = _parse_table(f_fields, f"{path}.direct_with_finite.f")
            f_fields.finish()
            body.finish()
            for name in table.names[1:]:
                pool.claim(name, path)
            return DirectWithFinite(h, table)
        if kind == "surface_group":
            body = _Fields(fields.take("surface_group"), f"{path}.surface_group")
            fields.finish()
            genus = _expect_int(body.take("genus"), f"{path}.surface_group.genus")
            orientable = _expect_bool(body.take("orientable"), f"{path}.surface_group.orientable")
            boundary = _expect_int(
                body.take("boundary_components"), f"{path}.surface_group.boundary_components"
            )
            body.finish()
            return SurfaceGroup(genus, orientable, boundary)
        if kind == "figure_eight_matrix_group":
            body = _Fields(fields.take("figure_eight_matrix_group"), f"{path}.figure_eight_matrix_group")
            body.finish()
            fields.finish()
            group = figure8_group()
            for name in group.gen_names:
                pool.claim(name, path)
            return group
        body = _Fields(
            fields.take("matrix_group_sl2_eisenstein"), f"{path}.matrix_group_sl2_eisenstein"
        )
        fields.finish()
        gens_raw = _expect_list(
            body.take("generators"), f"{path}.matrix_group_sl2_eisenstein.generators"
        )
        generators = []
        for gi, mat in enumerate(gens_raw):
            mat_path = f"{path}.matrix_group_sl2_eisenstein.generators[{gi}]"
            rows = _expect_list(mat, mat_path)
            if len(rows) != 2:
                raise DescriptorError(mat_path, "expected 2 rows")
            parsed_rows = []
            for ri, row in enumerate(rows):
                cells = _expect_list(row, f"{mat_path}[{ri}]")
                if len(cells) != 2:
                    raise DescriptorError(f"{mat_path}[{ri}]", "expected 2 entries")
                parsed_cells = []
                for ci, cell in enumerate(cells):
                    pair = _expect_list(cell, f"{mat_path}[{ri}][{ci}]")
                    if len(pair) != 2:
                        raise DescriptorError(
                            f"{mat_path}[{ri}][{ci}]", "expected [a, b] for a + b*w"
                        )
                    parsed_cells.append(
                        (
                            _expect_int(pair[0], f"{mat_path}[{ri}][{ci}][0]"),
                            _expect_int(pair[1], f"{mat_path}[{ri}][{ci}][1]"),
                        )
                    )
                parsed_rows.append(tuple(parsed_cells))
            generators.append(tuple(parsed_rows))
        names_raw = body.take("names", required=False)
        names = None
        if names_raw is not None:
            names = [
                pool.claim(_expect_str(n, f"{path}.names[{i}]"), path)
                for i, n in enumerate(_expect_list(names_raw, f"{path}.names"))
            ]
        body.finish()
        group = MatrixGroupSL2Eisenstein(generators, names)
        if names is None:
            for name in group.gen_names:
                pool.claim(name, path)
        return group
    except GroupUsageError as exc:
        raise DescriptorError(path, str(exc)) from None

# ---------------------------------------------------------------------------
# manifold / knot / link parsing


def _parse_order(value, path) -> float:
    if value == "infinite":
        return INFINITE
    return _expect_int(value, path)


def _parse_piece(data, path: str) -> PrimePiece:
    fields = _Fields(data, path)
    kind = _expect_str(fields.take("kind"), f"{path}.kind")
    try:
        if kind == "seifert":
            genus = _expect_int(fields.take("base_genus"), f"{path}.base_genus")
            orientable = _expect_bool(fields.take("base_orientable"), f"{path}.base_orientable")
            boundary = _expect_int(fields.take("boundary_components"), f"{path}.boundary_components")
            fibers_raw = fields.take("exceptional_fibers", required=False) or []
            fibers = []
            for i, pair in enumerate(_expect_list(fibers_raw, f"{path}.exceptional_fibers")):
                entries = _expect_list(pair, f"{path}.exceptional_fibers[{i}]")
                if len(entries) != 2:
                    raise DescriptorError(
                        f"{path}.exceptional_fibers[{i}]", "expected [alpha, beta]"
                    )
                fibers.append(
                    (
                        _expect_int(entries[0], f"{path}.exceptional_fibers[{i}][0]"),
                        _expect_int(entries[1], f"{path}.exceptional_fibers[{i}][1]"),
                    )
                )
            euler_raw = fields.take("euler_obstruction", required=False)
            euler = _expect_int(euler_raw, f"{path}.euler_obstruction") if euler_raw is not None else None
            fields.finish()
            return SeifertPiece(
                SeifertInvariants(genus, orientable, boundary, tuple(fibers), euler)
            )
        if kind == "hyperbolic":
            fv_raw = fields.take("finite_volume", required=False)
            fv = _expect_bool(fv_raw, f"{path}.finite_volume") if fv_raw is not None else True
            fields.finish()
            return HyperbolicPiece(fv)
        if kind == "torus_bundle":
            rows = _expect_list(fields.take("monodromy"), f"{path}.monodromy")
            matrix = tuple(
                tuple(_expect_int(x, f"{path}.monodromy[{i}][{j}]") for j, x in enumerate(_expect_list(row, f"{path}.monodromy[{i}]")))
                for i, row in enumerate(rows)
            )
            fields.finish()
            return TorusBundlePiece(matrix)
        if kind == "sphere_bundle":
            orientable = _expect_bool(fields.take("orientable_bundle"), f"{path}.orientable_bundle")
            fields.finish()
            return SphereBundlePiece(orientable)
        if kind == "homotopy_sphere":
            fields.finish()
            return HomotopySpherePiece()
        if kind == "other_irreducible":
            order = _parse_order(fields.take("pi1_order"), f"{path}.pi1_order")
            flags = {}
            for key in (
                "normal_cyclic_infinite_subgroup",
                "contains_nonstandard_p2xi",
                "seifert_mod_p",
            ):
                raw = fields.take(key, required=False)
                flags[key] = _expect_bool(raw, f"{path}.{key}") if raw is not None else None
            fields.finish()
            return OtherIrreduciblePiece(order, **flags)
    except GroupUsageError as exc:
        raise DescriptorError(path, str(exc)) from None
    raise DescriptorError(f"{path}.kind", f"unknown piece kind {kind!r}")


def _parse_manifold(fields: _Fields, path: str) -> ManifoldDescriptor:
    orientable = _expect_bool(fields.take("orientable"), f"{path}.orientable")
    pieces_raw = _expect_list(fields.take("pieces"), f"{path}.pieces")
    pieces = tuple(
        _parse_piece(p, f"{path}.pieces[{i}]") for i, p in enumerate(pieces_raw)
    )
    capped_raw = fields.take("boundary_spheres_capped", required=False)
    capped = (
        _expect_bool(capped_raw, f"{path}.boundary_spheres_capped")
        if capped_raw is not None
        else False
    )
    try:
        return ManifoldDescriptor(orientable, pieces, capped)
    except GroupUsageError as exc:
        raise DescriptorError(path, str(exc)) from None


def _parse_knot(fields: _Fields, path: str) -> KnotDescriptor:
    try:
        if "torus" in fields.data:
            pair = _expect_list(fields.take("torus"), f"{path}.torus")
            if len(pair) != 2:
                raise DescriptorError(f"{path}.torus", "expected [p, q]")
            return TorusKnot(
                _expect_int(pair[0], f"{path}.torus[0]"),
                _expect_int(pair[1], f"{path}.torus[1]"),
            )
        if "hyperbolic" in fields.data:
            if _expect_bool(fields.take("hyperbolic"), f"{path}.hyperbolic") is not True:
                raise DescriptorError(f"{path}.hyperbolic", "must be true when present")
            return HyperbolicKnot()
        if "other" in fields.data:
            body = _Fields(fields.take("other"), f"{path}.other")
            is_torus = _expect_bool(body.take("is_torus"), f"{path}.other.is_torus")
            body.finish()
            return OtherKnot(is_torus)
    except GroupUsageError as exc:
        raise DescriptorError(path, str(exc)) from None
    raise DescriptorError(path, "knot needs one of: torus, hyperbolic, other")


def _parse_link(fields: _Fields, path: str) -> LinkDescriptor:
    components = _expect_int(fields.take("components"), f"{path}.components")
    flag_raw = fields.take("is_seifert_fiber_union", required=False)
    flag = _expect_bool(flag_raw, f"{path}.is_seifert_fiber_union") if flag_raw is not None else None
    try:
        return LinkDescriptor(components, flag)
    except GroupUsageError as exc:
        raise DescriptorError(path, str(exc)) from None


def parse_descriptor_data(data) -> Descriptor:
    fields = _Fields(data, "$")
    version = _expect_int(fields.take("schema_version"), "$.schema_version")
    if version != SCHEMA_VERSION:
        raise DescriptorError("$.schema_version", f"unsupported schema version {version}")
    kind = _expect_str(fields.take("type"), "$.type")
    if kind == "group":
        construction = fields.take("construction")
        fields.finish()
        group = _parse_construction(construction, "$.construction", _NamePool())
        return Descriptor(kind="group", group=group)
    if kind == "manifold":
        manifold = _parse_manifold(fields, "$")
        fields.finish()
        return Descriptor(kind="manifold", manifold=manifold)
    if kind == "knot":
        knot = _parse_knot(fields, "$")
        fields.finish()
        return Descriptor(kind="knot", knot=knot)
    if kind == "link":
        link = _parse_link(fields, "$")
        fields.finish()
        return Descriptor(kind="link", link=link)
    raise DescriptorError("$.type", f"unknown descriptor type {kind!r}")


def load_descriptor(path: str) -> Descriptor:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DescriptorError(
                f"{path}:{exc.lineno}:{exc.colno}", f"invalid JSON: {exc.msg}"
            ) from None
    return parse_descriptor_data(data)


# ---------------------------------------------------------------------------
# serialization (model -> schema-valid document)


def construction_to_data(group: StructuredGroup):
    if isinstance(group, FiniteCyclic):
        return {"cyclic": group.n, "name": group.gen_name}
    if isinstance(group, InfiniteCyclic):
        return {"infinite_cyclic": {"name": group.gen_name}}
    if isinstance(group, FreeProduct):
        return {
            "free_product": [construction_to_data(f) for f in group.factors]
        }
    if isinstance(group, Amalgam):
        table = group.edge.table
        return {
            "amalgam": {
                "left": construction_to_data(group.factors[0]),
                "right": construction_to_data(group.factors[1]),
                "edge": {
                    "order": table.size,
                    "table": [list(row) for row in table.table],
                    "names": list(table.names),
                    "embed_left": [
                        format_word(group.factors[0].render_payload(p))
                        for p in group.edge.embeds[0]
                    ],
                    "embed_right": [
                        format_word(group.factors[1].render_payload(p))
                        for p in group.edge.embeds[1]
                    ],
                },
            }
        }
    if isinstance(group, Hnn):
        edge = group.edge
        if isinstance(edge, CyclicPowerEdge):
            edge_data = {
                "kind": "cyclic_power",
                "domain_power": edge.m,
                "range_power": edge.n,
            }
        else:
            edge_data = {
                "kind": "finite",
                "order": edge.table.size,
                "table": [list(row) for row in edge.table.table],
                "names": list(edge.table.names),
                "embed_domain": [
                    format_word(group.base.render_payload(p)) for p in edge.embed_domain
                ],
                "embed_range": [
                    format_word(group.base.render_payload(p)) for p in edge.embed_range
                ],
                "iso": list(edge.iso),
            }
        return {
            "hnn": {
                "base": construction_to_data(group.base),
                "stable_letter": group.stable_letter,
                "edge": edge_data,
            }
        }
    if isinstance(group, SemidirectZnByZ):
        return {
            "semidirect_zn_by_z": {
                "rank": group.rank,
                "matrix": [list(row) for row in group.phi],
            }
        }
    if isinstance(group, DirectWithFinite):
        return {
            "direct_with_finite": {
                "h": construction_to_data(group.h),
                "f": {
                    "order": group.f.size,
                    "table": [list(row) for row in group.f.table],
                    "names": list(group.f.names),
                },
            }
        }
    if isinstance(group, SurfaceGroup):
        return {
            "surface_group": {
                "genus": group.genus,
                "orientable": group.orientable,
                "boundary_components": group.boundary_components,
            }
        }
    if isinstance(group, MatrixGroupSL2Eisenstein):
        return {
            "matrix_group_sl2_eisenstein": {
                "generators": [
                    [[list(cell) for cell in row] for row in payload]
                    for payload in group.gen_payloads
                ],
                "names": list(group.gen_names),
            }
        }
    raise GroupUsageError(
        f"construction {type(group).__name__} has no schema-v1 serialization"
    )


def piece_to_data(piece: PrimePiece):
    if isinstance(piece, SeifertPiece):
        inv = piece.invariants
        data = {
            "kind": "seifert",
            "base_genus": inv.base_genus,
            "base_orientable": inv.base_orientable,
            "boundary_components": inv.boundary_components,
            "exceptional_fibers": [list(f) for f in inv.exceptional_fibers],
        }
        if inv.euler_obstruction is not None:
            data["euler_obstruction"] = inv.euler_obstruction
        return data
    if isinstance(piece, HyperbolicPiece):
        return {"kind": "hyperbolic", "finite_volume": piece.finite_volume}
    if isinstance(piece, TorusBundlePiece):
        return {"kind": "torus_bundle", "monodromy": [list(r) for r in piece.monodromy]}
    if isinstance(piece, SphereBundlePiece):
        return {"kind": "sphere_bundle", "orientable_bundle": piece.orientable_bundle}
    if isinstance(piece, HomotopySpherePiece):
        return {"kind": "homotopy_sphere"}
    assert isinstance(piece, OtherIrreduciblePiece)
    data = {
        "kind": "other_irreducible",
        "pi1_order": "infinite" if piece.pi1_order == INFINITE else piece.pi1_order,
    }
    for key in ("normal_cyclic_infinite_subgroup", "contains_nonstandard_p2xi", "seifert_mod_p"):
        value = getattr(piece, key)
        if value is not None:
            data[key] = value
    return data


def descriptor_to_data(descriptor: Descriptor) -> dict:
    if descriptor.kind == "group":
        return {
            "schema_version": SCHEMA_VERSION,
            "type": "group",
            "construction": construction_to_data(descriptor.group),
        }
    if descriptor.kind == "manifold":
        m = descriptor.manifold
        return {
            "schema_version": SCHEMA_VERSION,
            "type": "manifold",
            "orientable": m.orientable,
            "pieces": [piece_to_data(p) for p in m.pieces],
            "boundary_spheres_capped": m.boundary_spheres_capped,
        }
    if descriptor.kind == "knot":
        knot = descriptor.knot
        if isinstance(knot, TorusKnot):
            return {"schema_version": SCHEMA_VERSION, "type": "knot", "torus": [knot.p, knot.q]}
        if isinstance(knot, HyperbolicKnot):
            return {"schema_version": SCHEMA_VERSION, "type": "knot", "hyperbolic": True}
        return {
            "schema_version": SCHEMA_VERSION,
            "type": "knot",
            "other": {"is_torus": knot.is_torus},
        }
    link = descriptor.link
    data = {"schema_version": SCHEMA_VERSION, "type": "link", "components": link.components}
    if link.is_seifert_fiber_union is not None:
        data["is_seifert_fiber_union"] = link.is_seifert_fiber_union
    return data
