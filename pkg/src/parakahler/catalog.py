"""Catalog of para-Kahler structures: schema, loader, and builtin data.

A catalog document is a single JSON object::

    {"algebras": [
        {"name": ..., "dim": 4,
         "params":  [{"name": ..., "domain": {"kind": ..., "lo"?, "hi"?, "excluded"?}}],
         "brackets": [[i, j, k, "expr"], ...],      # 1-based, i < j, C^k_ij
         "forms":    [{"id": ..., "terms": [[i, j, "expr"], ...]}],
         "structures": [
             {"id": ..., "form": ..., "J": [["expr", ...], ...],
              "params": [...],
              "expected": {"label"?, "einstein_factor"?, "ric"?: [[...]]},
              "variant"?: bool, "note"?: str}]}]}

Expressions use the package grammar (integers, parameters, ``+ - * / ^``).
``load_catalog`` reports structural problems with the JSON-path of the
offending field; ``dump_catalog`` and ``load_catalog`` round-trip exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .builtin_data import BUILTIN_DOCUMENT
from .expressions import (
    ExprMatrix,
    ExprSyntaxError,
    RationalExpr,
    UnknownParameterError,
    expr,
    format_expr,
)
from .liealgebra import LieAlgebra, ParamDomain, TwoForm

KNOWN_LABELS = ("flat", "ricci_flat", "einstein", "hermitian_ricci", "generic")


class CatalogFormatError(ValueError):
    """Malformed catalog document; carries the JSON path of the offender."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class ExpectedResults:
    label: Optional[str] = None
    einstein_factor: Optional[RationalExpr] = None
    ric: Optional[ExprMatrix] = None


@dataclass(frozen=True)
class CatalogEntry:
    entry_id: str
    algebra: str
    form: str
    j_matrix: ExprMatrix
    params: Tuple[Tuple[str, ParamDomain], ...]
    expected: ExpectedResults
    variant: bool = False
    note: str = ""


@dataclass
class Catalog:
    algebras: Dict[str, LieAlgebra]
    forms: Dict[Tuple[str, str], TwoForm]
    entries: List[CatalogEntry]

    def form_of(self, entry: CatalogEntry) -> TwoForm:
        return self.forms[(entry.algebra, entry.form)]

    def algebra_of(self, entry: CatalogEntry) -> LieAlgebra:
        return self.algebras[entry.algebra]

    def domains_of(self, entry: CatalogEntry) -> Dict[str, ParamDomain]:
        domains = dict(self.algebras[entry.algebra].params)
        domains.update(dict(entry.params))
        return domains

    def select(self, pattern: Optional[str] = None, variants: bool = False):
        from fnmatch import fnmatchcase

        out = []
        for entry in self.entries:
            if entry.variant and not variants:
                continue
            if pattern is not None and not fnmatchcase(entry.entry_id, pattern):
                continue
            out.append(entry)
        return out


def _parse(path: str, text) -> RationalExpr:
    if isinstance(text, (int,)):
        return expr(text)
    if not isinstance(text, str):
        raise CatalogFormatError(path, f"expected expression string, got {text!r}")
    try:
        return expr(text)
    except UnknownParameterError as exc:
        raise CatalogFormatError(path, str(exc)) from exc
    except ExprSyntaxError as exc:
        raise CatalogFormatError(path, f"cannot parse expression {text!r}: {exc}") from exc


def _parse_domain(path: str, raw) -> ParamDomain:
    if raw is None:
        return ParamDomain()
    if not isinstance(raw, dict):
        raise CatalogFormatError(path, "domain must be an object")
    kind = raw.get("kind", "free")
    def _frac(key):
        if key not in raw or raw[key] is None:
            return None
        try:
            return Fraction(str(raw[key]))
        except (ValueError, ZeroDivisionError) as exc:
            raise CatalogFormatError(f"{path}.{key}", f"bad rational {raw[key]!r}") from exc

    excluded = tuple(Fraction(str(v)) for v in raw.get("excluded", ()))
    try:
        return ParamDomain(kind=kind, lo=_frac("lo"), hi=_frac("hi"), excluded=excluded)
    except ValueError as exc:
        raise CatalogFormatError(path, str(exc)) from exc


def _parse_params(path: str, raw) -> Tuple[Tuple[str, ParamDomain], ...]:
    if raw is None:
        return ()
    out = []
    for idx, item in enumerate(raw):
        if not isinstance(item, dict) or "name" not in item:
            raise CatalogFormatError(f"{path}[{idx}]", "parameter needs a name")
        name = item["name"]
        _parse(f"{path}[{idx}].name", name)  # validates the identifier
        out.append((name, _parse_domain(f"{path}[{idx}].domain", item.get("domain"))))
    return tuple(out)


def load_catalog(document: dict) -> Catalog:
    """Parse a catalog document; all expressions compile to RationalExpr."""
    if not isinstance(document, dict) or "algebras" not in document:
        raise CatalogFormatError("$", "document must be an object with an 'algebras' list")
    algebras: Dict[str, LieAlgebra] = {}
    forms: Dict[Tuple[str, str], TwoForm] = {}
    entries: List[CatalogEntry] = []
    seen_ids = set()
    for a_idx, alg_raw in enumerate(document["algebras"]):
        apath = f"algebras[{a_idx}]"
        for key in ("name", "dim"):
            if key not in alg_raw:
                raise CatalogFormatError(apath, f"missing field {key!r}")
        name = alg_raw["name"]
        dim = alg_raw["dim"]
        if name in algebras:
            raise CatalogFormatError(apath, f"duplicate algebra name {name!r}")
        params = _parse_params(f"{apath}.params", alg_raw.get("params"))
        brackets = []
        for b_idx, item in enumerate(alg_raw.get("brackets", ())):
            bpath = f"{apath}.brackets[{b_idx}]"
            if len(item) != 4:
                raise CatalogFormatError(bpath, "bracket entries are [i, j, k, expr]")
            i, j, k, text = item
            if not (1 <= i < j <= dim and 1 <= k <= dim):
                raise CatalogFormatError(
                    bpath, f"indices ({i}, {j}, {k}) out of range for dim {dim}"
                )
            brackets.append((i, j, k, _parse(bpath, text)))
        try:
            algebra = LieAlgebra.from_brackets(name, dim, brackets, params)
        except ValueError as exc:
            raise CatalogFormatError(apath, str(exc)) from exc
        algebras[name] = algebra
        form_ids = set()
        for f_idx, form_raw in enumerate(alg_raw.get("forms", ())):
            fpath = f"{apath}.forms[{f_idx}]"
            if "id" not in form_raw:
                raise CatalogFormatError(fpath, "missing form id")
            fid = form_raw["id"]
            if fid in form_ids:
                raise CatalogFormatError(fpath, f"duplicate form id {fid!r}")
            form_ids.add(fid)
            terms = []
            for t_idx, term in enumerate(form_raw.get("terms", ())):
                tpath = f"{fpath}.terms[{t_idx}]"
                if len(term) != 3:
                    raise CatalogFormatError(tpath, "form terms are [i, j, expr]")
                i, j, text = term
                if not (1 <= i < j <= dim):
                    raise CatalogFormatError(
                        tpath, f"indices ({i}, {j}) out of range for dim {dim}"
                    )
                terms.append((i, j, _parse(tpath, text)))
            forms[(name, fid)] = TwoForm.from_terms(dim, terms)
        for s_idx, s_raw in enumerate(alg_raw.get("structures", ())):
            spath = f"{apath}.structures[{s_idx}]"
            for key in ("id", "form", "J"):
                if key not in s_raw:
                    raise CatalogFormatError(spath, f"missing field {key!r}")
            sid = s_raw["id"]
            if sid in seen_ids:
                raise CatalogFormatError(spath, f"duplicate structure id {sid!r}")
            seen_ids.add(sid)
            if s_raw["form"] not in form_ids:
                raise CatalogFormatError(
                    f"{spath}.form", f"unknown form id {s_raw['form']!r}"
                )
            rows = s_raw["J"]
            if len(rows) != dim or any(len(row) != dim for row in rows):
                raise CatalogFormatError(
                    f"{spath}.J", f"J must be a {dim}x{dim} matrix of expressions"
                )
            j_matrix = ExprMatrix(
                [
                    [_parse(f"{spath}.J[{r}][{c}]", rows[r][c]) for c in range(dim)]
                    for r in range(dim)
                ]
            )
            exp_raw = s_raw.get("expected", {})
            label = exp_raw.get("label")
            if label is not None and label not in KNOWN_LABELS:
                raise CatalogFormatError(
                    f"{spath}.expected.label",
                    f"unknown label {label!r}; known: {', '.join(KNOWN_LABELS)}",
                )
            factor = exp_raw.get("einstein_factor")
            ric_raw = exp_raw.get("ric")
            ric = None
            if ric_raw is not None:
                if len(ric_raw) != dim or any(len(row) != dim for row in ric_raw):
                    raise CatalogFormatError(
                        f"{spath}.expected.ric", f"ric must be {dim}x{dim}"
                    )
                ric = ExprMatrix(
                    [
                        [
                            _parse(f"{spath}.expected.ric[{r}][{c}]", ric_raw[r][c])
                            for c in range(dim)
                        ]
                        for r in range(dim)
                    ]
                )
            expected = ExpectedResults(
                label=label,
                einstein_factor=None
                if factor is None
                else _parse(f"{spath}.expected.einstein_factor", factor),
                ric=ric,
            )
            entries.append(
                CatalogEntry(
                    entry_id=sid,
                    algebra=name,
                    form=s_raw["form"],
                    j_matrix=j_matrix,
                    params=_parse_params(f"{spath}.params", s_raw.get("params")),
                    expected=expected,
                    variant=bool(s_raw.get("variant", False)),
                    note=s_raw.get("note", ""),
                )
            )
    return Catalog(algebras=algebras, forms=forms, entries=entries)


def _dump_domain(domain: ParamDomain) -> dict:
    out: dict = {"kind": domain.kind}
    if domain.lo is not None:
        out["lo"] = str(domain.lo)
    if domain.hi is not None:
        out["hi"] = str(domain.hi)
    if domain.excluded:
        out["excluded"] = [str(v) for v in domain.excluded]
    return out


def _dump_params(params) -> list:
    return [{"name": name, "domain": _dump_domain(dom)} for name, dom in params]


def dump_catalog(catalog: Catalog) -> dict:
    """Serialize back to the document schema with canonical expression text."""
    algebras_out = []
    for name, algebra in catalog.algebras.items():
        entry_forms = [fid for (alg, fid) in catalog.forms if alg == name]
        structures = [e for e in catalog.entries if e.algebra == name]
        alg_out = {
            "name": name,
            "dim": algebra.dim,
            "params": _dump_params(algebra.params),
            "brackets": [
                [i, j, k, format_expr(v)] for (i, j, k, v) in algebra.sparse_brackets()
            ],
            "forms": [
                {
                    "id": fid,
                    "terms": [
                        [i, j, format_expr(v)]
                        for (i, j, v) in catalog.forms[(name, fid)].terms()
                    ],
                }
                for fid in entry_forms
            ],
            "structures": [],
        }
        for e in structures:
            s_out = {
                "id": e.entry_id,
                "form": e.form,
                "J": [
                    [format_expr(e.j_matrix[r, c]) for c in range(e.j_matrix.cols)]
                    for r in range(e.j_matrix.rows)
                ],
                "params": _dump_params(e.params),
                "expected": {},
            }
            if e.expected.label is not None:
                s_out["expected"]["label"] = e.expected.label
            if e.expected.einstein_factor is not None:
                s_out["expected"]["einstein_factor"] = format_expr(
                    e.expected.einstein_factor
                )
            if e.expected.ric is not None:
                s_out["expected"]["ric"] = [
                    [format_expr(e.expected.ric[r, c]) for c in range(e.expected.ric.cols)]
                    for r in range(e.expected.ric.rows)
                ]
            if e.variant:
                s_out["variant"] = True
            if e.note:
                s_out["note"] = e.note
            alg_out["structures"].append(s_out)
        algebras_out.append(alg_out)
    return {"algebras": algebras_out}


@lru_cache(maxsize=2)
def builtin_catalog(include_variants: bool = False) -> Catalog:
    """The builtin classification: 15 algebras, 57 structures (plus variants)."""
    catalog = load_catalog(BUILTIN_DOCUMENT)
    if not include_variants:
        catalog = Catalog(
            algebras=catalog.algebras,
            forms=catalog.forms,
            entries=[e for e in catalog.entries if not e.variant],
        )
    return catalog
