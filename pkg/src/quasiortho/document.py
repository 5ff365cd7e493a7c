"""On-disk formats: the JSON matrix document, dense text, PBM and PPM.

JSON document layout (keys always present, in this order)::

    {"kind": "binary-supports" | "quasi-binary",
     "n": 8,
     "columns": [[1, 4, 6], ...],       # sorted row indices of each column
     "a": 7, "b": 13,                    # substitution pair, null for binary
     "field_m": 4, "field_poly": 25,     # null for binary
     "seed": 1,                          # generation seed or null
     "inverse": false}                   # true when a, b hold an inverse pair (c, d)

Column ``j`` lists the rows holding ``b`` (or 1); every other entry is ``a``
(or 0).  Output is canonical, so parse -> emit is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .errors import ParseError, QuasiOrthoError
from .gf2m import make_field
from .latin import SupportSetMatrix
from .quasi import QuasiBinaryMatrix

BINARY = "binary-supports"
QUASI = "quasi-binary"
KINDS = (BINARY, QUASI)

# Figure palette: a red, b black; inverse pair c blue, d yellow.
PALETTE = {
    "a": (200, 30, 30),
    "b": (20, 20, 20),
    "c": (40, 80, 200),
    "d": (230, 200, 40),
}


@dataclass(frozen=True)
class MatrixDocument:
    kind: str
    n: int
    columns: tuple[tuple[int, ...], ...]
    a: int | None = None
    b: int | None = None
    field_m: int | None = None
    field_poly: int | None = None
    seed: int | None = None
    inverse: bool = False

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ParseError(f"unknown kind {self.kind!r}")
        if len(self.columns) != self.n:
            raise ParseError(f"{len(self.columns)} columns for n={self.n}")
        for col in self.columns:
            if list(col) != sorted(set(col)) or any(not 0 <= i < self.n for i in col):
                raise ParseError(f"column {list(col)} is not a sorted set of indices in [0, {self.n})")
        quasi_fields = (self.a, self.b, self.field_m, self.field_poly)
        if self.kind == QUASI:
            if None in quasi_fields:
                raise ParseError("quasi-binary document needs a, b, field_m, field_poly")
            self.to_quasi()  # validates field and pair
        elif any(v is not None for v in quasi_fields):
            raise ParseError("binary document must not carry a, b or field data")

    @classmethod
    def from_supports(cls, P: SupportSetMatrix, seed: int | None = None) -> MatrixDocument:
        return cls(BINARY, P.n, P.columns, seed=seed)

    @classmethod
    def from_quasi(
        cls, Q: QuasiBinaryMatrix, seed: int | None = None, inverse: bool = False
    ) -> MatrixDocument:
        return cls(
            QUASI, Q.n, Q.backbone.columns, Q.a, Q.b, Q.field.m, Q.field.poly, seed, inverse
        )

    def supports(self) -> SupportSetMatrix:
        return SupportSetMatrix.from_columns(self.columns)

    def to_quasi(self) -> QuasiBinaryMatrix:
        if self.kind != QUASI:
            raise ParseError("not a quasi-binary document")
        try:
            field = make_field(self.field_m, self.field_poly)
            return QuasiBinaryMatrix(self.supports(), self.a, self.b, field)
        except QuasiOrthoError:
            raise
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc)) from exc

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "n": self.n,
            "columns": [list(c) for c in self.columns],
            "a": self.a,
            "b": self.b,
            "field_m": self.field_m,
            "field_poly": self.field_poly,
            "seed": self.seed,
            "inverse": self.inverse,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    @classmethod
    def loads(cls, text: str) -> MatrixDocument:
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise ParseError("document must be a JSON object")
        unknown = set(raw) - set(cls.__dataclass_fields__)
        if unknown:
            raise ParseError(f"unknown keys {sorted(unknown)}")
        try:
            kind, n, columns = raw["kind"], raw["n"], raw["columns"]
        except KeyError as exc:
            raise ParseError(f"missing key {exc}") from exc
        ints = ("n", "a", "b", "field_m", "field_poly", "seed")
        for key in ints:
            v = raw.get(key)
            if v is not None and (not isinstance(v, int) or isinstance(v, bool)):
                raise ParseError(f"{key} must be an integer")
        if not isinstance(columns, list) or not all(
            isinstance(c, list) and all(isinstance(i, int) and not isinstance(i, bool) for i in c)
            for c in columns
        ):
            raise ParseError("columns must be a list of integer lists")
        inverse = raw.get("inverse", False)
        if not isinstance(inverse, bool):
            raise ParseError("inverse must be a boolean")
        return cls(
            kind,
            n,
            tuple(tuple(c) for c in columns),
            raw.get("a"),
            raw.get("b"),
            raw.get("field_m"),
            raw.get("field_poly"),
            raw.get("seed"),
            inverse,
        )

    def entries(self) -> list[list[int]]:
        """Row-major values: 0/1 for binary, field elements for quasi-binary."""
        lo, hi = (0, 1) if self.kind == BINARY else (self.a, self.b)
        out = [[lo] * self.n for _ in range(self.n)]
        for j, col in enumerate(self.columns):
            for i in col:
                out[i][j] = hi
        return out

    def dense_text(self) -> str:
        return "".join(" ".join(map(str, row)) + "\n" for row in self.entries())


def render_pbm(doc: MatrixDocument) -> bytes:
    """Plain PBM (P1), one pixel per entry; set entries are black."""
    lines = [f"P1\n{doc.n} {doc.n}"]
    marks = [[0] * doc.n for _ in range(doc.n)]
    for j, col in enumerate(doc.columns):
        for i in col:
            marks[i][j] = 1
    lines += [" ".join(map(str, row)) for row in marks]
    return ("\n".join(lines) + "\n").encode("ascii")


def render_ppm(doc: MatrixDocument) -> bytes:
    """Binary PPM (P6) in the two-colour palette of the document's pair."""
    lo, hi = (PALETTE["c"], PALETTE["d"]) if doc.inverse else (PALETTE["a"], PALETTE["b"])
    n = doc.n
    pixels = bytearray(bytes(lo) * (n * n))
    for j, col in enumerate(doc.columns):
        for i in col:
            at = 3 * (i * n + j)
            pixels[at : at + 3] = bytes(hi)
    return f"P6\n{n} {n}\n255\n".encode("ascii") + bytes(pixels)


def render(doc: MatrixDocument) -> bytes:
    return render_pbm(doc) if doc.kind == BINARY else render_ppm(doc)
