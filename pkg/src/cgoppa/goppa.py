"""Convolutional Goppa codes over the projective line.

Each section ``z -> (alpha*z + beta, z)`` picks one evaluation point per value
of ``z``.  The code generated by the monomials ``t^s, ..., t^r`` evaluated
along ``n`` distinct sections has the generator matrix with entries
``(alpha_j*z + beta_j)^(s+i)``.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from cgoppa.errors import CodeError
from cgoppa.galois import FieldElement, FieldSpec, parse_field
from cgoppa.polymat import ConstMatrix, PolyMatrix, specialize
from cgoppa.polyring import Poly

__all__ = [
    "Section",
    "CodeSpec",
    "sections_geometric",
    "generator_matrix",
    "encode",
    "block_code_at",
    "evaluation_points",
    "spec_from_dict",
    "spec_to_dict",
    "load_spec",
]


@dataclass(frozen=True)
class Section:
    """The section ``t = alpha*z + beta``."""

    alpha: FieldElement
    beta: FieldElement

    def point(self) -> Poly:
        return Poly(self.alpha.field, [self.beta, self.alpha])

    def at(self, z0: FieldElement) -> FieldElement:
        return self.alpha * z0 + self.beta


@dataclass(frozen=True)
class CodeSpec:
    field: FieldSpec
    sections: tuple[Section, ...]
    s: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "sections", tuple(self.sections))
        if not self.sections:
            raise CodeError("a code needs at least one section")
        pairs = [(sec.alpha, sec.beta) for sec in self.sections]
        for a, b in pairs:
            if a.field != self.field or b.field != self.field:
                raise CodeError("section coordinates must lie in the code's field")
        if len(set(pairs)) != len(pairs):
            raise CodeError("sections must be pairwise distinct (alpha, beta) pairs")
        if self.s < 0:
            raise CodeError(f"s must be non-negative, got {self.s}")
        if self.r < self.s:
            raise CodeError(f"need s <= r, got s={self.s}, r={self.r}")
        if self.r >= self.n:
            raise CodeError(f"need r < n, got r={self.r}, n={self.n}")

    @property
    def n(self) -> int:
        return len(self.sections)

    @property
    def k(self) -> int:
        return self.r - self.s + 1


def sections_geometric(a: FieldElement, b: FieldElement, n: int) -> tuple[Section, ...]:
    """Sections ``alpha_i = a^(i-1)``, ``beta_i = b^(i-1)`` for i = 1..n."""
    F = a.field
    if b.field != F:
        raise CodeError("a and b must lie in the same field")
    if not a or not b:
        raise CodeError("a and b must be nonzero")
    if a == b:
        raise CodeError("a and b must differ")
    if not 1 <= n < F.q:
        raise CodeError(f"need 1 <= n < q = {F.q}, got n={n}")
    out = tuple(Section(a**i, b**i) for i in range(n))
    if len({(x.alpha, x.beta) for x in out}) != n:
        raise CodeError(f"a={a}, b={b} give repeated sections for n={n}")
    return out


def generator_matrix(spec: CodeSpec) -> PolyMatrix:
    """Row i holds ``(alpha_j z + beta_j)^(s+i)``; row 0 is the monomial ``t^s``."""
    points = [sec.point() for sec in spec.sections]
    return PolyMatrix(spec.field, [[x ** (spec.s + i) for x in points] for i in range(spec.k)])


def encode(G: PolyMatrix, message: Sequence[Poly]) -> list[Poly]:
    """The codeword ``u(z) G(z)``."""
    if len(message) != G.k:
        raise CodeError(f"message has {len(message)} components, code dimension is {G.k}")
    zero = Poly.zero(G.field)
    out = []
    for j in range(G.n):
        acc = zero
        for i, u in enumerate(message):
            if u.field != G.field:
                raise CodeError("message and generator matrix are over different fields")
            acc = acc + u * G[i, j]
        out.append(acc)
    return out


def evaluation_points(spec: CodeSpec, z0: FieldElement) -> list[FieldElement]:
    return [sec.at(z0) for sec in spec.sections]


def block_code_at(G: PolyMatrix, z0, sections: Sequence[Section] | None = None) -> ConstMatrix:
    """The block code obtained by fixing ``z = z0``.

    The evaluation points must stay distinct at ``z0``.  Without
    ``sections`` two points are taken to coincide when their columns of the
    specialized matrix are equal.
    """
    F = G.field
    z0 = F(z0)
    C = specialize(G, z0)
    if sections is not None:
        pts = [sec.at(z0) for sec in sections]
    else:
        pts = list(zip(*C.rows))
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] == pts[j]:
                raise CodeError(f"evaluation points {i} and {j} coincide at z = {z0}")
    return C


# -- JSON specification files ---------------------------------------------------


def _as_int(v, name: str) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise CodeError(f"{name} must be an integer, got {v!r}")
    try:
        return int(v)
    except ValueError:
        raise CodeError(f"{name} must be an integer, got {v!r}") from None


def spec_from_dict(obj: dict) -> CodeSpec:
    """Build a spec from the JSON object form.

    ``sections`` is either ``{"a": ..., "b": ..., "n": ...}`` or a list of
    ``{"alpha": ..., "beta": ...}`` objects; element values use the field
    element text form.
    """
    try:
        field = parse_field(str(obj["field"]))
        sec, s, r = obj["sections"], obj["s"], obj["r"]
    except KeyError as exc:
        raise CodeError(f"code spec is missing {exc.args[0]!r}") from None
    s, r = _as_int(s, "s"), _as_int(r, "r")
    if isinstance(sec, dict):
        try:
            a, b, n = sec["a"], sec["b"], sec["n"]
        except KeyError as exc:
            raise CodeError(f"geometric sections need {exc.args[0]!r}") from None
        sections = sections_geometric(field.parse(str(a)), field.parse(str(b)), _as_int(n, "n"))
    elif isinstance(sec, list):
        if not all(isinstance(item, dict) and {"alpha", "beta"} <= item.keys() for item in sec):
            raise CodeError('each section needs "alpha" and "beta"')
        sections = tuple(Section(field.parse(str(x["alpha"])), field.parse(str(x["beta"]))) for x in sec)
    else:
        raise CodeError("sections must be an object or a list")
    return CodeSpec(field, sections, s, r)


def spec_to_dict(spec: CodeSpec) -> dict:
    return {
        "field": spec.field.describe(),
        "sections": [{"alpha": str(x.alpha), "beta": str(x.beta)} for x in spec.sections],
        "s": spec.s,
        "r": spec.r,
    }


def load_spec(path: str | Path) -> CodeSpec:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CodeError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(obj, dict):
        raise CodeError(f"{path}: expected a JSON object")
    return spec_from_dict(obj)
