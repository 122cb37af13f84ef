"""The five published example codes with their pinned invariants."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from cgoppa.analysis import CodeReport, analyze
from cgoppa.galois import parse_field
from cgoppa.goppa import CodeSpec, generator_matrix, sections_geometric
from cgoppa.polymat import parse_matrix


@dataclass(frozen=True)
class ReferenceCode:
    name: str
    field: str
    a: str
    b: str
    n: int
    s: int
    r: int
    matrix: str
    k: int
    delta: int
    d_free: int
    mds: bool = True

    def spec(self) -> CodeSpec:
        F = parse_field(self.field)
        return CodeSpec(F, sections_geometric(F.parse(self.a), F.parse(self.b), self.n), self.s, self.r)

    def spec_dict(self) -> dict:
        return {
            "field": self.field,
            "sections": {"a": self.a, "b": self.b, "n": self.n},
            "s": self.s,
            "r": self.r,
        }


GF4 = "GF(2^2; 1,1,1)"

REFERENCE_CODES: tuple[ReferenceCode, ...] = (
    ReferenceCode("F3 rate 1/2", "GF(3)", "1", "2", 2, 1, 1, "z+1, z+2", 1, 1, 4),
    ReferenceCode("F4 rate 1/3", GF4, "1", "a", 3, 1, 1, "z+1, z+a, z+a^2", 1, 1, 6),
    ReferenceCode("F5 rate 1/3", "GF(5)", "1", "2", 3, 2, 2, "(z+1)^2, (z+2)^2, (z+4)^2", 1, 2, 9),
    ReferenceCode("F4 rate 2/3", GF4, "a", "a^2", 3, 0, 1, "1, 1, 1; z+1, a*z+a^2, a^2*z+a", 2, 1, 3),
    ReferenceCode(
        "F5 rate 1/2",
        "GF(5)",
        "2",
        "3",
        4,
        1,
        2,
        "z+1, 2z+3, 4z+4, 3z+2; (z+1)^2, (2z+3)^2, (4z+4)^2, (3z+2)^2",
        2,
        3,
        8,
    ),
)


@dataclass
class Verdict:
    code: ReferenceCode
    report: CodeReport | None
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_code(ref: ReferenceCode) -> Verdict:
    spec = ref.spec()
    G = generator_matrix(spec)
    out = Verdict(ref, None)
    if G != parse_matrix(spec.field, ref.matrix):
        out.mismatches.append(f"matrix {G.to_text()} != {ref.matrix}")
    rep = analyze(spec)
    out.report = rep
    checks = [
        ("n", rep.n, ref.n),
        ("k", rep.k, ref.k),
        ("delta", rep.delta, ref.delta),
        ("d_free", rep.d_free, ref.d_free),
        ("mds", rep.is_mds, ref.mds),
        ("canonical", rep.is_canonical, True),
    ]
    out.mismatches += [f"{name} {got} != {want}" for name, got, want in checks if got != want]
    return out


def verify_all(codes=REFERENCE_CODES) -> list[Verdict]:
    return [verify_code(c) for c in codes]


def corrupted(ref: ReferenceCode, **changes) -> ReferenceCode:
    """Copy of ``ref`` with altered expectations, for exercising failure paths."""
    return replace(ref, **changes)
