"""Report and summary models emitted by the verifier and the search harness."""

from typing import List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class GraphStats(BaseModel):
    vertices: int
    edges: int
    faces: int


class BindingInfo(BaseModel):
    """Face ids of alpha, beta and rho, and the tree ids of the small component."""
    alpha: int
    beta: int
    rho: Optional[int] = None
    trees: List[int] = Field(default_factory=list)


class Checks(BaseModel):
    biconnected: bool = False
    arboreal: bool = False
    spans: bool = False
    disconnected: bool = False
    rho_unique: bool = False


class WitnessEntry(BaseModel):
    cycle: List[int] = Field(description="Edge ids of the spanned cycle")
    sequence: List[int] = Field(description="Family positions whose running XOR stays a cycle")


class CounterexampleReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n: int
    graph: GraphStats
    binding: BindingInfo
    checks: Checks = Field(default_factory=Checks)
    components: List[int] = Field(default_factory=list, description="Component sizes, largest first")
    tree_count: str = Field(description="Spanning tree count as a decimal string")
    cycle_count: int = 0
    size3_components: int = 0
    small_component: List[List[int]] = Field(default_factory=list, description="Edge ids of the small component's trees")
    rho_persists: bool = False
    witnesses: Optional[List[WitnessEntry]] = None
    verdict: bool = False

    def conclude(self) -> bool:
        """Set the verdict: 2-connected, arboreal, spanning and yet T(G, C) disconnected."""
        c = self.checks
        self.verdict = c.biconnected and c.arboreal and c.spans and c.disconnected
        return self.verdict


class CaseRecord(BaseModel):
    """One sampled (G, C) worth reporting."""
    sample: int
    vertices: int
    edges: List[List[int]]
    family: List[List[int]]
    tree_count: int
    components: int


class HarnessSummary(BaseModel):
    seed: int
    max_vertices: int
    samples: int
    evaluated: int = 0
    skipped: int = 0
    connected_cases: int = 0
    connected_not_spanning: List[CaseRecord] = Field(default_factory=list)
    counterexamples: List[CaseRecord] = Field(default_factory=list)
    duality_discrepancies: List[CaseRecord] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.connected_not_spanning and not self.duality_discrepancies


class InductionViolation(BaseModel):
    tree: List[int]
    reason: str


class InductionReport(BaseModel):
    t: int
    trees_scanned: int = 0
    trees_in_scope: int = 0
    excluded_by_band: int = Field(0, description="Trees with a band triangle of the new layer as a fundamental cycle")
    excluded_by_outer_triangle: int = Field(
        0, description="Band-free trees using other than two edges of the outer triangle"
    )
    arboreal: bool = False
    violations: List[InductionViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.arboreal and not self.violations
