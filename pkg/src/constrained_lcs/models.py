from datetime import timedelta
from typing import Dict, Optional, Literal
from pydantic import (
    BaseModel,
    BaseSettings,
    Field,
    validator,
    root_validator,
)
from constrained_lcs.core import NEG_INF, is_finite

Algorithm = Literal["quartic", "cubic", "oracle"]

_DEFAULT_MEMORY_BUDGET = 512 * 1024 * 1024
ORACLE_MAX_N = 18


class Instance(BaseModel):
    """Two sequences X, Y with the substring to include (P) and the subsequence to exclude (Q)"""

    x: str = Field(alias="X", description="First input sequence X (length n)")
    y: str = Field(alias="Y", description="Second input sequence Y (length m)")
    p: str = Field(
        alias="P", description="Constraint P that must appear as a substring (length s)"
    )
    q: str = Field(
        alias="Q",
        description="Constraint Q that must not appear as a subsequence (length t)",
    )

    class Config:
        allow_mutation = False
        allow_population_by_field_name = True

    @validator("x", "y", "p", "q")
    def symbols_must_be_8bit(cls, v: str):
        for symbol in v:
            if ord(symbol) > 0xFF:
                raise ValueError(f"symbol {symbol!r} is not a single 8-bit code unit")
        return v

    @validator("p")
    def include_must_not_be_empty(cls, v: str):
        if len(v) < 1:
            raise ValueError(
                "P must not be empty: without an inclusion constraint the problem reduces to SEQ-EC-LCS, which is not covered"
            )
        return v

    @validator("q")
    def exclude_must_not_be_empty(cls, v: str):
        if len(v) < 1:
            raise ValueError(
                "Q must not be empty: without an exclusion constraint the problem reduces to STR-IC-LCS, which is not covered"
            )
        return v

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def m(self) -> int:
        return len(self.y)

    @property
    def s(self) -> int:
        return len(self.p)

    @property
    def t(self) -> int:
        return len(self.q)

    def swapped(self) -> "Instance":
        """Same constraints with X and Y exchanged"""
        return Instance(x=self.y, y=self.x, p=self.p, q=self.q)

    def __str__(self) -> str:
        return f"X={self.x!r} Y={self.y!r} P={self.p!r} Q={self.q!r}"


class ValidationReport(BaseModel):
    """Membership of a candidate string in the constrained solution set"""

    is_common_subsequence: bool
    includes_p_substring: bool
    excludes_q_subsequence: bool
    length: int

    @property
    def valid(self) -> bool:
        return (
            self.is_common_subsequence
            and self.includes_p_substring
            and self.excludes_q_subsequence
        )


class SolutionIndices(BaseModel):
    """Decomposition point chosen by a solver's combiner"""

    i: int
    j: int
    k: Optional[int] = Field(
        description="Prefix exclusion index, only the cubic solver has one"
    )
    r: int


class SolverStats(BaseModel):
    cell_updates: int = Field(0, description="Interior DP cell writes over all tables")
    table_updates: Dict[str, int] = Field(
        default_factory=dict, description="Interior cell writes per table (f, v, h)"
    )
    combine_candidates: int = Field(
        0, description="Decomposition candidates scored by the combiner"
    )
    wall_time: timedelta = Field(timedelta(0))


class Outcome(BaseModel):
    """Result of a solve: either infeasible or a length with a witness"""

    feasible: bool
    length: int = Field(description="Witness length, NEG_INF when infeasible")
    witness: Optional[str] = None
    indices: Optional[SolutionIndices] = None
    algorithm: Algorithm
    stats: Optional[SolverStats] = None

    @root_validator(skip_on_failure=True)
    def feasibility_must_agree(cls, values):
        feasible = values["feasible"]
        length = values["length"]
        witness = values.get("witness")
        if feasible != is_finite(length) or feasible != (witness is not None):
            raise ValueError(
                f"inconsistent outcome: feasible={feasible} length={length} witness={witness!r}"
            )
        if feasible and len(witness) != length:
            raise ValueError(f"witness {witness!r} does not have length {length}")
        return values

    @classmethod
    def infeasible(
        cls, algorithm: Algorithm, stats: Optional[SolverStats] = None
    ) -> "Outcome":
        return cls(feasible=False, length=NEG_INF, algorithm=algorithm, stats=stats)


class SolverConfig(BaseSettings):
    """Solver settings. Values can be set with environment variables, e.g. CLCS_MEMORY_BUDGET"""

    algorithm: Algorithm = Field("cubic", description="Solver to run")
    memory_budget: int = Field(
        _DEFAULT_MEMORY_BUDGET,
        description="Largest number of bytes the DP tables of one solve may occupy",
    )
    collect_stats: bool = Field(True, description="Attach SolverStats to outcomes")

    # This enables auto load from environment variables
    class Config:
        env_prefix = "clcs_"
        case_sensitive = False

    @validator("memory_budget")
    def memory_budget_must_be_positive(cls, v):
        if v <= 0:
            raise ValueError("memory_budget must be positive")
        return v


class GenParams(BaseModel):
    """Bounds for seeded random instances used by fuzzing"""

    seed: int = Field(0, ge=0, lt=2**64, description="64-bit unsigned seed")
    n_max: int = Field(10, ge=1, le=ORACLE_MAX_N)
    m_max: int = Field(10, ge=1)
    s_max: int = Field(3, ge=1)
    t_max: int = Field(3, ge=1)
    alphabet_size: int = Field(
        4, ge=2, le=8, description="Each instance draws its alphabet size from 2..alphabet_size"
    )
    plant_probability: float = Field(0.5, ge=0.0, le=1.0)

    @root_validator(skip_on_failure=True)
    def constraint_must_fit(cls, values):
        if values["s_max"] > min(values["n_max"], values["m_max"]):
            raise ValueError("s_max must not exceed n_max or m_max")
        return values


class SolveReport(BaseModel):
    """Stable JSON document written by `clcs solve --format json`"""

    feasible: bool
    length: Optional[int] = Field(description="null when infeasible")
    lcs: Optional[str] = Field(description="Witness string, null when infeasible")
    algorithm: Algorithm
    n: int
    m: int
    s: int
    t: int
    x: str
    y: str
    include: str
    exclude: str
    indices: Optional[SolutionIndices] = None
    stats: Optional[SolverStats] = None

    @classmethod
    def from_outcome(
        cls, instance: Instance, outcome: Outcome, with_stats: bool = False
    ) -> "SolveReport":
        return cls(
            feasible=outcome.feasible,
            length=outcome.length if outcome.feasible else None,
            lcs=outcome.witness,
            algorithm=outcome.algorithm,
            n=instance.n,
            m=instance.m,
            s=instance.s,
            t=instance.t,
            x=instance.x,
            y=instance.y,
            include=instance.p,
            exclude=instance.q,
            indices=outcome.indices,
            stats=outcome.stats if with_stats else None,
        )

    def to_instance(self) -> Instance:
        return Instance(x=self.x, y=self.y, p=self.include, q=self.exclude)
