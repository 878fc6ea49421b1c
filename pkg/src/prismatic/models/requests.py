from pydantic import BaseModel, Field, model_validator
from typing import Optional, List


class SearchSpec(BaseModel):
    """Parameters of one exhaustive patchwork search"""
    n: int = Field(ge=3)
    genus: int = Field(ge=0)
    shapes: List[str] = []
    budget: Optional[int] = None
    checkpoint: Optional[str] = None
    audit: bool = False
    threads: int = 1
    split_depth: int = 3
    max_findings: Optional[int] = None

    @model_validator(mode="after")
    def _euler_feasible(self):
        # faces = 2 - 2g - n + n(n-1)/2 must be positive
        edges = self.n * (self.n - 1) // 2
        faces = 2 - 2 * self.genus - self.n + edges
        if faces < 1:
            raise ValueError(f"K{self.n} has no cellular embedding of genus {self.genus}")
        return self

    def fingerprint(self) -> dict:
        """Fields that determine the search result (not how it is run)"""
        return {
            "n": self.n,
            "genus": self.genus,
            "shapes": sorted(self.shapes),
            "budget": self.budget,
            "audit": self.audit,
            "split_depth": self.split_depth,
            "max_findings": self.max_findings,
        }
