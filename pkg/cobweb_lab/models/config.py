from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

import cobweb_lab.constants as const


class VerifyConfig(BaseModel):
    """
    Ranges, sample counts and tolerances of the oracle-vs-formula suite.
    Defaults reproduce the acceptance sweep.
    """

    model_config = ConfigDict(extra="forbid")

    seed: int = const.DEFAULT_SEED

    # exhaustive oracle ranges
    max_n: int = Field(default=const.DEFAULT_VERIFY_MAX_N, ge=1, le=const.COMPLETE_COBWEBS_MAX_N)
    identity_max_n: int = Field(default=10, ge=1, le=30)
    max_product: int = Field(default=const.PRODUCT_SUBSETS_MAX_CELLS, ge=1)
    relations_total_max_n: int = Field(default=4, ge=1, le=8)
    complete_cobwebs_max_n: int = Field(default=6, ge=1, le=const.COMPLETE_COBWEBS_MAX_N)
    ferrers_sweep_max_levels: int = Field(default=4, ge=1, le=6)
    ferrers_sweep_max_size: int = Field(default=4, ge=1, le=6)
    ferrers_exhaustive_max_dim: int = Field(default=3, ge=1, le=4)

    # randomized samples
    random_chains: int = Field(default=500, ge=0)
    chain_max_levels: int = Field(default=6, ge=2)
    chain_max_size: int = Field(default=5, ge=1)
    closure_samples: int = Field(default=500, ge=0)
    closure_max_dim: int = Field(default=12, ge=1)
    exp_pairs: int = Field(default=100, ge=0)
    exp_dim: int = Field(default=3, ge=1, le=4)
    zeta_pairs: int = Field(default=200, ge=0)
    zeta_max_dim: int = Field(default=6, ge=1)

    # matrix exponential
    exp_tol: float = Field(default=const.DEFAULT_EXP_TOL, gt=0)
    exp_threshold: float = Field(default=1e-9, gt=0)

    @field_validator("max_product", mode="after")
    @classmethod
    def within_subset_walk_limit(cls, value: int) -> int:
        if value > const.PRODUCT_SUBSETS_MAX_CELLS:
            raise ValueError(
                f"max_product must not exceed {const.PRODUCT_SUBSETS_MAX_CELLS}, got {value}"
            )
        return value

    @model_validator(mode="after")
    def tolerance_below_threshold(self):
        if self.exp_tol >= self.exp_threshold:
            raise ValueError(
                f"exp_tol ({self.exp_tol}) must be smaller than exp_threshold ({self.exp_threshold})"
            )
        return self


class ConfigFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    verify: VerifyConfig = VerifyConfig()
