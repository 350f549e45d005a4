from typing import Literal

from pydantic import BaseModel, Field, field_validator

from ffla.FieldSpec import DEFAULT_PRIME, FieldSpec


class TrialConfig(BaseModel):
    """
    How a rank check samples: the field, the number of independent trials and
    the master seed they derive from.
    """
    model_config = {"frozen": True}

    prime: int = DEFAULT_PRIME
    trials: int = Field(5, ge=1)
    master_seed: int = 0
    point_strategy: Literal["uniform"] = "uniform"
    quotient_samples: int = Field(3, ge=1)

    @field_validator("prime")
    @classmethod
    def _check_prime(cls, value: int) -> int:
        FieldSpec(value)
        return value
