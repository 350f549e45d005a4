from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator

from ffla.FieldSpec import DEFAULT_PRIME, FieldSpec
from maxrank.TrialConfig import TrialConfig


class RunConfig(BaseModel):
    """Settings of one command run, merged from flags, the config file and defaults."""
    model_config = {"frozen": True}

    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = Field(5, ge=1)
    quotient_samples: int = Field(3, ge=1)
    format: Literal["json", "csv", "text"] = "json"
    out: Optional[str] = None

    @field_validator("prime")
    @classmethod
    def _check_prime(cls, value: int) -> int:
        FieldSpec(value)
        return value

    @classmethod
    def resolve(cls, args, config_manager) -> "RunConfig":
        """A flag given on the command line wins over the config file."""
        def pick(flag, fallback):
            return flag if flag is not None else fallback

        return cls(
            prime=pick(args.prime, config_manager.get_prime()),
            seed=pick(args.seed, config_manager.get_seed()),
            trials=pick(args.trials, config_manager.get_trials()),
            quotient_samples=config_manager.get_quotient_samples(),
            format=pick(args.format, config_manager.get_format()),
            out=args.out,
        )

    def trial_config(self) -> TrialConfig:
        return TrialConfig(prime=self.prime, trials=self.trials, master_seed=self.seed,
                           quotient_samples=self.quotient_samples)
