from dataclasses import dataclass
from typing import Optional

from exactdims.Theorem1Prediction import Theorem1Prediction


@dataclass(frozen=True)
class Theorem1Report:
    """Computed (a_{n-2}, b_{n-1}) next to the values the theorem predicts."""
    prediction: Theorem1Prediction
    computed_a_nm2: Optional[int]
    computed_b_nm1: Optional[int]

    @property
    def match(self) -> bool:
        return (self.computed_a_nm2 == self.prediction.a_nm2
                and self.computed_b_nm1 == self.prediction.b_nm1)

    def to_dict(self) -> dict:
        prediction = self.prediction
        return {
            "n": prediction.n,
            "a": prediction.a,
            "d": prediction.d,
            "h": prediction.h,
            "predicted": {"a_nm2": prediction.a_nm2, "b_nm1": prediction.b_nm1},
            "computed": {"a_nm2": self.computed_a_nm2, "b_nm1": self.computed_b_nm1},
            "match": self.match,
        }
