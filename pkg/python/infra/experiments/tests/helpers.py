"""Factory functions for experiment tests."""

from python.domain.detect.models import Carrier, EntityClass

from ..models import RawRate


def make_raw_rate(
    percentage: float,
    app: str = "A",
    entity: EntityClass = "actuator",
    period: float = 0.25,
    seed: int = 0,
    visit: int = 0,
    carrier: Carrier = "mixed",
) -> RawRate:
    total = 100
    return RawRate(
        period=period,
        seed=seed,
        app=app,
        entity=entity,
        component=f"{entity}-of-{app}",
        visit=visit,
        carrier=carrier,
        total=total,
        misordered=round(percentage),
        percentage=percentage,
    )
