"""Runs (period × seed) experiment cells concurrently and aggregates their rates."""

import logging
from collections.abc import Sequence

import reactivex as rx
from reactivex import Observable
from reactivex import operators as ops
from reactivex.abc import SchedulerBase

from python.config.settings import Settings
from python.domain.detect import AnalysisError, RateMode, entity_rates
from python.domain.home import HomeError
from python.infra.engine import SimulationError
from python.infra.engine import run as simulate

from .dependencies import inject_deps
from .exceptions import ExperimentError
from .models import CellResult, ExperimentCell, ExperimentStats, RawRate
from .scenarios import EXPERIMENT_CLASSES, generate_scenario
from .stats import aggregate, raw_rates

logger = logging.getLogger(__name__)


def run_cell(cell: ExperimentCell) -> CellResult:
    """Simulate one cell and collect the rate of every entity stream.

    Raises ExperimentError.
    """
    context = {
        "experiment": str(cell.experiment),
        "period": f"{cell.period:g}",
        "seed": str(cell.seed),
    }
    try:
        scenario = generate_scenario(cell.experiment, cell.period, cell.seed, cell.n_events)
        trace = simulate(scenario)
        rates = entity_rates(trace, cell.mode)
    except (SimulationError, AnalysisError, HomeError) as e:
        raise ExperimentError(f"Cell failed: {e}", context=context) from e

    logger.debug(f"Cell exp{cell.experiment} period={cell.period:g} seed={cell.seed} done")
    return CellResult(
        cell=cell,
        rates=[
            RawRate(
                period=cell.period,
                seed=cell.seed,
                app=rate.group,
                entity=rate.entity_class,
                component=rate.entity,
                visit=rate.visit,
                subject=rate.subject,
                carrier=rate.carrier,
                total=rate.total,
                misordered=rate.misordered,
                percentage=rate.percentage,
            )
            for rate in rates
        ],
    )


def _create_cell_pipeline(
    cells: list[ExperimentCell], scheduler: SchedulerBase, max_concurrent: int
) -> Observable[list[CellResult]]:
    """Fan cells out on the scheduler and collect results in cell order."""

    def create_cell_observable(cell: ExperimentCell) -> Observable[CellResult]:
        return rx.from_callable(lambda: run_cell(cell), scheduler=scheduler)

    return rx.from_iterable(cells).pipe(
        ops.map(create_cell_observable),
        ops.merge(max_concurrent=max_concurrent),
        ops.to_list(),
        # completion order depends on the pool
        ops.map(lambda results: sorted(results, key=lambda r: (r.cell.period, r.cell.seed))),
    )


@inject_deps
def run_experiment(
    experiment: int,
    seeds: Sequence[int] | None = None,
    periods: Sequence[float] | None = None,
    *,
    n_events: int | None = None,
    mode: RateMode | None = None,
    settings: Settings | None = None,
    scheduler: SchedulerBase | None = None,
) -> ExperimentStats:
    """Run every (period, seed) cell of an experiment and aggregate the rates.

    Missing arguments fall back to the active settings.

    Raises ExperimentError.
    """
    assert settings is not None and scheduler is not None
    if experiment not in EXPERIMENT_CLASSES:
        raise ExperimentError(
            f"Unknown experiment: {experiment}", context={"experiment": str(experiment)}
        )
    seed_list = list(seeds) if seeds is not None else list(range(settings.seeds))
    period_list = list(periods) if periods is not None else list(settings.periods)
    n = n_events if n_events is not None else settings.n_events
    rate_mode: RateMode = mode or settings.rate_mode
    if not seed_list or not period_list:
        raise ExperimentError(
            "An experiment needs at least one seed and one period",
            context={"experiment": str(experiment)},
        )

    cells = [
        ExperimentCell(experiment=experiment, period=period, seed=seed, n_events=n, mode=rate_mode)
        for period in period_list
        for seed in seed_list
    ]
    logger.info(
        f"Running experiment {experiment}: {len(period_list)} periods × {len(seed_list)} seeds "
        f"({len(cells)} cells, mode={rate_mode})"
    )
    results = _create_cell_pipeline(cells, scheduler, settings.max_workers).run()

    raw = raw_rates(results)
    rows = aggregate(raw, EXPERIMENT_CLASSES[experiment])
    logger.info(f"Experiment {experiment} finished: {len(rows)} statistic rows")
    return ExperimentStats(
        experiment=experiment,
        mode=rate_mode,
        seeds=seed_list,
        periods=period_list,
        n_events=n,
        rows=rows,
        raw=raw,
    )
