"""Incremental frame: one input polynomial per round.

Start from the field equations alone, then feed inputs in one at a time.
Each round fully reduces the next input against the current basis; if the
remainder is zero the basis is already right, otherwise an inner engine
recomputes the basis for the enlarged set from scratch. Every completed
intermediate basis is screened for forced variables, so easy equations
yield solved variables long before the whole system has been read.
"""

from __future__ import annotations

from .buchberger import buchberger_core
from .engine import (
    EngineConfig,
    EngineReport,
    PairQueue,
    RoundTrace,
    Status,
    TemporaryBasis,
    adjoin_field_equations,
)
from .errors import ConflictingRootsError
from .f4 import f4_core
from .midsolve import find_unique_root_polys, inconsistency_check, renew
from .poly import interreduce, normal_form, substitute
from .runner import RunState
from .trace import TraceWriter


def _screen_completed(state: RunState, polys: list) -> list:
    """Screen an intermediate basis, substituting and re-screening until stable."""
    while not state.inconsistent and not state.all_solved():
        if inconsistency_check(polys):
            state.mark_inconsistent()
            break
        try:
            found = find_unique_root_polys(polys, state.ring, state.round_no)
        except ConflictingRootsError:
            state.mark_inconsistent()
            break
        if not found:
            break
        for a in found:
            if state.inconsistent:
                break
            state.emit(a)
            tb = TemporaryBasis()
            for g in polys:
                tb.add(g)
            res = renew(tb, [], PairQueue(), a, state.ring, state.field_active)
            polys = res.basis.polys
            if res.inconsistent:
                state.mark_inconsistent()
    return polys


def incremental_gb(polys, config: EngineConfig) -> EngineReport:
    """Compute a Groebner basis one input polynomial at a time."""
    if config.engine != "incremental":
        raise ValueError(f"config names engine {config.engine!r}, not 'incremental'")
    ring = config.ring
    inputs = list(polys)
    if config.reverse_inputs:
        inputs = inputs[::-1]

    inner_core = f4_core if config.inner_engine == "f4" else buchberger_core
    inner_config = EngineConfig(
        ring=ring,
        engine=config.inner_engine,
        middle_solving=False,
        adjoin_field_eqs=False,
        use_criteria=config.use_criteria,
    )

    with TraceWriter(config.trace_path) as tracer:
        state = RunState(
            config,
            engine_name="incremental",
            field_active=config.adjoin_field_eqs,
            screening=config.middle_solving,
            tracer=tracer,
        )
        # the field equations are a reduced basis all by themselves
        basis = adjoin_field_equations([], ring) if config.adjoin_field_eqs else []
        status = None

        for i, f in enumerate(inputs, start=1):
            if state.inconsistent:
                break
            if config.max_rounds is not None and i > config.max_rounds:
                status = Status.ROUND_LIMIT
                break
            state.round_no = i
            before = list(basis)

            g = f
            for var, val in state.assignments.items():
                g = substitute(g, var, val)
            g = state.canon(g)
            if not g.is_zero:
                if g.is_constant:
                    if state.screening:
                        state.mark_inconsistent()
                    else:
                        basis = [ring.one]  # trivial ideal; later inputs reduce to 0
                else:
                    h = state.canon(normal_form(g, basis))
                    if not h.is_zero:
                        if h.is_constant:
                            if state.screening:
                                state.mark_inconsistent()
                            else:
                                basis = [ring.one]
                        else:
                            report = inner_core(
                                basis + [h],
                                inner_config,
                                field_active=state.field_active,
                                screening=False,
                                tracer=None,
                                engine_name=config.inner_engine,
                            )
                            basis = list(report.basis)
                            if state.screening and inconsistency_check(basis):
                                state.mark_inconsistent()
            if state.screening and not state.inconsistent:
                basis = _screen_completed(state, basis)

            fresh = [p for p in basis if p not in before]
            state.record_round(
                RoundTrace(
                    round=i,
                    pairs_selected=0,
                    new_polys=len(fresh),
                    max_poly_degree=max((p.degree() for p in fresh), default=0),
                )
            )

        basis = interreduce(basis)
        state.basis = TemporaryBasis()
        for p in basis:
            state.basis.add(p)
        if status is None:
            if state.inconsistent:
                status = Status.INCONSISTENT
            elif state.screening and state.all_solved():
                status = Status.ALL_VARIABLES_SOLVED
            else:
                status = Status.GROEBNER_BASIS
        elif state.inconsistent:
            status = Status.INCONSISTENT
        return state.finish(status)
