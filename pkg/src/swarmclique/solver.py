"""Ant-colony maximum-clique search with swappable reinforcement rules.

One loop serves three solvers; they differ only in how the per-iteration
trail deposit (delta) is computed:

* ``quality_gap`` - the classic rule: delta = 1 / (1 + |global best size -
  iteration best size|). This is the ACO baseline.
* ``pso`` - the deposit itself is treated as a particle: a velocity
  accumulates attraction toward the quality of the iteration best and of
  the global best, and delta follows the velocity. This is the hybrid
  this package exists for.
* ``binary`` - deposit 1 on the iteration-best clique, 0 elsewhere.

Each iteration: every ant grows a maximal clique by trail-weighted vertex
selection, the iteration best is chosen (lowest ant index on ties), trails
evaporate, and the iteration best is reinforced with the mode's delta.
The selection exponent alpha and the evaporation parameter rho follow
fixed schedules unless disabled in the config.
"""

from __future__ import annotations

import dataclasses
import json
import time
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .backends import get_backend
from .graph import Clique, Graph, GraphError, candidates, is_clique
from .pheromone import EVAPORATION_MODES, PheromoneState
from .rng import MASK64, UPDATE_STREAM, SplitMix64, stream_seed

REINFORCEMENT_MODES = ("binary", "quality_gap", "pso")


@dataclass(frozen=True)
class SolverConfig:
    """All solver tunables. Defaults are the reference configuration:
    30 ants, 1000 iterations, rho0=0.95, phi=0.0002, trail bounds
    [0.01, 6], c1=c3=0.3, c2=1-c1=0.7, zero initial deposit/velocity."""

    ants: int = 30
    iterations: int = 1000
    rho0: float = 0.95
    phi: float = 0.0002
    delta_tau_initial: float = 0.0
    tau_min: float = 0.01
    tau_max: float = 6.0
    c1: float = 0.3
    c2: float = 0.7
    c3: float = 0.3
    v_initial: float = 0.0
    alpha_schedule: bool = True
    fixed_alpha: float = 1.0
    reinforcement_mode: str = "pso"
    evaporation_interpretation: str = "literal"
    seed: int = 0

    def validate(self) -> None:
        problems = []
        if self.ants < 1:
            problems.append(f"ants must be >= 1, got {self.ants}")
        if self.iterations < 1:
            problems.append(f"iterations must be >= 1, got {self.iterations}")
        if not 0.0 < self.rho0 <= 0.95:
            problems.append(f"rho0 must be in (0, 0.95], got {self.rho0}")
        if not 0.0 <= self.phi < 1.0:
            problems.append(f"phi must be in [0, 1), got {self.phi}")
        if min(self.c1, self.c2, self.c3) < 0.0:
            problems.append("c1, c2, c3 must be non-negative")
        if not 0.0 < self.tau_min < self.tau_max:
            problems.append(f"need 0 < tau_min < tau_max, got "
                            f"[{self.tau_min}, {self.tau_max}]")
        if self.delta_tau_initial < 0.0:
            problems.append("delta_tau_initial must be non-negative")
        if not self.alpha_schedule and self.fixed_alpha <= 0.0:
            problems.append(f"fixed_alpha must be positive, got {self.fixed_alpha}")
        if self.reinforcement_mode not in REINFORCEMENT_MODES:
            problems.append(f"reinforcement_mode must be one of "
                            f"{REINFORCEMENT_MODES}, got {self.reinforcement_mode!r}")
        if self.evaporation_interpretation not in EVAPORATION_MODES:
            problems.append(f"evaporation_interpretation must be one of "
                            f"{EVAPORATION_MODES}, got "
                            f"{self.evaporation_interpretation!r}")
        if problems:
            raise ValueError("invalid solver config: " + "; ".join(problems))

    def replace(self, **changes) -> "SolverConfig":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclass
class RunState:
    """Mutable bookkeeping carried across iterations."""

    t: int = 0
    global_best: Sequence[int] = ()
    iter_best: Sequence[int] = ()
    delta_tau: float = 0.0
    velocity: float = 0.0


class IterationStats(NamedTuple):
    t: int
    alpha: float
    rho: float
    iter_best_size: int
    global_best_size: int
    delta_tau: float
    velocity: float


@dataclass
class RunRecord:
    """Everything one run produced. ``to_jsonl`` is the canonical
    serialization: one record per iteration, no wall-clock content, so two
    runs with the same seed serialize byte-identically."""

    best: Clique
    trace: list[IterationStats]
    wall_time: float
    config: SolverConfig
    seed_used: int

    @property
    def best_size_per_iteration(self) -> list[int]:
        return [s.global_best_size for s in self.trace]

    @property
    def delta_tau_trace(self) -> list[float]:
        return [s.delta_tau for s in self.trace]

    def to_jsonl(self) -> str:
        lines = []
        for s in self.trace:
            lines.append(json.dumps({
                "t": s.t,
                "alpha": s.alpha,
                "rho": s.rho,
                "iter_best_size": s.iter_best_size,
                "global_best_size": s.global_best_size,
                "delta_tau": s.delta_tau,
                "velocity": s.velocity,
            }, separators=(",", ":")))
        return "\n".join(lines) + "\n"


# -- reinforcement rules ---------------------------------------------------

def delta_binary(clique: Iterable[int], is_good: bool) -> float:
    """All-or-nothing deposit: 1 for the designated good solution's edges,
    0 otherwise."""
    return 1.0 if is_good else 0.0


def delta_quality_gap(global_best_size: int, iter_best_size: int) -> float:
    """Deposit shrinking with the size gap between the global best and the
    iteration best: 1 / (1 + |gap|)."""
    return 1.0 / (1.0 + abs(global_best_size - iter_best_size))


def pso_velocity(v: float, delta_tau: float, p_tau: float, g_tau: float,
                 cfg: SolverConfig, rng: SplitMix64) -> float:
    """Velocity update for the deposit particle:
    c1*r1*(p_tau - delta) + c2*r2*(g_tau - delta) + c3*v,
    with r1 then r2 drawn uniformly from [0, 1)."""
    r1 = rng.random()
    r2 = rng.random()
    return (cfg.c1 * r1 * (p_tau - delta_tau)
            + cfg.c2 * r2 * (g_tau - delta_tau)
            + cfg.c3 * v)


def pso_delta_update(state: RunState, cfg: SolverConfig,
                     rng: SplitMix64) -> RunState:
    """Advance velocity and deposit. The attractors are the quality-gap
    values of the iteration best (p) and the global best (g, always 1 by
    construction); the deposit is clamped non-negative."""
    gb = len(state.global_best)
    p_tau = delta_quality_gap(gb, len(state.iter_best))
    g_tau = delta_quality_gap(gb, gb)
    state.velocity = pso_velocity(state.velocity, state.delta_tau,
                                  p_tau, g_tau, cfg, rng)
    state.delta_tau = max(0.0, state.delta_tau + state.velocity)
    return state


# -- schedules --------------------------------------------------------------

def alpha_schedule(t: int) -> int:
    """Selection exponent by iteration: 1 up to 100, then 2 to 400,
    3 to 800, 4 beyond."""
    if t < 1:
        raise ValueError(f"iteration index must be >= 1, got {t}")
    if t <= 100:
        return 1
    if t <= 400:
        return 2
    if t <= 800:
        return 3
    return 4


def rho_schedule(rho_t: float, phi: float) -> float:
    """Next evaporation parameter: (1 - phi) * rho, capped at 0.95."""
    return min((1.0 - phi) * rho_t, 0.95)


# -- construction ------------------------------------------------------------

def select_vertex(cands: Iterable[int], clique: Iterable[int],
                  ph: PheromoneState, alpha: float, rng: SplitMix64) -> int:
    """Pick the next vertex with probability proportional to
    (trail into the clique) ** alpha; uniform when the clique is empty.

    Candidates are consumed in ascending vertex order with the same
    weight arithmetic as the construction kernels.
    """
    verts = sorted(set(cands))
    if not verts:
        raise ValueError("select_vertex needs a non-empty candidate set")
    members = list(clique)
    alpha_int = int(alpha)
    integral = alpha == alpha_int and 0 <= alpha_int <= 64
    weights = []
    total = 0.0
    for v in verts:
        if members:
            s = ph.attachment(members, v)
            if integral:
                w = 1.0
                for _ in range(alpha_int):
                    w *= s
            else:
                w = pow(s, alpha)
        else:
            w = 1.0
        weights.append(w)
        total += w
    threshold = rng.random() * total
    acc = 0.0
    for v, w in zip(verts, weights):
        acc += w
        if acc > threshold:
            return v
    return verts[-1]


def construct_clique(g: Graph, ph: PheromoneState, alpha: float,
                     rng: SplitMix64) -> Clique:
    """Grow one maximal clique from a uniformly random start vertex.

    Delegates to the pure kernel so an explicit-rng caller reproduces
    exactly what ant k of iteration t does inside :func:`run`.
    """
    if g.n == 0:
        raise GraphError("cannot construct a clique in the empty graph")
    from . import _kernel_py
    prep = _kernel_py.prepare(g)
    members = _kernel_py.construct(prep, ph.tau.tolist(), alpha, rng)
    return Clique.of(g, members)


# -- main loop ----------------------------------------------------------------

def run(g: Graph, cfg: SolverConfig, backend: Optional[str] = None,
        check_invariants: bool = False) -> RunRecord:
    """Execute one full solver run and return its record.

    Deterministic for a fixed (graph, config, seed) on every backend.
    ``check_invariants`` additionally verifies, each iteration, that the
    trail bounds hold, the iteration best is a maximal clique, and the
    global best never shrinks.
    """
    cfg.validate()
    if g.n == 0:
        raise GraphError("cannot run the solver on an empty graph")
    kernel = get_backend(backend)
    prep = kernel.prepare(g)
    ph = PheromoneState.initial(g, cfg.tau_min, cfg.tau_max)
    seed = cfg.seed & MASK64
    update_rng = SplitMix64(stream_seed(seed, UPDATE_STREAM))
    state = RunState(delta_tau=cfg.delta_tau_initial, velocity=cfg.v_initial)
    mode = cfg.reinforcement_mode
    rho = cfg.rho0
    trace: list[IterationStats] = []
    started = time.perf_counter()

    for t in range(1, cfg.iterations + 1):
        alpha = float(alpha_schedule(t)) if cfg.alpha_schedule else cfg.fixed_alpha
        cliques = kernel.run_iteration(prep, ph.tau, alpha, cfg.ants, seed, t)
        iter_best = max(cliques, key=len)  # ties: lowest ant index
        state.t = t
        state.iter_best = iter_best
        if len(iter_best) > len(state.global_best):
            state.global_best = tuple(iter_best)

        ph.evaporate(rho, cfg.evaporation_interpretation)
        if mode == "pso":
            pso_delta_update(state, cfg, update_rng)
            delta = state.delta_tau
        elif mode == "quality_gap":
            delta = delta_quality_gap(len(state.global_best), len(iter_best))
            state.delta_tau = delta
        else:
            delta = delta_binary(iter_best, True)
            state.delta_tau = delta
        ph.reinforce(iter_best, delta)

        trace.append(IterationStats(t, alpha, rho, len(iter_best),
                                    len(state.global_best),
                                    state.delta_tau, state.velocity))
        if check_invariants:
            _assert_iteration_invariants(g, ph, iter_best, trace)
        rho = rho_schedule(rho, cfg.phi)

    best = Clique.of(g, state.global_best)
    return RunRecord(best=best, trace=trace,
                     wall_time=time.perf_counter() - started,
                     config=cfg, seed_used=cfg.seed)


def _assert_iteration_invariants(g: Graph, ph: PheromoneState,
                                 iter_best: Sequence[int],
                                 trace: list[IterationStats]) -> None:
    if not ph.bounds_ok():
        raise AssertionError(f"trail bounds violated at t={trace[-1].t}")
    if not is_clique(g, iter_best):
        raise AssertionError(f"iteration best {iter_best} is not a clique")
    if candidates(g, iter_best):
        raise AssertionError(f"iteration best {iter_best} is not maximal")
    if len(trace) >= 2 and trace[-1].global_best_size < trace[-2].global_best_size:
        raise AssertionError("global best size decreased")
