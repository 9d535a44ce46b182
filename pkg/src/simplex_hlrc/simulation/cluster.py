"""Storage cluster whose nodes hold the symbols of a punctured Simplex codeword."""

import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from simplex_hlrc.algebra import linalg
from simplex_hlrc.algebra.codes import CoordSet, LinearCode, sort_key
from simplex_hlrc.construction.simplex import PuncturedSimplexSpec, punctured_simplex
from simplex_hlrc.errors import InvalidArgs
from simplex_hlrc.locality.local_sets import ChainLink, all_chains

logger = logging.getLogger(__name__)

GLOBAL_LEVEL = "global"


def level_label(kappa: int | None) -> str:
    return GLOBAL_LEVEL if kappa is None else f"κ={kappa}"


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator; identical seeds give identical failure patterns."""
    return np.random.Generator(np.random.PCG64(seed))


@dataclass
class ClusterState:
    """One stored codeword, its per-node repair chains, and the erased nodes."""

    spec: PuncturedSimplexSpec
    code: LinearCode
    chains: dict[int, list[ChainLink]]
    codeword: np.ndarray
    seed: int
    erased: CoordSet = frozenset()

    @property
    def n(self) -> int:
        return self.code.n

    def reseed(self, rng: np.random.Generator) -> None:
        """Store a fresh random codeword and clear all erasures."""
        message = rng.integers(0, self.code.q, size=self.code.k, dtype=np.uint8)
        self.codeword = self.code.encode(message)
        self.erased = frozenset()


def build_cluster(q: int, m: int, s: int, seed: int) -> ClusterState:
    """Encode a seeded random message with S_q(m) - S_q(s), one symbol per node.

    Raises:
        InvalidArgs: If (q, m, s) is not a valid punctured Simplex code
    """
    spec = PuncturedSimplexSpec(q, m, s)
    code = punctured_simplex(q, m, s)
    chains = all_chains(code, spec)
    state = ClusterState(spec, code, chains, np.zeros(code.n, dtype=np.uint8), seed)
    state.reseed(make_rng(seed))
    logger.debug(
        f"cluster {spec.label}: {code.n} nodes, "
        f"{len(next(iter(chains.values()), []))} local levels"
    )
    return state


@dataclass(frozen=True)
class RepairStep:
    """Recovery of the erased symbols of one repair set.

    ``kappa`` is None for repair from the whole codeword.
    """

    symbol: int
    kappa: int | None
    repair_set: CoordSet
    recovered: tuple[int, ...]
    contacted: int

    @property
    def level(self) -> str:
        return level_label(self.kappa)


@dataclass
class RepairTrace:
    erased: CoordSet
    steps: list[RepairStep] = field(default_factory=list)
    unrecovered: tuple[int, ...] = ()
    exact: bool = True
    nodes_read: set[int] = field(default_factory=set)

    @property
    def success(self) -> bool:
        return not self.unrecovered and self.exact

    @property
    def contacted(self) -> int:
        """Distinct surviving nodes read over the whole repair."""
        return len(self.nodes_read)

    @property
    def max_contacted(self) -> int:
        return max((step.contacted for step in self.steps), default=0)

    @property
    def mean_contacted(self) -> float:
        if not self.steps:
            return 0.0
        return sum(step.contacted for step in self.steps) / len(self.steps)

    @property
    def escalation(self) -> Counter[str]:
        """Number of recovered symbols per repair level."""
        histogram: Counter[str] = Counter()
        for step in self.steps:
            if step.recovered:
                histogram[step.level] += len(step.recovered)
        return histogram


def _recover(
    code: LinearCode,
    values: np.ndarray,
    survivors: list[int],
    symbol: int,
) -> int | None:
    """Value of ``symbol`` as a combination of surviving symbols, if determined."""
    matrix = code.generator[:, [e - 1 for e in survivors]]
    alpha = linalg.solve(code.field, matrix, code.column(symbol))
    if alpha is None:
        return None
    return code.field.dot(alpha, values[[e - 1 for e in survivors]])


def _choose(
    state: ClusterState, symbol: int, erased: set[int]
) -> tuple[int | None, CoordSet]:
    for link in state.chains.get(symbol, []):
        if len(link.members & erased) <= link.distance - 1:
            return link.kappa, link.members
    return None, state.code.coordinates


def inject_and_repair(state: ClusterState, erasures: CoordSet) -> RepairTrace:
    """Erase ``erasures`` and repair them innermost level first.

    Erased symbols are handled in ascending order. A symbol is repaired from the
    smallest set of its chain holding at most delta - 1 current erasures, or
    from the whole codeword if no level qualifies. All erasures inside the
    chosen set are solved for at once from its survivors, and repaired symbols
    count as survivors afterwards.

    Args:
        state: Cluster holding the stored codeword
        erasures: Node indices to erase

    Returns:
        RepairTrace; unrecoverable symbols are listed, never raised
    """
    erasures = frozenset(erasures)
    if not erasures <= state.code.coordinates:
        raise InvalidArgs(f"erasures {sort_key(erasures)} outside [1, {state.n}]")
    state.erased = erasures
    code = state.code
    values = state.codeword.copy()
    values[[e - 1 for e in erasures]] = 0
    pending = set(erasures)
    trace = RepairTrace(erasures)
    for symbol in sorted(erasures):
        if symbol not in pending:
            continue
        kappa, members = _choose(state, symbol, pending)
        survivors = sorted(members - pending)
        targets = sorted(members & pending)
        recovered = []
        for target in targets:
            value = _recover(code, values, survivors, target)
            if value is None:
                continue
            values[target - 1] = value
            recovered.append(target)
        for target in recovered:
            pending.discard(target)
        trace.nodes_read.update(set(survivors) - erasures)
        trace.steps.append(
            RepairStep(symbol, kappa, members, tuple(recovered), len(survivors))
        )
    trace.unrecovered = tuple(sorted(pending))
    lost = list(trace.unrecovered)
    expected = state.codeword.copy()
    if lost:
        expected[[e - 1 for e in lost]] = 0
    trace.exact = bool(np.array_equal(values, expected))
    state.erased = frozenset(trace.unrecovered)
    if not trace.success:
        logger.debug(f"{state.spec.label}: unrecoverable {trace.unrecovered}")
    return trace
