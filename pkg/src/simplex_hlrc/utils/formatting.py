"""Display helpers shared by the report renderer and the CLI tables."""

from collections.abc import Iterable, Mapping

from simplex_hlrc.algebra.codes import WeightEnumerator


def format_params(params: Iterable[int]) -> str:
    """Format code parameters.

    Returns:
        String like "[12,4,6]"
    """
    return "[" + ",".join(str(int(p)) for p in params) + "]"


def format_enumerator(enumerator: WeightEnumerator | Mapping[int, int]) -> str:
    """Format a weight distribution like "{0:1, 6:12, 8:3}"."""
    counts = (
        enumerator.counts if isinstance(enumerator, WeightEnumerator) else enumerator
    )
    return "{" + ", ".join(f"{w}:{c}" for w, c in sorted(counts.items())) + "}"


def format_set(members: Iterable[int]) -> str:
    return "{" + ",".join(str(e) for e in sorted(members)) + "}"


def format_locality_pair(r: int, delta: int) -> str:
    return f"({r},{delta})"


def format_rate(successes: int, trials: int) -> str:
    """Format a success count like "98/100 (98.0%)"."""
    if trials == 0:
        return "N/A"
    return f"{successes}/{trials} ({100 * successes / trials:.1f}%)"
