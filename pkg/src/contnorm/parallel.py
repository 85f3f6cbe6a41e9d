# contnorm/parallel.py
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> List[R]:
    """
    Apply ``fn`` to every item, optionally on a thread pool.

    Results come back in input order whatever the completion order, so any
    reduction over them is deterministic.

    Args:
        fn: Pure function of one item
        items: Work items
        workers: Thread count; 1 runs inline

    Returns:
        List of results in input order
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))
