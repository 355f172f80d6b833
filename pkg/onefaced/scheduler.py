import concurrent.futures
import typing

from . import logger


def map_jobs(function: typing.Callable, items: typing.Iterable, workers: int = 1, chunksize: int = 1) -> list:
    """
    Apply `function` to every item, on a process pool when more than one worker is allowed.
    Results keep the order of `items` whatever the worker count.
    :param function: A module-level (picklable) callable
    :param items: The job arguments
    :param workers: The worker cap
    :param chunksize: Number of items sent to a worker at once
    :return: The list of results
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    logger.debug(f"Dispatching {len(items)} job(s) of {function.__name__} on {workers} worker(s).")
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, items, chunksize=chunksize))
