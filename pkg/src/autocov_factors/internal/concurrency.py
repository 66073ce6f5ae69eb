#
# Copyright (c) 2026, The autocov-factors authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from __future__ import annotations

import concurrent
import contextlib
from concurrent.futures import (
    Executor,
    Future,
    ThreadPoolExecutor,
)
from typing import (
    Callable,
    Generator,
    Iterable,
    Optional,
    TypeVar,
)

import numpy as np
from tqdm import tqdm

from . import env

__all__ = (
    "OUT",
    "create_thread_pool_executor",
    "fork_concurrently",
    "gather_results",
    "return_value",
    "run_replications",
    "spawn_generator",
    "use_executor",
)

R = TypeVar("R")
OUT = tuple[set[Future[R]], Optional[R]]

# Independent stream families derived from one master seed
REPLICATION_STREAM = 0
CALIBRATION_STREAM = 1


def create_thread_pool_executor(max_workers: Optional[int] = None) -> Executor:
    if max_workers is None:
        max_workers = env.AUTOCOV_FACTORS_MAX_WORKERS.get()
    return ThreadPoolExecutor(max_workers=max_workers, thread_name_prefix="autocov-factors")


@contextlib.contextmanager
def use_executor(executor: Optional[Executor]) -> Generator[Executor, None, None]:
    """Yield the caller's executor, or a private pool that is shut down on exit."""
    if executor is not None:
        yield executor
        return
    with create_thread_pool_executor() as owned:
        yield owned


def fork_concurrently(executor: Executor, downstreams: Iterable[Callable[[], OUT]]) -> OUT:
    futures = {executor.submit(downstream) for downstream in downstreams}
    return futures, None


def return_value(item: R) -> OUT:
    return set(), item


def gather_results(output: OUT) -> Generator[R, None, None]:
    futures, value = output
    if value is not None:
        yield value
    while futures:
        done, not_done = concurrent.futures.wait(futures, return_when=concurrent.futures.FIRST_COMPLETED)
        futures = not_done
        for future in done:
            new_futures, value = future.result()
            futures.update(new_futures)
            if value is not None:
                yield value


def spawn_generator(seed: int, stream: int, index: int = 0) -> np.random.Generator:
    """RNG for one replication: a pure function of (seed, stream, index), whatever thread runs it."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream, index)))


def run_replications(
    task: Callable[[int], R],
    reps: int,
    executor: Executor,
    *,
    progress_desc: Optional[str] = None,
) -> list[R]:
    """Run task(0), ..., task(reps - 1) on the executor and return the results in index order."""

    def downstream(index: int) -> Callable[[], OUT]:
        return lambda: return_value((index, task(index)))

    results: list[Optional[R]] = [None] * reps
    output = fork_concurrently(executor, (downstream(index) for index in range(reps)))
    show_progress = progress_desc is not None and env.AUTOCOV_FACTORS_SHOW_PROGRESS.get()
    with tqdm(total=reps, desc=progress_desc, disable=not show_progress) as progress:
        for index, value in gather_results(output):
            results[index] = value
            progress.update(1)
    return results  # type: ignore[return-value]
