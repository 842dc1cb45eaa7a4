"""
Параллельный драйвер репликаций Монте-Карло.

Репликации делятся на блоки фиксированного размера C.MC_BLOCK_SIZE. Блок b класса n в режиме mode
получает собственный поток numpy.random.Generator из SeedSequence(seed, spawn_key=(mode, n, b)),
поэтому результат не зависит ни от числа потоков, ни от порядка их завершения.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, TypeVar
import logging
import os
import sys

import numpy as np
from tqdm import tqdm

from src.GENERAL.constants import Constants as C
from src.GENERAL.environment_variables import EnvironmentVariables
from src.GENERAL.exceptions import InvalidParameterError
from src.GENERAL.textmessage import TextMessage as T

logger = logging.getLogger(__name__)

R = TypeVar("R")


def block_sizes(replications: int) -> list[int]:
    """Размеры блоков: все по C.MC_BLOCK_SIZE, последний - остаток."""
    if replications < 1:
        raise InvalidParameterError(T.bad_replications.format(value=replications))
    full, rest = divmod(replications, C.MC_BLOCK_SIZE)
    return [C.MC_BLOCK_SIZE] * full + ([rest] if rest else [])


def block_rng(seed: int, mode: str, n: int, block: int) -> np.random.Generator:
    """Независимый поток случайных чисел блока."""
    if seed < 0:
        raise InvalidParameterError(T.bad_nonnegative.format(name="seed", value=seed))
    key = (C.MC_MODE_KEYS[mode], n, block)
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def resolve_workers(threads: int | None, blocks: int) -> int:
    """Число потоков: явное значение, иначе LORASG_THREADS, иначе число ядер; не больше числа блоков."""
    if threads is None:
        threads = EnvironmentVariables().get_positive_int(C.ENV_THREADS, os.cpu_count() or 1)
    elif threads < 1:
        raise InvalidParameterError(T.bad_positive.format(name="threads", value=threads))
    return max(1, min(threads, blocks))


def progress_enabled() -> bool:
    return EnvironmentVariables().get_flag(C.ENV_PROGRESS)


def run_blocks(
    worker: Callable[[np.random.Generator, int], R],
    replications: int,
    seed: int,
    mode: str,
    n: int,
    threads: int | None = None,
    progress: bool | None = None,
) -> list[R]:
    """
    Выполняет worker(rng, size) для каждого блока и возвращает результаты в порядке блоков.

    :param worker: Функция блока; получает свой генератор и число репликаций блока
    :param replications: Общее число репликаций
    :param seed: Зерно эксперимента (неотрицательное целое)
    :param mode: Режим (ключ C.MC_MODE_KEYS), входит в ключ потока
    :param n: Номер класса, входит в ключ потока
    :param threads: Ограничение числа потоков (None - из окружения)
    :param progress: Показывать tqdm в stderr (None - из окружения)
    """
    sizes = block_sizes(replications)
    workers = resolve_workers(threads, len(sizes))
    show = progress_enabled() if progress is None else progress
    logger.info(
        T.mc_start.format(mode=mode, n=n, replications=replications, seed=seed, workers=workers)
    )

    def run_one(block: int) -> R:
        result = worker(block_rng(seed, mode, n, block), sizes[block])
        logger.debug(T.mc_block_done.format(block=block + 1, blocks=len(sizes), n=n, mode=mode))
        return result

    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = executor.map(run_one, range(len(sizes)))
        return list(
            tqdm(
                results,
                total=len(sizes),
                desc=f"{mode} n={n}",
                unit="block",
                file=sys.stderr,
                disable=not show,
            )
        )
