"""
Prime-range scan use case.

Per-prime p-curvature work is independent, so it can fan out to a process
or thread pool; entries are always reported in ascending prime order.
"""

import asyncio
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Any, List, Sequence, Tuple

from ...domain.entities import DiffOp, PCurvatureStatus, ScanEntry, ScanReport
from ...domain.entities.operator import Payload
from ...domain.exceptions import ValidationError
from ...domain.services import scan_prime
from ...infrastructure.config import ExecutorKind
from ..dtos import CommandRequest
from .base import CommandUseCase


def scan_one(payload: Payload, p: int) -> Tuple[ScanEntry, float]:
    """Worker entry point; takes a picklable operator payload."""
    start = time.perf_counter()
    entry = scan_prime(DiffOp.from_payload(payload), p)
    return entry, (time.perf_counter() - start) * 1000


class ScanUseCase(CommandUseCase):
    """Grothendieck-heuristic scan: p-curvature status for every prime in a range."""

    name = "scan"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        text = request.require("op")
        op = self.expressions.operator(text)
        if op.order < 1:
            raise ValidationError("Operator must have order at least 1", field="op")
        primes = self.expressions.prime_range(
            request.get("pmin", self.settings.scan.pmin),
            request.get("pmax", self.settings.scan.pmax),
        )
        workers = self.expressions.positive(request.get("workers", self.settings.scan.workers), "workers")
        executor = ExecutorKind(request.get("executor", self.settings.scan.executor))

        start = time.perf_counter()
        if workers == 1:
            timed = [scan_one(op.to_payload(), p) for p in primes]
        else:
            timed = asyncio.run(self.scan_concurrently(op, primes, workers, executor))
        entries = self._record(timed)

        name = text.strip() if text.strip().startswith("@") else str(op)
        report = ScanReport(name, tuple(entries))
        self.logger.scan_completed(
            operator=name,
            primes=len(entries),
            exceptions=len(report.exception_primes),
            duration_ms=(time.perf_counter() - start) * 1000,
        )
        summary = (
            f"{report.counts[PCurvatureStatus.ZERO.value]} of {len(entries)} primes with zero "
            f"p-curvature; exceptions {report.exception_primes}"
        )
        return report, summary

    async def scan_concurrently(
        self,
        op: DiffOp,
        primes: Sequence[int],
        workers: int,
        executor_kind: ExecutorKind = ExecutorKind.PROCESS,
    ) -> List[Tuple[ScanEntry, float]]:
        payload = op.to_payload()
        loop = asyncio.get_running_loop()
        pool: Executor
        if executor_kind is ExecutorKind.THREAD:
            pool = ThreadPoolExecutor(max_workers=workers)
        else:
            pool = ProcessPoolExecutor(max_workers=workers)
        with pool:
            tasks = [loop.run_in_executor(pool, scan_one, payload, p) for p in primes]
            results = await asyncio.gather(*tasks)
        return sorted(results, key=lambda item: item[0].prime)

    def _record(self, timed: Sequence[Tuple[ScanEntry, float]]) -> List[ScanEntry]:
        threshold_ms = self.settings.scan.slow_prime_seconds * 1000
        entries = []
        for entry, elapsed in timed:
            self.logger.prime_processed(entry.prime, entry.status.value, elapsed)
            if entry.status is PCurvatureStatus.BAD_REDUCTION:
                self.logger.bad_reduction(entry.prime, entry.reason or "")
            if elapsed > threshold_ms:
                self.logger.performance_warning(
                    f"p-curvature at p = {entry.prime}", elapsed, threshold_ms
                )
            entries.append(entry)
        return entries
