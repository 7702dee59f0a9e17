"""Evaluating identities, one at a time or as a suite."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import ConfigurationError, EvaluationError, UsageError, ZetaforgeError
from ..numerics.series import max_terms as max_terms_limit
from .records import IdentityRecord, VerificationResult, failed, judge, sample_result
from .registry import get_identity, list_identities, select


def _evaluate_sample(record: IdentityRecord, param: Tuple):
    values = []
    for route in record.routes:
        try:
            v = route.evaluate(record.eps, *param)
        except Exception as exc:
            raise EvaluationError(record.id, route.name, exc) from exc
        if v is not None:
            values.append((route.name, v))
    if len(values) < 2:
        raise EvaluationError(record.id, "-", ConfigurationError(
            f"fewer than two routes apply at {param!r}"))
    return sample_result(record, param, tuple(values))


def evaluate_identity(ident: Union[str, IdentityRecord], param=None,
                      tol_override: Optional[float] = None,
                      max_terms: Optional[int] = None) -> VerificationResult:
    """Check one identity at one registered sample, or at all of them.

    Route failures propagate as :class:`EvaluationError` tagged with the route.
    """
    record = ident if isinstance(ident, IdentityRecord) else get_identity(ident)
    tol = record.tol if tol_override is None else tol_override
    if not tol > 0:
        raise UsageError("tolerance must be positive")
    params = record.params if param is None else (record.find_param(param),)
    cap = nullcontext() if max_terms is None else max_terms_limit(max_terms)
    start = time.perf_counter()
    with cap:
        samples = tuple(_evaluate_sample(record, p) for p in params)
    return judge(record, samples, tol, time.perf_counter() - start)


def _guarded(args) -> VerificationResult:
    ident, tol, cap = args
    record = get_identity(ident)
    start = time.perf_counter()
    try:
        return evaluate_identity(record, tol_override=tol, max_terms=cap)
    except ZetaforgeError as exc:
        return failed(record, tol or record.tol, time.perf_counter() - start, str(exc))
    except (ArithmeticError, ValueError) as exc:
        msg = str(EvaluationError(record.id, "-", exc))
        return failed(record, tol or record.tol, time.perf_counter() - start, msg)


def evaluate_suite(filter: Union[None, str, Iterable[str]] = None, jobs: int = 1,
                   tol: Optional[float] = None, max_terms: Optional[int] = None
                   ) -> List[VerificationResult]:
    """Check every matching identity; failures are captured per record.

    ``filter`` is an id, alias, prefix or cost class, or a list of ids and
    prefixes.  Results come back in registry order whatever ``jobs`` is.
    """
    if jobs < 1:
        raise UsageError("jobs must be at least 1")
    if tol is not None and not tol > 0:
        raise UsageError("tolerance must be positive")
    if filter is None or isinstance(filter, str):
        records: Sequence[IdentityRecord] = list_identities(filter)
    else:
        records = select(filter)
    work = [(r.id, tol, max_terms) for r in records]
    if jobs == 1 or len(work) <= 1:
        return [_guarded(w) for w in work]
    # slow records first so they do not trail at the end
    order = sorted(range(len(work)), key=lambda i: records[i].cost_class != "slow")
    with ProcessPoolExecutor(max_workers=min(jobs, len(work))) as pool:
        done = list(pool.map(_guarded, [work[i] for i in order]))
    out: List[Optional[VerificationResult]] = [None] * len(work)
    for i, res in zip(order, done):
        out[i] = res
    return out
