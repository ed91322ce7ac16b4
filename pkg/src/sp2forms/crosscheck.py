"""Full-pipeline equivalence sweeps between the combinatorics and the matrices.

For every symplectic class up to a dimension bound, build explicit matrices,
take the wedge square with its canonical form, and compare the matrix-level
tagged type and fixed-vector subquotient against the combinatorial rules.
Likewise on the special linear side with the dual tensor square.  The sweep
also records violations of the two tag parity laws (a tagged size must be
even; odd multiplicity on a non-degenerate space forces the tag), which must
never occur.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

from . import oracle
from .enumeration import jordan_types, symplectic_types
from .hesselink import EpsilonTaggedType, SymplecticType
from .jordan import JordanType
from .reps import dual_tensor_classes, wedge_square_classes


@dataclass
class CrosscheckReport:
    """Outcome of an equivalence sweep."""

    symplectic_checked: int = 0
    linear_checked: int = 0
    mismatches: list[str] = field(default_factory=list)
    parity_violations: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.parity_violations

    def to_json(self) -> dict:
        return {
            "symplectic_checked": self.symplectic_checked,
            "linear_checked": self.linear_checked,
            "mismatches": self.mismatches,
            "parity_violations": self.parity_violations,
            "elapsed_seconds": self.elapsed,
            "ok": self.ok,
        }

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"{status}: {self.symplectic_checked} symplectic + {self.linear_checked} linear instances, "
            f"{len(self.mismatches)} mismatches, {len(self.parity_violations)} parity violations, "
            f"{self.elapsed:.2f}s"
        )


def _parity_problems(tagged: EpsilonTaggedType, nondegenerate: bool, context: str) -> list[str]:
    out = []
    for d, m, e in tagged.entries:
        if e == 1 and d % 2:
            out.append(f"{context}: size {d} tagged but odd")
        if nondegenerate and m % 2 and e == 0:
            out.append(f"{context}: size {d} has odd multiplicity {m} but no tag on a non-degenerate space")
    return out


def check_symplectic_instance(type_string: str) -> tuple[str, list[str], list[str]]:
    """Compare the wedge pipeline for one symplectic class; returns (desc, mismatches, parity)."""
    s = SymplecticType.parse(type_string)
    predicted = wedge_square_classes(s)
    space = oracle.space_from_type(s)
    wedge, beta = oracle.wedge_space(space)
    mismatches = []
    parity = []

    full = oracle.hesselink_of_space(wedge)
    if full != predicted.wedge_space:
        mismatches.append(f"wedge({type_string}): matrices give {full}, rules give {predicted.wedge_space}")
    parity += _parity_problems(full, wedge.is_nondegenerate(), f"wedge({type_string})")

    sub = oracle.subquotient(wedge, beta)
    irr = oracle.hesselink_of_space(sub)
    if irr != predicted.irreducible:
        mismatches.append(f"wedge-sub({type_string}): matrices give {irr}, rules give {predicted.irreducible}")
    if not sub.is_nondegenerate():
        mismatches.append(f"wedge-sub({type_string}): subquotient form is degenerate")
    parity += _parity_problems(irr, True, f"wedge-sub({type_string})")
    return (type_string, mismatches, parity)


def check_linear_instance(jordan_string: str) -> tuple[str, list[str], list[str]]:
    """Compare the dual tensor pipeline for one Jordan type."""
    j = JordanType.parse(jordan_string)
    predicted = dual_tensor_classes(j)
    u = oracle.unipotent_from_jordan(j)
    big, gamma = oracle.dual_tensor_space(u)
    mismatches = []
    parity = []

    full = oracle.hesselink_of_space(big)
    if full != predicted.tensor_space:
        mismatches.append(f"dual-tensor({jordan_string}): matrices give {full}, rules give {predicted.tensor_space}")
    parity += _parity_problems(full, big.is_nondegenerate(), f"dual-tensor({jordan_string})")

    sub = oracle.subquotient(big, gamma)
    irr = oracle.hesselink_of_space(sub)
    if irr != predicted.irreducible:
        mismatches.append(f"dual-sub({jordan_string}): matrices give {irr}, rules give {predicted.irreducible}")
    if not sub.is_nondegenerate():
        mismatches.append(f"dual-sub({jordan_string}): subquotient form is degenerate")
    parity += _parity_problems(irr, True, f"dual-sub({jordan_string})")
    return (jordan_string, mismatches, parity)


def _run_one(task: tuple[str, str]) -> tuple[str, list[str], list[str]]:
    kind, arg = task
    if kind == "sp":
        return check_symplectic_instance(arg)
    return check_linear_instance(arg)


def sweep_tasks(max_dim: int, max_n: int) -> list[tuple[str, str]]:
    """Instance list: symplectic classes of dimension 4..max_dim, Jordan types of 2..max_n."""
    tasks: list[tuple[str, str]] = []
    for dim in range(4, max_dim + 1, 2):
        for s in symplectic_types(dim):
            tasks.append(("sp", str(s)))
    for n in range(2, max_n + 1):
        for j in jordan_types(n):
            tasks.append(("sl", str(j)))
    return tasks


def default_jobs() -> int:
    env = os.environ.get("SP2FORMS_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def run_crosscheck(max_dim: int = 12, max_n: int = 8, jobs: int | None = None) -> CrosscheckReport:
    """Run both sweeps, optionally over a process pool; order-independent report."""
    if jobs is None:
        jobs = default_jobs()
    tasks = sweep_tasks(max_dim, max_n)
    report = CrosscheckReport()
    start = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_run_one, tasks, chunksize=4)
    else:
        results = [_run_one(t) for t in tasks]
    for (kind, _), (_, mismatches, parity) in zip(tasks, results):
        if kind == "sp":
            report.symplectic_checked += 1
        else:
            report.linear_checked += 1
        report.mismatches.extend(mismatches)
        report.parity_violations.extend(parity)
    report.elapsed = time.perf_counter() - start
    return report
