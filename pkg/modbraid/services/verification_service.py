"""
VerificationService - Runs the verification suites and collects their rows into
VerificationReport objects with a stable case order.
"""

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Dict, List, Optional, Tuple

from modbraid import __version__
from modbraid.algebra.chain_cohomology import (
    check_chain_map, check_complexes, closed_form_check, coboundary_shift_check,
)
from modbraid.algebra.coset_enumeration import ABORTED, COMPLETE, enumerate_Zn, todd_coxeter
from modbraid.algebra.ext_groups import (
    GN, ZN, associativity_check, b4_generator_check, omega_splitting_check, oracle_check,
    search_splitting_Zn, verify_relation_table, zn_order,
)
from modbraid.algebra.presentations import (
    build_builtin_presentation, kill_kernel, relator_set_equal, zn_extension_presentation,
)
from modbraid.algebra.relation_tables import TABLES
from modbraid.config import get_settings
from modbraid.errors import EnumerationAborted, SearchSpaceTooLarge

logger = logging.getLogger(__name__)

# order checks from this degree on are a stretch target (122880 cosets at n = 5)
STRETCH_FROM = 5


@dataclass(frozen=True)
class Case:
    id: str
    passed: bool
    detail: Dict = field(default_factory=dict)

    def to_json(self) -> Dict:
        return {"id": self.id, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    """One suite's outcome; summary counts are derived from the cases."""

    suite: str
    n: int
    t: Optional[int]
    cases: Tuple[Case, ...]
    version: str = __version__

    @property
    def summary(self) -> Dict[str, int]:
        passed = sum(1 for case in self.cases if case.passed)
        return {"total": len(self.cases), "passed": passed, "failed": len(self.cases) - passed}

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def failures(self) -> List[Case]:
        return [case for case in self.cases if not case.passed]

    def to_json(self) -> Dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "t": self.t,
            "cases": [case.to_json() for case in self.cases],
            "summary": self.summary,
            "version": self.version,
        }


def _row_cases(prefix: str, rows: List[Dict]) -> List[Case]:
    """Turn suite rows ({relation|cell, indices?, pass, ...}) into cases."""
    cases = []
    for row in rows:
        label = row.get("cell") or row.get("relation", "")
        if "indices" in row:
            label = f"{label}:{','.join(str(x) for x in row['indices'])}"
        detail = {k: v for k, v in row.items() if k not in ("pass", "cell", "relation", "indices")}
        cases.append(Case(f"{prefix}/{label}", bool(row["pass"]), detail))
    return cases


def _summary_case(case_id: str, result: Dict) -> Case:
    detail = {k: v for k, v in result.items() if k not in ("pass", "suite")}
    return Case(case_id, bool(result["pass"]), detail)


class VerificationService:
    """Every `verify ...` suite by name."""

    @staticmethod
    def tables(n: int, t: int = 1) -> VerificationReport:
        cases: List[Case] = []
        for table in TABLES:
            result = verify_relation_table(table, n, t)
            cases.extend(_row_cases(table, result["rows"]))
        return VerificationReport("tables", n, t, tuple(cases))

    @staticmethod
    def cocycle(n: int, t: int = 1) -> VerificationReport:
        cases = [
            _summary_case("associativity/Z", associativity_check(n, GN)),
            _summary_case("associativity/Z2", associativity_check(n, ZN)),
        ]
        return VerificationReport("cocycle", n, None, tuple(cases))

    @staticmethod
    def chainmap(n: int, t: int = 1) -> VerificationReport:
        cases = _row_cases("chainmap", check_chain_map(n)["rows"])
        cases.append(_summary_case("complexes", check_complexes(n)))
        return VerificationReport("chainmap", n, None, tuple(cases))

    @staticmethod
    def closed_forms(n: int, t: int = 1) -> VerificationReport:
        cases = _row_cases("closed-forms", closed_form_check(n)["rows"])
        return VerificationReport("closed-forms", n, None, tuple(cases))

    @staticmethod
    def coboundary(n: int, t: int = 1, seed: int = 0) -> VerificationReport:
        cases = _row_cases(f"coboundary/seed={seed}", coboundary_shift_check(n, seed)["rows"])
        return VerificationReport("coboundary", n, None, tuple(cases))

    @staticmethod
    def split(n: int, t: int = 2) -> VerificationReport:
        cases = _row_cases(f"split/t={t}", omega_splitting_check(n, t)["rows"])
        return VerificationReport("split", n, t, tuple(cases))

    @staticmethod
    def nonsplit(n: int, t: int = 1) -> VerificationReport:
        found = search_splitting_Zn(n)
        detail = {"splitting": None if found is None else {str(i): v.to_json() for i, v in found.items()}}
        return VerificationReport("nonsplit", n, None, (Case("nonsplit/search", found is None, detail),))

    @staticmethod
    def b4_generators(n: int, t: int = 1) -> VerificationReport:
        result = b4_generator_check(n)
        cases = _row_cases("b4-generators", result["rows"])
        return VerificationReport("b4-generators", n, None, tuple(cases))

    @staticmethod
    def oracle(n: int, t: int = 1, max_length: Optional[int] = None) -> VerificationReport:
        cases = [
            _summary_case("oracle/Z", oracle_check(n, GN, max_length)),
            _summary_case("oracle/Z2", oracle_check(n, ZN, max_length)),
        ]
        return VerificationReport("oracle", n, None, tuple(cases))

    @staticmethod
    def presentations(n: int, t: int = 1, limit: Optional[int] = None, stretch: bool = False) -> VerificationReport:
        """
        Orders of the level-4 quotient three ways, the kernel-killing quotient, and
        the generic extension constructor against the Z_n table.

        Raises:
            SearchSpaceTooLarge: above STRETCH_FROM strands unless stretch is set
        """
        if n >= STRETCH_FROM and not stretch:
            raise SearchSpaceTooLarge(f"order checks at n={n} need --stretch")
        expected = zn_order(n)
        table3 = build_builtin_presentation("table3", n)
        cases: List[Case] = []
        for pres in (build_builtin_presentation("pres11", n), table3):
            table = todd_coxeter(pres, limit)
            try:
                order = table.order()
            except EnumerationAborted as e:
                cases.append(Case(f"order/{pres.name}", False, {"error": str(e)}))
                continue
            cases.append(Case(f"order/{pres.name}", order == expected, {"order": order, "expected": expected}))
            cases.append(Case(f"consistent/{pres.name}", table.is_consistent(pres.relators), {}))
        order = enumerate_Zn(n, max_n=n if stretch else None)
        cases.append(Case("order/closure", order == expected, {"order": order, "expected": expected}))

        quotient = todd_coxeter(kill_kernel(table3, n), limit)
        if quotient.status == COMPLETE:
            cases.append(Case("order/table3-kernel-killed", quotient.order() == factorial(n),
                              {"order": quotient.order(), "expected": factorial(n)}))
        else:
            cases.append(Case("order/table3-kernel-killed", False, {"error": ABORTED}))

        same = relator_set_equal(zn_extension_presentation(n), table3)
        cases.append(Case("extension/table3", same, {}))
        return VerificationReport("presentations", n, None, tuple(cases))

    @classmethod
    def run(cls, suite: str, n: int, t: Optional[int] = None, **options) -> VerificationReport:
        """
        Run one suite by name, or every suite with "all".

        Options (seed, max_length, limit, stretch) go to the suites that take them.
        """
        if suite == "all":
            return cls.run_all(n, t or 1, **options)
        runner = SUITES[suite]
        logger.info(f"Running suite {suite} at n={n}")
        kwargs = {k: v for k, v in options.items() if k in SUITE_OPTIONS.get(suite, ())}
        if t is None:
            return runner(n, **kwargs)
        return runner(n, t, **kwargs)

    @classmethod
    def run_all(cls, n: int, t: int = 1, **options) -> VerificationReport:
        """
        Every suite at degree n; the split suite uses t = 2 when t is odd. Suites
        whose search guard excludes n are skipped with a log line.
        """
        cases: List[Case] = []
        stretch = options.get("stretch", False)
        for name, runner in SUITES.items():
            if name == "nonsplit" and n > get_settings().search_max_n:
                logger.info(f"Skipping nonsplit at n={n} beyond the search guard")
                continue
            if name == "presentations" and n >= STRETCH_FROM and not stretch:
                logger.info(f"Skipping presentations at n={n} without --stretch")
                continue
            kwargs = {k: v for k, v in options.items() if k in SUITE_OPTIONS.get(name, ())}
            if name == "split":
                report = runner(n, t if t % 2 == 0 else 2, **kwargs)
            else:
                report = runner(n, t, **kwargs)
            cases.extend(Case(f"{name}/{case.id}", case.passed, case.detail) for case in report.cases)
            logger.info(f"Suite {name}: {report.summary['passed']}/{report.summary['total']} passed")
        return VerificationReport("all", n, t, tuple(cases))


SUITES: Dict[str, Callable[..., VerificationReport]] = {
    "tables": VerificationService.tables,
    "cocycle": VerificationService.cocycle,
    "chainmap": VerificationService.chainmap,
    "closed-forms": VerificationService.closed_forms,
    "coboundary": VerificationService.coboundary,
    "split": VerificationService.split,
    "nonsplit": VerificationService.nonsplit,
    "b4-generators": VerificationService.b4_generators,
    "oracle": VerificationService.oracle,
    "presentations": VerificationService.presentations,
}

SUITE_OPTIONS: Dict[str, Tuple[str, ...]] = {
    "coboundary": ("seed",),
    "oracle": ("max_length",),
    "presentations": ("limit", "stretch"),
}
