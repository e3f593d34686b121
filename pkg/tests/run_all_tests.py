#!/usr/bin/env python3
"""
Test runner for functidom.

Runs every tests/test_*.py module, prints a summary grouped by module and
saves it to results/test_results.json. Set FUNCTIDOM_SLOW_TESTS=1 to
include the full acceptance enumerations.
"""

import json
import os
import sys
import time
import unittest
from collections import Counter
from io import StringIO
from pathlib import Path


class TestResult:
    """Container for test execution results."""

    def __init__(self):
        self.total_tests = 0
        self.passed_tests = 0
        self.failed_tests = 0
        self.error_tests = 0
        self.skipped_tests = 0
        self.duration = 0.0
        self.failures = []
        self.errors = []
        self.per_module = Counter()


class ComprehensiveTestRunner:
    """unittest runner that collects counts for the summary and the JSON file."""

    def __init__(self, verbosity=2):
        self.verbosity = verbosity
        self.result = TestResult()

    def run_tests(self, test_suite):
        start_time = time.time()
        test_output = StringIO()
        runner = unittest.TextTestRunner(stream=test_output, verbosity=self.verbosity, buffer=True)
        test_result = runner.run(test_suite)

        self.result.duration = time.time() - start_time
        self.result.total_tests = test_result.testsRun
        self.result.failed_tests = len(test_result.failures)
        self.result.error_tests = len(test_result.errors)
        self.result.skipped_tests = len(test_result.skipped)
        self.result.passed_tests = (
            self.result.total_tests
            - self.result.failed_tests
            - self.result.error_tests
            - self.result.skipped_tests
        )
        self.result.failures = test_result.failures
        self.result.errors = test_result.errors
        self.result.per_module = _count_by_module(test_suite)
        return self.result, test_output.getvalue()

    def print_summary(self, result):
        print("=" * 70)
        print("FUNCTIDOM - TEST RESULTS")
        print("=" * 70)
        print("\nTEST SUMMARY:")
        print(f"   Total Tests:  {result.total_tests}")
        print(f"   Passed:       {result.passed_tests}")
        print(f"   Failed:       {result.failed_tests}")
        print(f"   Errors:       {result.error_tests}")
        print(f"   Skipped:      {result.skipped_tests}")
        print(f"   Duration:     {result.duration:.2f}s")
        if result.total_tests > 0:
            print(f"   Success:      {result.passed_tests / result.total_tests * 100:.1f}%")

        print("\nOVERALL STATUS: ", end="")
        if result.failed_tests == 0 and result.error_tests == 0:
            print("ALL TESTS PASSED")
        else:
            print("SOME TESTS FAILED")

        if result.failures:
            print(f"\nFAILURES ({len(result.failures)}):")
            for i, (test, traceback) in enumerate(result.failures, 1):
                print(f"   {i}. {test}")
                print(f"      {traceback.strip().split('AssertionError:')[-1].strip()}")
        if result.errors:
            print(f"\nERRORS ({len(result.errors)}):")
            for i, (test, traceback) in enumerate(result.errors, 1):
                print(f"   {i}. {test}")
                print(f"      {traceback.strip().splitlines()[-1]}")

        print("\nTEST MODULES:")
        for module, count in sorted(result.per_module.items()):
            print(f"   {module}: {count} tests")
        print("\n" + "=" * 70)

    def save_results(self, result, filename="test_results.json"):
        results_data = {
            "timestamp": time.strftime("%Y-%m-%d %H:%M:%S"),
            "slow_tests": os.getenv("FUNCTIDOM_SLOW_TESTS") == "1",
            "summary": {
                "total_tests": result.total_tests,
                "passed_tests": result.passed_tests,
                "failed_tests": result.failed_tests,
                "error_tests": result.error_tests,
                "skipped_tests": result.skipped_tests,
                "duration": result.duration,
                "success_rate": (result.passed_tests / result.total_tests * 100) if result.total_tests > 0 else 0,
            },
            "modules": dict(sorted(result.per_module.items())),
            "failures": [str(test) for test, _ in result.failures],
            "errors": [str(test) for test, _ in result.errors],
        }
        results_dir = Path(__file__).parent.parent / "results"
        results_dir.mkdir(exist_ok=True)
        results_file = results_dir / filename
        with open(results_file, "w", encoding="utf-8") as f:
            json.dump(results_data, f, indent=2, ensure_ascii=False)
        print(f"Test results saved to: {results_file}")


def _iter_tests(suite):
    for item in suite:
        if isinstance(item, unittest.TestSuite):
            yield from _iter_tests(item)
        else:
            yield item


def _count_by_module(suite):
    return Counter(type(test).__module__.rsplit(".", 1)[-1] for test in _iter_tests(suite))


def discover_tests():
    test_dir = Path(__file__).parent
    return unittest.TestLoader().discover(str(test_dir), pattern="test_*.py", top_level_dir=str(test_dir.parent))


def main():
    print("Starting functidom test suite...")
    print(f"Test Directory: {Path(__file__).parent}")

    project_root = Path(__file__).parent.parent
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))

    test_suite = discover_tests()
    runner = ComprehensiveTestRunner(verbosity=2)
    try:
        result, _ = runner.run_tests(test_suite)
        runner.print_summary(result)
        runner.save_results(result)
        sys.exit(0 if result.failed_tests == 0 and result.error_tests == 0 else 1)
    except Exception as e:
        print(f"Test execution failed: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
