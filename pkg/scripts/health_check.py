#!/usr/bin/env python3
"""
Health Check - functidom
Quick diagnostic that the installation, environment and solver work.

Usage:
    python3 scripts/health_check.py
"""
import importlib
import logging
import os
import sys
import tempfile
from datetime import datetime
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(levelname)s - %(message)s")
logger = logging.getLogger(__name__)

REQUIRED_PACKAGES = ("dotenv", "pandas", "tqdm", "psutil")
TEST_PACKAGES = ("hypothesis", "networkx")


class HealthChecker:
    def __init__(self):
        self.checks_passed = 0
        self.checks_total = 0
        self.issues = []

    def check_mark(self, passed):
        self.checks_total += 1
        if passed:
            self.checks_passed += 1
            return "[OK]"
        return "[NG]"

    def add_issue(self, issue):
        self.issues.append(issue)
        logger.warning(f"ISSUE: {issue}")

    def check_packages(self):
        """Runtime dependencies import; test-only ones are reported but optional."""
        logger.info("=== Package Check ===")
        ok = True
        for name in REQUIRED_PACKAGES:
            try:
                importlib.import_module(name)
                found = True
            except ImportError:
                found = False
            logger.info(f"{self.check_mark(found)} {name}")
            if not found:
                ok = False
                self.add_issue(f"Missing package: {name}")
        for name in TEST_PACKAGES:
            try:
                importlib.import_module(name)
                logger.info(f"    {name} available (tests)")
            except ImportError:
                logger.info(f"    {name} not installed (needed only for tests)")
        return ok

    def check_environment(self):
        logger.info("=== Environment Check ===")
        try:
            from functidom import config

            nodes = config.budget_node_limit()
            vertices = config.budget_max_vertices()
            workers = config.worker_count()
            valid = True
            logger.info(f"{self.check_mark(valid)} budget: {vertices} vertices, {nodes} nodes; {workers} workers")
        except Exception as e:
            logger.info(f"{self.check_mark(False)} environment")
            self.add_issue(f"Invalid environment: {e}")
            return False
        return True

    def check_solver(self):
        """Known domination numbers from the solver and one construction."""
        logger.info("=== Solver Check ===")
        from functidom.constructions import identity_dominating_set
        from functidom.domsolve import domination_number
        from functidom.functigraph import constant_map, cycle_functigraph, identity_map

        cases = [
            ("C(C6, id)", cycle_functigraph(identity_map(6)).graph, 4),
            ("C(C3, const)", cycle_functigraph(constant_map(3, 0)).graph, 1),
        ]
        ok = True
        for name, graph, expected in cases:
            try:
                got = domination_number(graph)
            except Exception as e:
                got = f"error: {e}"
            passed = got == expected
            logger.info(f"{self.check_mark(passed)} gamma {name} = {got} (expected {expected})")
            if not passed:
                ok = False
                self.add_issue(f"Solver returned {got} for {name}")

        witness = identity_dominating_set(8)
        passed = witness.labels() == "{u1, u5, v3', v7'}"
        logger.info(f"{self.check_mark(passed)} identity set on C8: {witness.labels()}")
        if not passed:
            ok = False
            self.add_issue("Identity construction changed")
        return ok

    def check_log_directory(self):
        logger.info("=== Log Directory Check ===")
        from functidom import config

        target = config.LOG_DIR
        probe_dir = target if target.exists() else Path(tempfile.gettempdir())
        writable = os.access(probe_dir, os.W_OK)
        logger.info(f"{self.check_mark(writable)} {target} writable")
        if not writable:
            self.add_issue(f"Log directory not writable: {target}")
        return writable

    def run_full_health_check(self):
        logger.info("=== FUNCTIDOM HEALTH CHECK START ===")
        start_time = datetime.now()

        if self.check_packages():
            self.check_environment()
            self.check_solver()
            self.check_log_directory()

        duration = (datetime.now() - start_time).total_seconds()
        logger.info("=" * 50)
        logger.info("HEALTH CHECK SUMMARY")
        logger.info("=" * 50)
        logger.info(f"Duration: {duration:.1f}s")
        logger.info(f"Checks Passed: {self.checks_passed}/{self.checks_total}")
        if self.issues:
            logger.info(f"Issues Found ({len(self.issues)}):")
            for i, issue in enumerate(self.issues, 1):
                logger.info(f"   {i}. {issue}")

        healthy = not self.issues
        logger.info(f"STATUS: {'HEALTHY' if healthy else 'BROKEN'}")
        return healthy


def main():
    checker = HealthChecker()
    healthy = checker.run_full_health_check()
    sys.exit(0 if healthy else 1)


if __name__ == "__main__":
    main()
