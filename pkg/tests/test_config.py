"""
Tests for environment-driven configuration and logging setup.
"""

import logging
import os
import tempfile
import unittest
from pathlib import Path
from unittest.mock import patch

from functidom import config
from functidom.errors import ConfigurationError


class TestBudgetEnvironment(unittest.TestCase):

    def test_defaults(self):
        with patch.dict(os.environ, {}, clear=True):
            self.assertEqual(config.budget_node_limit(), config.DEFAULT_NODE_LIMIT)
            self.assertEqual(config.budget_max_vertices(), config.DEFAULT_MAX_VERTICES)

    def test_overrides(self):
        env = {config.ENV_BUDGET_NODES: "500", config.ENV_BUDGET_VERTICES: "40"}
        with patch.dict(os.environ, env):
            self.assertEqual(config.budget_node_limit(), 500)
            self.assertEqual(config.budget_max_vertices(), 40)

    def test_blank_value_falls_back(self):
        with patch.dict(os.environ, {config.ENV_BUDGET_NODES: "  "}):
            self.assertEqual(config.budget_node_limit(), config.DEFAULT_NODE_LIMIT)

    def test_invalid_values(self):
        for raw in ("ten", "0", "-4"):
            with self.subTest(raw=raw):
                with patch.dict(os.environ, {config.ENV_BUDGET_NODES: raw}):
                    with self.assertRaises(ConfigurationError):
                        config.budget_node_limit()


class TestWorkerCount(unittest.TestCase):

    def test_explicit_request_wins(self):
        with patch.dict(os.environ, {config.ENV_WORKERS: "7"}):
            self.assertEqual(config.worker_count(3), 3)

    def test_environment(self):
        with patch.dict(os.environ, {config.ENV_WORKERS: "2"}):
            self.assertEqual(config.worker_count(), 2)

    def test_physical_cores(self):
        with patch.dict(os.environ, {}, clear=True), patch("functidom.config.psutil.cpu_count", return_value=None):
            self.assertEqual(config.worker_count(), 1)

    def test_rejects_non_positive(self):
        with self.assertRaises(ConfigurationError):
            config.worker_count(0)


class TestLogging(unittest.TestCase):

    def tearDown(self):
        root = logging.getLogger()
        for handler in list(root.handlers):
            handler.close()
            root.removeHandler(handler)

    def test_creates_log_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            log_file = config.setup_logging(logging.WARNING, Path(tmp) / "logs")
            logging.getLogger("functidom.test").debug("probe message")
            for handler in logging.getLogger().handlers:
                handler.flush()
            self.assertEqual(log_file.name, config.LOG_FILE_NAME)
            self.assertIn("probe message", log_file.read_text(encoding="utf-8"))

    def test_no_duplicate_handlers(self):
        with tempfile.TemporaryDirectory() as tmp:
            config.setup_logging(log_dir=Path(tmp))
            config.setup_logging(log_dir=Path(tmp))
            self.assertEqual(len(logging.getLogger().handlers), 2)


if __name__ == "__main__":
    unittest.main()
