"""Tests for structured logging helpers."""

import logging

import pytest
import structlog
from structlog.testing import capture_logs

from src.realauto.logging import (
    LogContext,
    configure_structlog,
    generate_run_id,
    get_logger,
    get_run_id,
    log_execution_time,
)


class TestConfigure:
    """Processor setup."""

    def test_structlog_setup_keeps_root_handlers(self):
        """Only the CLI replaces stdlib handlers."""
        root = logging.getLogger()
        handler = logging.NullHandler()
        root.addHandler(handler)
        try:
            before = list(root.handlers)
            level = root.level
            configure_structlog()
            assert root.handlers == before
            assert root.level == level
        finally:
            root.removeHandler(handler)


class TestLogContext:
    """Run-scoped context."""

    def test_run_id_set_and_reset(self):
        """The run id and bound fields live only inside the block."""
        assert get_run_id() == ""
        with LogContext(run_id="run-1", command="build") as ctx:
            assert ctx.run_id == "run-1"
            assert get_run_id() == "run-1"
            assert structlog.contextvars.get_contextvars() == {"command": "build"}
        assert get_run_id() == ""
        assert structlog.contextvars.get_contextvars() == {}

    def test_generated_run_id(self):
        """Without an explicit id one is generated."""
        with LogContext() as ctx:
            assert ctx.run_id
            assert get_run_id() == ctx.run_id
        assert generate_run_id() != generate_run_id()


class TestLogExecutionTime:
    """Timing decorator."""

    def test_returns_result(self):
        """The wrapped value passes through."""

        @log_execution_time(get_logger("realauto.tests"))
        def double(x):
            return 2 * x

        with capture_logs() as logs:
            assert double(21) == 42
        assert any(entry["event"] == "Function executed" for entry in logs)

    def test_reraises_and_logs_failure(self):
        """Exceptions are logged once and re-raised unchanged."""

        @log_execution_time(get_logger("realauto.tests"))
        def boom():
            raise ValueError("bad input")

        with capture_logs() as logs, pytest.raises(ValueError, match="bad input"):
            boom()
        failures = [entry for entry in logs if entry["event"] == "Function failed"]
        assert len(failures) == 1
        assert failures[0]["function"] == "boom"
        assert failures[0]["error"] == "bad input"
