"""Tests for parallel processing utilities."""

import threading
import time
from unittest.mock import Mock, patch

import pytest

from mirrordrag.parallel import MAX_WORKERS_LIMIT, _safe_process_item, clamp_workers, parallel_map, parallel_process


class TestParallelProcess:
    """Test cases for parallel_process function."""

    def test_parallel_process_empty_list(self) -> None:
        """Test parallel_process with empty list."""
        result = parallel_process([], lambda x, i, t: x)
        assert result == []

    def test_parallel_process_single_item(self) -> None:
        """Test parallel_process with single item."""
        result = parallel_process([0.5], lambda x, i, t: 2.0 * x)
        assert result == [(True, 1.0, None)]

    def test_parallel_process_multiple_items(self) -> None:
        """Test parallel_process passes index and total and keeps input order."""
        result = parallel_process(["a", "b", "c"], lambda item, index, total: f"{item}_{index}_{total}")
        assert [r[1] for r in result] == ["a_0_3", "b_1_3", "c_2_3"]
        assert all(success for success, _, _ in result)

    def test_parallel_process_with_exception(self) -> None:
        """Test parallel_process when processing function raises exception."""

        def process_func(item, index, total):
            if item == 2:
                raise ValueError("Test error")
            return item * 10

        result = parallel_process([1, 2, 3], process_func)
        assert result[0] == (True, 10, None)
        assert result[2] == (True, 30, None)
        assert result[1][0] is False
        assert result[1][1] is None
        assert isinstance(result[1][2], ValueError)

    def test_parallel_process_order_independent_of_completion(self) -> None:
        """Test that slow early items still come back first."""

        def process_func(item, index, total):
            time.sleep(0.02 * (total - index))
            return index

        result = parallel_process(list(range(5)), process_func, max_workers=5)
        assert [r[1] for r in result] == [0, 1, 2, 3, 4]

    def test_parallel_process_with_custom_logger(self) -> None:
        """Test parallel_process with custom logger."""
        mock_logger = Mock()
        parallel_process(["test"], lambda x, i, t: x, logger=mock_logger)
        mock_logger.debug.assert_called()

    def test_parallel_process_failure_logs_warning(self) -> None:
        """Test that a failed item is reported through the logger."""
        mock_logger = Mock()

        def failing(item, index, total):
            raise RuntimeError("boom")

        parallel_process(["x"], failing, logger=mock_logger)
        mock_logger.warning.assert_called_once()

    def test_parallel_process_worker_count_is_clamped(self) -> None:
        """Test that no more than MAX_WORKERS_LIMIT threads run at once."""
        active = 0
        peak = 0
        lock = threading.Lock()

        def process_func(item, index, total):
            nonlocal active, peak
            with lock:
                active += 1
                peak = max(peak, active)
            time.sleep(0.01)
            with lock:
                active -= 1
            return item

        parallel_process(list(range(40)), process_func, max_workers=100)
        assert peak <= MAX_WORKERS_LIMIT

    @patch("mirrordrag.parallel.concurrent.futures.ThreadPoolExecutor")
    @patch("mirrordrag.parallel.concurrent.futures.as_completed")
    def test_parallel_process_returns_results_in_input_order(self, mock_as_completed: Mock, mock_executor_class: Mock) -> None:
        """Test parallel_process normalizes output order to input index order."""
        futures = [Mock(), Mock(), Mock()]
        mock_as_completed.return_value = list(reversed(futures))

        def _submit(*args, **kwargs):
            return futures[args[3]]

        mock_executor = Mock()
        mock_executor.submit.side_effect = _submit
        mock_executor_class.return_value.__enter__.return_value = mock_executor
        mock_executor_class.return_value.__exit__.return_value = None
        for i, future in enumerate(futures):
            future.result.return_value = (True, f"result_{i}", None)

        result = parallel_process(["a", "b", "c"], lambda x, i, t: x)
        assert [item[1] for item in result] == ["result_0", "result_1", "result_2"]


class TestSafeProcessItem:
    """Test cases for _safe_process_item function."""

    def test_safe_process_item_success(self) -> None:
        """Test _safe_process_item with successful processing."""
        mock_logger = Mock()
        result = _safe_process_item(lambda x, i, t: f"result_{x}", "test", 0, 1, mock_logger)
        assert result == (True, "result_test", None)

    def test_safe_process_item_exception(self) -> None:
        """Test _safe_process_item when processing raises exception."""
        mock_logger = Mock()

        def failing_func(item, index, total):
            raise ValueError("Test error")

        success, value, exc = _safe_process_item(failing_func, "test", 0, 1, mock_logger)
        assert success is False
        assert value is None
        assert isinstance(exc, ValueError)
        assert str(exc) == "Test error"
        mock_logger.debug.assert_called_once()


class TestParallelMap:
    """Test cases for parallel_map."""

    def test_parallel_map_returns_plain_results(self) -> None:
        """Test that parallel_map unwraps the results in order."""
        assert parallel_map([1, 2, 3], lambda x, i, t: x * x, max_workers=2) == [1, 4, 9]

    def test_parallel_map_raises_first_failure_in_input_order(self) -> None:
        """Test that the earliest failing item's exception is raised."""

        def process_func(item, index, total):
            if index == 1:
                raise KeyError("first")
            if index == 3:
                raise ValueError("second")
            return item

        with pytest.raises(KeyError, match="first"):
            parallel_map(list(range(5)), process_func, max_workers=4)


class TestClampWorkers:
    """Test cases for clamp_workers."""

    @pytest.mark.parametrize(("requested", "expected"), [(0, 1), (-3, 1), (1, 1), (4, 4), (16, 16), (17, 16), (1000, 16)])
    def test_clamp_workers(self, requested: int, expected: int) -> None:
        """Test the [1, 16] worker range."""
        assert clamp_workers(requested) == expected
