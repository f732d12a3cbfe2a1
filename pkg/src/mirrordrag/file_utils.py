"""File and formatting utilities for mirror-drag outputs."""

import json
import logging
import os
from collections.abc import Iterable, Sequence
from typing import Any

import filelock

from .exceptions import MirrorDragError

CSV_COLUMNS = ("beta", "gamma", "f_hat", "p_parallel_hat", "ratio", "f_kin_hat", "f_si_pa")
TRAJECTORY_COLUMNS = ("tau", "t_seconds", "beta", "gamma")


class FileOperationResult:
    """Result of a file operation."""

    def __init__(self, success: bool, message: str, file_path: str, content_length: int | None = None) -> None:
        """Initialize the file operation result.

        Args:
            success: Whether the operation was successful
            message: Message describing the result
            file_path: Path to the file that was operated on
            content_length: Number of characters written if applicable

        """
        self.success = success
        self.message = message
        self.file_path = file_path
        self.content_length = content_length

    def __str__(self) -> str:
        """Return a string representation of the result."""
        return f"{self.message} - {self.file_path}"


def format_number(value: float | int | None) -> str:
    """Format a number as the shortest decimal that parses back to the same binary value.

    None becomes an empty field.
    """
    if value is None:
        return ""
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return repr(float(value))


def render_csv(columns: Sequence[str], rows: Iterable[Sequence[float | int | None]]) -> str:
    """Render a numeric table as CSV: header row, comma separator, LF line endings, no quoting."""
    lines = [",".join(columns)]
    for row in rows:
        if len(row) != len(columns):
            raise ValueError(f"Row has {len(row)} fields, expected {len(columns)}")
        lines.append(",".join(format_number(value) for value in row))
    return "\n".join(lines) + "\n"


def render_json(data: dict[str, Any]) -> str:
    """Render a report as indented JSON; floats keep their shortest round-trip form."""
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def ensure_directory_exists(path: str, logger: logging.Logger) -> bool:
    """Create directory if it doesn't exist.

    Args:
        path: Directory path to create
        logger: Logger instance for logging messages

    Returns:
        True if directory exists or was created, False otherwise

    """
    try:
        os.makedirs(path, exist_ok=True)
        return True
    except OSError as e:
        logger.error("Couldn't create directory %s: %s", path, e)
        return False


def safe_write_text(file_path: str, text: str, logger: logging.Logger) -> FileOperationResult:
    """Write UTF-8 text with file locking to prevent corruption.

    Args:
        file_path: Destination path
        text: Content to write
        logger: Logger instance for logging messages

    Returns:
        FileOperationResult with operation result

    """
    directory = os.path.dirname(os.path.abspath(file_path))
    if not ensure_directory_exists(directory, logger):
        return FileOperationResult(success=False, message="Failed to create output directory", file_path=file_path)

    lock_path = f"{file_path}.lock"
    lock = filelock.FileLock(lock_path)

    try:
        with lock:
            with open(file_path, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        return FileOperationResult(success=True, message="Successfully wrote output", file_path=file_path, content_length=len(text))
    except (OSError, filelock.Timeout) as e:
        logger.error("Failed to write output to %s: %s", file_path, e)
        return FileOperationResult(success=False, message=f"Failed to write output: {str(e)}", file_path=file_path)
    finally:
        if os.path.exists(lock_path):
            try:
                os.remove(lock_path)
            except OSError:
                pass


def write_or_raise(file_path: str, text: str, logger: logging.Logger) -> FileOperationResult:
    """Write text like safe_write_text, raising MirrorDragError when the write fails."""
    result = safe_write_text(file_path, text, logger)
    if not result.success:
        raise MirrorDragError(str(result))
    logger.info("Wrote %s characters to %s", result.content_length, file_path)
    return result
