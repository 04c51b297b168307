"""Run an emitted program through an external ASP solver."""

from __future__ import annotations

import os
import subprocess
import tempfile
from dataclasses import dataclass
from typing import List, Optional

from .errors import AnswerSetFormatError, ExternalSolverError
from .emitter import parse_answer_sets

FILE_TOKEN = "{file}"


@dataclass
class Transcript:
    command: List[str]
    returncode: Optional[int]
    stdout: str
    stderr: str


def run_external(program_text, command, dialect="dlv", timeout=60.0, transcript_out=None):
    """Solve ``program_text`` with ``command`` and parse its answer sets.

    The program goes to standard input unless an argument contains ``{file}``,
    in which case it is written to a temporary file whose path replaces the
    token.  Pass a list as ``transcript_out`` to receive the raw
    :class:`Transcript`.
    """
    if not command:
        raise ExternalSolverError("launch", "empty solver command")
    use_file = any(FILE_TOKEN in arg for arg in command)
    path = None
    try:
        if use_file:
            fd, path = tempfile.mkstemp(suffix=".lp", text=True)
            with os.fdopen(fd, "w") as fh:
                fh.write(program_text)
            argv = [arg.replace(FILE_TOKEN, path) for arg in command]
            stdin = None
        else:
            argv = list(command)
            stdin = program_text
        try:
            proc = subprocess.run(argv, input=stdin, capture_output=True, text=True, timeout=timeout)
        except FileNotFoundError as e:
            raise ExternalSolverError("launch", f"cannot execute {argv[0]}: {e}") from None
        except PermissionError as e:
            raise ExternalSolverError("launch", f"cannot execute {argv[0]}: {e}") from None
        except subprocess.TimeoutExpired as e:
            t = Transcript(argv, None, _text(e.stdout), _text(e.stderr))
            raise ExternalSolverError("timeout", f"no result after {timeout}s", t) from None
    finally:
        if path is not None:
            os.unlink(path)

    t = Transcript(argv, proc.returncode, proc.stdout, proc.stderr)
    if transcript_out is not None:
        transcript_out.append(t)
    try:
        sets = parse_answer_sets(proc.stdout, dialect)
    except AnswerSetFormatError as e:
        err = ExternalSolverError("format", str(e), t)
        err.line = e.line
        raise err from e
    # clingo-style solvers exit nonzero on success, so only fail without output
    if proc.returncode != 0 and not sets:
        raise ExternalSolverError("exit", f"{argv[0]} exited with status {proc.returncode}", t)
    return sets


def _text(b):
    if b is None:
        return ""
    return b.decode(errors="replace") if isinstance(b, bytes) else b
