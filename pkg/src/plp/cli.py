"""``plpc``: parse, ground, flatten, compile, then emit or solve."""

from __future__ import annotations

import argparse
import shlex
import sys

from . import compiler, emitter, external, grounder, parser, solver
from .errors import CompileError, EmitError, GroundingError, ProgramError, SolverError, SourceError


def build_parser():
    ap = argparse.ArgumentParser(
        prog="plpc",
        description="Compile ordered logic programs into regular extended logic programs.",
    )
    ap.add_argument("input", help="program file, or - for standard input")
    ap.add_argument("--emit", choices=emitter.DIALECTS, default="dlv", help="output dialect (default dlv)")
    ap.add_argument("--ground-only", action="store_true", help="stop after grounding and name flattening")
    ap.add_argument("--solve", choices=("internal", "external"), help="print answer sets instead of the program")
    ap.add_argument("--external-cmd", metavar="CMD", help="external solver command; {file} is replaced by a temp file path")
    ap.add_argument("--external-dialect", choices=("dlv", "smodels"), default="dlv", help="output format of the external solver")
    ap.add_argument("--timeout", type=float, default=60.0, help="external solver timeout in seconds")
    ap.add_argument("--nice", action="store_true", help="hide control atoms in answer sets")
    ap.add_argument("--no-coherence", action="store_true", help="omit ':- q, neg_q.' constraints")
    ap.add_argument("--emit-neg-prec", action="store_true", help="derive neg_prec atoms")
    ap.add_argument("--verbose", action="store_true", help="print every intermediate program")
    ap.add_argument("--budget", type=int, default=solver.DEFAULT_BUDGET, help="internal solver candidate cap")
    return ap


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _stage(out, name, text):
    out.write(f"%% stage: {name}\n")
    out.write(text)


def run(args, out=None):
    out = out or sys.stdout
    program = parser.parse_program(_read(args.input))
    ground = grounder.ground_program(program)
    if args.verbose:
        _stage(out, "ground", emitter.emit(ground, "core"))
    flat = grounder.flatten_names(ground)
    if args.verbose:
        _stage(out, "flatten", emitter.emit(flat, "core"))
    if args.ground_only:
        if not args.verbose:
            out.write(emitter.emit(flat, args.emit))
        return 0

    compiled = compiler.compile(flat, coherence=not args.no_coherence, emit_neg_prec=args.emit_neg_prec)
    text = emitter.emit(compiled, args.emit)
    if args.verbose:
        _stage(out, "compile", text)
    if not args.solve:
        if not args.verbose:
            out.write(text)
        return 0

    if args.solve == "internal":
        sets = solver.answer_sets(compiled, budget=args.budget)
    else:
        if not args.external_cmd:
            raise SolverError("--solve external needs --external-cmd")
        asp_text = emitter.emit(compiled, "dlv")
        sets = external.run_external(asp_text, shlex.split(args.external_cmd), args.external_dialect, args.timeout)
    if args.nice:
        sets = [emitter.filter_nice(x) for x in sets]
    if args.verbose:
        out.write("%% stage: solve\n")
    out.write(emitter.render_answer_sets(sets))
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except SourceError as e:
        print(f"plpc: {args.input}:{e}", file=sys.stderr)
        return 1
    except ( ProgramError, GroundingError, CompileError, EmitError) as e:
        print(f"plpc: error: {e}", file=sys.stderr)
        return 1
    except SolverError as e:
        print(f"plpc: solver error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        # e.g. an inconsistent answer set under --no-coherence --nice
        print(f"plpc: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"plpc: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
