"""Command-line interface: solve, moves, verify, explore, play, and serve."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .classifiers import resolve_classifier
from .ring import (
    BudgetExceededError,
    EnumerationScope,
    GameError,
    InvalidMoveError,
    InvalidPositionError,
    Move,
    Position,
    Rules,
    Variant,
    apply_move,
    canonicalize,
    format_position,
    is_terminal,
    parse_position,
    validate_position,
    window_width,
)
from .solver import (
    DEFAULT_SOLVE_BUDGET,
    SolveCache,
    Status,
    best_move,
    status,
    winning_moves,
)
from .verifier import explore_conjecture_64, explore_generic, parse_game, verify

ENV_MAX_SUM = "RINGNIM_MAX_SUM"


def _resolve_budget(value: Optional[int]) -> int:
    """Explicit flag wins, then the environment override, then the default."""
    if value is not None:
        return value
    raw = os.environ.get(ENV_MAX_SUM)
    if raw is None:
        return DEFAULT_SOLVE_BUDGET
    try:
        budget = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_SUM} must be an integer, got {raw!r}") from None
    if budget < 0:
        raise ValueError(f"{ENV_MAX_SUM} must be >= 0, got {budget}")
    return budget


def _dump(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _show(pos: Position) -> str:
    return f"({format_position(pos)})"


def _move_line(move: Move, result: Position) -> str:
    removals = ",".join(str(r) for r in move.removals)
    return f"window {move.window_start} removals {removals} -> {_show(result)}"


def _move_dict(move: Move, result: Position) -> dict:
    return {
        "window_start": move.window_start,
        "removals": list(move.removals),
        "result": list(result),
    }


def _rules_from(args: argparse.Namespace) -> Rules:
    return Rules(Variant(args.variant), args.k)


def _position_from(args: argparse.Namespace, rules: Rules) -> Position:
    pos = parse_position(args.piles)
    validate_position(rules, pos)
    if rules.variant is Variant.STATIC and len(pos) < rules.k:
        # Static rings never change length, so a window wider than the ring
        # can only be a mistyped game.  Shrinking rings reach m < k naturally.
        raise InvalidPositionError(
            f"static ring of {len(pos)} piles cannot host a window of {rules.k}"
        )
    return pos


def _cmd_solve(args: argparse.Namespace) -> int:
    rules = _rules_from(args)
    pos = _position_from(args, rules)
    budget = _resolve_budget(args.max_total_stones)
    cache = SolveCache()
    st = status(rules, pos, cache, max_total=budget)
    best: Optional[tuple[Move, Position]] = None
    if st is Status.N:
        move = best_move(rules, pos, cache, max_total=budget)
        best = (move, apply_move(rules, pos, move))
    if args.format == "json":
        payload = {
            "piles": list(pos),
            "canonical": list(canonicalize(pos)),
            "status": st.value,
            "best_move": None if best is None else _move_dict(*best),
        }
        _emit(_dump(payload), args.out)
    else:
        lines = [st.value]
        if best is not None:
            lines.append(_move_line(*best))
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_moves(args: argparse.Namespace) -> int:
    rules = _rules_from(args)
    pos = _position_from(args, rules)
    budget = _resolve_budget(args.max_total_stones)
    wins = winning_moves(rules, pos, max_total=budget)
    if args.format == "json":
        payload = {
            "piles": list(pos),
            "canonical": list(canonicalize(pos)),
            "status": "N" if wins else "P",
            "winning_moves": [_move_dict(move, succ) for move, succ in wins],
        }
        _emit(_dump(payload), args.out)
    else:
        lines = ["N" if wins else "P"]
        lines.extend(_move_line(move, succ) for move, succ in wins)
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {args.jobs}")
    classifier = resolve_classifier(args.classifier)
    lo = args.pile_min if args.pile_min is not None else classifier.pile_count_min
    hi = args.pile_max if args.pile_max is not None else classifier.pile_count_max
    scope = EnumerationScope(lo, hi, args.sum_max)
    report = verify(classifier, scope, jobs=args.jobs)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    else:
        lines = [
            f"classifier {report.classifier}",
            f"scope piles {lo}..{hi} sum <= {args.sum_max}",
            f"positions checked: {report.positions_checked}",
            f"mismatches: {len(report.mismatches)}",
        ]
        for mm in report.mismatches:
            claimed = "P" if mm.classifier else "N"
            lines.append(
                f"  {_show(mm.position)}: oracle {mm.oracle.value},"
                f" classifier {claimed}"
            )
        _emit("\n".join(lines), args.out)
    return 0 if report.ok else 1


def _cmd_explore(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {args.jobs}")
    rules, pile_bound = parse_game(args.game)
    if rules.variant is Variant.SHRINKING:
        default_lo = 0
    else:
        default_lo = pile_bound
    lo = args.pile_min if args.pile_min is not None else default_lo
    hi = args.pile_max if args.pile_max is not None else pile_bound
    scope = EnumerationScope(lo, hi, args.sum_max)
    if args.game == "scn:6,4":
        report = explore_conjecture_64(scope, jobs=args.jobs)
        if args.format == "json":
            _emit(report.to_json(), args.out)
        else:
            lines = [
                f"game {report.game}",
                f"P positions: {len(report.p_positions)}",
                "categories: "
                + ", ".join(f"{k}={v}" for k, v in sorted(report.categories.items())),
                f"uniqueness violations: {len(report.uniqueness_violations)}",
            ]
            lines.extend(f"  unclassified {_show(p)}" for p in report.unclassified)
            _emit("\n".join(lines), args.out)
        return 0
    p_positions = explore_generic(rules, scope, jobs=args.jobs)
    if args.format == "json":
        payload = {
            "game": args.game,
            "scope": {"pile_min": lo, "pile_max": hi, "sum_max": args.sum_max},
            "p_positions": [list(p) for p in p_positions],
        }
        _emit(_dump(payload), args.out)
    else:
        lines = [f"game {args.game}", f"P positions: {len(p_positions)}"]
        lines.extend(f"  {_show(p)}" for p in p_positions)
        _emit("\n".join(lines), args.out)
    return 0


def _print_board(pos: Position) -> None:
    if not pos:
        print("piles: (empty)")
    else:
        print("piles: " + "  ".join(f"[{i}] {v}" for i, v in enumerate(pos)))


def _prompt_move(rules: Rules, pos: Position) -> Optional[Move]:
    """Read a move from stdin, re-prompting until it is legal; None quits."""
    width = window_width(rules, len(pos))
    hint = f"window start 0..{len(pos) - 1}, width {width}"
    while True:
        try:
            raw = input(f"your move ({hint}), start index or q: ").strip()
        except EOFError:
            return None
        if raw.lower() in {"q", "quit"}:
            return None
        try:
            start = int(raw)
        except ValueError:
            print("enter a pile index, like 0")
            continue
        try:
            raw = input(f"removals, {width} comma separated amounts: ").strip()
        except EOFError:
            return None
        try:
            removals = tuple(int(part) for part in raw.split(","))
        except ValueError:
            print("enter amounts like 1,0,2")
            continue
        move = Move(start, removals)
        try:
            apply_move(rules, pos, move)
        except InvalidMoveError as exc:
            print(f"illegal move ({exc.reason}): {exc}")
            continue
        return move


def _cmd_play(args: argparse.Namespace) -> int:
    rules = _rules_from(args)
    pos = _position_from(args, rules)
    budget = _resolve_budget(args.max_total_stones)
    cache = SolveCache()
    opening = status(rules, pos, cache, max_total=budget)
    print(f"you move first from a {opening.value} position", end="")
    print(" (the engine wins under perfect play)" if opening is Status.P else "")
    while True:
        _print_board(pos)
        if is_terminal(rules, pos):
            print("you have no move: the engine wins")
            return 0
        move = _prompt_move(rules, pos)
        if move is None:
            print("goodbye")
            return 0
        pos = apply_move(rules, pos, move)
        print(f"you played {_move_line(move, pos)}")
        if is_terminal(rules, pos):
            print("you took the last stone: you win")
            return 0
        reply = best_move(rules, pos, cache, max_total=budget)
        pos = apply_move(rules, pos, reply)
        print(f"engine plays {_move_line(reply, pos)}")
        if is_terminal(rules, pos):
            print("the engine took the last stone: the engine wins")
            return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(max_total=_resolve_budget(args.max_total_stones))
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringnim",
        description="Solve, verify, and play circular take-away games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_position(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--variant",
            choices=[v.value for v in Variant],
            required=True,
            help="cn keeps empty piles in place, scn closes the ring",
        )
        p.add_argument("-k", type=int, required=True, help="window width")
        p.add_argument("--piles", required=True, help='comma list, e.g. "5,3,1,6,4"')

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--out", default=None, help="write output to a file")

    def add_budget(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--max-total-stones",
            type=int,
            default=None,
            help=f"solve budget (default {DEFAULT_SOLVE_BUDGET}, env {ENV_MAX_SUM})",
        )

    def add_scope(p: argparse.ArgumentParser) -> None:
        p.add_argument("--sum-max", type=int, required=True)
        p.add_argument("--pile-min", type=int, default=None)
        p.add_argument("--pile-max", type=int, default=None)
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("solve", help="status of one position plus a best move")
    add_position(p), add_output(p), add_budget(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("moves", help="every winning move from one position")
    add_position(p), add_output(p), add_budget(p)
    p.set_defaults(func=_cmd_moves)

    p = sub.add_parser("verify", help="sweep a classifier against the solver")
    p.add_argument("--classifier", required=True, help='id such as "scn:4,2"')
    add_scope(p), add_output(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("explore", help="list P positions of a game in a scope")
    p.add_argument("--game", required=True, help='id such as "scn:6,4"')
    add_scope(p), add_output(p)
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("play", help="play against the engine in the terminal")
    add_position(p), add_budget(p)
    p.set_defaults(func=_cmd_play)

    p = sub.add_parser("serve", help="run the JSON HTTP service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    add_budget(p)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GameError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
