import argparse

from arraymorph.cli.base import BaseCommand, add_seed_arg
from arraymorph.core.constants import EXIT_OK
from arraymorph.core.errors import HidingRangeError
from arraymorph.core.hiding import f_eval, hide_constant, hiding_call, render_call


class HideCommand(BaseCommand):
    """Print one F call hiding a constant, and what it evaluates to."""

    name = "hide"
    help = "Show the F(...) call that hides a small constant"

    @classmethod
    def add_args(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("--value", type=int, required=True, help="Constant to hide, 0-4")
        parser.add_argument("--count", type=int, required=True, help="Chain depth, 1-13")
        parser.add_argument(
            "--base",
            type=int,
            default=None,
            help="Use this base instead of drawing one; it must evaluate to --value",
        )
        add_seed_arg(parser)

    def run(self) -> int:
        args = self.args
        if args.base is None:
            call = hide_constant(args.value, args.count, args.seed)
        else:
            call = hiding_call(args.base, args.count)
            if call.hidden != args.value:
                raise HidingRangeError(
                    f"base {args.base} evaluates to {call.hidden} at depth {args.count}, not {args.value}"
                )
        print(render_call(call))
        print(f"evaluates to {f_eval(call.base, call.count)}")
        return EXIT_OK
