import argparse
from pathlib import Path

from arraymorph.cli.base import BaseCommand, file_size, read_text
from arraymorph.core.constants import EXIT_OK, POTENCY_WEIGHT, RUNTIME_WEIGHT, STORAGE_WEIGHT
from arraymorph.core.hiding import find_calls, hiding_helper
from arraymorph.core.java import count_statements
from arraymorph.core.logger import get_logger
from arraymorph.core.metrics import MetricsInput, build_report

logger = get_logger(__name__)


class MetricsCommand(BaseCommand):
    """
    Score an obfuscated program against its original.

    The obfuscated LOC charges the source, the class bodies and one helper
    expansion per distinct F call. Any measured input can be overridden,
    which is how published score tables are reproduced.
    """

    name = "metrics"
    help = "Compute potency, cost and quality scores"

    @classmethod
    def add_args(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("--orig", required=True, help="Original Java source")
        parser.add_argument("--obf", required=True, help="Obfuscated Java source")
        parser.add_argument(
            "--class",
            dest="class_files",
            action="append",
            default=[],
            metavar="FILE",
            help="Generated class file used by the obfuscated source (repeatable)",
        )
        parser.add_argument("--t-orig", dest="t_orig", type=float, default=None, metavar="MS")
        parser.add_argument("--t-obf", dest="t_obf", type=float, default=None, metavar="MS")
        parser.add_argument(
            "--x", type=float, default=POTENCY_WEIGHT, help=f"Potency weight (default: {POTENCY_WEIGHT})"
        )
        parser.add_argument("--y2", type=float, default=STORAGE_WEIGHT, help="Storage weight of the cost")
        parser.add_argument("--z2", type=float, default=RUNTIME_WEIGHT, help="Runtime weight of the cost")
        parser.add_argument("--loc-orig", dest="loc_orig", type=int, default=None, metavar="N")
        parser.add_argument("--loc-obf", dest="loc_obf", type=int, default=None, metavar="N")
        parser.add_argument("--size-orig", dest="size_orig", type=int, default=None, metavar="BYTES")
        parser.add_argument("--size-obf", dest="size_obf", type=int, default=None, metavar="BYTES")
        parser.add_argument(
            "--stmts-per-call",
            dest="stmts_per_call",
            type=int,
            default=None,
            metavar="N",
            help="Statements charged per distinct F call (default: statements of the F helper)",
        )

    def _measured_input(self, orig_text: str, obf_text: str, class_texts: list[str]) -> MetricsInput:
        args = self.args
        helper = hiding_helper()
        loc_orig = args.loc_orig if args.loc_orig is not None else count_statements(orig_text)
        size_orig = args.size_orig if args.size_orig is not None else file_size(Path(args.orig))
        size_obf = args.size_obf if args.size_obf is not None else file_size(Path(args.obf))
        weights = dict(
            size_orig=size_orig,
            size_obf=size_obf,
            t_orig=args.t_orig,
            t_obf=args.t_obf,
            x_weight=args.x,
            y2=args.y2,
            z2=args.z2,
        )
        if args.loc_obf is not None:
            return MetricsInput(loc_orig=loc_orig, loc_obf=args.loc_obf, **weights)

        distinct_calls = {call for text in [obf_text, *class_texts] for call in find_calls(text)}
        # The helper is charged per call, not as part of the class body
        class_stmts = sum(
            count_statements(text.replace(helper.source_text, "")) for text in class_texts
        )
        stmts_per_call = (
            args.stmts_per_call if args.stmts_per_call is not None else helper.statement_count
        )
        logger.info(
            f"LOC of {args.obf}: {count_statements(obf_text)} source, {class_stmts} class, "
            f"{len(distinct_calls)} distinct call(s) x {stmts_per_call}"
        )
        return MetricsInput.from_components(
            loc_orig=loc_orig,
            source_stmts=count_statements(obf_text),
            class_stmts=class_stmts,
            distinct_call_count=len(distinct_calls),
            stmts_per_call=stmts_per_call,
            **weights,
        )

    def run(self) -> int:
        orig_text = read_text(Path(self.args.orig))
        obf_text = read_text(Path(self.args.obf))
        class_texts = [read_text(Path(p)) for p in self.args.class_files]

        report = build_report(self._measured_input(orig_text, obf_text, class_texts))
        print(report.render(), end="")
        return EXIT_OK
