import argparse
import os

from arraymorph.cli.base import BaseCommand, add_seed_arg, print_table
from arraymorph.core.constants import EXIT_OK, VERIFY_OPS_PER_CASE, VERIFY_SIZE_LIMIT
from arraymorph.core.properties import VerifyConfig, run_suites


class VerifyCommand(BaseCommand):
    name = "verify"
    help = "Run the layout, hiding and store self-check suites"

    @classmethod
    def add_args(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument(
            "--size-limit",
            dest="size_limit",
            type=int,
            default=VERIFY_SIZE_LIMIT,
            help=f"Largest exhaustively checked size (default: {VERIFY_SIZE_LIMIT})",
        )
        parser.add_argument(
            "--ops",
            type=int,
            default=VERIFY_OPS_PER_CASE,
            help=f"Random set/get operations per store case (default: {VERIFY_OPS_PER_CASE})",
        )
        parser.add_argument(
            "--jobs",
            type=int,
            default=int(os.getenv("ARRAYMORPH_JOBS", os.cpu_count() or 1)),
            help="Worker processes for the store cases (env: ARRAYMORPH_JOBS, default: CPU count)",
        )
        add_seed_arg(parser)

    def run(self) -> int:
        config = VerifyConfig(
            size_limit=self.args.size_limit,
            ops_per_case=self.args.ops,
            seed=self.args.seed,
            jobs=self.args.jobs,
        )
        results = run_suites(config)
        print_table(
            f"Verification passed (seed {config.seed})",
            [[r.name, r.cases, "pass"] for r in results],
            ["Suite", "Cases", "Result"],
        )
        return EXIT_OK
