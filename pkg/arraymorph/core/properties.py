"""
Self-check suites run by ``arraymorph verify``.

Each suite walks its cases in ascending size, so the first counterexample
reported is also the smallest one found. A failing suite raises
``InvariantViolation``; a passing one returns how many cases it checked.
All randomness comes from generators seeded with the run seed.
"""

import random
import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, NoReturn, Optional

import numpy as np

from arraymorph.core.codegen.config import ObfConfig
from arraymorph.core.codegen.emitter import emit_full
from arraymorph.core.constants import (
    DEFAULT_SEED,
    HIDEABLE_LIMIT,
    MAX_HIDE_COUNT,
    MIN_HIDE_COUNT,
    VERIFY_OPS_PER_CASE,
    VERIFY_SIZE_LIMIT,
)
from arraymorph.core.errors import InvalidMapError, InvariantViolation
from arraymorph.core.hiding import chain, hiding_helper
from arraymorph.core.kinds import ElementKind, RestructureOp, Value
from arraymorph.core.layout import affine, maps
from arraymorph.core.layout.affine import AffineMap
from arraymorph.core.layout.maps import Dim2, Half
from arraymorph.core.logger import get_logger
from arraymorph.core.store import Store
from arraymorph.core.store.base_store import INT_MAX, INT_MIN

logger = get_logger(__name__)

# Split size checked on top of the regular range
LARGE_SPLIT_SIZE = 100_000
# Largest rows*cols of the sampled fold/flatten shapes
MAX_SAMPLED_CELLS = 100_000
SAMPLED_SHAPES = 50
MERGE_LIMIT = 40
RANDOM_AFFINE_MAPS = 50
HIDE_SEEDS = 100
# Largest size the store oracle replays random scripts on
ORACLE_SIZE_LIMIT = 257
# Distinct strings a Text oracle case draws its values from
TEXT_POOL_SIZE = 64
ORACLE_CHUNK_SIZE = 16


@dataclass(frozen=True)
class VerifyConfig:
    size_limit: int = VERIFY_SIZE_LIMIT
    ops_per_case: int = VERIFY_OPS_PER_CASE
    seed: int = DEFAULT_SEED
    jobs: int = 1

    def __post_init__(self):
        if self.size_limit < 1 or self.ops_per_case < 0:
            raise ValueError(
                f"size_limit must be at least 1 and ops non-negative, got {self.size_limit} and {self.ops_per_case}"
            )
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")

    def rng(self, suite: str) -> random.Random:
        return random.Random(f"{self.seed}/{suite}")


@dataclass(frozen=True)
class SuiteResult:
    name: str
    cases: int


def _fail(suite: str, message: str) -> NoReturn:
    logger.error(f"Suite {suite} failed: {message}")
    raise InvariantViolation(suite, message)


def check_split_bijection(config: VerifyConfig) -> int:
    """split_locate hits every sub-array slot exactly once for each size."""
    suite = "split_bijection"
    for size in range(1, config.size_limit + 1):
        first_len, second_len = maps.split_sizes(size)
        seen = set()
        for pos in range(size):
            location = maps.split_locate(pos, size)
            bound = first_len if location.half is Half.FIRST else second_len
            slot = (location.half, location.offset)
            if not 0 <= location.offset < bound or slot in seen:
                _fail(suite, f"size={size} pos={pos} -> {location}")
            seen.add(slot)
        if len(seen) != first_len + second_len:
            _fail(suite, f"size={size} covers {len(seen)} of {first_len + second_len} slots")
    return config.size_limit


def _shapes(config: VerifyConfig) -> list[Dim2]:
    shapes = [
        Dim2(rows, cols)
        for rows in range(1, config.size_limit + 1)
        for cols in range(1, config.size_limit // rows + 1)
    ]
    rng = config.rng("shapes")
    for _ in range(SAMPLED_SHAPES):
        rows = rng.randint(1, MAX_SAMPLED_CELLS)
        shapes.append(Dim2(rows, rng.randint(1, MAX_SAMPLED_CELLS // rows)))
    return sorted(set(shapes), key=lambda d: (d.cells, d.rows))


def check_fold_flatten_inverse(config: VerifyConfig) -> int:
    """
    fold_locate and flatten_locate undo each other.

    Shapes with at most ``size_limit`` cells are checked on every position;
    the sampled large shapes on ``ops_per_case`` random positions.
    """
    suite = "fold_flatten_inverse"
    rng = config.rng(suite)
    shapes = _shapes(config)
    for dims in shapes:
        if dims.cells <= config.size_limit:
            positions = range(dims.cells)
        else:
            positions = sorted(rng.randrange(dims.cells) for _ in range(config.ops_per_case))
        for pos in positions:
            row, col = maps.fold_locate(pos, dims)
            if maps.flatten_locate(row, col, dims) != pos:
                _fail(suite, f"dims={dims.rows}x{dims.cols} pos={pos} -> ({row}, {col})")
    return len(shapes)


def check_merge_bijection(config: VerifyConfig) -> int:
    """merge_locate reaches every element of both inputs exactly once."""
    suite = "merge_bijection"
    cases = 0
    for len_a in range(MERGE_LIMIT + 1):
        for len_b in range(MERGE_LIMIT + 1):
            merged = maps.merge_sizes(len_a, len_b)
            hits = {maps.merge_locate(pos, len_a, len_b) for pos in range(merged)}
            expected = {(maps.MergeSource.A, i) for i in range(len_a)} | {
                (maps.MergeSource.B, i) for i in range(len_b)
            }
            if hits != expected:
                _fail(suite, f"len_a={len_a} len_b={len_b} misses {sorted(expected - hits, key=str)}")
            cases += 1
    return cases


def _check_permutation(suite: str, amap: AffineMap) -> None:
    images = {affine.affine_index(i, amap) for i in range(amap.n)}
    if len(images) != amap.n:
        _fail(suite, f"{amap} is not a permutation")
    inverse = affine.affine_inverse(amap)
    for i in range(amap.n):
        if affine.affine_index(affine.affine_index(i, amap), inverse) != i:
            _fail(suite, f"inverse {inverse} of {amap} does not undo i={i}")


def check_affine_maps(config: VerifyConfig) -> int:
    """The k=3 map on 100 elements permutes, k=2 is rejected, inverses compose."""
    suite = "affine_maps"
    _check_permutation(suite, AffineMap(3, 0, 100))

    rejected = AffineMap(2, 0, 100)
    if affine.affine_valid(rejected):
        _fail(suite, f"{rejected} accepted as a permutation")
    try:
        affine.affine_inverse(rejected)
    except InvalidMapError:
        pass
    else:
        _fail(suite, f"{rejected} was given an inverse")

    rng = config.rng(suite)
    maps_checked = []
    while len(maps_checked) < RANDOM_AFFINE_MAPS:
        n = rng.randint(1, config.size_limit)
        amap = AffineMap(rng.randint(1, 4 * n), rng.randrange(n), n)
        if affine.affine_valid(amap):
            maps_checked.append(amap)
    for amap in sorted(maps_checked, key=lambda m: (m.n, m.k, m.b)):
        _check_permutation(suite, amap)
    return len(maps_checked) + 2


def check_hide_round_trip(config: VerifyConfig) -> int:
    """Every generated call evaluates to its constant and parses back to its base."""
    suite = "hide_round_trip"
    rng = config.rng(suite)
    seeds = [rng.getrandbits(32) for _ in range(HIDE_SEEDS)]
    cases = 0
    for count in range(MIN_HIDE_COUNT, MAX_HIDE_COUNT + 1):
        for constant in range(HIDEABLE_LIMIT):
            for seed in seeds:
                call = chain.hide_constant(constant, count, seed)
                if chain.f_eval(call.base, count) != constant:
                    _fail(suite, f"hide_constant({constant}, {count}, {seed}) -> base {call.base}")
                rendered = chain.render_call(call)
                if chain.parse_call(rendered) != (call.base, count):
                    _fail(suite, f"{rendered} parses to {chain.parse_call(rendered)}")
                cases += 1
    return cases


def check_emitted_hiding(config: VerifyConfig) -> int:
    """Hidden classes become the plain ones once each call is replaced by its value."""
    suite = "emitted_hiding"
    plain_config = ObfConfig(seed=config.seed)
    hidden_config = ObfConfig(hide_constants=True, seed=config.seed)
    expected_sites = {RestructureOp.SPLIT: 9, RestructureOp.FOLDED: 5, RestructureOp.FLATTENED: 3}
    helper = hiding_helper().source_text
    cases = 0
    for op in RestructureOp:
        for kind in ElementKind:
            hidden = emit_full(op, kind, hidden_config)
            if len(set(hidden.calls)) != expected_sites[op]:
                _fail(suite, f"{hidden.name} has {len(set(hidden.calls))} distinct calls")
            text = hidden.source_text.replace(helper, "")
            for call in hidden.calls:
                text = text.replace(chain.render_call(call), str(chain.f_eval(call.base, call.count)))
            if text != emit_full(op, kind, plain_config).source_text:
                _fail(suite, f"{hidden.name} differs from its plain form after substitution")
            cases += 1
    return cases


def _random_values(kind: ElementKind, gen: np.random.Generator, count: int) -> list[Value]:
    if kind is ElementKind.INTEGER:
        return gen.integers(INT_MIN, INT_MAX, size=count, endpoint=True).tolist()
    if kind is ElementKind.DOUBLE:
        return gen.uniform(-1e6, 1e6, size=count).tolist()
    if kind is ElementKind.CHAR:
        return [chr(c) for c in gen.integers(0, 128, size=count).tolist()]
    letters = list(string.ascii_letters)
    pool = [
        "".join(gen.choice(letters, size=length))
        for length in gen.integers(0, 9, size=TEXT_POOL_SIZE).tolist()
    ]
    return [pool[i] for i in gen.integers(0, TEXT_POOL_SIZE, size=count).tolist()]


def _extents(op: RestructureOp, size: int) -> tuple[int, ...]:
    if op is RestructureOp.FLATTENED:
        dims = maps.fold_dims(size)
        return dims.rows, dims.cols
    return (size,)


def _differs(got: Value, expected: Value) -> bool:
    return got != expected or type(got) is not type(expected)


@dataclass(frozen=True)
class OracleCase:
    """One store checked against a flat reference list."""

    op: RestructureOp
    kind: ElementKind
    size: int
    ops: int
    seed: int
    index_offset: Optional[int] = None


def run_oracle_case(case: OracleCase) -> Optional[str]:
    """
    Replay a seeded random set/get script on a fresh store and a flat list.

    Every cell is read once before anything is written, then ``case.ops``
    random operations run with reads and writes mixed from the start.

    Returns:
        The first disagreement, or None when the store matches throughout
    """
    store = Store(case.op, case.kind, _extents(case.op, case.size), case.index_offset)
    coords = list(store.coordinates())
    reference = [case.kind.default] * len(coords)
    label = repr(store)

    for c in coords:
        got = store.get(c)
        if _differs(got, case.kind.default):
            return f"{label} unwritten get{c} = {got!r}, expected {case.kind.default!r}"

    gen = np.random.default_rng(case.seed)
    positions = gen.integers(0, len(coords), size=case.ops).tolist()
    writes = (gen.random(case.ops) < 0.5).tolist()
    values = _random_values(case.kind, gen, case.ops)
    for step, (pos, is_set, value) in enumerate(zip(positions, writes, values)):
        c = coords[pos]
        if is_set:
            store.set(c, value)
            reference[pos] = value
            continue
        got = store.get(c)
        if _differs(got, reference[pos]):
            return f"{label} step {step}: get{c} = {got!r}, expected {reference[pos]!r}"

    if store.values() != reference:
        return f"{label}: contents differ from the reference array"
    if store.length() < len(coords):
        return f"{label}: length {store.length()} below {len(coords)} elements"
    return None


def oracle_cases(config: VerifyConfig) -> list[OracleCase]:
    """
    Cases of the store oracle in ascending size.

    Every op and kind runs at each size up to ``ORACLE_SIZE_LIMIT`` (capped
    by the configured limit), plus a permuted Integer store per op. Split
    also runs at 100000.
    """
    rng = config.rng("store_oracle")
    ops = config.ops_per_case
    cases = []
    for size in range(1, min(config.size_limit, ORACLE_SIZE_LIMIT) + 1):
        for op in RestructureOp:
            for kind in ElementKind:
                cases.append(OracleCase(op, kind, size, ops, rng.getrandbits(64)))
            offset = rng.randrange(size)
            cases.append(OracleCase(op, ElementKind.INTEGER, size, ops, rng.getrandbits(64), offset))
    cases.append(
        OracleCase(RestructureOp.SPLIT, ElementKind.INTEGER, LARGE_SPLIT_SIZE, ops, rng.getrandbits(64))
    )
    return cases


def _first_failure(results: Iterable[Optional[str]]) -> Optional[str]:
    return next((failure for failure in results if failure is not None), None)


def check_store_oracle(config: VerifyConfig) -> int:
    """
    Stores behave like a flat array of their logical size.

    Cases run on ``config.jobs`` worker processes; results are taken in
    case order so the reported counterexample is still the smallest.
    """
    suite = "store_oracle"
    cases = oracle_cases(config)
    if config.jobs == 1:
        failure = _first_failure(map(run_oracle_case, cases))
    else:
        executor = ProcessPoolExecutor(max_workers=config.jobs)
        try:
            failure = _first_failure(
                executor.map(run_oracle_case, cases, chunksize=ORACLE_CHUNK_SIZE)
            )
        finally:
            executor.shutdown(cancel_futures=True)
    if failure is not None:
        _fail(suite, failure)
    return len(cases)


SUITES: dict[str, Callable[[VerifyConfig], int]] = {
    "split_bijection": check_split_bijection,
    "fold_flatten_inverse": check_fold_flatten_inverse,
    "merge_bijection": check_merge_bijection,
    "affine_maps": check_affine_maps,
    "hide_round_trip": check_hide_round_trip,
    "emitted_hiding": check_emitted_hiding,
    "store_oracle": check_store_oracle,
}


def run_suites(config: VerifyConfig) -> list[SuiteResult]:
    """
    Run every suite in order.

    Raises:
        InvariantViolation: From the first suite that fails
    """
    results = []
    for name, suite in SUITES.items():
        cases = suite(config)
        logger.info(f"Suite {name} passed ({cases} cases)")
        results.append(SuiteResult(name, cases))
    return results
