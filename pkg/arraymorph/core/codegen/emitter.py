import random
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import cachetools

from arraymorph.core.codegen import templates
from arraymorph.core.codegen.config import ObfConfig
from arraymorph.core.constants import HIDEABLE_LIMIT, MAX_HIDE_COUNT, MIN_HIDE_COUNT
from arraymorph.core.hiding import HidingCall, hide_constant, hiding_helper, render_call
from arraymorph.core.java.statements import count_statements
from arraymorph.core.kinds import ElementKind, RestructureOp
from arraymorph.core.logger import get_logger
from arraymorph.core.naming import class_name

logger = get_logger(__name__)

SITE_MARKER = re.compile(r"#(L?)(\d+)#")

# Range the permutation offset is drawn from when not configured
OFFSET_RANGE = 1000

_emit_cache = cachetools.LRUCache(maxsize=128)


class Variant(Enum):
    STUB = "stub"
    FULL = "full"


@dataclass(frozen=True)
class GeneratedClass:
    """
    Java source of one generated class.

    Attributes:
        name: Class name, e.g. ``SplitArray_Integer``
        op: Restructuring operation
        kind: Element kind
        variant: Stub or full implementation
        source_text: Complete Java source
        statement_count: Statements in ``source_text``, helpers included
        hiding_sites: Literal sites eligible for hiding
        calls: F calls emitted, in order of appearance
        index_offset: Permutation offset baked into the class, None when off
    """

    name: str
    op: RestructureOp
    kind: ElementKind
    variant: Variant
    source_text: str
    statement_count: int
    hiding_sites: int
    calls: tuple[HidingCall, ...] = field(default=())
    index_offset: Optional[int] = None

    @property
    def file_name(self) -> str:
        return f"{self.name}.java"


def _site_counts(config: ObfConfig, rng: random.Random, sites: int) -> list[int]:
    if config.hide_count is not None:
        return [config.hide_count] * sites
    depths = range(MIN_HIDE_COUNT, MAX_HIDE_COUNT + 1)
    # Distinct depths give distinct calls as long as there are enough of them
    if sites <= len(depths):
        return rng.sample(depths, sites)
    return [rng.choice(depths) for _ in range(sites)]


class _SiteRenderer:
    """Regex callback rewriting ``#n#`` markers into literals or F calls."""

    def __init__(self, config: ObfConfig, rng: random.Random, sites: int):
        self.config = config
        self.rng = rng
        self.counts = iter(_site_counts(config, rng, sites))
        self.calls: list[HidingCall] = []

    def _hide(self, value: int) -> str:
        call = hide_constant(
            value,
            next(self.counts),
            self.rng.getrandbits(32),
            surface=self.config.surface_modulus,
        )
        self.calls.append(call)
        return render_call(call)

    def __call__(self, match: "re.Match") -> str:
        large, value = match.group(1) == "L", int(match.group(2))
        if not self.config.hide_constants:
            return str(value)
        if not large:
            return self._hide(value)
        if not self.config.hide_large_literals:
            return str(value)
        remainder = value % HIDEABLE_LIMIT
        quotient = value - remainder
        hidden = self._hide(remainder)
        return f"({quotient}+{hidden})" if quotient else hidden


def _count_sites(text: str, config: ObfConfig) -> int:
    return sum(
        1
        for m in SITE_MARKER.finditer(text)
        if not m.group(1) or config.hide_large_literals
    )


def emit_stub(op: RestructureOp, kind: ElementKind) -> GeneratedClass:
    """
    Placeholder class with the accessor signatures and empty bodies.

    Stubs let the rewritten source compile before the full classes exist.
    """
    name = class_name(op, kind)
    ctor_params, index_params = templates.STUB_PARAMETERS[op]
    source_text = templates.STUB.render(
        cls=name,
        jtype=kind.java_type,
        ctor_params=ctor_params,
        index_params=index_params,
        default=kind.default_literal,
    )
    return GeneratedClass(
        name=name,
        op=op,
        kind=kind,
        variant=Variant.STUB,
        source_text=source_text,
        statement_count=count_statements(source_text),
        hiding_sites=0,
    )


def emit_stubs() -> list[GeneratedClass]:
    """Stubs for all twelve predefined classes."""
    return [emit_stub(op, kind) for op in RestructureOp for kind in ElementKind]


@cachetools.cached(cache=_emit_cache)
def emit_full(
    op: RestructureOp, kind: ElementKind, config: ObfConfig = ObfConfig()
) -> GeneratedClass:
    """
    Complete implementation of the ``op`` class for ``kind``.

    Every random choice comes from a generator seeded with the config seed
    and the class name, so equal inputs always produce equal text.

    Args:
        op: Restructuring operation
        kind: Element kind
        config: Obfuscation settings

    Returns:
        The generated class; ``calls`` lists the F calls when hiding is on
    """
    name = class_name(op, kind)
    rng = random.Random(f"{config.seed}/{name}")

    index_offset = None
    fields = ctor_tail = members = remap = ""
    flat = "row*cols+col"
    helpers = []
    if config.index_obfuscate:
        index_offset = (
            config.index_offset
            if config.index_offset is not None
            else rng.randrange(OFFSET_RANGE)
        )
        fields = templates.PERM_FIELDS
        ctor_tail = templates.PERM_CTOR_TAIL.render(length=templates.LENGTH_EXPRESSIONS[op])
        members = templates.PERM_MEMBER.render(offset=f"#L{index_offset}#")
        remap = templates.PERM_REMAP
        flat = f"perm({flat})"
        helpers.append(templates.GCD_HELPER)

    marked = templates.FULL_TEMPLATES[op].render(
        cls=name,
        jtype=kind.java_type,
        obj=f"{kind.field_prefix}Obj",
        fields=fields,
        ctor_tail=ctor_tail,
        members=members,
        remap=remap,
        flat=flat,
    )
    sites = _count_sites(marked, config)
    renderer = _SiteRenderer(config, rng, sites if config.hide_constants else 0)
    body = SITE_MARKER.sub(renderer, marked)

    if renderer.calls:
        helpers.insert(0, hiding_helper().source_text)
    # Helpers go just before the closing brace of the class
    source_text = body[: body.rstrip().rfind("}")] + "".join(helpers) + "}\n"

    logger.debug(
        f"Emitted {name}: {sites} hiding site(s), {len(renderer.calls)} F call(s)"
    )
    return GeneratedClass(
        name=name,
        op=op,
        kind=kind,
        variant=Variant.FULL,
        source_text=source_text,
        statement_count=count_statements(source_text),
        hiding_sites=sites,
        calls=tuple(renderer.calls),
        index_offset=index_offset,
    )
