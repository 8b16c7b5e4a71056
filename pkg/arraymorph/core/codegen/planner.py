from arraymorph.core.java.declarations import ArrayDecl, ParseIssue, Severity
from arraymorph.core.kinds import ElementKind, RestructureOp
from arraymorph.core.logger import get_logger

logger = get_logger(__name__)


def plan_classes(
    decls: list[ArrayDecl], op: RestructureOp
) -> tuple[list[tuple[RestructureOp, ElementKind]], list[ParseIssue]]:
    """
    Classes needed to apply ``op`` to the declared arrays.

    One class per element kind in use, listed in ``ElementKind`` order.
    Declarations whose dimensionality does not fit the operation are
    reported and left out.

    Args:
        decls: Parsed manifest declarations
        op: Restructuring operation

    Returns:
        ((op, kind) pairs without duplicates, issues for skipped declarations)
    """
    issues: list[ParseIssue] = []
    kinds = set()
    for decl in decls:
        if decl.dimensions != op.arity:
            issues.append(
                ParseIssue(
                    decl.line_number,
                    f"'{decl.name}' is {decl.dimensions}D; {op.cli_name} applies to {op.arity}D arrays",
                    Severity.WARNING,
                )
            )
            continue
        kinds.add(decl.kind)

    plan = [(op, kind) for kind in ElementKind if kind in kinds]
    logger.info(f"Planned {len(plan)} {op.class_prefix} class(es) for {len(decls)} declaration(s)")
    return plan, issues
