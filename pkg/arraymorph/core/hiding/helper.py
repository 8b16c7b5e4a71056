from dataclasses import dataclass
from functools import lru_cache

from arraymorph.core.hiding.factors import factor_table
from arraymorph.core.java.statements import count_statements

INDENT = "    "


@dataclass(frozen=True)
class HidingHelper:
    """Java source of the F method and its statement count."""

    source_text: str
    statement_count: int


def emit_hiding_helper() -> str:
    """
    Java source of ``F(int y, int count)`` as a private static class member.

    The factor table is embedded as an array initializer and the loop folds
    y exactly as ``f_eval`` does.
    """
    pairs = ",".join(f"{{{n1},{n2}}}" for n1, n2 in factor_table().pairs)
    lines = [
        "private static int F(int y,int count)",
        "{",
        f"{INDENT}int[][] y_factors={{{pairs}}};",
        f"{INDENT}for (int i=count;i>0;i--)",
        f"{INDENT}{{",
        f"{INDENT * 2}int y1=y_factors[i-1][0]+y_factors[i-1][1];",
        f"{INDENT * 2}y=y%y1;",
        f"{INDENT}}}",
        f"{INDENT}return y;",
        "}",
    ]
    return "".join(f"{INDENT}{line}\n" for line in lines)


@lru_cache(maxsize=1)
def hiding_helper() -> HidingHelper:
    source_text = emit_hiding_helper()
    return HidingHelper(source_text, count_statements(source_text))
