from arraymorph.core.codegen.config import ObfConfig
from arraymorph.core.codegen.emitter import (
    GeneratedClass,
    Variant,
    emit_full,
    emit_stub,
    emit_stubs,
)
from arraymorph.core.codegen.planner import plan_classes
from arraymorph.core.codegen.workspace import prepare_directory, write_workspace
from arraymorph.core.naming import PREDEFINED_CLASSES, class_name, parse_class_name

__all__ = [
    "GeneratedClass",
    "ObfConfig",
    "PREDEFINED_CLASSES",
    "Variant",
    "class_name",
    "emit_full",
    "emit_stub",
    "emit_stubs",
    "parse_class_name",
    "plan_classes",
    "prepare_directory",
    "write_workspace",
]
