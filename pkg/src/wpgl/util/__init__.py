# commonly-used definitions
from .config import getConfig
from .format import print_bounded_multiline_message, table_text
from .saver import assure_path, canonical_json, save_json
from .wpgl_types import Axiom, AxiomDescriptions, InputError, SplitStatus, WpglError

__all__ = [
    "getConfig",
    "print_bounded_multiline_message",
    "table_text",
    "assure_path",
    "canonical_json",
    "save_json",
    "Axiom",
    "AxiomDescriptions",
    "InputError",
    "SplitStatus",
    "WpglError",
]
