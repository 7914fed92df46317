from pathlib import Path
from typing import Union

PROJECT_ROOT = Path(__file__).resolve().parents[3]


def resolve_project_path(path: Union[str, Path]) -> str:
    """Anchor a config-relative path at the project root; absolute paths pass through."""
    candidate = Path(path)
    if candidate.is_absolute():
        return str(candidate)
    return str(PROJECT_ROOT / candidate)
