from pathlib import Path

_ROOT = Path(__file__).resolve().parent.parent


def get_project_root() -> str:
    return _ROOT.as_posix()


def get_asset_path(*parts: str) -> str:
    """Path under assets/, where the packaged settings live."""
    return _ROOT.joinpath("assets", *parts).as_posix()


def get_schema_directory() -> str:
    return _ROOT.joinpath("docs", "schemas").as_posix()
