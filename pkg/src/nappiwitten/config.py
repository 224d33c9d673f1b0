"""Engine-wide settings.

Only an explicit config file (JSON) is read; the environment is never
consulted, so runs are reproducible from their arguments alone.
"""
import json
import threading

DEFAULT_CELL_CAP = 20000

_state = {"cell_cap": DEFAULT_CELL_CAP, "windows": {}}
_lock = threading.Lock()


def cell_cap() -> int:
    return _state["cell_cap"]


def set_cell_cap(cap: int):
    if int(cap) <= 0:
        raise ValueError("cell cap must be positive")
    with _lock:
        _state["cell_cap"] = int(cap)


def default_window(name: str, fallback=None):
    return _state["windows"].get(name, fallback)


def load_config(path):
    """Read {"cell_cap": int, "windows": {...}} from a JSON file."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    unknown = set(data) - {"cell_cap", "windows"}
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    if "cell_cap" in data:
        set_cell_cap(data["cell_cap"])
    if "windows" in data:
        with _lock:
            _state["windows"] = dict(data["windows"])
    return dict(_state)
