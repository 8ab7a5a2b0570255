"""Bundled example automata and IFS data."""

from __future__ import annotations

import json
from importlib import resources
from typing import Dict, Optional, Tuple

from .automaton import Automaton
from .exact import Similitude
from .neighbors import IFS


class UnknownFixture(KeyError):
    pass


def _read(filename: str):
    ref = resources.files(__package__).joinpath("data").joinpath(filename)
    if not ref.is_file():
        raise UnknownFixture(filename)
    return json.loads(ref.read_text(encoding="utf-8"))


def index() -> Dict[str, dict]:
    return _read("index.json")


def names():
    return sorted(index())


def raw(name: str) -> dict:
    if name not in index():
        raise UnknownFixture(f"no fixture named {name!r}; known: {', '.join(names())}")
    return _read(f"{name}.json")


def load(name: str) -> Automaton:
    return Automaton.from_dict(raw(name))


def load_ifs(name: str) -> Tuple[IFS, Optional[Dict[str, Similitude]]]:
    if not index().get(name, {}).get("ifs"):
        raise UnknownFixture(f"fixture {name!r} has no IFS")
    d = _read(f"{name}.ifs.json")
    ifs = IFS.from_dict(d)
    smap = None
    if "state_map" in d:
        smap = {s: Similitude.from_json(v, ifs.N) for s, v in d["state_map"].items()}
    return ifs, smap
