"""JSON dump and load of the object model.

Every dataclass instance becomes a JSON object tagged with a ``kind`` key;
sentence classes use their complexity name (``simple``, ``complex``,
``compound``, ``compound_complex``) and the rest use the snake-cased class
name. Back-references to host sentences are not written; :func:`load_model`
re-wires them, so a dump reloads to a model that compares equal.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from dataclasses import dataclass, field, fields, is_dataclass
from pathlib import Path
from typing import Any

from . import clauses, phrases, sentences

DUMP_VERSION = "1"

_SENTENCE_KINDS = {
    sentences.SimpleSentence: "simple",
    sentences.ComplexSentence: "complex",
    sentences.CompoundSentence: "compound",
    sentences.CompoundComplexSentence: "compound_complex",
    sentences.BasicSentence: "basic",
}


def _snake(name: str) -> str:
    return re.sub(r"(?<!^)(?=[A-Z])", "_", name).lower()


def _model_classes() -> list[type]:
    out = []
    for module in (phrases, sentences, clauses):
        for obj in vars(module).values():
            if isinstance(obj, type) and is_dataclass(obj) and obj.__module__ == module.__name__:
                out.append(obj)
    return out


KIND_OF: dict[type, str] = {cls: _SENTENCE_KINDS.get(cls, _snake(cls.__name__)) for cls in _model_classes()}
CLASS_OF: dict[str, type] = {kind: cls for cls, kind in KIND_OF.items()}


@dataclass
class ModelDump:
    version: str
    source_file: str
    sentence: Any
    diagnostics: list[str] = field(default_factory=list)


def to_data(obj: Any) -> Any:
    """Plain JSON-ready data for a model object."""
    if is_dataclass(obj) and not isinstance(obj, type):
        kind = KIND_OF.get(type(obj))
        if kind is None:
            raise TypeError(f"{type(obj).__name__} is not a model type")
        out: dict[str, Any] = {"kind": kind}
        for f in fields(obj):
            if f.metadata.get("dump", True):
                out[f.name.rstrip("_")] = to_data(getattr(obj, f.name))
        return out
    if isinstance(obj, (list, tuple)):
        return [to_data(x) for x in obj]
    if obj is None or isinstance(obj, (str, int, float, bool)):
        return obj
    raise TypeError(f"cannot dump value of type {type(obj).__name__}")


def from_data(data: Any) -> Any:
    """Inverse of :func:`to_data` (without parent links; see :func:`load_model`)."""
    if isinstance(data, list):
        return [from_data(x) for x in data]
    if isinstance(data, dict):
        kind = data.get("kind")
        cls = CLASS_OF.get(kind)
        if cls is None:
            raise ValueError(f"unknown kind {kind!r} in model dump")
        names = {f.name.rstrip("_"): f.name for f in fields(cls) if f.init}
        kwargs = {names[k]: from_data(v) for k, v in data.items() if k != "kind" and k in names}
        return cls(**kwargs)
    return data


def relink(sentence: Any) -> Any:
    """Restore the host-sentence references that dumps leave out."""
    for ss in sentences.iter_simple_sentences(sentence):
        for c in [*ss.noun_clauses, *ss.relative_clauses]:
            c.parent = ss
            c.base.parent = ss
    return sentence


def dump_model(sentence: Any, source_file: str = "", diagnostics: list[str] | None = None) -> dict[str, Any]:
    return {"version": DUMP_VERSION, "source_file": source_file, "sentence": to_data(sentence),
            "diagnostics": list(diagnostics or [])}


def dumps(sentence: Any, source_file: str = "", diagnostics: list[str] | None = None) -> str:
    return json.dumps(dump_model(sentence, source_file, diagnostics), indent=2, ensure_ascii=False) + "\n"


def load_model(data: dict[str, Any]) -> ModelDump:
    if not isinstance(data, dict) or "sentence" not in data:
        raise ValueError("not a model dump")
    sentence = relink(from_data(data["sentence"]))
    return ModelDump(str(data.get("version", "")), str(data.get("source_file", "")), sentence,
                     list(data.get("diagnostics", [])))


def loads(text: str) -> ModelDump:
    return load_model(json.loads(text))


def write_atomic(path: str | os.PathLike[str], text: str) -> None:
    """Write ``text`` so that readers see either the old file or the whole new one."""
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
