"""Reader and writer for the NLML element syntax.

NLML is a strict subset of XML: nested ``<tag>...</tag>`` elements with
lowercase ``[a-z_]+`` names, no attributes, comments, CDATA or namespaces.
Only the ``&lt; &gt; &amp;`` entities are decoded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import IllegalTagName, UnbalancedTag, UnterminatedTag

ROOT_TAG = "nlml"

_TAG_NAME = re.compile(r"[a-z_]+\Z")
_ENTITIES = {"&lt;": "<", "&gt;": ">", "&amp;": "&"}
_ENTITY_RE = re.compile(r"&(?:lt|gt|amp);")


@dataclass(frozen=True)
class MarkupNode:
    tag: str
    text: str = ""
    children: tuple[MarkupNode, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not _TAG_NAME.match(self.tag):
            raise ValueError(f"illegal tag name {self.tag!r}")

    def child(self, tag: str) -> MarkupNode | None:
        """First direct child with the given tag, or None."""
        for c in self.children:
            if c.tag == tag:
                return c
        return None

    def all(self, tag: str) -> list[MarkupNode]:
        return [c for c in self.children if c.tag == tag]

    def value(self, tag: str, default: str | None = None) -> str | None:
        """Text of the first child ``tag``; ``default`` when missing or empty."""
        c = self.child(tag)
        if c is None or not c.text:
            return default
        return c.text

    def has(self, tag: str) -> bool:
        return self.child(tag) is not None

    def iter(self) -> Iterator[MarkupNode]:
        """Pre-order walk including this node."""
        yield self
        for c in self.children:
            yield from c.iter()

    def replace_children(self, children: list[MarkupNode] | tuple[MarkupNode, ...]) -> MarkupNode:
        return MarkupNode(self.tag, self.text, tuple(children))


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _unescape(data: str) -> str:
    return _ENTITY_RE.sub(lambda m: _ENTITIES[m.group(0)], data)


def _escape(data: str) -> str:
    return data.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


class _Reader:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, cls: type, message: str, index: int | None = None) -> Exception:
        return cls(message, _byte_offset(self.text, self.pos if index is None else index))

    def read_tag(self) -> tuple[str, str, int]:
        """Consume ``<...>`` at pos. Returns (kind, name, start) with kind in open/close/empty."""
        start = self.pos
        end = self.text.find(">", start)
        if end < 0:
            raise self.error(UnterminatedTag, "end of input inside tag", start)
        inner = self.text[start + 1 : end]
        kind = "open"
        if inner.startswith("/"):
            kind, inner = "close", inner[1:]
        elif inner.endswith("/"):
            kind, inner = "empty", inner[:-1]
        if not _TAG_NAME.match(inner):
            raise self.error(IllegalTagName, f"illegal tag name {inner!r}", start)
        self.pos = end + 1
        return kind, inner, start

    def parse_content(self, tag: str, open_at: int) -> MarkupNode:
        chunks: list[str] = []
        children: list[MarkupNode] = []
        text = self.text
        while True:
            lt = text.find("<", self.pos)
            if lt < 0:
                if self.pos < len(text):
                    chunks.append(text[self.pos :])
                self.pos = len(text)
                if tag == ROOT_TAG and open_at < 0:
                    break
                raise self.error(UnterminatedTag, f"<{tag}> is never closed", open_at)
            if lt > self.pos:
                chunks.append(text[self.pos : lt])
            self.pos = lt
            kind, name, start = self.read_tag()
            if kind == "close":
                if open_at < 0:
                    raise self.error(UnbalancedTag, f"</{name}> without matching open tag", start)
                if name != tag:
                    raise self.error(UnbalancedTag, f"</{name}> closes <{tag}>", start)
                break
            if kind == "empty":
                children.append(MarkupNode(name))
            else:
                children.append(self.parse_content(name, start))
        data = "".join(c for c in chunks if c.strip())
        return MarkupNode(tag, _unescape(data.strip()), tuple(children))


def parse_markup(text: str) -> MarkupNode:
    """Parse an NLML document into a tree under a synthetic ``nlml`` root.

    Raises UnbalancedTag, UnterminatedTag or IllegalTagName (each carrying a
    byte offset) on malformed input.
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    reader = _Reader(text)
    root = reader.parse_content(ROOT_TAG, -1)
    # a document that is itself wrapped in <nlml> is accepted as-is
    if not root.text and len(root.children) == 1 and root.children[0].tag == ROOT_TAG:
        return root.children[0]
    return root


def serialize(node: MarkupNode, *, root: bool = True) -> str:
    """Inverse of parse_markup. With ``root`` the synthetic root element is omitted."""
    if root and node.tag == ROOT_TAG:
        return _escape(node.text) + "".join(serialize(c, root=False) for c in node.children)
    inner = _escape(node.text) + "".join(serialize(c, root=False) for c in node.children)
    return f"<{node.tag}>{inner}</{node.tag}>"


def pretty(node: MarkupNode, indent: str = "  ") -> str:
    """Indented rendering; parses back to the same tree."""
    lines: list[str] = []

    def walk(n: MarkupNode, depth: int) -> None:
        pad = indent * depth
        if not n.children:
            lines.append(f"{pad}<{n.tag}>{_escape(n.text)}</{n.tag}>")
            return
        lines.append(f"{pad}<{n.tag}>{_escape(n.text)}")
        for c in n.children:
            walk(c, depth + 1)
        lines.append(f"{pad}</{n.tag}>")

    if node.tag == ROOT_TAG:
        for c in node.children:
            walk(c, 0)
    else:
        walk(node, 0)
    return "\n".join(lines) + "\n"


def resolve_path(root: MarkupNode, path: str) -> MarkupNode | None:
    """Walk a slash-joined path such as ``nlml/circum[1]/adv`` from ``root``."""
    parts = path.split("/")
    if not parts or parts[0] != root.tag:
        return None
    node = root
    for part in parts[1:]:
        m = re.fullmatch(r"([a-z_]+)(?:\[(\d+)\])?", part)
        if m is None:
            return None
        same = node.all(m.group(1))
        idx = int(m.group(2) or 0)
        if idx >= len(same):
            return None
        node = same[idx]
    return node


def child_path(parent_path: str, parent: MarkupNode, child: MarkupNode) -> str:
    """Path segment for ``child``; indexed only when the tag repeats among siblings."""
    same = [c for c in parent.children if c.tag == child.tag]
    if len(same) == 1:
        return f"{parent_path}/{child.tag}"
    idx = next(i for i, c in enumerate(same) if c is child)
    return f"{parent_path}/{child.tag}[{idx}]"
