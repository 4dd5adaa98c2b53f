from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import CORPUS_FILES
from nlom.errors import IllegalTagName, UnbalancedTag, UnterminatedTag
from nlom.markup import MarkupNode, child_path, parse_markup, pretty, resolve_path, serialize


def bracket_oracle(text: str) -> list[tuple[int, str]]:
    """Character-by-character scan returning (depth, tag) for every opening tag.

    Written independently of the parser: it walks the string one character at
    a time, tracks a stack of open names and checks each closing name.
    """
    out: list[tuple[int, str]] = []
    stack: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch != "<":
            i += 1
            continue
        j = i + 1
        name = ""
        closing = False
        if j < len(text) and text[j] == "/":
            closing = True
            j += 1
        while j < len(text) and text[j] != ">":
            name += text[j]
            j += 1
        if closing:
            assert stack and stack[-1] == name, f"mismatched </{name}>"
            stack.pop()
        else:
            out.append((len(stack) + 1, name))
            stack.append(name)
        i = j + 1
    assert not stack, "unclosed tags"
    return out


def tree_shape(node: MarkupNode, depth: int = 0) -> list[tuple[int, str]]:
    out = [] if depth == 0 else [(depth, node.tag)]
    for c in node.children:
        out.extend(tree_shape(c, depth + 1))
    return out


class TestExamples:
    def test_two_leaves(self):
        root = parse_markup("<mood>statement</mood><complexity>simple</complexity>")
        assert root.tag == "nlml"
        assert [(c.tag, c.text) for c in root.children] == [("mood", "statement"), ("complexity", "simple")]

    def test_empty_document(self):
        root = parse_markup("")
        assert root.tag == "nlml" and root.children == ()

    def test_depth_three_chain(self):
        text = "<subject><noun><word>I</word></noun></subject>"
        root = parse_markup(text)
        word = root.child("subject").child("noun").child("word")
        assert word.text == "I"
        assert tree_shape(root) == bracket_oracle(text)

    def test_whitespace_between_tags_is_dropped(self):
        root = parse_markup("  <a_b>\n  <c>  x  y </c>\n</a_b>\n")
        assert root.child("a_b").text == ""
        assert root.child("a_b").child("c").text == "x  y"

    def test_entities(self):
        root = parse_markup("<word>a &lt;b&gt; &amp; c</word>")
        assert root.child("word").text == "a <b> & c"
        assert serialize(root) == "<word>a &lt;b&gt; &amp; c</word>"

    def test_self_closing_tag(self):
        root = parse_markup("<neg/><mood>order</mood>")
        assert root.children[0] == MarkupNode("neg")

    def test_explicit_root_is_unwrapped(self):
        assert parse_markup("<nlml><mood>x</mood></nlml>") == parse_markup("<mood>x</mood>")


class TestErrors:
    @pytest.mark.parametrize(
        "text, exc, offset",
        [
            ("<a></b>", UnbalancedTag, 3),
            ("</a>", UnbalancedTag, 0),
            ("<a><b></a>", UnbalancedTag, 6),
            ("<a>text", UnterminatedTag, 0),
            ("<a><b", UnterminatedTag, 3),
            ("<A></A>", IllegalTagName, 0),
            ("<a1></a1>", IllegalTagName, 0),
            ("<a x='1'></a>", IllegalTagName, 0),
        ],
    )
    def test_error_kind_and_offset(self, text, exc, offset):
        with pytest.raises(exc) as info:
            parse_markup(text)
        assert info.value.offset == offset

    def test_offset_counts_utf8_bytes(self):
        with pytest.raises(UnbalancedTag) as info:
            parse_markup("<w>é</x>")
        assert info.value.offset == len("<w>é".encode("utf-8"))


class TestCorpus:
    @pytest.mark.parametrize("path", CORPUS_FILES, ids=lambda p: p.stem)
    def test_shape_matches_bracket_oracle(self, path):
        text = path.read_text(encoding="utf-8")
        assert tree_shape(parse_markup(text)) == bracket_oracle(text)

    @pytest.mark.parametrize("path", CORPUS_FILES, ids=lambda p: p.stem)
    def test_serialize_round_trip(self, path):
        root = parse_markup(path.read_text(encoding="utf-8"))
        assert parse_markup(serialize(root)) == root
        assert parse_markup(pretty(root)) == root

    @pytest.mark.parametrize("path", CORPUS_FILES[:5], ids=lambda p: p.stem)
    def test_deterministic(self, path):
        text = path.read_text(encoding="utf-8")
        assert parse_markup(text) == parse_markup(text)


def test_paths_resolve():
    root = parse_markup("<circum><adv>a</adv></circum><circum><adv>b</adv></circum><mood>m</mood>")
    second = root.children[1]
    path = child_path("nlml", root, second)
    assert path == "nlml/circum[1]"
    assert resolve_path(root, path + "/adv").text == "b"
    assert child_path("nlml", root, root.children[2]) == "nlml/mood"


tags = st.text(alphabet="abcdefghij_", min_size=1, max_size=6)
texts = st.text(alphabet=st.characters(blacklist_categories=("Cs", "Cc")), max_size=12).map(str.strip)


def nodes(depth: int = 3):
    leaf = st.builds(MarkupNode, tags, texts)
    if depth == 0:
        return leaf
    branch = st.builds(lambda t, cs: MarkupNode(t, "", tuple(cs)), tags, st.lists(nodes(depth - 1), min_size=1, max_size=3))
    return st.one_of(leaf, branch)


@settings(max_examples=200)
@given(st.lists(nodes(), max_size=4))
def test_round_trip_property(children):
    root = MarkupNode("nlml", "", tuple(c for c in children if c.tag != "nlml"))
    assert parse_markup(serialize(root)) == root
