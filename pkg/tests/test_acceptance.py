"""Acceptance criteria, one test each.

Every test prints a single ``PASS`` or ``FAIL`` line naming its criterion.
The ``-rP`` option in pyproject.toml shows those lines in the pytest summary.
Running this file as a script checks all criteria and prints the same lines.
"""

from __future__ import annotations

import contextlib
import io
import re
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import CORPUS_FILES, INVALID, I_COME, read_fixture  # noqa: E402
from nlml_gen import grid_cases  # noqa: E402
from nlom.cli import main  # noqa: E402
from nlom.dump import dumps, loads  # noqa: E402
from nlom.errors import NlomError  # noqa: E402
from nlom.markup import parse_markup, serialize  # noqa: E402
from nlom.sentences import SimpleSentence, decompose, iter_simple_sentences, parse_sentence  # noqa: E402

GRID_SETTINGS = settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])

# designated error or issue code for each malformed fixture
DESIGNATED = {
    "unbalanced_tag": "UnbalancedTag",
    "unterminated_tag": "UnterminatedTag",
    "illegal_tag_name": "IllegalTagName",
    "bad_mood": "BadEnumValue",
    "bad_complexity": "BadEnumValue",
    "bad_clause_type": "BadEnumValue",
    "verb_phrase_arity": "ConnectorArity",
    "subject_arity": "ConnectorArity",
    "compound_single_clause": "ConnectorArity",
    "missing_verb": "MissingChild",
    "be_without_predicate": "MissingChild",
    "unknown_tag": "UnknownTag",
    "empty_word": "EmptyRequired",
    "empty_subordinator": "EmptyRequired",
}


def report(name: str, check) -> None:
    try:
        check()
    except Exception:
        print(f"FAIL {name}")
        raise
    print(f"PASS {name}")


def implied_texts(name: str) -> list[str]:
    s = parse_sentence(read_fixture(name))
    out = []
    for ss in iter_simple_sentences(s):
        out += [nc.implied_text for nc in ss.noun_clauses]
        out += [rc.implied_statement for rc in ss.relative_clauses]
    return out


def check_i_come() -> None:
    s = parse_sentence(I_COME)
    assert isinstance(s, SimpleSentence)
    assert s.text == "I come"
    assert s.mood == "statement"
    subj = s.subject_phrase
    assert (subj.core.type, subj.core.text) == ("perspronoun", "I")
    assert (subj.number, subj.personality, subj.case_) == ("sing", "first", "nom")
    assert loads(dumps(s)).sentence == s and '"kind": "simple"' in dumps(s)
    assert [b.text for b in s.basic_sentences] == ["I come"]


def check_decomposition() -> None:
    d = decompose(parse_sentence(read_fixture("rain_compound_complex")))
    assert d.texts() == ["If it rains today, you will not go", "If it rains today, I will not come"]
    assert d.relation == "independent"


def check_implied_questions() -> None:
    assert "when will you come here?" in implied_texts("know_when_come")
    assert implied_texts("how_to_finish") == ["How does a person finish the work?"]
    assert implied_texts("what_to_do") == ["what do I do next?"]


def check_implied_statement() -> None:
    assert implied_texts("man_whom_met") == ["you met the man yesterday"]


@GRID_SETTINGS
@given(grid_cases())
def check_grid_size(case) -> None:
    g = parse_sentence(case.nlml).basic_sentences
    assert (g.rows, g.cols, len(g)) == (case.rows, case.cols, case.rows * case.cols)
    assert g.relation == case.relation


def _nots(text: str) -> int:
    return len(re.findall(r"\bnot\b|n't\b", text))


@GRID_SETTINGS
@given(grid_cases())
def check_neither_nor_negation(case) -> None:
    g = parse_sentence(case.nlml).basic_sentences
    assert g.texts() == case.cells
    if case.negated:
        for cell, plain, bs in zip(g.texts(), case.plain_cells, g):
            assert _nots(cell) == _nots(plain) + 1
            assert bs.negated


def check_round_trips() -> None:
    for path in CORPUS_FILES:
        text = path.read_text(encoding="utf-8")
        root = parse_markup(text)
        assert parse_markup(serialize(root)) == root, path.name
        s = parse_sentence(text)
        assert loads(dumps(s)).sentence == s, path.name


def _cli(*args: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(args))
    return code, out.getvalue(), err.getvalue()


def check_robustness(tmp: Path) -> None:
    fixtures = sorted(INVALID.glob("*.nlml"))
    assert {p.stem for p in fixtures} == set(DESIGNATED)
    for path in fixtures:
        code = DESIGNATED[path.stem]
        with pytest.raises(NlomError) as info:
            parse_sentence(path.read_text(encoding="utf-8"))
        codes = {info.value.code} | {i.code for i in getattr(info.value, "issues", [])}
        assert code in codes, (path.name, codes)
        target = tmp / f"{path.stem}.json"
        status, out, err = _cli("parse", "--json", str(target), str(path))
        assert status == 1 and out == "", path.name
        assert code in err and "Traceback" not in err, path.name
        assert not target.exists(), path.name


def test_criterion_1_i_come():
    report("1 'I come' golden", check_i_come)


def test_criterion_2_decomposition():
    report("2 decomposition golden", check_decomposition)


def test_criterion_3_implied_questions():
    report("3 implied questions", check_implied_questions)


def test_criterion_4_implied_statement():
    report("4 implied statement", check_implied_statement)


def test_criterion_5_grid_size():
    report("5 grid size S x V", check_grid_size)


def test_criterion_6_neither_nor():
    report("6 neither/nor negation", check_neither_nor_negation)


def test_criterion_7_round_trips():
    report("7 NLML and JSON round trips", check_round_trips)


def test_criterion_8_robustness(tmp_path):
    report("8 malformed input robustness", lambda: check_robustness(tmp_path))


if __name__ == "__main__":
    import tempfile

    failed = 0
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for test in tests:
        try:
            if test is test_criterion_8_robustness:
                with tempfile.TemporaryDirectory() as d:
                    test(Path(d))
            else:
                test()
        except Exception:
            failed += 1
    raise SystemExit(1 if failed else 0)
