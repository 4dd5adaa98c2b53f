"""Object model for NLML grammar markup of English sentences.

Typical use::

    from nlom import parse_sentence, decompose

    sentence = parse_sentence(open("doc.nlml").read())
    print(sentence.text)
    for part in decompose(sentence).sentences:
        print(part.text)
"""

from __future__ import annotations

__version__ = "0.1.0"

from .clauses import NounClause, RelativeClause, implied_statement, implied_text
from .errors import NlomError, SchemaError
from .markup import MarkupNode, parse_markup, serialize
from .schema import ValidationReport, load_schema, validate_schema
from .sentences import (
    BasicSentence,
    ComplexSentence,
    CompoundComplexSentence,
    CompoundSentence,
    SimpleSentence,
    construct_basic_sentences,
    decompose,
    parse_sentence,
)

__all__ = [
    "BasicSentence", "ComplexSentence", "CompoundComplexSentence", "CompoundSentence", "MarkupNode",
    "NlomError", "NounClause", "RelativeClause", "SchemaError", "SimpleSentence", "ValidationReport",
    "construct_basic_sentences", "decompose", "implied_statement", "implied_text", "load_schema",
    "parse_markup", "parse_sentence", "serialize", "validate_schema",
]
