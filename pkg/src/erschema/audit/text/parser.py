"""Parser for the textual ER notation.

The notation has one declaration per line and ``#`` comments::

    entity E { key Ke; attr A1; attr A2; }
    entity S { key Ks; attr A1; attr A2; }
    relationship R between E (min 1, max 1) and S (min 0, max 1);

``N`` stands for an unbounded max.
"""
import re
from dataclasses import dataclass
from typing import Dict, List, Optional

from erschema.audit import const
from erschema.audit.model.er import (Cardinality, EntityType, ErModel,
                                     RelationshipType, StructuralConstraint,
                                     validate_model)
from erschema.audit.model.errors import ErParseError
from erschema.audit.tools import erschema_logger

_TOKEN_SPEC = [
    ('COMMENT', r'#[^\n]*'),
    ('NEWLINE', r'\n'),
    ('SKIP', r'[ \t\r]+'),
    ('INT', r'\d+'),
    ('IDENT', r'[A-Za-z][A-Za-z0-9_]*'),
    ('PUNCT', r'[{}();,]'),
    ('MISMATCH', r'.'),
]
_TOKEN_RE = re.compile('|'.join(f'(?P<{name}>{pattern})' for name, pattern in _TOKEN_SPEC))

EOF_KIND = 'EOF'


@dataclass(frozen=True)
class SourceSpan:
    """Location of a diagnostic: 1-based line and column plus a length."""
    line: int
    column: int
    length: int = 0

    def __post_init__(self):
        if self.line < 1 or self.column < 1 or self.length < 0:
            raise ValueError(f'Invalid source span {self.line}:{self.column}+{self.length}')

    def __str__(self):
        return f'{self.line}:{self.column}'


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    span: SourceSpan

    def __str__(self):
        return f'{self.span}: {self.code}: {self.message}'


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.line, self.column, len(self.text))

    def describe(self) -> str:
        return 'end of input' if self.kind == EOF_KIND else repr(self.text)


class _SyntaxError(Exception):
    def __init__(self, diagnostic):
        super().__init__(diagnostic.message)
        self.diagnostic = diagnostic


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    line, line_start = 1, 0
    for match in _TOKEN_RE.finditer(text):
        kind = match.lastgroup
        value = match.group()
        column = match.start() - line_start + 1
        if kind == 'NEWLINE':
            line += 1
            line_start = match.end()
        elif kind in ('SKIP', 'COMMENT'):
            continue
        elif kind == 'MISMATCH':
            raise _SyntaxError(Diagnostic(const.SYNTAX_ERROR, f'unexpected character {value!r}',
                                          SourceSpan(line, column, 1)))
        else:
            tokens.append(_Token(kind, value, line, column))
    tokens.append(_Token(EOF_KIND, '', line, len(text) - line_start + 1))
    return tokens


class _Parser:
    """Recursive-descent parser; records the span of every named element."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.position = 0
        self.entities = []
        self.relationships = []
        self.diagnostics = []
        self.spans: Dict[str, List[SourceSpan]] = {}
        self.keyless = set()

    @property
    def current(self) -> _Token:
        return self.tokens[self.position]

    def advance(self) -> _Token:
        token = self.current
        if token.kind != EOF_KIND:
            self.position += 1
        return token

    def fail(self, expected: str):
        token = self.current
        raise _SyntaxError(Diagnostic(const.SYNTAX_ERROR,
                                      f'expected {expected}, found {token.describe()}', token.span))

    def expect(self, kind: str, text: Optional[str] = None) -> _Token:
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            self.fail(repr(text) if text is not None else kind.lower())
        return self.advance()

    def remember(self, element: str, span: SourceSpan):
        self.spans.setdefault(element, []).append(span)

    def parse(self):
        while self.current.kind != EOF_KIND:
            token = self.current
            if token.kind == 'IDENT' and token.text == 'entity':
                self.parse_entity()
            elif token.kind == 'IDENT' and token.text == 'relationship':
                self.parse_relationship()
            else:
                self.fail("'entity' or 'relationship'")

    def parse_entity(self):
        self.expect('IDENT', 'entity')
        name_token = self.expect('IDENT')
        name = name_token.text
        self.remember(name, name_token.span)
        self.expect('PUNCT', '{')
        key = None
        attributes = []
        while not (self.current.kind == 'PUNCT' and self.current.text == '}'):
            token = self.current
            if token.kind == 'IDENT' and token.text in ('key', 'attr'):
                self.advance()
                attribute_token = self.expect('IDENT')
                self.expect('PUNCT', ';')
                self.remember(f'{name}.{attribute_token.text}', attribute_token.span)
                if token.text == 'attr':
                    attributes.append(attribute_token.text)
                elif key is None:
                    key = attribute_token.text
                else:
                    self.diagnostics.append(Diagnostic(const.DUPLICATE_KEY,
                                                       f'entity {name} declares more than one key',
                                                       attribute_token.span))
            else:
                self.fail("'key', 'attr' or '}'")
        self.expect('PUNCT', '}')
        if key is None:
            self.keyless.add(name)
            self.diagnostics.append(Diagnostic(const.MISSING_KEY, f'entity {name} declares no key',
                                               name_token.span))
            key = ''
        self.entities.append(EntityType(name, key, tuple(attributes)))

    def parse_relationship(self):
        self.expect('IDENT', 'relationship')
        name_token = self.expect('IDENT')
        name = name_token.text
        self.remember(name, name_token.span)
        self.expect('IDENT', 'between')
        left_entity = self.expect('IDENT').text
        left = self.parse_constraint(f'{name}.left')
        self.expect('IDENT', 'and')
        right_entity = self.expect('IDENT').text
        right = self.parse_constraint(f'{name}.right')
        self.expect('PUNCT', ';')
        self.relationships.append(RelationshipType(name, left_entity, right_entity, left, right))

    def parse_constraint(self, element: str) -> StructuralConstraint:
        opening = self.expect('PUNCT', '(')
        self.expect('IDENT', 'min')
        min_value = self.parse_cardinality()
        self.expect('PUNCT', ',')
        self.expect('IDENT', 'max')
        max_value = self.parse_cardinality()
        closing = self.expect('PUNCT', ')')
        length = closing.column - opening.column + 1 if closing.line == opening.line else 1
        self.remember(element, SourceSpan(opening.line, opening.column, length))
        return StructuralConstraint(min_value, max_value)

    def parse_cardinality(self) -> Cardinality:
        token = self.current
        if token.kind == 'INT':
            self.advance()
            return Cardinality.finite(int(token.text))
        if token.kind == 'IDENT' and token.text == const.UNBOUNDED_TOKEN:
            self.advance()
            return Cardinality.unbounded()
        self.fail(f"an integer or '{const.UNBOUNDED_TOKEN}'")

    def span_for(self, code: str, element: str) -> SourceSpan:
        spans = self.spans.get(element)
        if not spans:
            spans = self.spans.get(element.split('.')[0], [SourceSpan(1, 1, 0)])
        if code in (const.DUPLICATE_ENTITY, const.DUPLICATE_RELATIONSHIP,
                    const.DUPLICATE_ATTRIBUTE, const.NAME_CLASH):
            return spans[-1]
        return spans[0]


@erschema_logger
def parse_er(text: str) -> ErModel:
    """Parse ER text into a validated model.

    Parameters
    ----------
    text : str
        Source in the ER notation.

    Returns
    -------
    ErModel
        Model satisfying every ER invariant. Empty input gives an empty model.

    Raises
    ------
    ErParseError: When the text has a syntax error (one diagnostic) or
        semantic errors (all of them), each carrying a SourceSpan.

    Examples
    --------
        >>> model = parse_er('entity E { key Ke; }\\nentity S { key Ks; }\\n'
        ...                  'relationship R between E (min 1, max 1) and S (min 0, max 1);\\n')
        >>> [e.name for e in model.entities]
        ['E', 'S']

    """
    try:
        parser = _Parser(text)
        parser.parse()
    except _SyntaxError as err:
        raise ErParseError([err.diagnostic]) from None

    model = ErModel(tuple(parser.entities), tuple(parser.relationships))
    diagnostics = list(parser.diagnostics)
    for violation in validate_model(model).violations:
        owner = violation.element.split('.')[0]
        if violation.code == const.INVALID_IDENTIFIER and owner in parser.keyless:
            continue
        diagnostics.append(Diagnostic(violation.code, violation.message,
                                      parser.span_for(violation.code, violation.element)))
    if diagnostics:
        raise ErParseError(sorted(diagnostics, key=lambda d: (d.span.line, d.span.column)))
    return model
