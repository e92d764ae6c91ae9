"""Tokenizer for the g-number expression language."""
from __future__ import annotations

import re
from dataclasses import dataclass


class ParseError(Exception):
    """Syntax error with a 1-based source position."""

    def __init__(self, line: int, column: int, expected: str, found: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        where = f"line {line}, column {column}"
        got = f", found {found}" if found else ""
        super().__init__(f"{where}: expected {expected}{got}")


@dataclass(frozen=True)
class Token:
    kind: str  # NUMBER, IMAG, IDENT, OP, EOF
    text: str
    line: int
    column: int

    def describe(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.text)


_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
# '·' and '×' print as multiplication; the unicode minus is accepted too
_OPS = {"+": "+", "-": "-", "−": "-", "*": "*", "·": "*", "×": "*",
        "/": "/", "^": "^", "(": "(", ")": ")", ",": ",", "=": "="}


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col, pos = 1, 1, 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch == "\n":
            line, col, pos = line + 1, 1, pos + 1
            continue
        if ch.isspace():
            col, pos = col + 1, pos + 1
            continue
        if ch == "#":
            while pos < n and text[pos] != "\n":
                pos += 1
            continue
        m = _NUMBER.match(text, pos)
        if m and (ch.isdigit() or ch == "."):
            end = m.end()
            kind = "NUMBER"
            # a trailing 'i' not followed by an identifier char makes it imaginary
            if end < n and text[end] == "i" and not (end + 1 < n and (text[end + 1].isalnum() or text[end + 1] == "_")):
                end += 1
                kind = "IMAG"
            tokens.append(Token(kind, text[pos:end], line, col))
            col += end - pos
            pos = end
            continue
        m = _IDENT.match(text, pos)
        if m:
            tokens.append(Token("IDENT", m.group(), line, col))
            col += m.end() - pos
            pos = m.end()
            continue
        if ch in _OPS:
            tokens.append(Token("OP", _OPS[ch], line, col))
            col, pos = col + 1, pos + 1
            continue
        raise ParseError(line, col, "a number, name, operator or parenthesis", repr(ch))
    tokens.append(Token("EOF", "", line, col))
    return tokens
