"""Expression language and command-line front end."""
from .evaluator import DomainError, EvalResult, Evaluator
from .lexer import ParseError
from .parser import parse, unparse

__all__ = ["DomainError", "EvalResult", "Evaluator", "ParseError", "parse", "unparse"]
