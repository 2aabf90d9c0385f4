# Copyright 2026 The LinCost Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Parser for `.lc` sources.

Grammar (ML-style; `::` is right associative, application binds tightest)::

    program  ::= decl*
    decl     ::= 'fun' NAME param [':' type] '=' expr
    param    ::= NAME | '(' NAME ':' type ')'
    expr     ::= 'let' binder '=' expr 'in' expr
               | 'let' decl 'in' expr
               | 'if' expr 'then' expr 'else' expr
               | 'case' expr 'of' alts
               | decl
               | app ['::' expr]
    binder   ::= NAME | '(' ')' | '(' NAME ',' NAME ')'
    alts     ::= ['|'] '[' ']' '->' expr '|' NAME '::' NAME '->' expr     (either order)
               | ['|'] '(' NAME ',' NAME ')' '->' expr
    app      ::= atom atom*
    atom     ::= NAME | 'true' | 'false' | '[' ']' | '[' expr (',' expr)* ']'
               | '(' expr ')' | '(' expr ',' expr ')' | 'tick' NUMBER
    type     ::= prod ['->' type]
    prod     ::= postfix ('*' postfix)*
    postfix  ::= ('bool' | TYVAR | '(' type ')') 'list'*

A list case takes exactly two alternatives and a pair case one, so nested
cases never steal the alternatives of the enclosing one. Comments are
``(* ... *)``. Source names may not contain ``%``.
"""

import re
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from lincost.lang.errors import LcSyntaxError, UnboundVariableError
from lincost.lang.syntax import (App, BoolLit, CaseList, CasePair, Cons, Expr, Fun, If, Let, Nil,
                                 Pair, Program, Tick, Var, children)
from lincost.lang.types import ALPHA, BOOL, FunT, ListT, PairT, Type

KEYWORDS = {'fun', 'let', 'in', 'if', 'then', 'else', 'case', 'of', 'true', 'false', 'tick',
            'bool', 'list'}

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\(\*.*?\*\))
  | (?P<number>-?\d+(?:/\d+)?)
  | (?P<tyvar>'[a-z][A-Za-z0-9_]*)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<sym>::|->|[()\[\],|=:*])
""", re.VERBOSE | re.DOTALL)


class Token(NamedTuple):
    """Lexical token with its 1-based position."""

    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    """Split source text into tokens; raises `LcSyntaxError` on stray characters."""
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise LcSyntaxError('Unexpected character %r' % text[pos], line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ('ws', 'comment'):
            if kind == 'name' and m.group() in KEYWORDS:
                kind = 'keyword'
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        newlines = m.group().count('\n')
        if newlines:
            line += newlines
            line_start = m.start() + m.group().rfind('\n') + 1
        pos = m.end()
    tokens.append(Token('eof', '', line, pos - line_start + 1))
    return tokens


class Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, text: str):
        self._tokens = tokenize(text)
        self._pos = 0
        # Source positions of variable occurrences, for scope errors.
        self.positions: Dict[int, Tuple[int, int]] = {}

    # token helpers

    def _peek(self, offset=0) -> Token:
        return self._tokens[min(self._pos + offset, len(self._tokens) - 1)]

    def _at(self, text, offset=0) -> bool:
        tok = self._peek(offset)
        return tok.kind in ('keyword', 'sym') and tok.text == text

    def _advance(self) -> Token:
        tok = self._peek()
        self._pos += 1
        return tok

    def _error(self, message, tok: Optional[Token] = None):
        tok = tok or self._peek()
        if tok.kind == 'eof':
            return LcSyntaxError('%s: unexpected end of input' % message, tok.line, tok.column)
        return LcSyntaxError('%s: unexpected %r' % (message, tok.text), tok.line, tok.column)

    def _expect(self, text) -> Token:
        if not self._at(text):
            raise self._error('Expected %r' % text)
        return self._advance()

    def _name(self) -> str:
        tok = self._peek()
        if tok.kind != 'name':
            raise self._error('Expected a name')
        self._advance()
        return tok.text

    @property
    def at_end(self) -> bool:
        """Whether all input is consumed."""
        return self._peek().kind == 'eof'

    # types

    def parse_type(self) -> Type:
        """``type ::= prod ['->' type]``."""
        left = self._prod_type()
        if self._at('->'):
            self._advance()
            return FunT(left, self.parse_type())
        return left

    def _prod_type(self) -> Type:
        t = self._postfix_type()
        while self._at('*'):
            self._advance()
            t = PairT(t, self._postfix_type())
        return t

    def _postfix_type(self) -> Type:
        tok = self._peek()
        if self._at('bool'):
            self._advance()
            t = BOOL
        elif tok.kind == 'tyvar':
            self._advance()
            t = ALPHA
        elif self._at('('):
            self._advance()
            t = self.parse_type()
            self._expect(')')
        else:
            raise self._error('Expected a type')
        while self._at('list'):
            self._advance()
            t = ListT(t)
        return t

    # declarations

    def parse_decl(self) -> Fun:
        """``'fun' NAME param [':' type] '=' expr``."""
        self._expect('fun')
        name = self._name()
        arg_type = None
        if self._at('('):
            self._advance()
            arg = self._name()
            self._expect(':')
            arg_type = self.parse_type()
            self._expect(')')
        else:
            arg = self._name()
        ret_type = None
        if self._at(':'):
            self._advance()
            ret_type = self.parse_type()
        self._expect('=')
        body = self.parse_expr()
        return Fun(name, arg, body, arg_type, ret_type)

    def parse_program(self) -> Program:
        """A sequence of declarations up to the end of input."""
        decls = []
        while not self.at_end:
            decls.append(self.parse_decl())
        return Program(tuple(decls))

    # expressions

    def parse_expr(self) -> Expr:
        """Any expression."""
        if self._at('let'):
            return self._let()
        if self._at('if'):
            self._advance()
            cond = self.parse_expr()
            self._expect('then')
            then_ = self.parse_expr()
            self._expect('else')
            return If(cond, then_, self.parse_expr())
        if self._at('case'):
            return self._case()
        if self._at('fun'):
            return self.parse_decl()
        head = self._app()
        if self._at('::'):
            self._advance()
            return Cons(head, self.parse_expr())
        return head

    def _let(self) -> Expr:
        self._expect('let')
        if self._at('fun'):
            fun = self.parse_decl()
            self._expect('in')
            return Let(fun.self_name, fun, self.parse_expr())
        if self._at('(') and self._at(')', 1):
            self._advance()
            self._advance()
            name = '_'
        elif self._at('('):
            self._advance()
            fst = self._name()
            self._expect(',')
            snd = self._name()
            self._expect(')')
            self._expect('=')
            bound = self.parse_expr()
            self._expect('in')
            return CasePair(bound, fst, snd, self.parse_expr())
        else:
            name = self._name()
        self._expect('=')
        bound = self.parse_expr()
        self._expect('in')
        return Let(name, bound, self.parse_expr())

    def _alternative(self):
        """One case alternative: ('nil', None, None, e) | ('cons', h, t, e) | ('pair', x, y, e)."""
        if self._at('[') and self._at(']', 1):
            self._advance()
            self._advance()
            self._expect('->')
            return 'nil', None, None, self.parse_expr()
        if self._at('('):
            self._advance()
            fst = self._name()
            self._expect(',')
            snd = self._name()
            self._expect(')')
            self._expect('->')
            return 'pair', fst, snd, self.parse_expr()
        head = self._name()
        self._expect('::')
        tail = self._name()
        self._expect('->')
        return 'cons', head, tail, self.parse_expr()

    def _case(self) -> Expr:
        self._expect('case')
        scrutinee = self.parse_expr()
        self._expect('of')
        if self._at('|'):
            self._advance()
        first_tok = self._peek()
        kind, a, b, body = self._alternative()
        if kind == 'pair':
            return CasePair(scrutinee, a, b, body)
        self._expect('|')
        kind2, c, d, body2 = self._alternative()
        if {kind, kind2} != {'nil', 'cons'}:
            raise self._error('A list case needs one [] and one :: alternative', first_tok)
        if kind == 'nil':
            return CaseList(scrutinee, body, c, d, body2)
        return CaseList(scrutinee, body2, a, b, body)

    def _starts_atom(self) -> bool:
        tok = self._peek()
        if tok.kind == 'name':
            return True
        return tok.kind in ('keyword', 'sym') and tok.text in ('true', 'false', '(', '[', 'tick')

    def _app(self) -> Expr:
        if not self._starts_atom():
            raise self._error('Expected an expression')
        e = self._atom()
        while self._starts_atom():
            e = App(e, self._atom())
        return e

    def _atom(self) -> Expr:
        tok = self._advance()
        if tok.kind == 'name':
            node = Var(tok.text)
            self.positions[id(node)] = (tok.line, tok.column)
            return node
        if tok.text in ('true', 'false'):
            return BoolLit(tok.text == 'true')
        if tok.text == 'tick':
            num = self._peek()
            if num.kind != 'number':
                raise self._error('Expected a cost after tick')
            self._advance()
            return Tick(Fraction(num.text))
        if tok.text == '[':
            if self._at(']'):
                self._advance()
                return Nil()
            items = [self.parse_expr()]
            while self._at(','):
                self._advance()
                items.append(self.parse_expr())
            self._expect(']')
            out: Expr = Nil()
            for item in reversed(items):
                out = Cons(item, out)
            return out
        # '('
        inner = self.parse_expr()
        if self._at(','):
            self._advance()
            snd = self.parse_expr()
            self._expect(')')
            return Pair(inner, snd)
        self._expect(')')
        return inner

    # scoping

    def check_scope(self, e: Expr, bound: frozenset):
        """Raise `UnboundVariableError` for the first variable used outside its scope."""
        if isinstance(e, Var):
            if e.name not in bound:
                raise UnboundVariableError(e.name, *self.positions.get(id(e), (None, None)))
            return
        if isinstance(e, Let):
            self.check_scope(e.bound, bound)
            self.check_scope(e.body, bound | {e.name})
        elif isinstance(e, Fun):
            self.check_scope(e.body, bound | {e.self_name, e.arg})
        elif isinstance(e, CaseList):
            self.check_scope(e.scrutinee, bound)
            self.check_scope(e.nil_branch, bound)
            self.check_scope(e.cons_branch, bound | {e.head, e.tail})
        elif isinstance(e, CasePair):
            self.check_scope(e.scrutinee, bound)
            self.check_scope(e.body, bound | {e.fst, e.snd})
        else:
            for c in children(e):
                self.check_scope(c, bound)


def parse(text: str, free=()) -> Expr:
    """
    Parse one expression.

    Args:
        text (str): source text; a lone ``fun`` declaration parses as a `Fun` expression.
        free (Iterable[str]): names allowed to occur free.

    Returns:
        Expr: the AST, not yet let-normal.

    Raises:
        LcSyntaxError: malformed input, with line and column.
        UnboundVariableError: a variable is used outside its scope.
    """
    parser = Parser(text)
    e = parser.parse_expr()
    if not parser.at_end:
        raise parser._error('Expected end of input')  # pylint: disable=protected-access
    parser.check_scope(e, frozenset(free))
    return e


def parse_program(text: str) -> Program:
    """
    Parse a sequence of top-level declarations.

    Raises:
        LcSyntaxError: malformed input or a duplicate declaration.
        UnboundVariableError: a variable is used outside its scope.
    """
    parser = Parser(text)
    program = parser.parse_program()
    seen = set()
    for d in program.decls:
        if d.self_name in seen:
            raise LcSyntaxError('Duplicate declaration of %r' % d.self_name, 1, 1)
        seen.add(d.self_name)
    for d in program.decls:
        parser.check_scope(d, frozenset(seen))
    return program
