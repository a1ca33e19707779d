"""Text and JSON forms of algebra elements, monomials and module vectors.

Text forms::

    4*L[0] + 1/2*C
    -2*I[-1] v + L[-1] v
    (1+√2)*I[-1] I[-√2] L[-3] v

Coefficients with both a rational and a radical part are parenthesised;
everything else is printed bare.  Module words are parsed as arbitrary
words and normalised by the module action, so normal-form input
round-trips exactly.
"""

from __future__ import annotations

import re

from .algebra import CENTRAL_TAGS, AlgebraElement, Generator
from .errors import ParseError
from .groups import INT, OrderedGroup
from .scalars import ONE, FieldScalar, format_scalar, parse_scalar
from .verma import Monomial, ModuleVector, VermaModule


def _coeff_prefix(c: FieldScalar, first: bool) -> tuple[str, str]:
    """Split a coefficient into a separator/sign and a printable magnitude."""
    simple = c.a == 0 or c.b == 0
    if simple and c.sign() < 0:
        sign, mag = "-", -c
    else:
        sign, mag = "+", c
    if mag == ONE:
        body = ""
    elif simple:
        body = format_scalar(mag) + "*"
    else:
        body = f"({format_scalar(mag)})*"
    if first:
        return ("-" if sign == "-" else ""), body
    return f" {sign} ", body


def _join(parts: list[tuple[FieldScalar, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for k, (c, body) in enumerate(parts):
        sep, coeff = _coeff_prefix(c, k == 0)
        out.append(f"{sep}{coeff}{body}")
    return "".join(out)


def format_generator(g: Generator) -> str:
    return str(g)


def format_algebra_element(u: AlgebraElement) -> str:
    return _join([(c, str(g)) for g, c in u.items()])


def format_monomial(m: Monomial) -> str:
    factors = [f"I[{format_scalar(-p.value)}]" for p in m.ps]
    factors += [f"L[{format_scalar(-j.value)}]" for j in m.js]
    factors.append("v")
    return " ".join(factors)


def format_vector(v: ModuleVector) -> str:
    return _join([(c, format_monomial(m)) for m, c in v.items()])


# -- parsing ---------------------------------------------------------------


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split at top-level ``+``/``-`` into ``(sign, body)`` pairs."""
    s = text.strip()
    if not s:
        raise ParseError("empty expression", text, 0)
    terms: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    start = 0
    i = 0
    pending = True  # expecting the start of a term
    while i < len(s):
        ch = s[i]
        if ch in "[(":
            depth += 1
            pending = False
        elif ch in "])":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced bracket", text, i)
        elif depth == 0 and ch in "+-":
            if pending:
                if ch == "-":
                    sign = -sign
                start = i + 1
            else:
                terms.append((sign, s[start:i].strip()))
                sign = -1 if ch == "-" else 1
                start = i + 1
                pending = True
        elif not ch.isspace():
            pending = False
        i += 1
    if depth != 0:
        raise ParseError("unbalanced bracket", text, len(s))
    tail = s[start:].strip()
    if not tail:
        raise ParseError("dangling operator", text, len(s))
    terms.append((sign, tail))
    return terms


_COEFF = re.compile(r"^\s*(\([^()]*\)|[0-9/√]+(?:sqrt\d+)?)\s*\*\s*(.*)$", re.S)


def _split_coeff(term: str, whole: str) -> tuple[FieldScalar, str]:
    m = _COEFF.match(term)
    if not m:
        return ONE, term.strip()
    raw = m.group(1)
    if raw.startswith("("):
        raw = raw[1:-1]
    try:
        return parse_scalar(raw), m.group(2).strip()
    except ParseError as exc:
        raise ParseError(f"bad coefficient {raw!r}", whole, whole.find(raw)) from exc


_GEN = re.compile(r"^(L|I)\[([^\]]+)\]$|^(CLI|CI|C)$")


def parse_generator(text: str, group: OrderedGroup = INT) -> Generator:
    t = text.strip()
    m = _GEN.match(t)
    if not m:
        raise ParseError("expected L[i], I[i], C, CI or CLI", text, 0)
    if m.group(3):
        return Generator(m.group(3))
    idx = parse_scalar(m.group(2))
    try:
        return Generator(m.group(1), group.element(idx))
    except ValueError as exc:
        raise ParseError(str(exc), text) from exc


def parse_algebra_element(text: str, group: OrderedGroup = INT) -> AlgebraElement:
    total = AlgebraElement.zero(group)
    if text.strip() == "0":
        return total
    for sign, term in _split_terms(text):
        coeff, body = _split_coeff(term, text)
        g = parse_generator(body, group)
        total = total + AlgebraElement({g: coeff * sign}, group)
    return total


_FACTOR = re.compile(r"(L|I)\[([^\]]+)\]")


def parse_word(text: str, group: OrderedGroup) -> list[Generator]:
    """Parse ``I[-1] L[-2] v`` into a list of generators (``v`` stripped)."""
    body = text.strip()
    if not body.endswith("v"):
        raise ParseError("module word must end in 'v'", text, len(text))
    body = body[:-1].strip()
    word: list[Generator] = []
    pos = 0
    for m in _FACTOR.finditer(body):
        if body[pos:m.start()].strip():
            raise ParseError("unexpected text in word", text, pos)
        word.append(parse_generator(m.group(0), group))
        pos = m.end()
    if body[pos:].strip():
        raise ParseError("unexpected text in word", text, pos)
    return word


def parse_vector(text: str, module: VermaModule) -> ModuleVector:
    total = module.zero()
    if text.strip() == "0":
        return total
    for sign, term in _split_terms(text):
        coeff, body = _split_coeff(term, text)
        word = parse_word(body, module.group)
        total = total + module.act_word(word, module.vh) * (coeff * sign)
    return total


def parse_monomial(text: str, module: VermaModule) -> Monomial:
    v = parse_vector(text, module)
    if len(v) != 1 or next(iter(v.terms.values())) != ONE:
        raise ParseError("not a normal-form monomial", text)
    return next(iter(v.terms))


# -- JSON ------------------------------------------------------------------


def algebra_to_json(u: AlgebraElement) -> list[dict]:
    return [
        {"tag": g.tag, "index": None if g.index is None else format_scalar(g.index.value), "coeff": format_scalar(c)}
        for g, c in u.items()
    ]


def algebra_from_json(data: list[dict], group: OrderedGroup = INT) -> AlgebraElement:
    terms: dict[Generator, FieldScalar] = {}
    for item in data:
        tag = item["tag"]
        if tag in CENTRAL_TAGS:
            g = Generator(tag)
        else:
            g = Generator(tag, group.element(parse_scalar(item["index"])))
        terms[g] = terms.get(g, FieldScalar(0)) + parse_scalar(item["coeff"])
    return AlgebraElement(terms, group)


def monomial_to_json(m: Monomial) -> dict:
    return {"ps": [format_scalar(p.value) for p in m.ps], "js": [format_scalar(j.value) for j in m.js]}


def vector_to_json(v: ModuleVector) -> list[dict]:
    return [dict(coeff=format_scalar(c), **monomial_to_json(m)) for m, c in v.items()]


def vector_from_json(data: list[dict], module: VermaModule) -> ModuleVector:
    terms: dict[Monomial, FieldScalar] = {}
    for item in data:
        m = module.monomial([parse_scalar(p) for p in item["ps"]], [parse_scalar(j) for j in item["js"]])
        terms[m] = terms.get(m, FieldScalar(0)) + parse_scalar(item["coeff"])
    return ModuleVector(terms, module)
