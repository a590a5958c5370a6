"""
Текстовые форматы: рациональные числа, множества, файлы зарядов и моделей Яна

Рациональные числа всегда выводятся как p/q.
"""
from fractions import Fraction
import logging
import re
from typing import Iterator, List, Tuple

from .algebras import CanonicalSet, canonicalize
from .charges import Charge, density, left_limit, point_mass
from .completion import ExtendedSet, Span
from .errors import OutOfRange, ParseError, RangeError
from .schemas import YanMode, YanModel

logger = logging.getLogger(__name__)

_RATIONAL = re.compile(r"^-?\d+(?:/\d+)?$")
_R = r"\s*(-?\d+(?:/\d+)?)\s*"
_SET_ITEM = re.compile(r"^\[" + _R + "," + _R + r"\)$")
_SPAN_ITEM = re.compile(r"^([\[(])" + _R + "," + _R + r"([\])])$")
_POINT_ITEM = re.compile(r"^\{" + _R + r"\}$")

EMPTY_TOKEN = "empty"


def parse_rational(token: str, line: int = None, column: int = None) -> Fraction:
    if not _RATIONAL.match(token):
        raise ParseError(f"expected a rational p/q, got {token!r}", line, column)
    numerator, _, denominator = token.partition("/")
    if denominator and int(denominator) == 0:
        raise ParseError(f"zero denominator in {token!r}", line, column)
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _items(text: str) -> List[str]:
    text = text.strip()
    if not text:
        raise ParseError("empty set expression")
    return [item.strip() for item in text.split("+")]


def parse_set(text: str) -> CanonicalSet:
    """`[a,b)+[c,d)+...` или `empty`"""
    if text.strip() == EMPTY_TOKEN:
        return CanonicalSet.empty()
    pairs = []
    for item in _items(text):
        match = _SET_ITEM.match(item)
        if not match:
            raise ParseError(f"expected [a,b), got {item!r}")
        pairs.append((parse_rational(match.group(1)), parse_rational(match.group(2))))
    return canonicalize(pairs)


def format_set(A: CanonicalSet) -> str:
    if A.is_empty:
        return EMPTY_TOKEN
    return "+".join(f"[{format_rational(a)},{format_rational(b)})" for a, b in A.intervals)


def parse_extended_set(text: str) -> ExtendedSet:
    """Элементы `[a,b]`, `[a,b)`, `(a,b]`, `(a,b)`, `{x}`, соединенные `+`"""
    if text.strip() == EMPTY_TOKEN:
        return ExtendedSet()
    spans, points = [], []
    for item in _items(text):
        point = _POINT_ITEM.match(item)
        if point:
            points.append(parse_rational(point.group(1)))
            continue
        match = _SPAN_ITEM.match(item)
        if not match:
            raise ParseError(f"expected an interval or {{x}}, got {item!r}")
        opening, a, b, closing = match.groups()
        spans.append(Span(parse_rational(a), parse_rational(b), opening == "[", closing == "]"))
    return ExtendedSet.build(spans, points)


def format_extended_set(B: ExtendedSet) -> str:
    if B.is_empty:
        return EMPTY_TOKEN
    items = [(x, f"{{{format_rational(x)}}}") for x in B.points]
    for s in B.spans:
        text = f"{'[' if s.left_closed else '('}{format_rational(s.left)},{format_rational(s.right)}{']' if s.right_closed else ')'}"
        items.append((s.left, text))
    return "+".join(text for _, text in sorted(items))


def _directives(text: str, header: str) -> Iterator[Tuple[int, List[Tuple[int, str]]]]:
    """Значимые строки после заголовка: (номер строки, [(столбец, токен)])"""
    seen_header = False
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", content)]
        if not tokens:
            continue
        if not seen_header:
            if [t for _, t in tokens] != [header]:
                raise ParseError(f"expected header {header!r}", number, tokens[0][0])
            seen_header = True
            continue
        yield number, tokens
    if not seen_header:
        raise ParseError(f"missing header {header!r}", 1, 1)


_CHARGE_ARITY = {"point": 1, "density": 2, "leftlim": 1}
_CONSTRUCTORS = {"point": point_mass, "density": density, "leftlim": left_limit}


def parse_charge_file(text: str) -> Charge:
    """
    Файл заряда: заголовок `charge`, затем строки
    `point x coeff c`, `density a b coeff c`, `leftlim c coeff k`
    """
    terms = []
    for number, tokens in _directives(text, "charge"):
        column, keyword = tokens[0]
        if keyword not in _CHARGE_ARITY:
            raise ParseError(f"unknown directive {keyword!r}", number, column)
        arity = _CHARGE_ARITY[keyword]
        if len(tokens) != arity + 3 or tokens[arity + 1][1] != "coeff":
            raise ParseError(f"malformed {keyword} directive", number, column)
        args = [parse_rational(t, number, c) for c, t in tokens[1 : arity + 1]]
        coeff = parse_rational(tokens[arity + 2][1], number, tokens[arity + 2][0])
        try:
            primitive = _CONSTRUCTORS[keyword](*args)
        except OutOfRange as e:
            raise RangeError(e.detail, number, tokens[1][0])
        terms.append((primitive, coeff))
    return Charge.from_terms(terms)


def format_charge(mu: Charge) -> str:
    lines = ["charge"]
    lines += [f"point {format_rational(x)} coeff {format_rational(c)}" for x, c in mu.points]
    lines += [
        f"density {format_rational(a)} {format_rational(b)} coeff {format_rational(c)}" for a, b, c in mu.densities
    ]
    lines += [f"leftlim {format_rational(x)} coeff {format_rational(c)}" for x, c in mu.left_limits]
    return "\n".join(lines) + "\n"


def parse_yan_file(text: str) -> YanModel:
    """
    Модель Яна: `yan`, `space n`, `lambda w_0 … w_{n-1}`, `mode cone|hull`, `gen k_0 … k_{n-1}`

    Согласованность размерностей проверяет сама модель (ValidationError).
    """
    space, weights, mode, generators = None, None, YanMode.CONE, []
    for number, tokens in _directives(text, "yan"):
        column, keyword = tokens[0]
        values = tokens[1:]
        if keyword == "space":
            if len(values) != 1 or not values[0][1].isdigit():
                raise ParseError("space expects one positive integer", number, column)
            space = int(values[0][1])
        elif keyword == "lambda":
            weights = tuple(parse_rational(t, number, c) for c, t in values)
        elif keyword == "mode":
            if len(values) != 1 or values[0][1] not in {m.value for m in YanMode}:
                raise ParseError("mode expects cone or hull", number, column)
            mode = YanMode(values[0][1])
        elif keyword == "gen":
            generators.append(tuple(parse_rational(t, number, c) for c, t in values))
        else:
            raise ParseError(f"unknown directive {keyword!r}", number, column)
    if space is None:
        raise ParseError("missing space directive")
    if weights is None:
        raise ParseError("missing lambda directive")
    return YanModel(n=space, weights=weights, generators=tuple(generators), mode=mode)


def format_yan_model(model: YanModel) -> str:
    lines = ["yan", f"space {model.n}", "lambda " + " ".join(format_rational(w) for w in model.weights)]
    lines.append(f"mode {model.mode.value}")
    lines += ["gen " + " ".join(format_rational(v) for v in k) for k in model.generators]
    return "\n".join(lines) + "\n"


def format_points(points) -> str:
    """Подмножество конечного пространства: {0,2}"""
    return "{" + ",".join(str(i) for i in points) + "}"
