"""Canonical JSON for tilings.

Keys come in a fixed order (width, length, squares; index, x, y, side per
square), exact scalars are written as text, and there is no whitespace, so
equal tilings give identical bytes.
"""
import json
import logging
from fractions import Fraction

from django.core.serializers.json import DjangoJSONEncoder

from exact_arith.quadratic import QuadraticNumber, format_exact, parse_exact
from golden_app.exceptions import GoldenError, InvariantViolation, ParseError
from tiling.paving import PlacedSquare, Tiling, verify

logger = logging.getLogger(__name__)

SQUARE_KEYS = ('index', 'x', 'y', 'side')


class ExactJSONEncoder(DjangoJSONEncoder):
    """Writes Fraction and QuadraticNumber values in their exact text form."""

    def default(self, o):
        if isinstance(o, (Fraction, QuadraticNumber)):
            return format_exact(o)
        return super().default(o)


def dumps(payload):
    return json.dumps(payload, cls=ExactJSONEncoder, separators=(',', ':'), ensure_ascii=False)


def tiling_to_dict(t: Tiling):
    payload = {
        'width': t.width,
        'length': t.length,
        'squares': [
            {'index': s.index, 'x': s.x, 'y': s.y, 'side': s.side}
            for s in t.squares
        ],
    }
    if not t.complete:
        payload['partial'] = True
    return payload


def to_json(t: Tiling) -> str:
    return dumps(tiling_to_dict(t))


def _scalar(value, where):
    if not isinstance(value, str):
        raise ParseError(f"{where} must be an exact scalar string, got {value!r}")
    try:
        return parse_exact(value)
    except GoldenError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _parse_square(raw, position):
    if not isinstance(raw, dict) or set(raw) != set(SQUARE_KEYS):
        raise ParseError(f"square {position} must have exactly the keys {', '.join(SQUARE_KEYS)}")
    index = raw['index']
    if not isinstance(index, int) or isinstance(index, bool):
        raise ParseError(f"square {position}: index must be an integer")
    if index != position:
        raise ParseError(f"square {position}: index {index} does not match its position")
    return index, *(_scalar(raw[key], f"square {position} {key}") for key in ('x', 'y', 'side'))


def from_json(text: str) -> Tiling:
    """Rebuild a tiling and re-check it; a tiling that does not verify is rejected."""
    try:
        payload = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise ParseError(f"malformed tiling JSON: {exc}") from exc
    if not isinstance(payload, dict) or not {'width', 'length', 'squares'} <= set(payload):
        raise ParseError("tiling JSON needs width, length and squares")
    if not isinstance(payload['squares'], list):
        raise ParseError("squares must be a list")
    partial = payload.get('partial', False)
    if not isinstance(partial, bool):
        raise ParseError("partial must be a boolean")

    width = _scalar(payload['width'], 'width')
    length = _scalar(payload['length'], 'length')
    rows = [_parse_square(raw, position) for position, raw in enumerate(payload['squares'])]

    try:
        squares = tuple(PlacedSquare(x, y, side, index) for index, x, y, side in rows)
    except GoldenError as exc:
        logger.info(f"rejected square: {exc}")
        raise InvariantViolation(['containment']) from exc
    try:
        tiling = Tiling(width, length, squares, complete=not partial)
    except GoldenError as exc:
        raise InvariantViolation(['dimensions']) from exc

    report = verify(tiling)
    if not report.certified:
        raise InvariantViolation(report.failed_checks())
    return tiling
