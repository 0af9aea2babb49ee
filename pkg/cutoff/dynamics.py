"""The square cut-off process.

A W x L rectangle with 0 < W < L loses its W x W square and leaves the
rectangle of width L - W and length W. The process produces strictly smaller
squares forever exactly when L / W is the golden ratio; for every other ratio
some iterate stops satisfying W < L, and that step is computed exactly.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from exact_arith.quadratic import PHI, QuadraticNumber, as_exact, exact_sign, format_exact
from fibonacci.matrices import mat_power_iter
from fibonacci.sequence import convergent, fib
from golden_app.exceptions import InvalidInput, NotAProperRectangle, StepBudgetExhausted

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RectState:
    w: Fraction | QuadraticNumber
    l: Fraction | QuadraticNumber

    def __post_init__(self):
        w, l = as_exact(self.w), as_exact(self.l)
        if exact_sign(w) <= 0 or exact_sign(l) <= 0:
            raise NotAProperRectangle(f"sides must be positive, got ({format_exact(w)}, {format_exact(l)})")
        object.__setattr__(self, 'w', w)
        object.__setattr__(self, 'l', l)

    def __str__(self):
        return f"({format_exact(self.w)}, {format_exact(self.l)})"

    @property
    def is_proper(self) -> bool:
        return self.w < self.l

    @property
    def ratio(self):
        return as_exact(self.l / self.w)


def _require_proper(r: RectState):
    if not r.is_proper:
        raise NotAProperRectangle(f"need 0 < w < l, got {r}")


def step(r: RectState) -> RectState:
    """Cut off the w x w square: (w, l) -> (l - w, w)."""
    _require_proper(r)
    return RectState(r.l - r.w, r.w)


def orbit(r: RectState, n: int) -> list[RectState]:
    """r and up to n iterates, ending early at the first state with w >= l."""
    _require_proper(r)
    states = [r]
    while len(states) <= n and states[-1].is_proper:
        states.append(step(states[-1]))
    return states


class Verdict(enum.Enum):
    GOLDEN = 'golden'
    FAILS = 'fails'


class FailureMode(enum.Enum):
    EQUAL = 'equal'
    REVERSED = 'reversed'


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    step: int | None = None
    mode: FailureMode | None = None

    @classmethod
    def golden(cls) -> Classification:
        return cls(Verdict.GOLDEN)

    @classmethod
    def fails_at(cls, step: int, mode: FailureMode) -> Classification:
        return cls(Verdict.FAILS, step, mode)

    @property
    def is_golden(self) -> bool:
        return self.verdict is Verdict.GOLDEN

    def to_dict(self):
        if self.is_golden:
            return {'verdict': self.verdict.value}
        return {'verdict': self.verdict.value, 'step': self.step, 'mode': self.mode.value}


def golden_certificate(ratio) -> bool:
    """For (W, L) = (1, ratio): W/(L-W) = L/W and L^2 - L - 1 = 0, both exactly."""
    if not isinstance(ratio, QuadraticNumber) or exact_sign(ratio - 1) <= 0:
        return False
    similar = 1 / (ratio - 1) == ratio
    return similar and ratio * ratio - ratio - 1 == 0


def classify(r: RectState, max_steps: int | None = None) -> Classification:
    _require_proper(r)
    if max_steps is None:
        max_steps = getattr(settings, 'PAVING_CLASSIFY_BUDGET', 10 ** 6)
    if max_steps < 1:
        raise InvalidInput(f"max_steps must be >= 1, got {max_steps}")
    ratio = r.ratio
    if ratio == PHI and golden_certificate(ratio):
        logger.info(f"{r} has the golden ratio, the cut-off never ends")
        return Classification.golden()
    state = r
    for k in range(1, max_steps + 1):
        state = step(state)
        if not state.is_proper:
            mode = FailureMode.EQUAL if state.w == state.l else FailureMode.REVERSED
            logger.info(f"{r} fails at step {k} ({mode.value})")
            return Classification.fails_at(k, mode)
    logger.info(f"{r} still proper after {max_steps} steps")
    raise StepBudgetExhausted(max_steps)


@dataclass(frozen=True)
class LinearInequality:
    """left_w*W + left_l*L < right_w*W + right_l*L."""
    left_w: int
    left_l: int
    right_w: int
    right_l: int

    def __str__(self):
        return f"{_linear_text(self.left_w, self.left_l)} < {_linear_text(self.right_w, self.right_l)}"

    def holds(self, w, l) -> bool:
        return self.left_w * w + self.left_l * l < self.right_w * w + self.right_l * l

    def normalized(self) -> LinearInequality:
        """Collect both sides into a*W < b*L or a*L < b*W with a, b > 0."""
        c_w = self.left_w - self.right_w
        c_l = self.left_l - self.right_l
        if c_w > 0:
            return LinearInequality(c_w, 0, 0, -c_l)
        return LinearInequality(0, c_l, -c_w, 0)


def _linear_text(c_w, c_l):
    terms = [(c, name) for c, name in ((c_w, 'W'), (c_l, 'L')) if c]
    if not terms:
        return '0'
    text = ''
    for c, name in terms:
        sign = '-' if c < 0 else '+'
        magnitude = '' if abs(c) == 1 else str(abs(c))
        if not text:
            text = f"{'-' if c < 0 else ''}{magnitude}{name}"
        else:
            text += f" {sign} {magnitude}{name}"
    return text


def raw_chain_entry(k: int) -> LinearInequality:
    """W^(k) < L^(k) written with the coefficients of M^k, e.g. 2W - L < L - W."""
    if k < 0:
        raise InvalidInput(f"chain index must be >= 0, got {k}")
    m = mat_power_iter(k)
    return LinearInequality(m.m11, m.m12, m.m21, m.m22)


def inequality_chain(n: int) -> list[LinearInequality]:
    """f(k+1) W < f(k) L for even k, f(k) L < f(k+1) W for odd k; k = 0..n."""
    if n < 0:
        raise InvalidInput(f"chain length must be >= 0, got {n}")
    chain = []
    for k in range(n + 1):
        if k % 2 == 0:
            chain.append(LinearInequality(fib(k + 1), 0, 0, fib(k)))
        else:
            chain.append(LinearInequality(0, fib(k), fib(k + 1), 0))
    return chain


class BoundDirection(enum.Enum):
    RATIO_GREATER = 'ratio_greater'
    RATIO_LESS = 'ratio_less'


@dataclass(frozen=True)
class RatioBound:
    value: Fraction
    direction: BoundDirection

    def satisfied_by(self, ratio) -> bool:
        if self.direction is BoundDirection.RATIO_GREATER:
            return ratio > self.value
        return ratio < self.value


def ratio_bound(k: int) -> RatioBound:
    """The bound on L/W imposed by the k-th entry of the chain."""
    if k < 0:
        raise InvalidInput(f"bound index must be >= 0, got {k}")
    direction = BoundDirection.RATIO_GREATER if k % 2 == 0 else BoundDirection.RATIO_LESS
    return RatioBound(convergent(k), direction)
