"""Spin-character labels, split conjugacy classes, and exact character values.

Covers both the double cover of the symmetric group ("sym") and of the
alternating group ("alt").  Values on odd-type classes come from a bar-strip
recursion whose sign and 2-power conventions are locked by tests against a
Schur Q-function oracle, the bar-length degree formula, and full row
orthogonality.  Values on the remaining split classes follow the classical
closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algnum import AlgNum
from .barcomb import BarPartition, bar_partitions, bar_removals, partitions, sigma

SYM = "sym"
ALT = "alt"
SELF = "self"
PLUS = "plus"
MINUS = "minus"


def z_cycle(pi: tuple[int, ...]) -> int:
    """Order of the centralizer in the plain symmetric group of a cycle type."""
    z = 1
    mult: dict[int, int] = {}
    for a in pi:
        mult[a] = mult.get(a, 0) + 1
    for a, m in mult.items():
        z *= a**m * math.factorial(m)
    return z


def is_odd_type(pi: tuple[int, ...]) -> bool:
    return all(a % 2 for a in pi)


def is_strict(pi: tuple[int, ...]) -> bool:
    return all(pi[i] > pi[i + 1] for i in range(len(pi) - 1))


@dataclass(frozen=True)
class SpinLabel:
    """A spin character label: bar partition plus association tag.

    Sym cover: a self-associate character when sigma is +1, a plus/minus
    pair when sigma is -1.  Alt cover: the dual rule, except that for n = 1
    the two covers coincide and the single character is self-associate.
    """

    group: str
    lam: BarPartition
    tag: str

    def __post_init__(self):
        if self.group not in (SYM, ALT):
            raise ValueError(f"unknown group {self.group!r}")
        if self.tag not in (SELF, PLUS, MINUS):
            raise ValueError(f"unknown tag {self.tag!r}")
        s = sigma(self.lam)
        if self.group == SYM:
            want_self = s == 1
        else:
            want_self = s == -1 or self.lam.n == 1
        if (self.tag == SELF) != want_self:
            raise ValueError(f"tag {self.tag} inconsistent with sigma={s} for {self.lam} in {self.group}")

    @property
    def n(self) -> int:
        return self.lam.n

    def is_pair(self) -> bool:
        return self.tag != SELF

    def __repr__(self):
        mark = {SELF: "", PLUS: "+", MINUS: "-"}[self.tag]
        return f"<{self.group}:{self.lam.parts}{mark}>"


def labels(group: str, n: int) -> tuple[SpinLabel, ...]:
    """All spin labels of the chosen cover, in canonical order."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for lam in bar_partitions(n):
        s = sigma(lam)
        if group == SYM:
            split = s == -1
        elif group == ALT:
            split = s == 1 and n > 1
        else:
            raise ValueError(f"unknown group {group!r}")
        if split:
            out.append(SpinLabel(group, lam, PLUS))
            out.append(SpinLabel(group, lam, MINUS))
        else:
            out.append(SpinLabel(group, lam, SELF))
    return tuple(out)


def epsilon_twist(x: SpinLabel) -> SpinLabel:
    """Tensor with the sign lift: swaps the pair, fixes self-associates."""
    if x.tag == SELF:
        return x
    return SpinLabel(x.group, x.lam, MINUS if x.tag == PLUS else PLUS)


@dataclass(frozen=True)
class SplitClass:
    """A conjugacy class of the cover on which spin characters can live.

    ``pi`` is the cycle type, ``zflag`` picks the class or its central
    translate, and ``branch`` distinguishes the two alternating-group classes
    when a class of all-odd distinct type splits there (0 when it does not).
    """

    group: str
    pi: tuple[int, ...]
    zflag: int
    branch: int
    centralizer_order: int

    @property
    def n(self) -> int:
        return sum(self.pi)

    def is_regular(self, p: int) -> bool:
        return all(a % p for a in self.pi)

    def __repr__(self):
        b = f"#{self.branch}" if self.branch else ""
        z = "z." if self.zflag else ""
        return f"[{self.group}:{z}{self.pi}{b}]"


def _class_types(group: str, n: int) -> list[tuple[tuple[int, ...], list[int], int]]:
    """(type, branches, centralizer_order) for every split type, canonical order."""
    out = []
    for mu in partitions(n):
        pi = mu.parts
        odd = is_odd_type(pi)
        strict = is_strict(pi)
        if group == SYM:
            # split types: all parts odd, or distinct with an odd number of even parts
            if odd or (strict and (n - len(pi)) % 2 == 1):
                out.append((pi, [0], 2 * z_cycle(pi)))
        else:
            if n == 1:
                out.append((pi, [0], 2))
                continue
            even_parts = sum(1 for a in pi if a % 2 == 0)
            if even_parts % 2:
                continue  # odd permutations, not in the alternating group
            if odd and strict:
                out.append((pi, [1, 2], 2 * z_cycle(pi)))
            elif odd or strict:
                out.append((pi, [0], z_cycle(pi)))
    return out


def split_classes(
    n: int, regular_only_for: int | None = None, group: str = SYM
) -> tuple[SplitClass, ...]:
    """Split classes of the cover, both z-parities, canonical order.

    With ``regular_only_for=p`` only classes whose type has all parts coprime
    to p are kept (the p-regular split classes).
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for pi, branches, cent in _class_types(group, n):
        if regular_only_for is not None and any(a % regular_only_for == 0 for a in pi):
            continue
        for branch in branches:
            for zflag in (0, 1):
                out.append(SplitClass(group, pi, zflag, branch, cent))
    return tuple(out)


@lru_cache(maxsize=None)
def _odd_value(parts: tuple[int, ...], pi: tuple[int, ...]) -> int:
    """Common value of the labelled spin character(s) on the class of odd type pi.

    Bar-strip recursion: peel the largest part of pi as a bar of that length;
    each removal contributes (-1)**leg, doubled when it crosses from a
    self-associate label to a pair.  Cached; safe under concurrent use.
    """
    if not pi:
        return 1 if not parts else 0
    r, rho = pi[0], pi[1:]
    n = sum(parts)
    s_lam = 1 if (n - len(parts)) % 2 == 0 else -1
    total = 0
    for rest, leg in bar_removals(parts, r):
        s_mu = 1 if ((n - r) - len(rest)) % 2 == 0 else -1
        c = -1 if leg % 2 else 1
        if s_lam == 1 and s_mu == -1:
            c *= 2
        total += c * _odd_value(rest, rho)
    return total


def _pair_difference(lam: BarPartition) -> AlgNum:
    """Value separating the two alternating-cover constituents of a sigma=+1 label.

    Equals i**((n-l)/2) * sqrt(prod of parts); the plus constituent takes the
    + sign on the canonical first branch (tie-break convention; verification
    results are invariant under the simultaneous swap).
    """
    m = (lam.n - lam.length) // 2
    z = math.prod(lam.parts)
    return AlgNum.i_power(m) * AlgNum.sqrt_int(z)


def char_value(x: SpinLabel, c: SplitClass) -> AlgNum:
    """Exact value of the labelled spin character on the given class."""
    if x.group != c.group:
        raise ValueError(f"label group {x.group} does not match class group {c.group}")
    if x.n != c.n:
        raise ValueError(f"label size {x.n} does not match class size {c.n}")
    v = _char_value_zflag0(x, c)
    return -v if c.zflag else v


def _char_value_zflag0(x: SpinLabel, c: SplitClass) -> AlgNum:
    lam, pi = x.lam, c.pi
    if x.group == SYM:
        if is_odd_type(pi):
            return AlgNum.from_rational(_odd_value(lam.parts, pi))
        # remaining split types are strict with sigma = -1; only the matching
        # pair is nonzero there, with the classical four-value sign chain
        if x.tag == SELF or pi != lam.parts:
            return AlgNum()
        k = lam.length
        base = AlgNum.i_power((lam.n - k + 1) // 2) * AlgNum.sqrt_int(math.prod(pi) // 2)
        return base if x.tag == PLUS else -base
    # alternating cover
    if x.tag == SELF:
        # restriction of one member of a sym pair (or the degenerate n=1 label)
        return AlgNum.from_rational(_odd_value(lam.parts, pi)) if is_odd_type(pi) else AlgNum()
    base = AlgNum()
    if is_odd_type(pi):
        whole = _odd_value(lam.parts, pi)
        if pi != lam.parts and whole % 2:
            raise RuntimeError(f"odd restriction value {whole} for {x} at {c}")
        base = AlgNum.from_rational(Fraction(whole, 2))
    if pi == lam.parts:
        delta = _pair_difference(lam) / 2
        if x.tag == MINUS:
            delta = -delta
        if c.branch == 2:
            delta = -delta
        base = base + delta
    return base


def degree(x: SpinLabel) -> int:
    """Character degree: the value at the identity class."""
    d = _odd_value(x.lam.parts, (1,) * x.n)
    if x.group == ALT and x.tag != SELF:
        assert d % 2 == 0
        return d // 2
    return d


def value_vector(x: SpinLabel, classes: tuple[SplitClass, ...]) -> tuple[AlgNum, ...]:
    return tuple(char_value(x, c) for c in classes)


def inner_product(
    f: tuple[AlgNum, ...], g: tuple[AlgNum, ...], classes: tuple[SplitClass, ...]
) -> Fraction:
    """Hermitian inner product of two spin value vectors over a class list.

    The class list must carry both z-parities; class sizes enter through the
    stored centralizer orders.  Spin characters vanish off the split classes,
    so the sum over these classes is the full group average.
    """
    if not (len(f) == len(g) == len(classes)):
        raise ValueError("vectors and class list must have equal length")
    total = AlgNum()
    for vf, vg, c in zip(f, g, classes):
        total = total + vf * vg.conjugate() * Fraction(1, c.centralizer_order)
    return total.as_rational()
