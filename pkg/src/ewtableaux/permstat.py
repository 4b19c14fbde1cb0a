"""Permutations (one-indexed tuples of 1..n), their statistics and patterns."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def parse_perm(text: str) -> Perm:
    """Digit string ("2413") for n <= 9, or comma separated ("10,2,...")."""
    text = text.strip()
    if "," in text:
        letters = [int(tok) for tok in text.split(",") if tok.strip()]
    else:
        if not text.isdigit():
            raise ValueError(f"cannot read a permutation from {text!r}")
        letters = [int(ch) for ch in text]
    return check_perm(letters)


def format_perm(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def inverse(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, a in enumerate(p, 1):
        out[a - 1] = i
    return tuple(out)


# -- statistics -------------------------------------------------------------


def descents(p: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def descent_bottoms(p: Sequence[int]) -> set[int]:
    return {p[i] for i in range(1, len(p)) if p[i - 1] > p[i]}


def descent_tops(p: Sequence[int]) -> set[int]:
    return {p[i - 1] for i in range(1, len(p)) if p[i - 1] > p[i]}


def excedance_bottoms(p: Sequence[int]) -> set[int]:
    return {i for i, a in enumerate(p, 1) if a > i}


def excedance_tops(p: Sequence[int]) -> set[int]:
    return {a for i, a in enumerate(p, 1) if a > i}


def weak_excedance_bottoms(p: Sequence[int]) -> set[int]:
    return {i for i, a in enumerate(p, 1) if a >= i}


def fixed_points(p: Sequence[int]) -> set[int]:
    return {i for i, a in enumerate(p, 1) if a == i}


def rtl_minima(p: Sequence[int]) -> set[int]:
    out, low = set(), len(p) + 1
    for a in reversed(p):
        if a < low:
            out.add(a)
            low = a
    return out


def big_descents(p: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(p)) if p[i - 1] >= p[i] + 2)


def decreasing_adjacencies(p: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(p)) if p[i - 1] == p[i] + 1)


def run_decomposition(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Up-down runs of ``0p`` with the first letter of each run removed.

    >>> run_decomposition((5, 1, 3, 6, 8, 4, 2, 7))
    [(5,), (1,), (3, 6, 8), (4, 2), (7,)]
    """
    word = (0,) + tuple(p)
    blocks: list[list[int]] = []
    prev_up = None
    for i in range(1, len(word)):
        up = word[i] > word[i - 1]
        if up != prev_up:
            blocks.append([])
            prev_up = up
        blocks[-1].append(word[i])
    return [tuple(b) for b in blocks]


@dataclass(frozen=True)
class StatRecord:
    descent_bottoms: frozenset[int]
    descent_tops: frozenset[int]
    excedance_bottoms: frozenset[int]
    excedance_tops: frozenset[int]
    weak_excedance_bottoms: frozenset[int]
    fixed_points: frozenset[int]
    rtl_minima: frozenset[int]
    big_descents: int
    decreasing_adjacencies: int
    run_decomposition: tuple[tuple[int, ...], ...]
    up_down_run_count: int


def stats(p: Sequence[int]) -> StatRecord:
    p = check_perm(p)
    runs = tuple(run_decomposition(p))
    return StatRecord(
        descent_bottoms=frozenset(descent_bottoms(p)),
        descent_tops=frozenset(descent_tops(p)),
        excedance_bottoms=frozenset(excedance_bottoms(p)),
        excedance_tops=frozenset(excedance_tops(p)),
        weak_excedance_bottoms=frozenset(weak_excedance_bottoms(p)),
        fixed_points=frozenset(fixed_points(p)),
        rtl_minima=frozenset(rtl_minima(p)),
        big_descents=big_descents(p),
        decreasing_adjacencies=decreasing_adjacencies(p),
        run_decomposition=runs,
        up_down_run_count=len(runs),
    )


# -- desexc and shifts ------------------------------------------------------


def desexc(p: Sequence[int]) -> Perm:
    """Send descent bottoms to excedance bottoms.

    With ``a_0 = 0``: a letter that has a smaller letter to its right goes to
    the place named by the letter after it; otherwise it goes to the place
    named by the letter after the rightmost letter smaller than it.
    """
    a = (0,) + tuple(p)
    n = len(p)
    # suffix_min[i] = min(a[i:])
    suffix_min = [0] * (n + 2)
    suffix_min[n + 1] = n + 1
    for i in range(n, -1, -1):
        suffix_min[i] = min(a[i], suffix_min[i + 1])
    b = [0] * (n + 1)
    for i in range(1, n + 1):
        if suffix_min[i + 1] < a[i]:
            b[a[i + 1]] = a[i]
        else:
            k = i - 1
            while a[k] > a[i]:
                k -= 1
            b[a[k + 1]] = a[i]
    return tuple(b[1:])


def desexc_inverse(s: Sequence[int]) -> Perm:
    """Inverse of :func:`desexc`.

    Cycles of ``s`` taken by increasing minimum, each written from
    ``s^-1(min)`` along ``s^-1`` and ending at its minimum.
    """
    s = tuple(s)
    sinv = inverse(s)
    seen: set[int] = set()
    out: list[int] = []
    for m in range(1, len(s) + 1):
        if m in seen:
            continue
        x = sinv[m - 1]
        while True:
            out.append(x)
            seen.add(x)
            if x == m:
                break
            x = sinv[x - 1]
    return tuple(out)


def cyclic_shift(p: Sequence[int], direction: str = "right") -> Perm:
    p = tuple(p)
    if not p:
        return p
    if direction == "right":
        return (p[-1],) + p[:-1]
    if direction == "left":
        return p[1:] + (p[0],)
    raise ValueError(f"direction must be 'right' or 'left', not {direction!r}")


def cyclic_down_shift(p: Sequence[int]) -> Perm:
    n = len(p)
    return tuple(a - 1 if a > 1 else n for a in p)


def cyclic_up_shift(p: Sequence[int]) -> Perm:
    n = len(p)
    return tuple(a + 1 if a < n else 1 for a in p)


# -- patterns ---------------------------------------------------------------


VINCULAR_32_1 = "32-1"


def _classical(pattern: str) -> Perm:
    try:
        pat = check_perm([int(ch) for ch in pattern])
    except ValueError:
        raise ValueError(f"unsupported pattern {pattern!r}") from None
    if not 1 <= len(pat) <= 4:
        raise ValueError(f"classical patterns of length 1..4 only, got {pattern!r}")
    return pat


def _order_isomorphic(seq: Sequence[int], pat: Sequence[int]) -> bool:
    return all(
        (seq[i] < seq[j]) == (pat[i] < pat[j])
        for i in range(len(pat))
        for j in range(i + 1, len(pat))
    )


def contains_pattern(p: Sequence[int], pattern: str | Sequence[int]) -> bool:
    """Classical containment for length <= 4, or the vincular pattern "32-1"."""
    p = tuple(p)
    if isinstance(pattern, str) and pattern.replace("–", "-") == VINCULAR_32_1:
        # adjacent descent a_i > a_{i+1} followed later by something smaller
        n = len(p)
        suffix_min = [n + 1] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix_min[i] = min(p[i], suffix_min[i + 1])
        return any(
            p[i] > p[i + 1] and suffix_min[i + 2] < p[i + 1] for i in range(n - 2)
        )
    pat = _classical(pattern if isinstance(pattern, str) else "".join(map(str, pattern)))
    return any(_order_isomorphic(sub, pat) for sub in combinations(p, len(pat)))


def avoids(p: Sequence[int], pattern: str | Sequence[int]) -> bool:
    return not contains_pattern(p, pattern)


def set_partitions(n: int) -> Iterable[list[list[int]]]:
    """Set partitions of [n] as lists of blocks, blocks ordered by minimum."""
    if n == 0:
        yield []
        return
    for part in set_partitions(n - 1):
        for i in range(len(part)):
            yield [b + [n] if k == i else b for k, b in enumerate(part)]
        yield part + [[n]]


def is_noncrossing(blocks: Sequence[Sequence[int]]) -> bool:
    where = {x: k for k, b in enumerate(blocks) for x in b}
    elems = sorted(where)
    for a, b, c, d in combinations(elems, 4):
        if where[a] == where[c] and where[b] == where[d] and where[a] != where[b]:
            return False
    return True
