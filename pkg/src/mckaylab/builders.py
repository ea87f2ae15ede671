"""Exact character tables for symmetric and alternating groups, and Young
permutation characters.

Classes are labeled by cycle type, characters of S_n by their partition,
e.g. "chi(4,1)".  Character values come from the Murnaghan-Nakayama
recursion, memoized on (partition, remaining cycle type); split A_n
characters realize the two exceptional values (e +- sqrt(e*h1*...*hr))/2
exactly through quadratic Gauss sums.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .chartable import Character, CharacterTable, ConjugacyClass, InvalidTableError, validate_table
from .exactnum import Cyclotomic, sqrt_int

Q = Fraction

MAX_SYM_N = 12  # all-pairs BFS and validation stay under minutes up to here

__all__ = [
    "partitions",
    "conjugate_partition",
    "principal_hooks",
    "cycle_type_class_size",
    "mn_value",
    "build_sym_table",
    "build_alt_table",
    "young_perm_character",
    "MAX_SYM_N",
]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate_partition(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def principal_hooks(lam: tuple[int, ...]) -> tuple[int, ...]:
    """Diagonal hook lengths h_i = 2*(lam_i - i) + 1 (1-based diagonal)."""
    return tuple(
        2 * (lam[i] - (i + 1)) + 1 for i in range(len(lam)) if lam[i] >= i + 1
    )


def cycle_type_class_size(ct: tuple[int, ...]) -> int:
    """|class| = n! / prod(i^m_i * m_i!) over cycle lengths i."""
    n = sum(ct)
    z = 1
    for length in set(ct):
        m = ct.count(length)
        z *= length**m * factorial(m)
    return factorial(n) // z


def _is_even_type(ct: tuple[int, ...]) -> bool:
    return (sum(ct) - len(ct)) % 2 == 0


def _splits_in_alternating(ct: tuple[int, ...]) -> bool:
    parts = list(ct)
    return all(p % 2 == 1 for p in parts) and len(set(parts)) == len(parts)


@lru_cache(maxsize=None)
def mn_value(lam: tuple[int, ...], ct: tuple[int, ...]) -> int:
    """chi^lam at a permutation of cycle type ct, by Murnaghan-Nakayama."""
    if sum(lam) != sum(ct):
        raise ValueError(f"partition {lam} and cycle type {ct} have different sizes")
    if not ct:
        return 1
    r, rest = ct[0], ct[1:]
    ell = len(lam)
    beta = tuple(lam[i] + (ell - 1 - i) for i in range(ell))
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        m = len(new_beta)
        new_lam = tuple(new_beta[i] - (m - 1 - i) for i in range(m))
        new_lam = tuple(p for p in new_lam if p > 0)
        total += (-1) ** height * mn_value(new_lam, rest)
    return total


def _sym_classes(n: int) -> list[tuple[int, ...]]:
    # identity type (1^n) first: reverse of descending lex
    return list(reversed(partitions(n)))


def _part_name(lam: tuple[int, ...]) -> str:
    return ",".join(map(str, lam))


def build_sym_table(n: int) -> CharacterTable:
    """The full character table of S_n (1 <= n <= 12)."""
    if not 1 <= n <= MAX_SYM_N:
        raise ValueError(f"n must be between 1 and {MAX_SYM_N}")
    class_types = _sym_classes(n)
    classes = [
        ConjugacyClass(
            name=_part_name(ct),
            size=cycle_type_class_size(ct),
            order=_lcm_of(ct),
            central=cycle_type_class_size(ct) == 1,
        )
        for ct in class_types
    ]
    characters = [
        Character(
            name=f"chi({_part_name(lam)})",
            values=tuple(Cyclotomic.from_rational(mn_value(lam, ct)) for ct in class_types),
        )
        for lam in partitions(n)
    ]
    table = CharacterTable(name=f"S{n}", order=factorial(n), classes=classes, characters=characters)
    report = validate_table(table)
    if not report.ok:
        raise InvalidTableError(report)
    return table


def _lcm_of(ct: tuple[int, ...]) -> int:
    from math import lcm

    return lcm(*ct) if ct else 1


def _alt_classes(n: int) -> list[tuple[tuple[int, ...], str]]:
    """(cycle type, class name) pairs; split classes appear as a/b twins."""
    out = []
    for ct in _sym_classes(n):
        if not _is_even_type(ct):
            continue
        if _splits_in_alternating(ct):
            out.append((ct, _part_name(ct) + "a"))
            out.append((ct, _part_name(ct) + "b"))
        else:
            out.append((ct, _part_name(ct)))
    return out


def build_alt_table(n: int) -> CharacterTable:
    """The full character table of A_n (3 <= n <= 12).

    Characters chi^lam with lam != lam* restrict irreducibly (one copy per
    conjugate pair is kept, labeled by the lexicographically larger
    partition).  Each self-associated lam contributes a split pair named
    chi(lam)+ and chi(lam)-; on the two classes of its diagonal-hook type
    (in table order) chi(lam)+ takes the value with +sqrt first.
    """
    if not 3 <= n <= MAX_SYM_N:
        raise ValueError(f"n must be between 3 and {MAX_SYM_N}")
    class_info = _alt_classes(n)
    order = factorial(n) // 2
    classes = []
    for ct, cname in class_info:
        s_size = cycle_type_class_size(ct)
        size = s_size // 2 if _splits_in_alternating(ct) else s_size
        classes.append(
            ConjugacyClass(name=cname, size=size, order=_lcm_of(ct), central=size == 1)
        )

    characters = []
    for lam in partitions(n):
        conj = conjugate_partition(lam)
        if lam == conj:
            hooks = principal_hooks(lam)
            eps = (-1) ** ((n - len(hooks)) // 2)
            disc = eps
            for h in hooks:
                disc *= h
            root = sqrt_int(disc)
            plus = (Cyclotomic.from_rational(eps) + root) / 2
            minus = (Cyclotomic.from_rational(eps) - root) / 2
            exceptional = {}
            seen_first = False
            for ct, cname in class_info:
                if ct == hooks:
                    exceptional[cname] = not seen_first
                    seen_first = True
            for sign_name, first_val, second_val in (("+", plus, minus), ("-", minus, plus)):
                values = []
                for ct, cname in class_info:
                    if cname in exceptional:
                        values.append(first_val if exceptional[cname] else second_val)
                    else:
                        values.append(Cyclotomic.from_rational(Q(mn_value(lam, ct), 2)))
                characters.append(
                    Character(name=f"chi({_part_name(lam)}){sign_name}", values=tuple(values))
                )
        elif lam > conj:
            values = tuple(
                Cyclotomic.from_rational(mn_value(lam, ct)) for ct, _ in class_info
            )
            characters.append(Character(name=f"chi({_part_name(lam)})", values=values))

    table = CharacterTable(name=f"A{n}", order=order, classes=classes, characters=characters)
    report = validate_table(table)
    if not report.ok:
        raise InvalidTableError(report)
    return table


def young_perm_character(n: int, mu: tuple[int, ...]) -> Character:
    """Values of the permutation character of S_n on the Young subgroup
    S_mu, computed combinatorially: the value at g is the number of ways
    the cycles of g distribute into blocks with length sums mu."""
    if sum(mu) != n:
        raise ValueError(f"composition {mu} does not sum to {n}")
    if any(m <= 0 for m in mu):
        raise ValueError("composition parts must be positive")
    class_types = _sym_classes(n)
    values = []
    for ct in class_types:
        lengths = sorted(set(ct))
        counts = [ct.count(x) for x in lengths]

        @lru_cache(maxsize=None)
        def ways(idx: int, residual: tuple[int, ...]) -> int:
            if idx == len(lengths):
                return 1 if all(r == 0 for r in residual) else 0
            length, count = lengths[idx], counts[idx]
            total = 0
            for assign in _distributions(count, length, residual):
                mult = _multinomial(count, assign)
                nxt = tuple(r - length * a for r, a in zip(residual, assign))
                total += mult * ways(idx + 1, nxt)
            return total

        values.append(Cyclotomic.from_rational(ways(0, tuple(mu))))
        ways.cache_clear()
    return Character(name=f"young({_part_name(tuple(mu))})", values=tuple(values))


def _distributions(count: int, length: int, residual: tuple[int, ...]):
    """All ways to split `count` cycles of a given length over the blocks,
    respecting each block's remaining capacity."""
    caps = [r // length for r in residual]

    def rec(i: int, left: int):
        if i == len(caps) - 1:
            if left <= caps[i]:
                yield (left,)
            return
        for take in range(min(caps[i], left) + 1):
            for rest in rec(i + 1, left - take):
                yield (take,) + rest

    yield from rec(0, count)


def _multinomial(total: int, parts) -> int:
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out
