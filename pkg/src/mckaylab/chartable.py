"""Character-table data model, exact validation, Steinberg extraction and
the JSON exchange format.

Tables are immutable after construction; every validity decision is made
with exact rational/cyclotomic arithmetic, never floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exactnum import Cyclotomic, CycParseError

Q = Fraction

__all__ = [
    "ConjugacyClass",
    "Character",
    "LieParams",
    "CharacterTable",
    "SteinbergData",
    "Violation",
    "ValidationReport",
    "TableFormatError",
    "InvalidTableError",
    "SteinbergError",
    "validate_table",
    "p_part",
    "identify_steinberg",
    "import_table",
    "export_table",
]


class TableFormatError(ValueError):
    """Malformed exchange document; message carries the JSON path."""


class InvalidTableError(ValueError):
    """Structurally fine but mathematically inconsistent table."""

    def __init__(self, report: "ValidationReport"):
        super().__init__("table failed validation:\n" + report.describe())
        self.report = report


class SteinbergError(ValueError):
    """No usable Steinberg character, or its value pattern is violated."""


@dataclass(frozen=True)
class ConjugacyClass:
    name: str
    size: int
    order: int  # order of a representative
    central: bool = False
    support: int | None = None  # nu(g); carried only via import annotation
    image: str | None = None  # class name in the central-quotient table


@dataclass(frozen=True)
class Character:
    name: str
    values: tuple[Cyclotomic, ...]

    @property
    def degree(self) -> int:
        return self.values[0].integer()


@dataclass(frozen=True)
class LieParams:
    n: int
    q: int
    epsilon: str  # '+' or '-'
    rank: int
    p: int  # defining prime

    def __post_init__(self):
        if self.epsilon not in ("+", "-"):
            raise ValueError("epsilon must be '+' or '-'")
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        q = self.q
        while q % self.p == 0:
            q //= self.p
        if q != 1:
            raise ValueError(f"{self.q} is not a power of {self.p}")


@dataclass(frozen=True)
class SteinbergData:
    """Per-class data of the Steinberg character: sign and the p-part of
    the centralizer order on semisimple classes."""

    st_index: int
    epsilon: dict[int, int]  # class index -> +-1, semisimple classes only
    cent_p_part: dict[int, int]  # class index -> |C(g)|_p


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, detail: str) -> None:
        self.violations.append(Violation(kind, detail))

    def describe(self) -> str:
        return "\n".join(f"[{v.kind}] {v.detail}" for v in self.violations) or "ok"


class CharacterTable:
    """Group metadata, conjugacy classes and characters as class functions."""

    def __init__(
        self,
        name: str,
        order: int,
        classes: list[ConjugacyClass],
        characters: list[Character],
        characteristic: int | None = None,
        lie: LieParams | None = None,
    ):
        self.name = name
        self.order = order
        self.classes = tuple(classes)
        self.characters = tuple(characters)
        self.characteristic = characteristic
        self.lie = lie
        self._class_index = {c.name: i for i, c in enumerate(self.classes)}
        self._char_index = {c.name: i for i, c in enumerate(self.characters)}
        if len(self._class_index) != len(self.classes):
            raise TableFormatError("duplicate class name")
        if len(self._char_index) != len(self.characters):
            raise TableFormatError("duplicate character name")

    # -- lookups ------------------------------------------------------------

    def class_index(self, name: str) -> int:
        try:
            return self._class_index[name]
        except KeyError:
            raise KeyError(f"no class named {name!r} in {self.name}") from None

    def char_index(self, name: str) -> int:
        try:
            return self._char_index[name]
        except KeyError:
            raise KeyError(f"no character named {name!r} in {self.name}") from None

    def character(self, name: str) -> Character:
        return self.characters[self.char_index(name)]

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def trivial_index(self) -> int:
        for i, chi in enumerate(self.characters):
            if all(v == 1 for v in chi.values):
                return i
        raise ValueError(f"{self.name} has no trivial character")

    def degrees(self) -> list[int]:
        return [chi.degree for chi in self.characters]

    def centralizer_order(self, class_idx: int) -> int:
        return self.order // self.classes[class_idx].size

    def is_semisimple_class(self, class_idx: int) -> bool:
        """Semisimple = order of a representative coprime to the defining
        characteristic (which must be set)."""
        if self.characteristic is None:
            raise ValueError(f"{self.name} has no characteristic set")
        return gcd(self.classes[class_idx].order, self.characteristic) == 1

    def central_class_indices(self) -> list[int]:
        return [i for i, c in enumerate(self.classes) if c.central]

    # -- exact linear algebra over class functions ---------------------------

    def inner_product(self, left, right) -> Cyclotomic:
        """(1/|G|) sum_g left(g) * conj(right(g)), exact."""
        left = left.values if isinstance(left, Character) else left
        right = right.values if isinstance(right, Character) else right
        total = Cyclotomic.zero()
        for cls, a, b in zip(self.classes, left, right):
            total = total + a * b.conjugate() * cls.size
        return total / self.order

    def kernel_class_indices(self, chi: Character) -> set[int]:
        deg = chi.values[0]
        return {i for i, v in enumerate(chi.values) if v == deg}

    def is_faithful(self, chi: Character) -> bool:
        return self.kernel_class_indices(chi) == {0}

    def is_simple(self) -> bool:
        """Derived from the table: the normal subgroups are exactly the
        intersections of character kernels."""
        if self.order == 1:
            return False
        kernels = {frozenset(self.kernel_class_indices(chi)) for chi in self.characters}
        normals = set(kernels)
        frontier = set(kernels)
        while frontier:
            new = set()
            for a in frontier:
                for b in kernels:
                    c = a & b
                    if c not in normals:
                        new.add(c)
            normals |= new
            frontier = new
        everything = frozenset(range(self.k))
        return all(n == {0} or n == everything for n in normals)

    def __repr__(self) -> str:
        return f"CharacterTable({self.name!r}, order={self.order}, k={self.k})"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def p_part(m: int, p: int) -> int:
    """Largest power of p dividing m."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m == 0:
        raise ValueError("p-part of 0 is undefined")
    out = 1
    m = abs(m)
    while m % p == 0:
        out *= p
        m //= p
    return out


# ---------------------------------------------------------------------------
# validation


def validate_table(t: CharacterTable) -> ValidationReport:
    """Check every table invariant exactly; violations are data, not faults."""
    rep = ValidationReport()
    k = t.k

    if len(t.characters) != k:
        rep.add("count-mismatch", f"{len(t.characters)} characters vs {k} classes")

    total = sum(c.size for c in t.classes)
    if total != t.order:
        rep.add("class-size-sum", f"class sizes sum to {total}, group order is {t.order}")

    ident = t.classes[0]
    if ident.size != 1 or ident.order != 1 or not ident.central:
        rep.add("identity-class", f"first class {ident.name!r} is not the identity class")

    for c in t.classes:
        if c.size <= 0 or t.order % c.size != 0:
            rep.add("size-not-divisor", f"class {c.name!r} has size {c.size}")

    degsq = Q(0)
    for chi in t.characters:
        v0 = chi.values[0]
        if len(chi.values) != k:
            rep.add("count-mismatch", f"character {chi.name!r} has {len(chi.values)} values")
            continue
        if not (v0.is_integer() and v0.integer() > 0):
            rep.add("degree-not-positive-integer", f"character {chi.name!r} has degree {v0}")
            continue
        degsq += v0.integer() ** 2
    if degsq != t.order:
        rep.add("degree-sum", f"sum of squared degrees is {degsq}, group order is {t.order}")

    chars = [chi for chi in t.characters if len(chi.values) == k]
    for i, chi in enumerate(chars):
        for j in range(i, len(chars)):
            psi = chars[j]
            ip = t.inner_product(chi, psi)
            want = 1 if i == j else 0
            if ip != want:
                rep.add(
                    "row-orthogonality",
                    f"<{chi.name},{psi.name}> = {ip}, expected {want}",
                )

    if len(chars) == len(t.characters) == k:
        for a in range(k):
            for b in range(a, k):
                s = Cyclotomic.zero()
                for chi in chars:
                    s = s + chi.values[a] * chi.values[b].conjugate()
                want = Q(t.order, t.classes[a].size) if a == b else Q(0)
                if s != want:
                    rep.add(
                        "column-orthogonality",
                        f"columns {t.classes[a].name!r},{t.classes[b].name!r}: {s} != {want}",
                    )

        # central flag cross-check: central <=> |chi(g)| = chi(1) for all chi
        for idx, cls in enumerate(t.classes):
            derived = all(
                chi.values[idx] * chi.values[idx].conjugate() == chi.values[0] * chi.values[0]
                for chi in chars
            )
            if derived != cls.central:
                rep.add(
                    "central-flag",
                    f"class {cls.name!r} flagged central={cls.central}, derived {derived}",
                )

    return rep


# ---------------------------------------------------------------------------
# Steinberg extraction


def identify_steinberg(t: CharacterTable) -> SteinbergData:
    """Locate the Steinberg character (degree |G|_p) and extract the sign
    and centralizer p-part on each semisimple class, checking that the
    characteristic-p value pattern holds exactly on every class."""
    if t.characteristic is None:
        raise SteinbergError(f"{t.name} has no characteristic set")
    p = t.characteristic
    gp = p_part(t.order, p)
    candidates = [i for i, chi in enumerate(t.characters) if chi.degree == gp]
    if not candidates:
        raise SteinbergError(f"{t.name} has no character of degree |G|_p = {gp}")
    if len(candidates) > 1:
        named = [i for i in candidates if t.characters[i].name == "St"]
        if len(named) != 1:
            raise SteinbergError(
                f"{t.name}: {len(candidates)} characters of degree {gp}, none uniquely named 'St'"
            )
        candidates = named
    st_index = candidates[0]
    st = t.characters[st_index]

    epsilon: dict[int, int] = {}
    parts: dict[int, int] = {}
    bad: list[str] = []
    for i, cls in enumerate(t.classes):
        v = st.values[i]
        if t.is_semisimple_class(i):
            pp = p_part(t.centralizer_order(i), p)
            if v == pp:
                epsilon[i], parts[i] = 1, pp
            elif v == -pp:
                epsilon[i], parts[i] = -1, pp
            else:
                bad.append(f"St({cls.name}) = {v}, expected +-{pp}")
        else:
            if not v.is_zero():
                bad.append(f"St({cls.name}) = {v}, expected 0 on a non-semisimple class")
    if bad:
        raise SteinbergError(
            f"{t.name}: Steinberg value pattern violated (non-Lie-type or mislabeled table): "
            + "; ".join(bad)
        )
    return SteinbergData(st_index=st_index, epsilon=epsilon, cent_p_part=parts)


# ---------------------------------------------------------------------------
# exchange format


def export_table(t: CharacterTable) -> str:
    """Serialize in the exchange format; import(export(t)) is bit-exact
    for canonically rendered tables."""
    doc: dict = {"name": t.name, "order": t.order}
    if t.characteristic is not None:
        doc["characteristic"] = t.characteristic
    if t.lie is not None:
        doc["lie"] = {
            "n": t.lie.n,
            "q": t.lie.q,
            "epsilon": t.lie.epsilon,
            "rank": t.lie.rank,
        }
    classes = []
    for c in t.classes:
        entry: dict = {"name": c.name, "size": c.size, "order": c.order}
        if c.central:
            entry["central"] = True
        if c.support is not None:
            entry["support"] = c.support
        if c.image is not None:
            entry["image"] = c.image
        classes.append(entry)
    doc["classes"] = classes
    doc["characters"] = [
        {"name": chi.name, "values": [v.render() for v in chi.values]}
        for chi in t.characters
    ]
    return json.dumps(doc, indent=2) + "\n"


def _need(obj: dict, key: str, types, where: str):
    if key not in obj:
        raise TableFormatError(f"{where}: missing {key!r}")
    val = obj[key]
    if not isinstance(val, types) or (types is int and isinstance(val, bool)):
        raise TableFormatError(f"{where}.{key}: expected {types}, got {type(val).__name__}")
    return val


def import_table(text: str, validate: bool = True) -> CharacterTable:
    """Parse an exchange document; the result is validated unless told not to."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise TableFormatError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise TableFormatError("top level: expected an object")

    allowed = {"name", "order", "characteristic", "lie", "classes", "characters"}
    unknown = set(doc) - allowed
    if unknown:
        raise TableFormatError(f"top level: unknown keys {sorted(unknown)}")

    name = _need(doc, "name", str, "top level")
    order = _need(doc, "order", int, "top level")
    characteristic = doc.get("characteristic")
    if characteristic is not None and not isinstance(characteristic, int):
        raise TableFormatError("characteristic: expected an integer")

    lie = None
    if "lie" in doc:
        ld = doc["lie"]
        if not isinstance(ld, dict):
            raise TableFormatError("lie: expected an object")
        if set(ld) - {"n", "q", "epsilon", "rank"}:
            raise TableFormatError("lie: unknown keys")
        if characteristic is None:
            raise TableFormatError("lie: requires 'characteristic' for the defining prime")
        lie = LieParams(
            n=_need(ld, "n", int, "lie"),
            q=_need(ld, "q", int, "lie"),
            epsilon=_need(ld, "epsilon", str, "lie"),
            rank=_need(ld, "rank", int, "lie"),
            p=characteristic,
        )

    raw_classes = _need(doc, "classes", list, "top level")
    classes = []
    for i, cd in enumerate(raw_classes):
        where = f"classes[{i}]"
        if not isinstance(cd, dict):
            raise TableFormatError(f"{where}: expected an object")
        if set(cd) - {"name", "size", "order", "central", "support", "image"}:
            raise TableFormatError(f"{where}: unknown keys")
        central = cd.get("central", False)
        if not isinstance(central, bool):
            raise TableFormatError(f"{where}.central: expected a boolean")
        support = cd.get("support")
        if support is not None and (not isinstance(support, int) or support < 0):
            raise TableFormatError(f"{where}.support: expected a nonnegative integer")
        image = cd.get("image")
        if image is not None and not isinstance(image, str):
            raise TableFormatError(f"{where}.image: expected a string")
        classes.append(
            ConjugacyClass(
                name=_need(cd, "name", str, where),
                size=_need(cd, "size", int, where),
                order=_need(cd, "order", int, where),
                central=central,
                support=support,
                image=image,
            )
        )
    if len({c.name for c in classes}) != len(classes):
        raise TableFormatError("classes: duplicate class name")

    raw_chars = _need(doc, "characters", list, "top level")
    characters = []
    for i, hd in enumerate(raw_chars):
        where = f"characters[{i}]"
        if not isinstance(hd, dict):
            raise TableFormatError(f"{where}: expected an object")
        if set(hd) - {"name", "values"}:
            raise TableFormatError(f"{where}: unknown keys")
        raw_values = _need(hd, "values", list, where)
        if len(raw_values) != len(classes):
            raise TableFormatError(
                f"{where}: {len(raw_values)} values for {len(classes)} classes"
            )
        values = []
        for j, s in enumerate(raw_values):
            if not isinstance(s, str):
                raise TableFormatError(f"{where}.values[{j}]: expected a string")
            try:
                values.append(Cyclotomic.parse(s))
            except CycParseError as e:
                raise TableFormatError(f"{where}.values[{j}]: {e}") from None
        characters.append(Character(name=_need(hd, "name", str, where), values=tuple(values)))
    if len({c.name for c in characters}) != len(characters):
        raise TableFormatError("characters: duplicate character name")

    table = CharacterTable(
        name=name,
        order=order,
        classes=classes,
        characters=characters,
        characteristic=characteristic,
        lie=lie,
    )
    if validate:
        report = validate_table(table)
        if not report.ok:
            raise InvalidTableError(report)
    return table
