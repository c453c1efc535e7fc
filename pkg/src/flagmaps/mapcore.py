"""Rooted maps: flag sets acted on by the three involutions T, L, R.

A map is stored concretely: the flags are {0..n-1}, the generators are
permutations of the flags (so the monodromy action is faithful by
construction), and a root flag is distinguished.  T exchanges the two
sides of an edge end, L the two ends, R the two edge positions in a
vertex-face corner; edges are orbits of <T,L>, vertices of <T,R>, faces
of <L,R> and Petrie circuits of <TL,R>.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from .perm import Perm, PermGroup, orbits_of

GENERATOR_NAMES = ("t", "l", "r")


class MapFormatError(ValueError):
    """Malformed ".map" text (missing lines, non-bijective image lists...)."""


class MapInvariantError(ValueError):
    """Structurally well-formed data that violates a rooted-map axiom."""


@dataclass(frozen=True)
class RootedMap:
    """Flags {0..n-1} with involutions t, l, r and a root flag."""

    t: Perm
    l: Perm
    r: Perm
    root: int = 0

    def __post_init__(self):
        n = self.t.degree
        if self.l.degree != n or self.r.degree != n:
            raise MapInvariantError("generator degrees differ")
        for name, p in (("T", self.t), ("L", self.l), ("R", self.r)):
            if not (p * p).is_identity():
                raise MapInvariantError(f"{name} not an involution")
        if not (self.t * self.l * self.t * self.l).is_identity():
            raise MapInvariantError("(TL)^2 not the identity")
        if not (0 <= self.root < n):
            raise MapInvariantError("root flag out of range")
        if len(PermGroup(n, (self.t, self.l, self.r)).orbit(self.root)) != n:
            raise MapInvariantError("action not transitive")

    @property
    def n_flags(self) -> int:
        return self.t.degree

    def generators(self) -> tuple[Perm, Perm, Perm]:
        return (self.t, self.l, self.r)

    def generator(self, name: str) -> Perm:
        return {"t": self.t, "l": self.l, "r": self.r}[name.lower()]

    def evaluate(self, word: Iterable[str]) -> Perm:
        """Evaluate a word over t, l, r (left to right) in the monodromy."""
        out = Perm.identity(self.n_flags)
        for ch in word:
            out = out * self.generator(ch)
        return out

    def act(self, flag: int, word: Iterable[str]) -> int:
        for ch in word:
            flag = self.generator(ch).images[flag]
        return flag

    def monodromy_group(self) -> PermGroup:
        return PermGroup(self.n_flags, self.generators())

    def __repr__(self) -> str:
        return f"RootedMap(n_flags={self.n_flags}, root={self.root})"


# --- .map file format ---------------------------------------------------

def load_map(text: str) -> RootedMap:
    """Parse ".map" text: "flags N", image lines for T, L, R, "root r"."""
    fields: dict[str, list[int]] = {}
    n = None
    root = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        if key == "flags":
            if n is not None:
                raise MapFormatError(f"line {lineno}: duplicate flags line")
            n = int(parts[1])
        elif key in ("T", "L", "R"):
            if key in fields:
                raise MapFormatError(f"line {lineno}: duplicate {key} line")
            if n is None:
                raise MapFormatError(f"line {lineno}: {key} before flags")
            if len(parts) != n + 1:
                raise MapFormatError(
                    f"line {lineno}: {key} needs exactly {n} images")
            fields[key] = [int(x) for x in parts[1:]]
        elif key == "root":
            if root is not None:
                raise MapFormatError(f"line {lineno}: duplicate root line")
            root = int(parts[1])
        else:
            raise MapFormatError(f"line {lineno}: unknown directive {key!r}")
    if n is None or root is None or set(fields) != {"T", "L", "R"}:
        raise MapFormatError("need flags, T, L, R and root lines")
    perms = {}
    for key in ("T", "L", "R"):
        try:
            perms[key] = Perm(fields[key])
        except ValueError as exc:
            raise MapFormatError(f"{key} images: {exc}") from exc
    return RootedMap(perms["T"], perms["L"], perms["R"], root)


def canonicalize(m: RootedMap) -> RootedMap:
    """Renumber flags by BFS from the root over T, L, R; root becomes 0."""
    number = {m.root: 0}
    order = [m.root]
    queue = [m.root]
    gens = m.generators()
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = g.images[x]
            if y not in number:
                number[y] = len(order)
                order.append(y)
                queue.append(y)
    relabeled = [Perm(number[g.images[x]] for x in order) for g in gens]
    return RootedMap(*relabeled, root=0)


def save_map(m: RootedMap) -> str:
    """Canonical text form (stable across runs for isomorphic inputs)."""
    c = canonicalize(m)
    lines = [
        f"flags {c.n_flags}",
        "T " + " ".join(map(str, c.t.images)),
        "L " + " ".join(map(str, c.l.images)),
        "R " + " ".join(map(str, c.r.images)),
        f"root {c.root}",
    ]
    return "\n".join(lines) + "\n"


# --- cells and surface invariants -----------------------------------------

@dataclass(frozen=True)
class CellStructure:
    """The four cell partitions of the flag set."""

    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]
    petrie_circuits: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SurfaceInfo:
    cells: CellStructure
    orientability: Literal["orientable", "non-orientable", "boundary-degenerate"]
    euler_characteristic: int
    signed_genus: int
    orientation_orbits: int
    genus_advisory: bool


def cells(m: RootedMap) -> CellStructure:
    n = m.n_flags
    t, l, r = m.generators()
    as_tuples = lambda blocks: tuple(tuple(b) for b in blocks)
    return CellStructure(
        vertices=as_tuples(orbits_of((t, r), n)),
        edges=as_tuples(orbits_of((t, l), n)),
        faces=as_tuples(orbits_of((l, r), n)),
        petrie_circuits=as_tuples(orbits_of((m.t * m.l, r), n)),
    )


def cells_and_surface(m: RootedMap) -> SurfaceInfo:
    """Cell counts, Euler characteristic and the signed genus.

    The closed-surface reading needs T, L, R and TL fixed-point-free; when
    any has a fixed point the result is flagged boundary-degenerate and the
    genus numbers are advisory only.
    """
    cs = cells(m)
    chi = len(cs.vertices) - len(cs.edges) + len(cs.faces)
    t, l, r = m.generators()
    degenerate = any(p.fixed_points() for p in (t, l, r, t * l))
    n_or = len(orbits_of((m.r * m.t, m.r * m.l), m.n_flags))
    if n_or == 2:
        genus = (2 - chi) // 2
        kind = "orientable"
    else:
        genus = -(2 - chi)
        kind = "non-orientable"
    return SurfaceInfo(
        cells=cs,
        orientability="boundary-degenerate" if degenerate else kind,
        euler_characteristic=chi,
        signed_genus=genus,
        orientation_orbits=n_or,
        genus_advisory=degenerate,
    )


# --- triality ---------------------------------------------------------------

def du(m: RootedMap) -> RootedMap:
    """Dual: exchange the roles of T and L."""
    return RootedMap(m.l, m.t, m.r, m.root)


def pe(m: RootedMap) -> RootedMap:
    """Petrie dual: replace L by LT (apply L, then T)."""
    return RootedMap(m.t, m.l * m.t, m.r, m.root)


def triality_composites(m: RootedMap) -> list[RootedMap]:
    """The six composites in the fixed order M, Du, Pe, PeDu, DuPe, DuPeDu."""
    return [m, du(m), pe(m), pe(du(m)), du(pe(m)), du(pe(du(m)))]


# --- isomorphism and automorphisms -----------------------------------------

def _grow_flag_bijection(m: RootedMap, n: RootedMap,
                         root_image: int) -> list[int] | None:
    """The unique generator-respecting candidate with m.root -> root_image,
    or None when no such bijection exists."""
    if m.n_flags != n.n_flags:
        return None
    size = m.n_flags
    image = [-1] * size
    image[m.root] = root_image
    stack = [m.root]
    gen_pairs = list(zip(m.generators(), n.generators()))
    while stack:
        x = stack.pop()
        ix = image[x]
        for gm, gn in gen_pairs:
            y = gm.images[x]
            iy = gn.images[ix]
            if image[y] == -1:
                image[y] = iy
                stack.append(y)
            elif image[y] != iy:
                return None
    # transitivity reached every flag; verify every edge of the flag graph
    for gm, gn in gen_pairs:
        for x in range(size):
            if image[gm.images[x]] != gn.images[image[x]]:
                return None
    if len(set(image)) != size:
        return None
    return image


def isomorphism(m: RootedMap, n: RootedMap,
                mode: Literal["rooted", "generalized"] = "rooted") -> list[int] | None:
    """A flag bijection m -> n respecting T, L, R, or None.

    Rooted mode requires root -> root.  Generalized mode tries every flag
    of n as the image of m's root (with a shortcut when n is reflexible:
    all re-rootings of a reflexible map are isomorphic, so one try decides).
    """
    if m.n_flags != n.n_flags:
        return None
    if mode == "rooted":
        return _grow_flag_bijection(m, n, n.root)
    if is_reflexible(n):
        return _grow_flag_bijection(m, n, n.root)
    for d in range(n.n_flags):
        image = _grow_flag_bijection(m, n, d)
        if image is not None:
            return image
    return None


def automorphism_to(m: RootedMap, d: int) -> Perm | None:
    """The unique automorphism taking the root to flag d, if consistent."""
    image = _grow_flag_bijection(m, m, d)
    return Perm(image) if image is not None else None


def is_reflexible(m: RootedMap) -> bool:
    """Aut regular on flags.

    It suffices that automorphisms to root.T, root.L and root.R exist: the
    group they generate already moves the root onto every flag.
    """
    return all(
        automorphism_to(m, g.images[m.root]) is not None
        for g in m.generators())


def automorphism_group(m: RootedMap) -> PermGroup:
    """Aut(m) as a permutation group on the flags (semiregular)."""
    auts = []
    for d in range(m.n_flags):
        a = automorphism_to(m, d)
        if a is not None:
            auts.append(a)
    return PermGroup(m.n_flags, auts)


# --- re-rooting -------------------------------------------------------------

def reroot(m: RootedMap, flag: int) -> RootedMap:
    return RootedMap(m.t, m.l, m.r, flag)


def simple_reroots(m: RootedMap) -> list[RootedMap]:
    """Re-rootings at root, root.T, root.L, root.TL, in that order."""
    x = m.root
    return [
        m,
        reroot(m, m.t.images[x]),
        reroot(m, m.l.images[x]),
        reroot(m, m.l.images[m.t.images[x]]),
    ]


# --- genus symbol -----------------------------------------------------------

@dataclass(frozen=True)
class GenusSymbol:
    """Signed genera across the triality class, with the coincidence pattern.

    genera[i] is the signed genus of the i-th composite (order M, Du, Pe,
    PeDu, DuPe, DuPeDu); iso_symbol[i] is the least 1-based index of a
    composite generalized-isomorphic to composite i; the hexagonal number
    counts the distinct entries.
    """

    genera: tuple[int, int, int, int, int, int]
    iso_symbol: tuple[int, int, int, int, int, int]
    hexagonal_number: int
    advisory: bool = field(default=False)

    def __post_init__(self):
        if self.hexagonal_number != len(set(self.iso_symbol)):
            raise ValueError("hexagonal number must count distinct entries")


def genus_symbol(m: RootedMap) -> GenusSymbol:
    composites = triality_composites(m)
    infos = [cells_and_surface(c) for c in composites]
    genera = tuple(info.signed_genus for info in infos)
    iso = []
    for i, ci in enumerate(composites):
        first = i
        for j in range(i):
            if isomorphism(composites[j], ci, mode="generalized") is not None:
                first = j
                break
        iso.append(first + 1)
    return GenusSymbol(
        genera=genera,
        iso_symbol=tuple(iso),
        hexagonal_number=len(set(iso)),
        advisory=any(info.genus_advisory for info in infos),
    )


def triality_class(m: RootedMap) -> list[RootedMap]:
    """Pairwise non-isomorphic members among the six composites."""
    out: list[RootedMap] = []
    for c in triality_composites(m):
        if all(isomorphism(prev, c, mode="generalized") is None for prev in out):
            out.append(c)
    return out


def regular_map_from_group(lg) -> RootedMap:
    """The reflexible map carried by a group labeled t, l, r: flags are the
    group elements in their regular action, rooted at the identity."""
    table = lg.as_dict()
    missing = [name for name in GENERATOR_NAMES if name not in table]
    if missing:
        raise ValueError(f"labels {missing} missing from group")
    return RootedMap(table["t"], table["l"], table["r"], root=0)
