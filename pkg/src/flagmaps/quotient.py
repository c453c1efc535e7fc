"""The three quotient constructions and map morphisms.

A morphism is stored as its flag surjection; the group epimorphism is
determined on generators and never materialized.  The K-quotient realizes
cosets of K concretely as a block system on the flags (the K-orbit of the
root, pushed around by the monodromy generators), so the monodromy group
itself is never enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mapcore import RootedMap, isomorphism
from .perm import Perm, PermGroup, is_normal_in


class StabilizerNotContained(ValueError):
    """K does not contain the stabilizer of the root flag."""


class NotNormal(ValueError):
    """H is not a normal subgroup of the monodromy group."""


class NotAnAutomorphism(ValueError):
    """A generator of the given group does not commute with T, L, R."""


@dataclass(frozen=True)
class MapMorphism:
    """A covering projection source -> target, stored as flag images."""

    source: RootedMap
    target: RootedMap
    flag_map: tuple[int, ...]

    def __post_init__(self):
        if len(self.flag_map) != self.source.n_flags:
            raise ValueError("flag_map length must equal source flag count")
        if set(self.flag_map) != set(range(self.target.n_flags)):
            raise ValueError("flag_map must be onto the target flags")
        if self.flag_map[self.source.root] != self.target.root:
            raise ValueError("morphism must send root to root")
        for gs, gt in zip(self.source.generators(), self.target.generators()):
            for x in range(self.source.n_flags):
                if self.flag_map[gs.images[x]] != gt.images[self.flag_map[x]]:
                    raise ValueError("flag_map does not respect the generators")

    def __call__(self, flag: int) -> int:
        return self.flag_map[flag]


def _blocks_to_map(m: RootedMap, blocks: list[tuple[int, ...]],
                   block_of: list[int]) -> tuple[RootedMap, MapMorphism]:
    """Quotient map induced on a block system, plus the projection."""
    reps = [b[0] for b in blocks]
    induced = []
    for g in m.generators():
        images = [block_of[g.images[rep]] for rep in reps]
        # block systems are closed under the action; verify on whole blocks
        for bi, b in enumerate(blocks):
            target = images[bi]
            if any(block_of[g.images[x]] != target for x in b):
                raise ValueError("given partition is not a block system")
        induced.append(Perm(images))
    quotient = RootedMap(*induced, root=block_of[m.root])
    return quotient, MapMorphism(m, quotient, tuple(block_of))


def k_quotient(m: RootedMap, K: PermGroup) -> tuple[RootedMap, MapMorphism]:
    """Quotient by a subgroup K with G_root <= K <= Mon(m).

    The quotient flags are the right cosets of K, realized as the block
    system generated by the K-orbit of the root.
    """
    mon = m.monodromy_group()
    if K.degree != m.n_flags:
        raise ValueError("K must act on the flags of m")
    for g in K.generators:
        if g not in mon:
            raise ValueError("K is not a subgroup of the monodromy group")
    # G_root <= K  iff  |K| / |root.K| == |Mon| / n_flags (orbit-stabilizer)
    root_orbit = K.orbit(m.root)
    if K.order() * m.n_flags != mon.order() * len(root_orbit):
        raise StabilizerNotContained(
            "K does not contain the stabilizer of the root flag")

    base = frozenset(root_orbit)
    block_of = [-1] * m.n_flags
    blocks: list[tuple[int, ...]] = []

    def add_block(flags: frozenset[int]) -> int:
        idx = len(blocks)
        blocks.append(tuple(sorted(flags)))
        for x in flags:
            if block_of[x] != -1:
                raise StabilizerNotContained(
                    "K-orbit of the root does not generate a block system")
            block_of[x] = idx
        return idx

    queue = [add_block(base)]
    while queue:
        bi = queue.pop(0)
        for g in m.generators():
            image = frozenset(g.images[x] for x in blocks[bi])
            seen = {block_of[x] for x in image}
            if seen == {-1}:
                queue.append(add_block(image))
            elif len(seen) != 1 or blocks[seen.pop()] != tuple(sorted(image)):
                raise StabilizerNotContained(
                    "K-orbit of the root does not generate a block system")
    return _blocks_to_map(m, blocks, block_of)


def monodromy_quotient(m: RootedMap, H: PermGroup) -> tuple[RootedMap, MapMorphism]:
    """Quotient whose flags are the orbits of a normal subgroup H of Mon(m).

    All automorphisms of m project along the returned morphism.
    """
    mon = m.monodromy_group()
    if H.degree != m.n_flags:
        raise ValueError("H must act on the flags of m")
    for g in H.generators:
        if g not in mon:
            raise NotNormal("H is not a subgroup of the monodromy group")
    if not is_normal_in(H, mon):
        raise NotNormal("H is not normal in the monodromy group")
    blocks = [tuple(b) for b in H.orbits()]
    block_of = [-1] * m.n_flags
    for bi, b in enumerate(blocks):
        for x in b:
            block_of[x] = bi
    return _blocks_to_map(m, blocks, block_of)


def automorphism_quotient(m: RootedMap, A: PermGroup) -> tuple[RootedMap, MapMorphism]:
    """Quotient by the orbits of a subgroup of Aut(m) (orbits are blocks
    of imprimitivity for the monodromy action)."""
    if A.degree != m.n_flags:
        raise ValueError("A must act on the flags of m")
    for a in A.generators:
        for g in m.generators():
            if a * g != g * a:
                raise NotAnAutomorphism(
                    "generator of A does not commute with the monodromy action")
    blocks = [tuple(b) for b in A.orbits()]
    block_of = [-1] * m.n_flags
    for bi, b in enumerate(blocks):
        for x in b:
            block_of[x] = bi
    return _blocks_to_map(m, blocks, block_of)


def project_automorphism(proj: MapMorphism, a: Perm) -> Perm:
    """Push an automorphism of the source along a monodromy-quotient
    projection; the induced permutation of the target flags is again an
    automorphism."""
    src, tgt = proj.source, proj.target
    if a.degree != src.n_flags:
        raise ValueError("automorphism degree mismatch")
    images = [-1] * tgt.n_flags
    for x in range(src.n_flags):
        y = proj.flag_map[x]
        img = proj.flag_map[a.images[x]]
        if images[y] == -1:
            images[y] = img
        elif images[y] != img:
            raise ValueError("automorphism does not project along this morphism")
    out = Perm(images)
    for g in tgt.generators():
        if out * g != g * out:
            raise ValueError("projected permutation is not an automorphism")
    return out


@dataclass(frozen=True)
class KQuotientCharacterization:
    """The subgroup K recovered from a morphism, the quotient by it, and a
    rooted isomorphism from that quotient onto the morphism's target."""

    K: PermGroup
    quotient: RootedMap
    projection: MapMorphism
    iso_to_target: tuple[int, ...]


def morphism_to_k_quotient(phi: MapMorphism) -> KQuotientCharacterization:
    """Recover K with target isomorphic to source/K.

    K is the preimage of the target root stabilizer: Schreier generators of
    the stabilizer of target.root, for the action of the source monodromy on
    the target flags, evaluated in the source generators.
    """
    src, tgt = phi.source, phi.target
    src_gens = src.generators()
    tgt_gens = tgt.generators()
    # BFS transversal over target flags: a word (gen indices) per flag.
    words: dict[int, tuple[int, ...]] = {tgt.root: ()}
    queue = [tgt.root]
    while queue:
        y = queue.pop(0)
        for gi, g in enumerate(tgt_gens):
            z = g.images[y]
            if z not in words:
                words[z] = words[y] + (gi,)
                queue.append(z)

    def eval_in_source(word: tuple[int, ...]) -> Perm:
        out = Perm.identity(src.n_flags)
        for gi in word:
            out = out * src_gens[gi]
        return out

    gens: list[Perm] = []
    for y, word in words.items():
        u = eval_in_source(word)
        for gi, g in enumerate(tgt_gens):
            z = g.images[y]
            # generators are involutions, so the inverse word is the reverse
            schreier = u * src_gens[gi] * eval_in_source(words[z][::-1])
            if not schreier.is_identity():
                gens.append(schreier)
    K = PermGroup(src.n_flags, gens)
    quotient, projection = k_quotient(src, K)
    iso = isomorphism(quotient, tgt, mode="rooted")
    if iso is None:
        raise RuntimeError("quotient by the recovered K is not isomorphic "
                           "to the morphism target")
    return KQuotientCharacterization(K, quotient, projection, tuple(iso))
