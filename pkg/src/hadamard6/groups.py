"""Permutation-group machinery: deterministic Schreier-Sims (base and strong
generating set), orbit-stabilizer with Schreier generators over arbitrary
hashable states, derived subgroups, centers, simplicity for small groups,
relation checking, kernels of block actions, and generator-image closure for
building homomorphisms.

Everything is deterministic: base points are taken from an optional prefix and
then greedily as the smallest point moved by a remaining generator, orbit
searches are FIFO breadth-first with generators in the order given, and no
randomisation is used anywhere.

Generic helpers (closure, commutator, check_relations, orbit_stabilizer,
hom_closure) work for any immutable group elements supporting ``*``,
``.inverse()`` and hashing, not just permutations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .perms import Permutation


class BlockSystemError(ValueError):
    """The generators do not preserve the fibers of the quotient map."""


class ActionConsistencyError(ValueError):
    """act(act(s, g), h) != act(s, g*h) on a generator pair."""


class InconsistentImagesError(ValueError):
    """Generator images do not extend to a homomorphism."""


class ClosureCapError(ValueError):
    """Enumeration exceeded its element cap."""


def commutator(a, b):
    """[a, b] = a^-1 b^-1 a b."""
    return a.inverse() * b.inverse() * a * b


def conjugate(a, b):
    """a^b = b^-1 a b."""
    return b.inverse() * a * b


def closure(gens, cap: int | None = None) -> list:
    """All elements of <gens> by breadth-first multiplication, identity first.

    Deterministic given generator order.  Raises ClosureCapError past cap.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    e = gens[0] * gens[0].inverse()
    els = {e: None}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in els:
                if cap is not None and len(els) >= cap:
                    raise ClosureCapError(f"closure exceeded cap {cap}")
                els[y] = None
                queue.append(y)
    return list(els)


class BSGS:
    """Base and strong generating set built by deterministic Schreier-Sims.

    Strong generators are kept per level: level i generates the pointwise
    stabilizer of base[:i], and the product of the fundamental orbit sizes is
    the group order.  Schreier generators that sift to the identity are
    discarded; the others extend the chain (classical deterministic variant,
    no randomisation).
    """

    def __init__(self, generators, base_prefix=(), degree: int | None = None):
        gens = []
        for g in generators:
            if degree is None:
                degree = g.degree
            elif g.degree != degree:
                raise ValueError("degree mismatch among generators")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        if degree is None:
            raise ValueError("need at least one generator or an explicit degree")
        self.degree = degree

        self.base: list[int] = []
        for p in base_prefix:
            if not 0 <= p < degree:
                raise ValueError(f"base point {p} out of range")
            if p in self.base:
                raise ValueError(f"base point {p} repeated")
            self.base.append(p)
        for g in gens:
            if all(g.apply(p) == p for p in self.base):
                self.base.append(g.min_moved())

        self._level_gens: list[list[Permutation]] = [
            [g for g in gens if all(g.apply(p) == p for p in self.base[:i])]
            for i in range(len(self.base))
        ]
        self._transversals: list[dict[int, Permutation] | None] = [None] * len(self.base)
        if not self.base:
            return
        for i in reversed(range(len(self.base))):
            self._schreier_sims(i)

    def _rebuild_transversal(self, i: int) -> None:
        b = self.base[i]
        T = {b: Permutation.identity(self.degree)}
        queue = deque([b])
        gens = self._level_gens[i]
        while queue:
            p = queue.popleft()
            up = T[p]
            for g in gens:
                q = g.apply(p)
                if q not in T:
                    T[q] = up * g
                    queue.append(q)
        self._transversals[i] = T

    def _strip(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        for j in range(start, len(self.base)):
            p = g.apply(self.base[j])
            T = self._transversals[j]
            if p not in T:
                return g, j
            g = g * T[p].inverse()
        return g, len(self.base)

    def _schreier_sims(self, i: int) -> None:
        # Precondition: levels > i are complete.  Postcondition: levels >= i are.
        self._rebuild_transversal(i)
        T = self._transversals[i]
        level_gens = list(self._level_gens[i])
        for p in list(T.keys()):
            up = T[p]
            for g in level_gens:
                q = g.apply(p)
                sg = up * g * T[q].inverse()
                if sg.is_identity():
                    continue
                h, j = self._strip(sg, i + 1)
                if h.is_identity():
                    continue
                if j == len(self.base):
                    self.base.append(h.min_moved())
                    self._level_gens.append([])
                    self._transversals.append(None)
                for k in range(i + 1, j + 1):
                    self._level_gens[k].append(h)
                for k in range(j, i, -1):
                    self._schreier_sims(k)

    def order(self) -> int:
        n = 1
        for T in self._transversals:
            n *= len(T)
        return n

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise ValueError("degree mismatch")
        if not self.base:
            return g.is_identity()
        residue, _ = self._strip(g, 0)
        return residue.is_identity()

    __contains__ = contains

    def sift(self, g: Permutation) -> Permutation:
        """Residue of g after stripping through the chain."""
        if not self.base:
            return g
        residue, _ = self._strip(g, 0)
        return residue

    def strong_generators(self) -> list[Permutation]:
        seen = []
        for lvl in self._level_gens:
            for g in lvl:
                if g not in seen:
                    seen.append(g)
        return seen

    def level_group_generators(self, m: int) -> list[Permutation]:
        """Generators of the pointwise stabilizer of base[:m]."""
        if m >= len(self.base):
            return []
        return list(self._level_gens[m])

    def transversal_sizes(self) -> tuple[int, ...]:
        return tuple(len(T) for T in self._transversals)


def bsgs_build(gens, base_prefix=(), degree: int | None = None) -> BSGS:
    return BSGS(gens, base_prefix, degree)


@dataclass
class OrbitStabilizer:
    orbit_size: int
    stabilizer_generators: list = field(default_factory=list)


def orbit_stabilizer(gens, act, seed, keep=None) -> OrbitStabilizer:
    """Orbit of seed under <gens> acting on hashable states, with Schreier
    generators u_s * g * u_{s.g}^-1 for the stabilizer.

    keep(candidate) decides which Schreier generators to retain; the default
    drops identities and duplicates.  Any generator it rejects must already
    lie in the group generated by the retained ones (the default and the
    sift-based filters used by callers guarantee this), so the kept set
    generates the full stabilizer.  The action is spot-checked for
    consistency on generator pairs before the search starts.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    e = gens[0] * gens[0].inverse()
    for g in gens:
        sg = act(seed, g)
        for h in gens:
            if act(sg, h) != act(seed, g * h):
                raise ActionConsistencyError("action is not a right action on generators")

    if keep is None:
        seen = set()

        def keep(candidate):
            if candidate == e or candidate in seen:
                return False
            seen.add(candidate)
            return True

    reps = {seed: e}
    queue = deque([seed])
    kept = []
    while queue:
        s = queue.popleft()
        us = reps[s]
        for g in gens:
            t = act(s, g)
            ut = reps.get(t)
            if ut is None:
                reps[t] = us * g
                queue.append(t)
            else:
                candidate = us * g * ut.inverse()
                if keep(candidate):
                    kept.append(candidate)
    return OrbitStabilizer(orbit_size=len(reps), stabilizer_generators=kept)


def derived_subgroup(gens) -> list[Permutation]:
    """Generators of the derived subgroup, as the normal closure of the
    generator commutators, using BSGS membership tests."""
    gens = list(gens)
    queue = deque(
        commutator(gens[i], gens[j])
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )
    d_gens: list[Permutation] = []
    d_bsgs: BSGS | None = None
    while queue:
        c = queue.popleft()
        if c.is_identity():
            continue
        if d_bsgs is not None and d_bsgs.contains(c):
            continue
        d_gens.append(c)
        d_bsgs = bsgs_build(d_gens)
        for g in gens:
            queue.append(conjugate(c, g))
    return d_gens


def center_of(gens, cap: int = 10**6) -> list[Permutation]:
    """All central elements; requires full enumeration (order <= cap)."""
    gens = list(gens)
    elements = closure(gens, cap=cap)
    return [g for g in elements if all(g * s == s * g for s in gens)]


def is_simple_small(gens, cap: int = 10**6) -> bool:
    """Brute-force simplicity test: the normal closure of every nontrivial
    conjugacy class representative must be the whole group."""
    gens = list(gens)
    elements = closure(gens, cap=cap)
    n = len(elements)
    if n == 1:
        return False
    position = {el: i for i, el in enumerate(elements)}
    seen = set()
    for el in elements:
        if el in seen or el.is_identity():
            seen.add(el)
            continue
        # conjugacy class of el under the group (closure under generator conjugation)
        cls = {el}
        frontier = deque([el])
        while frontier:
            x = frontier.popleft()
            for g in gens:
                y = conjugate(x, g)
                if y not in cls:
                    cls.add(y)
                    frontier.append(y)
        seen |= cls
        normal_closure = closure(sorted(cls, key=position.__getitem__), cap=cap)
        if len(normal_closure) != n:
            return False
    return True


def check_relations(words, assignment) -> bool:
    """True iff every word evaluates to the identity.

    Words are sequences of (letter, exponent) pairs; letters index the
    assignment mapping, exponents may be negative.
    """
    if not assignment:
        raise ValueError("empty assignment")
    some = next(iter(assignment.values()))
    e = some * some.inverse()
    for word in words:
        acc = e
        for name, exp in word:
            try:
                x = assignment[name]
            except KeyError:
                raise ValueError(f"unknown letter {name!r}") from None
            if exp < 0:
                x = x.inverse()
                exp = -exp
            for _ in range(exp):
                acc = acc * x
        if acc != e:
            return False
    return True


def action_kernel_order(bsgs: BSGS, block_map) -> int:
    """Order of the kernel of the induced action on the blocks of block_map.

    block_map sends each point to a block label; the label of p^g must depend
    only on the label of p, checked on all strong generators.
    """
    degree = bsgs.degree
    labels = sorted({block_map(p) for p in range(degree)})
    index = {lab: i for i, lab in enumerate(labels)}
    gens = bsgs.strong_generators()
    induced = []
    for g in gens:
        images: dict[int, int] = {}
        for p in range(degree):
            src = index[block_map(p)]
            dst = index[block_map(g.apply(p))]
            if images.setdefault(src, dst) != dst:
                raise BlockSystemError("block system is not preserved")
        induced.append(Permutation(tuple(images[i] for i in range(len(labels)))))
    image_order = bsgs_build(induced).order() if induced else 1
    total = bsgs.order()
    if total % image_order:
        raise BlockSystemError("image order does not divide group order")
    return total // image_order


@dataclass
class GroupHom:
    """A homomorphism given on generators and completed to a full table."""

    domain_generators: tuple
    image_generators: tuple
    table: dict

    def apply(self, g):
        return self.table[g]

    def __len__(self):
        return len(self.table)


def hom_closure(pairs, cap: int = 10**5) -> GroupHom:
    """Extend generator pairs (g, image) to the full domain group by breadth
    first closure over the Cayley graph.

    Raises InconsistentImagesError when two words for the same element get
    different images (the data is not a homomorphism), and ClosureCapError
    when the domain exceeds cap.  The finished table is re-verified: all
    |G|^2 products when the domain is small, otherwise every table entry
    against every generator (which proves multiplicativity by induction on
    word length).
    """
    pairs = [(g, im) for g, im in pairs]
    if not pairs:
        raise ValueError("need at least one generator pair")
    g0, im0 = pairs[0]
    e_dom = g0 * g0.inverse()
    e_img = im0 * im0.inverse()
    table = {e_dom: e_img}
    queue = deque([e_dom])
    while queue:
        g = queue.popleft()
        tg = table[g]
        for s, si in pairs:
            h = g * s
            hi = tg * si
            prev = table.get(h)
            if prev is None:
                if len(table) >= cap:
                    raise ClosureCapError(f"domain exceeded cap {cap}")
                table[h] = hi
                queue.append(h)
            elif prev != hi:
                raise InconsistentImagesError("generator images are not a homomorphism")

    if len(table) <= 1000:
        for g, tg in table.items():
            for h, th in table.items():
                if table[g * h] != tg * th:
                    raise InconsistentImagesError("table is not multiplicative")
    else:
        for g, tg in table.items():
            for s, si in pairs:
                if table[g * s] != tg * si:
                    raise InconsistentImagesError("table is not multiplicative")
    return GroupHom(
        tuple(p[0] for p in pairs),
        tuple(p[1] for p in pairs),
        table,
    )
