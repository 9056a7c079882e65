"""The group X generated by two monomial pairs and entrywise conjugation,
acting on 6x6 matrices over Q(w), together with its faithful 36-point
permutation image, the 18-point row action, the stabilizer of the distinguished
Hadamard matrix, and mechanised structure verification.

Element (P, Q, eps) acts by H -> (P^-1 H Q), entrywise conjugated iff eps = 1.
The composition law making that a right action is

    (P1, Q1, e1) * (P2, Q2, e2) = (P1 * conj^e1(P2), Q1 * conj^e1(Q2), e1 + e2)

and a randomized test pins the functional equation H^(g1 g2) = (H^g1)^g2.

Point labels are frozen by the stacking convention H, wH, w2H: row states
(a, r) are numbered 6a + r with r = 1..6 (1-based at the text boundary,
0-based in code), and an element with first component D*K, D = diag(w^d),
sends

    (a, r)  ->  ((-1)^eps * (a - d_r),  r^K)

Columns behave the same way on points 19..36 using the second component.
Commutators are [a, b] = a^-1 b^-1 a b and conjugation is a^b = b^-1 a b;
this choice is pinned by the frozen diagonal commutator values in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product

from .eisenstein import E_ONE, OMEGA, OMEGA2, OMEGA_POWERS, EisensteinRational
from .groups import (
    BSGS,
    BlockSystemError,
    action_kernel_order,
    bsgs_build,
    center_of,
    check_relations,
    closure,
    commutator,
    conjugate,
    derived_subgroup,
    is_simple_small,
    orbit_stabilizer,
)
from .matrices import ExactMatrix, h6
from .monomial import MonomialMatrix
from .perms import Permutation
from .report import Clause, Report, check

_UNIT_PHASE = {E_ONE: 0, OMEGA: 1, OMEGA2: 2}


class XElement:
    """Pair of monomial matrices plus a conjugation flag."""

    __slots__ = ("p", "q", "eps")

    def __init__(self, p: MonomialMatrix, q: MonomialMatrix, eps: int):
        if p.degree != q.degree:
            raise ValueError("component degree mismatch")
        self.p = p
        self.q = q
        self.eps = eps % 2

    @classmethod
    def identity(cls, n: int = 6) -> "XElement":
        return cls(MonomialMatrix.identity(n), MonomialMatrix.identity(n), 0)

    @property
    def degree(self) -> int:
        return self.p.degree

    def __mul__(self, other):
        if not isinstance(other, XElement):
            return NotImplemented
        p2, q2 = other.p, other.q
        if self.eps:
            p2 = p2.conj_entries()
            q2 = q2.conj_entries()
        return XElement(self.p * p2, self.q * q2, self.eps + other.eps)

    def inverse(self) -> "XElement":
        pi, qi = self.p.inverse(), self.q.inverse()
        if self.eps:
            pi = pi.conj_entries()
            qi = qi.conj_entries()
        return XElement(pi, qi, self.eps)

    def is_identity(self) -> bool:
        return self.eps == 0 and self.p.is_identity() and self.q.is_identity()

    def act(self, H: ExactMatrix) -> ExactMatrix:
        """(P^-1 H Q), conjugated entrywise iff eps = 1."""
        if H.ring is not EisensteinRational:
            raise ValueError("the action is defined on matrices over Q(w)")
        n = self.degree
        if H.rows != n or H.cols != n:
            raise ValueError("dimension mismatch")
        d, sgi = self.p.phases, self.p.perm.inverse().images
        q, pgi = self.q.phases, self.q.perm.inverse().images
        ent = H.entries
        eps = self.eps
        out = []
        if all(e in _UNIT_PHASE for e in ent):
            for i in range(n):
                ii = sgi[i]
                row = ent[ii * n :]
                di = d[ii]
                for j in range(n):
                    jj = pgi[j]
                    k = (_UNIT_PHASE[row[jj]] + q[jj] - di) % 3
                    out.append(OMEGA_POWERS[(-k) % 3 if eps else k])
        else:
            for i in range(n):
                ii = sgi[i]
                di = d[ii]
                for j in range(n):
                    jj = pgi[j]
                    v = ent[ii * n + jj].times_omega_pow(q[jj] - di)
                    out.append(v.conj() if eps else v)
        return ExactMatrix._raw(n, n, tuple(out), EisensteinRational)

    def to_perm36(self) -> Permutation:
        """Faithful image on 18 row states plus 18 column states."""
        if self.degree != 6:
            raise ValueError("36-point image is defined for degree 6")
        img = [0] * 36
        eps = self.eps
        d, sg = self.p.phases, self.p.perm.images
        for r in range(6):
            dr, sr = d[r], sg[r]
            for a in range(3):
                na = (a - dr) % 3
                if eps:
                    na = (-na) % 3
                img[6 * a + r] = 6 * na + sr
        q, pg = self.q.phases, self.q.perm.images
        for j in range(6):
            qj, pj = q[j], pg[j]
            for b in range(3):
                nb = (b - qj) % 3
                if eps:
                    nb = (-nb) % 3
                img[18 + 6 * b + j] = 18 + 6 * nb + pj
        return Permutation._raw(tuple(img))

    def to_perm18(self) -> Permutation:
        """The row-only action; its kernel on X has order 3^5."""
        return Permutation._raw(self.to_perm36().images[:18])

    @classmethod
    def from_perm36(cls, perm: Permutation) -> "XElement":
        """Invert to_perm36 for permutations in the image of X."""
        if perm.degree != 36:
            raise ValueError("expected a 36-point permutation")
        img = perm.images
        eps = None
        d, sg, q, pg = [0] * 6, [0] * 6, [0] * 6, [0] * 6
        for r in range(6):
            a0, s0 = divmod(img[r], 6)
            a1, s1 = divmod(img[6 + r], 6)
            if s0 != s1 or s0 > 5:
                raise ValueError("not in the image of the 36-point embedding")
            delta = (a1 - a0) % 3
            e = 0 if delta == 1 else 1
            if eps is None:
                eps = e
            elif eps != e:
                raise ValueError("inconsistent conjugation flag")
            sg[r] = s0
            d[r] = (-a0) % 3 if e == 0 else a0 % 3
        for j in range(6):
            b0, t0 = divmod(img[18 + j] - 18, 6)
            b1, t1 = divmod(img[24 + j] - 18, 6)
            if not (0 <= t0 <= 5) or t0 != t1:
                raise ValueError("not in the image of the 36-point embedding")
            delta = (b1 - b0) % 3
            if (0 if delta == 1 else 1) != eps:
                raise ValueError("inconsistent conjugation flag")
            pg[j] = t0
            q[j] = (-b0) % 3 if eps == 0 else b0 % 3
        g = cls(
            MonomialMatrix(tuple(d), Permutation(tuple(sg))),
            MonomialMatrix(tuple(q), Permutation(tuple(pg))),
            eps,
        )
        if g.to_perm36() != perm:
            raise ValueError("permutation is not in the image of X")
        return g

    def __eq__(self, other):
        if not isinstance(other, XElement):
            return NotImplemented
        return self.eps == other.eps and self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q, self.eps))

    def __str__(self):
        s = f"({self.p}, {self.q})"
        return s + "*" if self.eps else s

    def __repr__(self):
        return f"<XElement {self}>"


# ---------------------------------------------------------------------------
# named elements


@cache
def tau1() -> XElement:
    k = Permutation.parse("(2,3,4,5,6)", 6)
    return XElement(MonomialMatrix((0,) * 6, k), MonomialMatrix((0,) * 6, k), 0)


@cache
def tau2() -> XElement:
    return XElement(
        MonomialMatrix((0, 0, 1, 2, 2, 1), Permutation.parse("(1,2)", 6)),
        MonomialMatrix((0, 0, 2, 1, 1, 2), Permutation.parse("(1,2)(3,6)(4,5)", 6)),
        0,
    )


@cache
def star() -> XElement:
    return XElement(MonomialMatrix.identity(6), MonomialMatrix.identity(6), 1)


@cache
def tau2prime() -> XElement:
    literal = XElement(
        MonomialMatrix((0,) * 6, Permutation.parse("(1,2)", 6)),
        MonomialMatrix((0,) * 6, Permutation.parse("(1,2)(3,6)(4,5)", 6)),
        0,
    )
    derived = commutator(tau2(), star()).inverse() * tau2()
    if derived != literal:
        raise AssertionError("derived value of tau2' disagrees with the literal one")
    return literal


@cache
def sylow_x() -> XElement:
    return XElement(
        MonomialMatrix((2, 0, 1, 1, 0, 2), Permutation.parse("(1,2,3)", 6)),
        MonomialMatrix((1, 0, 1, 0, 2, 2), Permutation.parse("(1,4,6)(2,3,5)", 6)),
        0,
    )


@cache
def sylow_y() -> XElement:
    return XElement(
        MonomialMatrix((1, 2, 0, 0, 2, 1), Permutation.parse("(4,5,6)", 6)),
        MonomialMatrix((1, 1, 1, 1, 1, 1), Permutation.parse("(1,4,6)(2,5,3)", 6)),
        0,
    )


@cache
def omega_pair() -> XElement:
    """(wI, wI): generates the center of the linear stabilizer."""
    return XElement(MonomialMatrix.diagonal((1,) * 6), MonomialMatrix.diagonal((1,) * 6), 0)


@cache
def n_element(k: int) -> XElement:
    """Diagonal pair whose first component is row k of the Hadamard matrix.

    n2 is the commutator of the second generator with conjugation; repeated
    conjugation by the first generator advances the row index by one.
    """
    if not 2 <= k <= 6:
        raise ValueError("k must be in 2..6")
    if k == 2:
        return commutator(tau2(), star())
    return conjugate(n_element(k - 1), tau1())


@cache
def x_generators() -> tuple[XElement, XElement, XElement]:
    return (tau1(), tau2(), star())


# ---------------------------------------------------------------------------
# permutation images and subgroup data


@cache
def x_bsgs() -> BSGS:
    return bsgs_build([g.to_perm36() for g in x_generators()])


@cache
def x0_bsgs() -> BSGS:
    return bsgs_build([tau1().to_perm36(), tau2().to_perm36()])


@cache
def y_bsgs() -> BSGS:
    return bsgs_build([tau1().to_perm36(), tau2prime().to_perm36()])


@cache
def y_elements() -> tuple[XElement, ...]:
    return tuple(closure([tau1(), tau2prime()]))


def _row_col_block(p: int) -> int:
    """Forget phases: each of the 12 blocks is one row or column index."""
    return p % 6 if p < 18 else 6 + (p - 18) % 6


def _row_restriction_block(p: int) -> int:
    """Row points stay themselves; all column points collapse to one block."""
    return p if p < 18 else 18


@dataclass(eq=False)
class DiagonalSubgroup:
    """The subgroup of pairs of diagonal matrices, as computed from a chain."""

    generators: tuple[XElement, ...]
    order: int
    bsgs: BSGS


@cache
def n_subgroup() -> DiagonalSubgroup:
    """Kernel of the block action of <tau1, tau2> on the 12 row/column blocks.

    Computed from a stabilizer chain whose base runs through 12 extra points
    representing the blocks; the strong generators fixing all of them generate
    the kernel exactly.
    """
    gens36 = [tau1().to_perm36(), tau2().to_perm36()]
    extended = []
    for g in gens36:
        block_image = [None] * 12
        for p in range(36):
            b, t = _row_col_block(p), _row_col_block(g.apply(p))
            if block_image[b] is None:
                block_image[b] = t
            elif block_image[b] != t:
                raise BlockSystemError("row/column blocks are not preserved")
        extended.append(Permutation(g.images + tuple(36 + b for b in block_image)))
    chain = bsgs_build(extended, base_prefix=tuple(range(36, 48)))
    kernel48 = chain.level_group_generators(12)
    kernel36 = [Permutation(g.images[:36]) for g in kernel48]
    nb = bsgs_build(kernel36, degree=36)
    return DiagonalSubgroup(
        tuple(XElement.from_perm36(g) for g in kernel36), nb.order(), nb
    )


@dataclass(eq=False)
class Stabilizer:
    generators: tuple[XElement, ...]
    order: int
    orbit_size: int
    bsgs: BSGS


@cache
def compute_aut_star() -> Stabilizer:
    """Stabilizer of the Hadamard matrix under X, by orbit enumeration over
    hashed exact matrices with Schreier generators sifted into a growing BSGS."""
    kept_perms: list[Permutation] = []
    kept_elements: list[XElement] = []
    chain: list[BSGS] = []

    def keep(candidate: XElement) -> bool:
        perm = candidate.to_perm36()
        if perm.is_identity():
            return False
        if chain and chain[0].contains(perm):
            return False
        kept_perms.append(perm)
        kept_elements.append(candidate)
        chain[:] = [bsgs_build(kept_perms)]
        return True

    result = orbit_stabilizer(list(x_generators()), lambda H, g: g.act(H), h6(), keep=keep)
    stab = chain[0]
    return Stabilizer(tuple(kept_elements), stab.order(), result.orbit_size, stab)


@cache
def compute_aut_linear() -> Stabilizer:
    """The eps = 0 subgroup of the stabilizer (kernel of the flag map to Z/2),
    generated by the index-2 Schreier generators over the transversal {e, g0}."""
    aut = compute_aut_star()
    plain = [g for g in aut.generators if g.eps == 0]
    flagged = [g for g in aut.generators if g.eps == 1]
    if not flagged:
        kernel = list(aut.generators)
    else:
        g0 = flagged[0]
        g0i = g0.inverse()
        kernel = list(plain)
        kernel += [g0 * s * g0i for s in plain]
        kernel += [s * g0i for s in flagged]
        kernel += [g0 * s for s in flagged]
    unique: list[XElement] = []
    for g in kernel:
        if not g.is_identity() and g not in unique:
            unique.append(g)
    bsgs = bsgs_build([g.to_perm36() for g in unique])
    return Stabilizer(tuple(unique), bsgs.order(), aut.orbit_size, bsgs)


def s6_presentation_words() -> tuple:
    """Relator words in s, t presenting the symmetric group on six points:
    s^6, t^2, (st)^5, [t,s^2]^2, [t,s^3]^2."""
    return (
        (("s", 6),),
        (("t", 2),),
        (("s", 1), ("t", 1)) * 5,
        (("t", -1), ("s", -2), ("t", 1), ("s", 2)) * 2,
        (("t", -1), ("s", -3), ("t", 1), ("s", 3)) * 2,
    )


# ---------------------------------------------------------------------------
# the zero-sum phase module


def m_vectors() -> list[tuple[int, ...]]:
    """The 3^5 unimodular diagonal phase vectors: exponent sum 0 mod 3."""
    return [v for v in product(range(3), repeat=6) if sum(v) % 3 == 0]


def _gf3_span_size(vectors) -> int:
    basis: list[list[int]] = []
    for v in vectors:
        row = list(v)
        for b in basis:
            lead = next(i for i, x in enumerate(b) if x)
            if row[lead]:
                c = row[lead] * pow(b[lead], -1, 3) % 3
                row = [(x - c * y) % 3 for x, y in zip(row, b)]
        if any(row):
            basis.append(row)
    return 3 ** len(basis)


def submodule_closure_size(v) -> int:
    """Size of the smallest set containing v closed under coordinate
    permutations and componentwise addition: the span of the orbit."""
    v = tuple(x % 3 for x in v)
    gens = [Permutation.parse("(1,2)", 6), Permutation.parse("(1,2,3,4,5,6)", 6)]
    maps = [g.inverse().images for g in gens]
    orbit = {v}
    frontier = [v]
    while frontier:
        w = frontier.pop()
        for m in maps:
            u = tuple(w[m[i]] for i in range(6))
            if u not in orbit:
                orbit.add(u)
                frontier.append(u)
    return _gf3_span_size(sorted(orbit))


def m_submodule_check() -> bool:
    """Every non-constant zero-sum vector generates the whole module; the
    constants generate the order-3 constant module; zero generates nothing."""
    for v in m_vectors():
        size = submodule_closure_size(v)
        if len(set(v)) == 1:
            expected = 1 if v[0] == 0 else 3
        else:
            expected = 243
        if size != expected:
            return False
    return True


# ---------------------------------------------------------------------------
# verification reports


def _diag_pair(p_phases, q_phases) -> XElement:
    return XElement(MonomialMatrix.diagonal(p_phases), MonomialMatrix.diagonal(q_phases), 0)


def verify_prop1() -> Report:
    clauses: list[Clause] = []
    H = h6()

    mutations_fail = True
    for i in range(6):
        for j in range(6):
            for k in (1, 2):
                bad = H.with_entry(i, j, H.entry(i, j).times_omega_pow(k))
                if bad.is_hadamard():
                    mutations_fail = False
    clauses.append(
        check("h6_hadamard", "H dagger(H) = 6I exactly, and no single-entry change survives",
              True, H.is_hadamard() and mutations_fail)
    )

    clauses.append(check("order_X", "group order of <tau1, tau2, *>", 85_030_560, x_bsgs().order()))
    clauses.append(check("order_X0", "index-2 subgroup <tau1, tau2>", 42_515_280, x0_bsgs().order()))

    N = n_subgroup()
    clauses.append(check("order_N", "diagonal-pair kernel of the block action", 59_049, N.order))
    clauses.append(
        check("order_N_via_blocks", "kernel order from |X0| / |block image|",
              59_049, action_kernel_order(x0_bsgs(), _row_col_block))
    )

    xgens36 = [g.to_perm36() for g in x_generators()]
    normal = all(
        N.bsgs.contains(conjugate(n, g))
        for n in N.bsgs.strong_generators()
        for g in xgens36
    )
    clauses.append(check("n_normal_in_x", "N is normal in X", True, normal))

    diag = all(n.p.perm.is_identity() and n.q.perm.is_identity() for n in N.generators)
    rho1 = _gf3_span_size([n.p.phases for n in N.generators]) if diag else 0
    rho2 = _gf3_span_size([n.q.phases for n in N.generators]) if diag else 0
    clauses.append(check("n_rho1_projection", "first components of N span a group of order 3^5", 243, rho1))
    clauses.append(check("n_rho2_projection", "second components of N span a group of order 3^5", 243, rho2))

    clauses.append(check("order_Y", "permutation-pair subgroup <tau1, tau2'>", 720, y_bsgs().order()))

    trivial_meet = sum(
        1 for y in y_elements() if y.p.perm.is_identity() and y.q.perm.is_identity()
    )
    clauses.append(check("y_meet_n", "Y intersects N trivially", 1, trivial_meet))

    s = (tau1() * tau2prime()).to_perm36()
    t = tau2prime().to_perm36()
    clauses.append(
        check("s6_presentation", "s^6 = t^2 = (st)^5 = [t,s^2]^2 = [t,s^3]^2 = 1",
              True, check_relations(s6_presentation_words(), {"s": s, "t": t}))
    )

    dets = []
    for g in (tau1(), tau2()):
        dets.append(g.p.det())
        dets.append(g.q.det())
    clauses.append(
        check("component_determinants", "generator components have determinant +-1",
              True, all(d == E_ONE or d == -E_ONE for d in dets))
    )

    word = n_element(3) * n_element(4) * n_element(4) * n_element(5) * n_element(5)
    expected = _diag_pair((0, 0, 0, 0, 1, 2), (0, 0, 0, 0, 2, 1))
    clauses.append(check("n3_n4sq_n5sq", "the diagonal product lands on the stated pair",
                         str(expected), str(word)))
    conj_word = conjugate(word, tau2prime())
    conj_expected = _diag_pair((0, 0, 0, 0, 1, 2), (0, 0, 1, 2, 0, 0))
    clauses.append(check("n3_n4sq_n5sq_conj", "its tau2'-conjugate lands on the stated pair",
                         str(conj_expected), str(conj_word)))

    return Report("prop1", clauses)


def _central_quotient_generators() -> tuple[list[Permutation], int]:
    """Right regular action of (linear stabilizer)/(its center) on cosets."""
    lin = compute_aut_linear()
    perms = [g.to_perm36() for g in lin.generators]
    elements = closure(perms)
    z = omega_pair().to_perm36()
    z2 = z * z

    def coset_key(g: Permutation):
        return min(g.images, (g * z).images, (g * z2).images)

    key_index: dict = {}
    reps: list[Permutation] = []
    for el in elements:
        k = coset_key(el)
        if k not in key_index:
            key_index[k] = len(reps)
            reps.append(el)
    qgens = []
    for sgen in perms:
        qgens.append(Permutation(tuple(key_index[coset_key(r * sgen)] for r in reps)))
    return qgens, len(reps)


def verify_prop2() -> Report:
    clauses: list[Clause] = []
    aut = compute_aut_star()
    clauses.append(check("autstar_order", "the stabilizer of H in X has order 3 * 720", 2160, aut.order))
    clauses.append(check("orbit_size", "orbit of H under X", 39_366, aut.orbit_size))
    clauses.append(
        check("orbit_stabilizer", "orbit size times stabilizer order is |X|",
              x_bsgs().order(), aut.orbit_size * aut.order)
    )

    span = bsgs_build([tau1().to_perm36(), (tau2() * star()).to_perm36()])
    clauses.append(check("span_order", "<tau1, tau2 *> has order 2160", 2160, span.order()))
    contained = all(span.contains(g.to_perm36()) for g in aut.generators)
    clauses.append(
        check("stabilizer_equals_span", "the stabilizer is exactly <tau1, tau2 *>",
              True, contained and span.order() == aut.order)
    )

    clauses.append(check("tau1_member", "tau1 fixes H", True, aut.bsgs.contains(tau1().to_perm36())))
    clauses.append(
        check("tau2star_member", "tau2 * fixes H", True,
              aut.bsgs.contains((tau2() * star()).to_perm36()))
    )
    clauses.append(check("star_not_member", "* itself does not fix H", False,
                         aut.bsgs.contains(star().to_perm36())))

    comm = commutator(tau2(), star())
    expected_comm = _diag_pair((0, 0, 1, 2, 2, 1), (0, 0, 2, 1, 1, 2))
    clauses.append(check("commutator_tau2_star", "[tau2, *] is the stated diagonal pair",
                         str(expected_comm), str(comm)))

    H = h6()
    clauses.append(
        check("sylow_fix_h6", "the Sylow-3 generators x, y fix H", True,
              sylow_x().act(H) == H and sylow_y().act(H) == H)
    )
    clauses.append(check("sylow_commutator", "[x, y] = (wI, wI)",
                         str(omega_pair()), str(commutator(sylow_x(), sylow_y()))))

    lin = compute_aut_linear()
    clauses.append(check("aut_order", "the eps = 0 subgroup has order 3 * 360", 1080, lin.order))

    lin_perms = [g.to_perm36() for g in lin.generators]
    derived = bsgs_build(derived_subgroup(lin_perms))
    clauses.append(check("aut_perfect", "it is perfect", 1080, derived.order()))

    center = center_of(lin_perms)
    z = omega_pair().to_perm36()
    center_ok = len(center) == 3 and set(center) == {z * z.inverse(), z, z * z}
    clauses.append(check("center", "center has order 3, generated by (wI, wI)", True, center_ok))

    qgens, qsize = _central_quotient_generators()
    clauses.append(check("central_quotient_order", "quotient by the center has order 360", 360, qsize))
    clauses.append(check("central_quotient_simple", "that quotient is simple", True,
                         is_simple_small(qgens)))

    displays = {
        "perm18_tau1": (tau1(), "(2,3,4,5,6)(8,9,10,11,12)(14,15,16,17,18)"),
        "perm18_tau2": (tau2(), "(1,2)(3,15,9)(4,10,16)(5,11,17)(6,18,12)(7,8)(13,14)"),
        "perm18_star": (star(), "(7,13)(8,14)(9,15)(10,16)(11,17)(12,18)"),
    }
    for cid, (g, expected) in displays.items():
        clauses.append(check(cid, "18-point image printed canonically", expected, str(g.to_perm18())))

    clauses.append(
        check("kernel18", "kernel of the 18-point action has order 3^5", 243,
              action_kernel_order(x_bsgs(), _row_restriction_block))
    )
    return Report("prop2", clauses)


def verify_submodule() -> Report:
    vectors = m_vectors()
    zero_ok = submodule_closure_size((0,) * 6) == 1
    const_ok = all(submodule_closure_size((c,) * 6) == 3 for c in (1, 2))
    nonconstant = [v for v in vectors if len(set(v)) > 1]
    full = sum(1 for v in nonconstant if submodule_closure_size(v) == 243)
    clauses = [
        check("module_size", "the zero-sum phase module has 3^5 elements", 243, len(vectors)),
        check("zero_closure", "the zero vector generates the trivial module", True, zero_ok),
        check("constant_closures", "each nonzero constant generates the order-3 module", True, const_ok),
        check("nonconstant_closures", "all 240 non-constant vectors generate everything", 240, full),
        check("overall", "submodule check", True, m_submodule_check()),
    ]
    return Report("submodule", clauses)
