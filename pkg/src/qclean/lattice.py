"""Graded lattices with quasi-complementation, in two instances.

The abstract layer is a lattice with a grading into an abelian group
(dimension into Z for Grassmannians, cardinality into Q+ for subgroup
lattices) and an order-reversing involution whose grade product is
constant.  The rank identity holding in that generality specializes to
every cleaning-lemma variant in :mod:`qclean.codes`, and down here to its
subgroup-lattice analogue.

Finite abelian groups are products of cyclic groups; elements are encoded
as mixed-radix integers and subgroups stored as explicit element sets, so
every identity is checkable by brute force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm, prod
from typing import Iterable, Sequence

import numpy as np

from .subspaces import BilinearForm, Subspace

__all__ = [
    "AbelianGroup",
    "Subgroup",
    "Bicharacter",
    "GradedLatticeInstance",
    "generated_subgroup",
    "subgroup_meet",
    "subgroup_join",
    "dagger",
    "verify_graded_identity",
    "abelian_cl",
    "abelian_cl_alternative",
    "AbelianClResult",
    "CleaningAlternative",
    "all_subgroups",
    "verify_graded_identity_exhaustive",
    "abelian_isomorphism_classes",
]

MAX_GROUP_ORDER = 65536
DEFAULT_ENUM_CAP = 256


class AbelianGroup:
    """Direct product of cyclic groups Z/n_1 x ... x Z/n_t.

    Elements are encoded as mixed-radix integers in [0, order): component
    j varies fastest for j = t-1.
    """

    __slots__ = ("moduli", "order", "_radix", "_pair_cache")

    def __init__(self, moduli: Sequence[int]):
        moduli = tuple(int(n) for n in moduli)
        if not moduli or any(n < 2 for n in moduli):
            raise ValueError("moduli must be a nonempty sequence of integers >= 2")
        order = prod(moduli)
        if order > MAX_GROUP_ORDER:
            raise ValueError(f"group order {order} exceeds cap {MAX_GROUP_ORDER}")
        self.moduli = moduli
        self.order = order
        radix = [1] * len(moduli)
        for j in range(len(moduli) - 2, -1, -1):
            radix[j] = radix[j + 1] * moduli[j + 1]
        self._radix = tuple(radix)
        self._pair_cache = {}

    def encode(self, components: Sequence[int]) -> int:
        if len(components) != len(self.moduli):
            raise ValueError("component count mismatch")
        return sum(
            (int(c) % n) * r
            for c, n, r in zip(components, self.moduli, self._radix)
        )

    def decode(self, element: int) -> tuple[int, ...]:
        if not 0 <= element < self.order:
            raise ValueError(f"element {element} out of range")
        out = []
        for n, r in zip(self.moduli, self._radix):
            out.append((element // r) % n)
        return tuple(out)

    def add(self, a: int, b: int) -> int:
        ca, cb = self.decode(a), self.decode(b)
        return self.encode([x + y for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        return self.encode([-x for x in self.decode(a)])

    def elements(self) -> range:
        return range(self.order)

    def components_table(self) -> np.ndarray:
        """(order x t) int64 array of decoded components, row g = decode(g)."""
        g = np.arange(self.order, dtype=np.int64)
        cols = [
            (g // r) % n for n, r in zip(self.moduli, self._radix)
        ]
        return np.stack(cols, axis=1)

    def __eq__(self, other) -> bool:
        return isinstance(other, AbelianGroup) and self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(self.moduli)

    def __repr__(self) -> str:
        return "AbelianGroup(%s)" % " x ".join(f"Z/{n}" for n in self.moduli)


class Subgroup:
    """A subgroup of an ``AbelianGroup`` stored as its sorted element set."""

    __slots__ = ("parent", "elements", "_set")

    def __init__(self, parent: AbelianGroup, elements: Iterable[int], *,
                 _trusted: bool = False):
        elems = sorted(set(int(e) for e in elements))
        self.parent = parent
        self.elements = tuple(elems)
        self._set = frozenset(elems)
        if not _trusted:
            self._verify()

    def _verify(self) -> None:
        if 0 not in self._set:
            raise ValueError("subgroup must contain the identity")
        for e in self.elements:
            if not 0 <= e < self.parent.order:
                raise ValueError(f"element {e} out of range")
        for a in self.elements:
            for b in self.elements:
                if self.parent.add(a, b) not in self._set:
                    raise ValueError("element set is not closed under addition")
        if self.parent.order % len(self.elements):
            raise ValueError("subgroup order does not divide the group order")

    @classmethod
    def trivial(cls, parent: AbelianGroup) -> "Subgroup":
        return cls(parent, (0,), _trusted=True)

    @classmethod
    def whole(cls, parent: AbelianGroup) -> "Subgroup":
        return cls(parent, range(parent.order), _trusted=True)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, element: int) -> bool:
        return element in self._set

    def __le__(self, other: "Subgroup") -> bool:
        self._check(other)
        return self._set <= other._set

    def _check(self, other: "Subgroup") -> None:
        if self.parent != other.parent:
            raise ValueError("parent group mismatch")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent == other.parent
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.elements))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent!r})"


def generated_subgroup(g: AbelianGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the generators (closure by BFS)."""
    seen = {0}
    frontier = [0]
    gens = [int(x) for x in gens]
    for x in gens:
        if not 0 <= x < g.order:
            raise ValueError(f"generator {x} out of range")
    while frontier:
        cur = frontier.pop()
        for x in gens:
            nxt = g.add(cur, x)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return Subgroup(g, seen, _trusted=True)


def subgroup_meet(a: Subgroup, b: Subgroup) -> Subgroup:
    a._check(b)
    return Subgroup(a.parent, a._set & b._set, _trusted=True)


def subgroup_join(a: Subgroup, b: Subgroup) -> Subgroup:
    a._check(b)
    g = a.parent
    out = {g.add(x, y) for x in a.elements for y in b.elements}
    # a union of subgroup cosets of a is closed once all pair sums are in
    while True:
        extra = {g.add(x, y) for x in out for y in b.elements} - out
        if not extra:
            break
        out |= extra
    return Subgroup(g, out, _trusted=True)


class Bicharacter:
    """Involutive nondegenerate bicharacter, stored as an exponent matrix.

    The pairing of a and b is the root of unity with exponent
    sum_ij a_i E_ij b_j modulo L = lcm(moduli); the pairing is trivial
    ("equals 1") iff the exponent vanishes.  All arithmetic is exact.
    """

    __slots__ = ("parent", "exponents", "lcm")

    def __init__(self, parent: AbelianGroup, exponents: np.ndarray):
        t = len(parent.moduli)
        e = np.asarray(exponents, dtype=np.int64)
        if e.shape != (t, t):
            raise ValueError("exponent matrix shape mismatch")
        big_l = lcm(*parent.moduli)
        e = e % big_l
        for i, ni in enumerate(parent.moduli):
            for j, nj in enumerate(parent.moduli):
                if (e[i, j] * ni) % big_l or (e[i, j] * nj) % big_l:
                    raise ValueError(
                        f"exponent E[{i},{j}] is not bilinear over the moduli"
                    )
        self.parent = parent
        self.exponents = e
        self.lcm = big_l
        self._validate()

    @classmethod
    def product(cls, parent: AbelianGroup, multipliers: Sequence[int]) -> "Bicharacter":
        """Componentwise symmetric pairing exp(2 pi i a_j b_j m_j / n_j)."""
        if len(multipliers) != len(parent.moduli):
            raise ValueError("multiplier count mismatch")
        big_l = lcm(*parent.moduli)
        e = np.zeros((len(parent.moduli),) * 2, dtype=np.int64)
        for j, (m, n) in enumerate(zip(multipliers, parent.moduli)):
            if gcd(m, n) != 1:
                raise ValueError(f"multiplier {m} not coprime to modulus {n}")
            e[j, j] = (m * (big_l // n)) % big_l
        return cls(parent, e)

    @classmethod
    def from_matrix(cls, parent: AbelianGroup, matrix) -> "Bicharacter":
        """Explicit t x t integer exponent matrix (e.g. antisymmetric pairings)."""
        return cls(parent, np.asarray(matrix, dtype=np.int64))

    def pair_exponent(self, a: int, b: int) -> int:
        ca = np.array(self.parent.decode(a), dtype=np.int64)
        cb = np.array(self.parent.decode(b), dtype=np.int64)
        return int(ca @ self.exponents @ cb) % self.lcm

    def is_trivial(self, a: int, b: int) -> bool:
        """True iff the pairing value is 1."""
        return self.pair_exponent(a, b) == 0

    def nonzero_table(self) -> np.ndarray:
        """(order x order) bool table, True where the pairing is nontrivial."""
        key = ("table", self.exponents.tobytes())
        cached = self.parent._pair_cache.get(key)
        if cached is None:
            comp = self.parent.components_table()
            exp = (comp @ self.exponents @ comp.T) % self.lcm
            cached = exp != 0
            self.parent._pair_cache[key] = cached
        return cached

    def _validate(self) -> None:
        if self.parent.order > 4096:
            return  # table-based validation capped; product pairings are safe
        table = self.nonzero_table()
        if np.any(~table[1:, :].any(axis=1)):
            raise ValueError("bicharacter is degenerate")
        if not np.array_equal(table, table.T):
            raise ValueError("bicharacter is not involutive")

    def __repr__(self) -> str:
        return f"Bicharacter(on {self.parent!r})"


def dagger(h: Subgroup, chi: Bicharacter) -> Subgroup:
    """Annihilator subgroup {g : <H, g> = 1}."""
    if h.parent != chi.parent:
        raise ValueError("parent group mismatch")
    g = h.parent
    if g.order <= 4096:
        table = chi.nonzero_table()
        bad = table[np.array(h.elements, dtype=np.int64), :].any(axis=0)
        return Subgroup(g, np.nonzero(~bad)[0].tolist(), _trusted=True)
    out = [
        x
        for x in g.elements()
        if all(chi.is_trivial(e, x) for e in h.elements)
    ]
    return Subgroup(g, out, _trusted=True)


# ---------------------------------------------------------------------------
# The two lattice instances and the abstract rank identity


@dataclass(frozen=True)
class GradedLatticeInstance:
    """A graded lattice with quasi-complementation.

    kind 'grassmannian': elements are Subspace values, carrier is the
    BilinearForm, grading is dimension (additive).  kind 'subgroup-lattice':
    elements are Subgroup values, carrier is (AbelianGroup, Bicharacter),
    grading is cardinality (multiplicative).
    """

    kind: str
    form: BilinearForm | None = None
    group: AbelianGroup | None = None
    chi: Bicharacter | None = None

    @classmethod
    def grassmannian(cls, form: BilinearForm) -> "GradedLatticeInstance":
        return cls(kind="grassmannian", form=form)

    @classmethod
    def subgroup_lattice(
        cls, group: AbelianGroup, chi: Bicharacter
    ) -> "GradedLatticeInstance":
        if chi.parent != group:
            raise ValueError("bicharacter parent mismatch")
        return cls(kind="subgroup-lattice", group=group, chi=chi)

    def _check_member(self, x) -> None:
        if self.kind == "grassmannian":
            if not isinstance(x, Subspace) or x.ambient_dim != self.form.ambient_dim:
                raise ValueError("element does not belong to this Grassmannian")
        else:
            if not isinstance(x, Subgroup) or x.parent != self.group:
                raise ValueError("element does not belong to this subgroup lattice")

    def meet(self, x, y):
        return x & y if self.kind == "grassmannian" else subgroup_meet(x, y)

    def join(self, x, y):
        return x + y if self.kind == "grassmannian" else subgroup_join(x, y)

    def dagger(self, x):
        if self.kind == "grassmannian":
            return x.annihilator(self.form)
        return dagger(x, self.chi)

    def grade(self, x) -> Fraction:
        """Grade as a positive rational: 2^dim for subspaces keeps both
        instances in one multiplicative group; ratios of grades are exactly
        the quantities appearing in the rank identity."""
        if self.kind == "grassmannian":
            return Fraction(2**x.dim)
        return Fraction(x.order)


def verify_graded_identity(lattice: GradedLatticeInstance, xi, eta, alpha) -> bool:
    """The general rank identity of the two-lattice theorem, specialized to
    one lattice with quasi-complementation:

        [eta-dagger meet alpha / xi meet alpha]
          * [xi-dagger meet alpha-dagger / eta meet alpha-dagger]
          = [eta-dagger / xi].
    """
    for x in (xi, eta, alpha):
        lattice._check_member(x)
    eta_d = lattice.dagger(eta)
    xi_d = lattice.dagger(xi)
    alpha_d = lattice.dagger(alpha)
    lhs = (
        lattice.grade(lattice.meet(eta_d, alpha))
        / lattice.grade(lattice.meet(xi, alpha))
        * lattice.grade(lattice.meet(xi_d, alpha_d))
        / lattice.grade(lattice.meet(eta, alpha_d))
    )
    rhs = lattice.grade(eta_d) / lattice.grade(xi)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Abelian cleaning


def factor_subgroup(g: AbelianGroup, factors: Iterable[int]) -> Subgroup:
    """B_M: everything supported on the given (1-based) factor indices."""
    idx = sorted(set(int(i) for i in factors))
    for i in idx:
        if not 1 <= i <= len(g.moduli):
            raise ValueError(f"factor index {i} out of range")
    chosen = set(i - 1 for i in idx)
    ranges = [
        range(n) if j in chosen else range(1) for j, n in enumerate(g.moduli)
    ]
    elems = [g.encode(c) for c in itertools.product(*ranges)]
    return Subgroup(g, elems, _trusted=True)


def complement_factors(g: AbelianGroup, factors: Iterable[int]) -> list[int]:
    chosen = set(int(i) for i in factors)
    return [i for i in range(1, len(g.moduli) + 1) if i not in chosen]


@dataclass(frozen=True)
class AbelianClResult:
    ell_m: Fraction
    ell_mc: Fraction
    quotient: Fraction


def abelian_cl(
    g: AbelianGroup, chi: Bicharacter, h: Subgroup, factors: Iterable[int]
) -> AbelianClResult:
    """Cleaning identity on a product of abelian groups.

    ell_M is the number of dagger-of-H cosets of H with a representative
    supported on the factors M; the product over M and its complement is
    the total coset count |H-dagger| / |H|.
    """
    factors = list(factors)
    hd = dagger(h, chi)
    if not h <= hd:
        raise ValueError("H must satisfy H <= H-dagger")
    bm = factor_subgroup(g, factors)
    bmc = factor_subgroup(g, complement_factors(g, factors))
    ell_m = Fraction(subgroup_meet(bm, hd).order, subgroup_meet(bm, h).order)
    ell_mc = Fraction(subgroup_meet(bmc, hd).order, subgroup_meet(bmc, h).order)
    quotient = Fraction(hd.order, h.order)
    assert ell_m * ell_mc == quotient
    return AbelianClResult(ell_m, ell_mc, quotient)


@dataclass(frozen=True)
class CleaningAlternative:
    """Outcome of the cleaning alternative.

    outcome 'nontrivial-supported': some nontrivial coset has a
    representative supported on M; ``witness`` is one such element.
    outcome 'all-cleanable': every coset of H-dagger over H has a
    representative supported on the complement of M; ``witnesses`` maps the
    minimal element of each coset to such a representative.
    """

    outcome: str
    witness: int | None = None
    witnesses: dict[int, int] | None = None


def abelian_cl_alternative(
    g: AbelianGroup, chi: Bicharacter, h: Subgroup, factors: Iterable[int]
) -> CleaningAlternative:
    factors = list(factors)
    hd = dagger(h, chi)
    if not h <= hd:
        raise ValueError("H must satisfy H <= H-dagger")
    bm = factor_subgroup(g, factors)
    nontrivial = (hd._set - h._set) & bm._set
    if nontrivial:
        return CleaningAlternative("nontrivial-supported", witness=min(nontrivial))
    bmc_set = factor_subgroup(g, complement_factors(g, factors))._set
    witnesses: dict[int, int] = {}
    seen: set[int] = set()
    for x in hd.elements:
        if x in seen:
            continue
        coset = {g.add(x, s) for s in h.elements}
        seen |= coset
        inside = coset & bmc_set
        # guaranteed nonempty by the cleaning identity when ell_M = 1
        witnesses[min(coset)] = min(inside)
    return CleaningAlternative("all-cleanable", witnesses=witnesses)


# ---------------------------------------------------------------------------
# Exhaustive subgroup enumeration (Sylow-factorized)


def _modinv(a: int, n: int) -> int:
    return pow(a, -1, n)


def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _elementary_subspace_bases(k: int, p: int):
    """All rref matrices over F_p with k columns, as tuples of row tuples."""
    cols = range(k)
    for d in range(k + 1):
        for pivots in itertools.combinations(cols, d):
            free_pos = [
                (i, j)
                for i in range(d)
                for j in range(pivots[i] + 1, k)
                if j not in pivots
            ]
            for vals in itertools.product(range(p), repeat=len(free_pos)):
                mat = [[0] * k for _ in range(d)]
                for i in range(d):
                    mat[i][pivots[i]] = 1
                for (i, j), v in zip(free_pos, vals):
                    mat[i][j] = v
                yield tuple(tuple(r) for r in mat)


def _local_add(enc: int, row, p: int, radix) -> int:
    total = 0
    for c, r in zip(row, radix):
        cur = (enc // r) % p
        total += ((cur + c) % p) * r
    return total


def _span_elements(basis, p: int, radix) -> frozenset[int]:
    """Local-encoded span of a basis over Z/p (mixed-radix local encoding)."""
    elems = {0}
    for row in basis:
        multiples = [tuple((k * c) % p for c in row) for k in range(p)]
        elems = {
            _local_add(x, m, p, radix) for x in elems for m in multiples
        }
    return frozenset(elems)


def _subgroups_primary(moduli: tuple[int, ...], p: int) -> list[frozenset[int]]:
    """All subgroups of Z/p^a1 x ... (local mixed-radix encoding)."""
    order = prod(moduli)
    radix = [1] * len(moduli)
    for j in range(len(moduli) - 2, -1, -1):
        radix[j] = radix[j + 1] * moduli[j + 1]
    if all(m == p for m in moduli):
        k = len(moduli)
        out = []
        for basis in _elementary_subspace_bases(k, p):
            out.append(_span_elements(basis, p, radix))
        return out
    # generic BFS over the subgroup lattice, extending by coset representatives
    local = AbelianGroup(moduli)
    add = [[local.add(a, b) for b in range(order)] for a in range(order)]
    found: set[frozenset[int]] = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        nxt = []
        for sub in frontier:
            covered = set(sub)
            for e in range(order):
                if e in covered:
                    continue
                covered |= {add[e][s] for s in sub}
                new = set(sub)
                m = e
                while m not in new:
                    new |= {add[m][s] for s in sub}
                    m = add[m][e]
                fnew = frozenset(new)
                if fnew not in found:
                    found.add(fnew)
                    nxt.append(fnew)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


@lru_cache(maxsize=64)
def _all_subgroup_sets(moduli: tuple[int, ...]) -> tuple[frozenset[int], ...]:
    g = AbelianGroup(moduli)
    factorization = _prime_factors(g.order)
    per_prime: list[list[frozenset[int]]] = []
    for p in sorted(factorization):
        local_moduli = []
        embeddings = []  # global element of the local unit, per local factor
        for j, n in enumerate(g.moduli):
            v = 0
            while n % p == 0:
                n //= p
                v += 1
            if v == 0:
                continue
            q = p**v
            cof = g.moduli[j] // q
            unit = (cof * _modinv(cof % q, q)) % g.moduli[j]
            comp = [0] * len(g.moduli)
            comp[j] = unit
            local_moduli.append(q)
            embeddings.append(g.encode(comp))
        local_subs = _subgroups_primary(tuple(local_moduli), p)
        radix = [1] * len(local_moduli)
        for j in range(len(local_moduli) - 2, -1, -1):
            radix[j] = radix[j + 1] * local_moduli[j + 1]
        # map local encodings to global elements
        lifted: list[frozenset[int]] = []
        order_local = prod(local_moduli)
        glob = [0] * order_local
        for x in range(order_local):
            acc = 0
            rem = x
            for q, r, emb in zip(local_moduli, radix, embeddings):
                c = (rem // r) % q
                for _ in range(c):
                    acc = g.add(acc, emb)
            glob[x] = acc
        for sub in local_subs:
            lifted.append(frozenset(glob[x] for x in sub))
        per_prime.append(lifted)
    subs = [frozenset({0})]
    for lifted in per_prime:
        combined = []
        for s in subs:
            for t in lifted:
                combined.append(frozenset(g.add(a, b) for a in s for b in t))
        subs = combined
    return tuple(sorted(set(subs), key=lambda s: (len(s), sorted(s))))


def all_subgroups(g: AbelianGroup, cap: int = DEFAULT_ENUM_CAP) -> list[Subgroup]:
    """Every subgroup of g, enumerated prime by prime.

    Guarded by an order cap (default 256) because subgroup counts explode
    for large elementary abelian factors.
    """
    if g.order > cap:
        raise ValueError(f"group order {g.order} exceeds enumeration cap {cap}")
    return [
        Subgroup(g, s, _trusted=True) for s in _all_subgroup_sets(g.moduli)
    ]


def verify_graded_identity_exhaustive(
    g: AbelianGroup, chi: Bicharacter, cap: int = DEFAULT_ENUM_CAP
) -> int:
    """Check the rank identity for every (xi = eta = H <= H-dagger, all alpha).

    Vectorized over alpha via packed element masks; returns the number of
    (H, alpha) pairs checked, raising AssertionError on any violation.
    """
    sets = _all_subgroup_sets(g.moduli)
    if g.order > cap:
        raise ValueError(f"group order {g.order} exceeds enumeration cap {cap}")
    n_sub = len(sets)
    dense = np.zeros((n_sub, g.order), dtype=bool)
    for i, s in enumerate(sets):
        dense[i, list(s)] = True
    packed = np.packbits(dense, axis=1)
    orders = dense.sum(axis=1).astype(np.int64)

    table = chi.nonzero_table()
    dagger_dense = (dense.astype(np.uint8) @ table.astype(np.uint8)) == 0
    dagger_packed = np.packbits(dagger_dense, axis=1)
    index_of = {packed[i].tobytes(): i for i in range(n_sub)}
    dagger_idx = np.array(
        [index_of[dagger_packed[i].tobytes()] for i in range(n_sub)], dtype=np.int64
    )

    checked = 0
    popcount = np.bitwise_count
    for hi in range(n_sub):
        hdi = int(dagger_idx[hi])
        if np.any(dense[hi] & ~dense[hdi]):
            continue  # H not contained in its dagger
        h_mask, hd_mask = packed[hi], packed[hdi]
        cnt_hd = popcount(packed & hd_mask).sum(axis=1).astype(np.int64)
        cnt_h = popcount(packed & h_mask).sum(axis=1).astype(np.int64)
        lhs = cnt_hd * cnt_hd[dagger_idx] * orders[hi]
        rhs = cnt_h * cnt_h[dagger_idx] * orders[hdi]
        assert np.array_equal(lhs, rhs), "graded rank identity violated"
        checked += n_sub
    return checked


def abelian_isomorphism_classes(max_order: int):
    """Moduli tuples (primary form) of every abelian group with
    2 <= order <= max_order, one per isomorphism class."""

    def partitions(n: int, largest: int | None = None):
        if n == 0:
            yield ()
            return
        largest = n if largest is None else min(largest, n)
        for first in range(largest, 0, -1):
            for rest in partitions(n - first, first):
                yield (first,) + rest

    for order in range(2, max_order + 1):
        factorization = _prime_factors(order)
        per_prime = []
        for p in sorted(factorization):
            opts = [
                tuple(p**e for e in part) for part in partitions(factorization[p])
            ]
            per_prime.append(opts)
        for combo in itertools.product(*per_prime):
            yield tuple(m for group in combo for m in group)
