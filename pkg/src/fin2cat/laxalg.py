"""Strict 2-monads from monoid actions, lax algebras, and their morphisms.

monoid_two_monad builds the 2-monad T = M x (-) on a finite universe of
categories: each seed gets a chain X, TX, T^2 X, ... up to a fixed depth,
and T acts on functors and transformations componentwise.  Applying T past
the depth is an error rather than silent growth.

A lax algebra is (Z, a: TZ -> Z, zbar: a.T(a) => a.m_Z, zbar0: id_Z =>
a.eta_Z); check_lax_algebra evaluates its three pasted coherence equations.
A lax morphism (f, fbar: a_z.T(f) => f.a_y) is checked by
check_lax_morphism, which classifies it as strict / pseudo / lax.

verify_prop_descent compares two independently computed categories: the
hom category of lax morphisms (direct evaluation of the axioms) and the
lax descent category of the induced three-level diagram built by
build_Tzy.  Both use the same object naming, so a successful comparison is
an identity isomorphism, checked functor-by-functor.
"""

from .deltadiag import make_delta_diagram
from .descent import descent as strict_descent
from .descent import lax_descent
from .errors import (
    AxiomViolation,
    BoundaryMismatch,
    CoherenceViolation,
    verdict_all,
)
from .fincat import (
    FinCat,
    compose_fun,
    hom_cat,
    identity_fun,
    identity_nat,
    make_fincat,
    make_fun,
    make_nat,
    paste,
    product_cat,
    whisker_left,
    whisker_right,
)


class Monoid:
    """A finite monoid with an explicit multiplication table.

    The constructor validates the table; pass check=False to build a
    deliberately broken table (used to probe the checkers).
    """

    def __init__(self, elements, unit, table, check=True):
        self.elements = tuple(elements)
        self.unit = unit
        self.table = dict(table)
        if check:
            self._validate()

    def _validate(self):
        els = set(self.elements)
        if self.unit not in els:
            raise AxiomViolation("unit %r is not an element" % self.unit)
        want = {(a, b) for a in els for b in els}
        if set(self.table) != want:
            raise AxiomViolation("multiplication table must cover all pairs")
        for v in self.table.values():
            if v not in els:
                raise AxiomViolation("product %r is not an element" % v)
        for a in self.elements:
            if self.table[(self.unit, a)] != a or self.table[(a, self.unit)] != a:
                raise AxiomViolation("unit law fails at %r" % a)
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    if self.table[(self.table[(a, b)], c)] != self.table[
                        (a, self.table[(b, c)])
                    ]:
                        raise AxiomViolation(
                            "associativity fails on (%r, %r, %r)" % (a, b, c)
                        )

    def mul(self, a, b):
        return self.table[(a, b)]

    def __repr__(self):
        return "Monoid(%r)" % (list(self.elements),)


class MonadUniverse:
    """The 2-monad M x (-) restricted to a finite family of categories.

    Members are the seeds and their T-iterates; T(X) for the last iterate
    of a chain raises AxiomViolation.  m, eta give the structure functors
    at a member, mu/iota/tau their (identity) comparison cells.
    """

    def __init__(self, monoid, seeds, depth):
        self.monoid = monoid
        self.depth = depth
        self.members = []
        self.names = []
        self._succ = {}
        els = list(monoid.elements)
        self._mdisc = make_fincat(
            objects=els,
            morphisms=els,
            dom={g: g for g in els},
            cod={g: g for g in els},
            identity={g: g for g in els},
            compose={(g, g): g for g in els},
        )
        for entry in seeds:
            if isinstance(entry, tuple):
                name, cat = entry
            else:
                name, cat = "X%d" % len(self.members), entry
            idx = self._add(name, cat)
            for _ in range(depth):
                nxt = product_cat(self._mdisc, self.members[idx])
                j = self._add("T(%s)" % self.names[idx], nxt)
                self._succ[idx] = j
                idx = j
            self._succ[idx] = None

    def _add(self, name, cat):
        self.members.append(cat)
        self.names.append(name)
        return len(self.members) - 1

    def index_of(self, C):
        for i, m in enumerate(self.members):
            if m == C:
                return i
        raise AxiomViolation("category is not a universe member")

    def member_named(self, name):
        try:
            return self.members[self.names.index(name)]
        except ValueError:
            raise AxiomViolation("no universe member named %r" % name)

    def T(self, C):
        j = self._succ[self.index_of(C)]
        if j is None:
            raise AxiomViolation("T is undefined beyond the universe depth")
        return self.members[j]

    def T_fun(self, F):
        TS, TT = self.T(F.src), self.T(F.tgt)
        return make_fun(
            TS,
            TT,
            {o: TT.pair_obj(g, F.ob(x)) for o, (g, x) in TS.obj_pair.items()},
            {m: TT.pair_mor(g, F.mor(f)) for m, (g, f) in TS.mor_pair.items()},
        )

    def T_nat(self, a):
        TS = self.T(a.src.src)
        TT = self.T(a.src.tgt)
        comps = {
            o: TT.pair_mor(g, a.at(x)) for o, (g, x) in TS.obj_pair.items()
        }
        return make_nat(self.T_fun(a.src), self.T_fun(a.tgt), comps)

    def eta(self, C):
        TC = self.T(C)
        e = self.monoid.unit
        return make_fun(
            C,
            TC,
            {x: TC.pair_obj(e, x) for x in C.objects},
            {m: TC.pair_mor(e, m) for m in C.morphisms},
        )

    def m(self, C):
        TC = self.T(C)
        T2C = self.T(TC)
        on_obj, on_mor = {}, {}
        for o, (g, o2) in T2C.obj_pair.items():
            h, x = TC.obj_pair[o2]
            on_obj[o] = TC.pair_obj(self.monoid.mul(g, h), x)
        for m, (g, m2) in T2C.mor_pair.items():
            h, f = TC.mor_pair[m2]
            on_mor[m] = TC.pair_mor(self.monoid.mul(g, h), f)
        return make_fun(T2C, TC, on_obj, on_mor)

    def _identity_cell(self, F, G):
        TC = F.tgt
        return make_nat(F, G, {x: TC.identity[F.ob(x)] for x in F.src.objects})

    def mu(self, C):
        """Associativity cell m.T(m) => m.m_T at member C (identity)."""
        mC = self.m(C)
        return self._identity_cell(
            compose_fun(mC, self.T_fun(mC)),
            compose_fun(mC, self.m(self.T(C))),
        )

    def iota(self, C):
        """Unit cell m.eta_T => id at member C (identity)."""
        TC = self.T(C)
        return self._identity_cell(
            compose_fun(self.m(C), self.eta(TC)), identity_fun(TC)
        )

    def tau(self, C):
        """Unit cell m.T(eta) => id at member C (identity)."""
        TC = self.T(C)
        return self._identity_cell(
            compose_fun(self.m(C), self.T_fun(self.eta(C))), identity_fun(TC)
        )

    def __repr__(self):
        return "MonadUniverse(%r, %d members)" % (self.monoid, len(self.members))


def monoid_two_monad(M, seeds, depth):
    """Build the universe for T = M x (-) over the given seed categories."""
    if depth < 1:
        raise AxiomViolation("depth must be at least 1")
    return MonadUniverse(M, seeds, depth)


def _vv(*nats):
    """Vertical paste, read right to left like written composition."""
    out = nats[-1]
    for n in reversed(nats[:-1]):
        out = paste("vertical", n, out)
    return out


def _first_diff(a, b):
    for x in sorted(a.components):
        if a.components[x] != b.components.get(x):
            return "%r (%r vs %r)" % (x, a.components[x], b.components.get(x))
    return "boundaries differ"


def _has_iterates(U, C, k):
    try:
        for _ in range(k):
            C = U.T(C)
        return True
    except AxiomViolation:
        return False


def check_pseudomonad(U):
    """Verify the 2-monad laws on every member where the iterates exist.

    Checks, in order: the unit and associativity laws as functor
    equalities; 2-naturality of m and eta and strictness of T on the
    structure functors; and the associativity/unit coherence pastings
    (which are identities here, but are assembled and compared anyway).
    Returns a Verdict listing each member and law that fails.
    """
    failures = []

    def guard(label, thunk):
        try:
            thunk()
        except (AxiomViolation, BoundaryMismatch) as e:
            failures.append("%s: %s" % (label, e))

    for i, C in enumerate(U.members):
        name = U.names[i]
        if not _has_iterates(U, C, 1):
            continue
        TC = U.T(C)
        if _has_iterates(U, C, 2):
            def units(C=C, TC=TC, name=name):
                if compose_fun(U.m(C), U.eta(TC)) != identity_fun(TC):
                    failures.append("left unit law fails at %s" % name)
                if compose_fun(U.m(C), U.T_fun(U.eta(C))) != identity_fun(TC):
                    failures.append("right unit law fails at %s" % name)
            guard("unit laws at %s" % name, units)
        if _has_iterates(U, C, 3):
            def assoc(C=C, TC=TC, name=name):
                if compose_fun(U.m(C), U.T_fun(U.m(C))) != compose_fun(
                    U.m(C), U.m(TC)
                ):
                    failures.append("associativity law fails at %s" % name)
            guard("associativity at %s" % name, assoc)

    # strict functoriality of T and naturality of the structure maps
    structural = []
    for i, C in enumerate(U.members):
        if _has_iterates(U, C, 1):
            guard(
                "T on identity at %s" % U.names[i],
                lambda C=C: None
                if U.T_fun(identity_fun(C)) == identity_fun(U.T(C))
                else failures.append("T(id) != id at %s" % U.names[i]),
            )
            if _has_iterates(U, C, 1):
                structural.append(("eta at %s" % U.names[i], U.eta(C)))
            if _has_iterates(U, C, 2):
                structural.append(("m at %s" % U.names[i], U.m(C)))
    for label, F in structural:
        if _has_iterates(U, F.src, 1) and _has_iterates(U, F.tgt, 1):
            def eta_nat(F=F, label=label):
                if compose_fun(U.eta(F.tgt), F) != compose_fun(
                    U.T_fun(F), U.eta(F.src)
                ):
                    failures.append("eta not natural along %s" % label)
            guard("eta naturality (%s)" % label, eta_nat)
        if _has_iterates(U, F.src, 2) and _has_iterates(U, F.tgt, 2):
            def m_nat(F=F, label=label):
                if compose_fun(U.m(F.tgt), U.T_fun(U.T_fun(F))) != compose_fun(
                    U.T_fun(F), U.m(F.src)
                ):
                    failures.append("m not natural along %s" % label)
            guard("m naturality (%s)" % label, m_nat)
    for label1, F in structural:
        for label2, G in structural:
            if (
                F.tgt == G.src
                and _has_iterates(U, F.src, 1)
                and _has_iterates(U, F.tgt, 1)
                and _has_iterates(U, G.tgt, 1)
            ):
                def strictness(F=F, G=G, label1=label1, label2=label2):
                    if U.T_fun(compose_fun(G, F)) != compose_fun(
                        U.T_fun(G), U.T_fun(F)
                    ):
                        failures.append(
                            "T not strict on %s after %s" % (label2, label1)
                        )
                guard("T strictness", strictness)

    # coherence pastings, where enough iterates exist
    for i, C in enumerate(U.members):
        name = U.names[i]
        if _has_iterates(U, C, 4):
            def assoc_paste(C=C, name=name):
                TC = U.T(C)
                lhs = _vv(
                    whisker_left(U.m(C), U.mu(TC)),
                    whisker_right(U.mu(C), U.T_fun(U.m(TC))),
                    whisker_left(U.m(C), U.T_nat(U.mu(C))),
                )
                rhs = _vv(
                    whisker_right(U.mu(C), U.m(U.T(TC))),
                    whisker_right(U.mu(C), U.T_fun(U.T_fun(U.m(C)))),
                )
                if lhs != rhs:
                    failures.append(
                        "associativity pasting fails at %s: %s"
                        % (name, _first_diff(lhs, rhs))
                    )
            guard("associativity pasting at %s" % name, assoc_paste)
        if _has_iterates(U, C, 3):
            def tri_paste(C=C, name=name):
                TC = U.T(C)
                lhs = _vv(
                    whisker_left(U.m(C), U.tau(TC)),
                    whisker_right(U.mu(C), U.T_fun(U.eta(TC))),
                )
                rhs = whisker_left(U.m(C), U.T_nat(U.iota(C)))
                if lhs != rhs:
                    failures.append(
                        "triangle pasting fails at %s: %s"
                        % (name, _first_diff(lhs, rhs))
                    )
            guard("triangle pasting at %s" % name, tri_paste)

    return verdict_all(failures)


class LaxAlgebra:
    """A lax algebra (Z, a, zbar, zbar0) over a universe.

    Boundaries are validated at construction; the coherence equations are
    the job of check_lax_algebra.
    """

    def __init__(self, universe, Z, a, zbar, zbar0):
        self.universe = universe
        self.Z = Z
        self.a = a
        self.zbar = zbar
        self.zbar0 = zbar0
        U = universe
        TZ = U.T(Z)
        if a.src != TZ or a.tgt != Z:
            raise BoundaryMismatch("action must be a functor T(Z) -> Z")
        if zbar.src != compose_fun(a, U.T_fun(a)) or zbar.tgt != compose_fun(
            a, U.m(Z)
        ):
            raise BoundaryMismatch("zbar must run a.T(a) => a.m")
        if zbar0.src != identity_fun(Z) or zbar0.tgt != compose_fun(a, U.eta(Z)):
            raise BoundaryMismatch("zbar0 must run id => a.eta")

    def __repr__(self):
        return "LaxAlgebra(Z=%r)" % (self.Z,)


def strict_algebra(U, Z, a):
    """Package a strictly associative, strictly unital action as a
    LaxAlgebra with identity comparison cells."""
    zbar = identity_nat(compose_fun(a, U.T_fun(a)))
    zbar = make_nat(zbar.src, compose_fun(a, U.m(Z)), zbar.components)
    zbar0 = make_nat(
        identity_fun(Z),
        compose_fun(a, U.eta(Z)),
        {x: Z.identity[x] for x in Z.objects},
    )
    return LaxAlgebra(U, Z, a, zbar, zbar0)


def monad_algebra(U, Z, t, mu, eta):
    """A monad (t, mu, eta) on Z, encoded as a lax algebra for the
    trivial-monoid 2-monad: the action projects the monoid away and then
    applies t, and the comparison cells are mu and eta themselves."""
    if len(U.monoid.elements) != 1:
        raise AxiomViolation("monad_algebra needs the trivial-monoid universe")
    if t.src != Z or t.tgt != Z:
        raise BoundaryMismatch("t must be an endofunctor of Z")
    TZ = U.T(Z)
    T2Z = U.T(TZ)
    a = compose_fun(t, TZ.proj2)
    zbar_comps = {}
    for o in T2Z.objects:
        _, o2 = T2Z.obj_pair[o]
        _, x = TZ.obj_pair[o2]
        zbar_comps[o] = mu.at(x)
    zbar = make_nat(
        compose_fun(a, U.T_fun(a)), compose_fun(a, U.m(Z)), zbar_comps
    )
    zbar0 = make_nat(
        identity_fun(Z),
        compose_fun(a, U.eta(Z)),
        {x: eta.at(x) for x in Z.objects},
    )
    return LaxAlgebra(U, Z, a, zbar, zbar0)


class LaxMorphism:
    """A candidate morphism (f, fbar) between lax algebras.

    src_alg/tgt_alg are attached when known; cls reads the structural
    class off fbar (identities: strict, invertible: pseudo, else lax),
    independently of whether the coherence equations hold.
    """

    def __init__(self, f, fbar, src_alg=None, tgt_alg=None):
        self.f = f
        self.fbar = fbar
        self.src_alg = src_alg
        self.tgt_alg = tgt_alg

    @property
    def cls(self):
        Z = self.fbar.src.tgt
        comps = self.fbar.components.values()
        if all(Z.is_identity(c) for c in comps):
            return "strict"
        if all(Z.inverse(c) is not None for c in comps):
            return "pseudo"
        return "lax"

    def __repr__(self):
        return "LaxMorphism(cls=%s)" % self.cls


class TTransformation:
    """A transformation between lax morphisms: a single 2-cell m between
    the underlying functors, subject to check_transformation."""

    def __init__(self, m):
        self.m = m


def check_lax_algebra(U, z):
    """Evaluate the three pasted coherence equations of a lax algebra.

    Equations needing deeper T-iterates than the universe provides are
    skipped.  Returns a Verdict naming the failing pasting and a witness
    object.
    """
    failures = []
    a, Z = z.a, z.Z
    TZ = U.T(Z)

    if _has_iterates(U, Z, 3):
        lhs = _vv(
            whisker_left(a, U.mu(Z)),
            whisker_right(z.zbar, U.T_fun(U.m(Z))),
            whisker_left(a, U.T_nat(z.zbar)),
        )
        rhs = _vv(
            whisker_right(z.zbar, U.m(TZ)),
            whisker_right(z.zbar, U.T_fun(U.T_fun(a))),
        )
        if lhs != rhs:
            failures.append(
                "multiplication pasting fails at %s" % _first_diff(lhs, rhs)
            )
    if _has_iterates(U, Z, 2):
        lhs = _vv(
            whisker_left(a, U.iota(Z)),
            whisker_right(z.zbar, U.eta(TZ)),
            whisker_right(z.zbar0, a),
        )
        if lhs != identity_nat(a):
            failures.append(
                "unit pasting (eta) fails at %s"
                % _first_diff(lhs, identity_nat(a))
            )
        lhs = _vv(
            whisker_left(a, U.tau(Z)),
            whisker_right(z.zbar, U.T_fun(U.eta(Z))),
            whisker_left(a, U.T_nat(z.zbar0)),
        )
        if lhs != identity_nat(a):
            failures.append(
                "unit pasting (T eta) fails at %s"
                % _first_diff(lhs, identity_nat(a))
            )
    return verdict_all(failures)


def check_lax_morphism(U, y, z, phi):
    """Check the two coherence equations of a lax morphism y -> z.

    Returns the morphism's class ("strict", "pseudo" or "lax") on
    success; raises CoherenceViolation naming the failing equation.
    """
    f, fbar = phi.f, phi.fbar
    Y, Z = y.Z, z.Z
    if f.src != Y or f.tgt != Z:
        raise BoundaryMismatch("underlying functor must run Y -> Z")
    if fbar.src != compose_fun(z.a, U.T_fun(f)) or fbar.tgt != compose_fun(
        f, y.a
    ):
        raise BoundaryMismatch("fbar must run a_z.T(f) => f.a_y")

    lhs = _vv(
        whisker_right(fbar, U.m(Y)),
        whisker_right(z.zbar, U.T_fun(U.T_fun(f))),
    )
    rhs = _vv(
        whisker_left(f, y.zbar),
        whisker_right(fbar, U.T_fun(y.a)),
        whisker_left(z.a, U.T_nat(fbar)),
    )
    if lhs != rhs:
        raise CoherenceViolation(
            "multiplication compatibility fails at %s" % _first_diff(lhs, rhs)
        )

    lhs = _vv(
        whisker_right(fbar, U.eta(Y)),
        whisker_right(z.zbar0, f),
    )
    rhs = whisker_left(f, y.zbar0)
    if lhs != rhs:
        raise CoherenceViolation(
            "unit compatibility fails at %s" % _first_diff(lhs, rhs)
        )

    phi.src_alg, phi.tgt_alg = y, z
    return phi.cls


def check_transformation(U, phi, psi, m):
    """Check the compatibility square of a transformation phi => psi:
    psi.fbar . (a_z * T(m)) = (m * a_y) . phi.fbar."""
    if isinstance(m, TTransformation):
        m = m.m
    if phi.src_alg is None or phi.tgt_alg is None:
        raise BoundaryMismatch(
            "morphisms must carry their algebras (src_alg/tgt_alg)"
        )
    if m.src != phi.f or m.tgt != psi.f:
        raise BoundaryMismatch("cell must run between the underlying functors")
    a_y = phi.src_alg.a
    a_z = phi.tgt_alg.a
    lhs = paste("vertical", psi.fbar, whisker_left(a_z, U.T_nat(m)))
    rhs = paste("vertical", whisker_right(m, a_y), phi.fbar)
    if lhs != rhs:
        return verdict_all(["compatibility fails at %s" % _first_diff(lhs, rhs)])
    return verdict_all([])


class AlgHomCat(FinCat):
    """The category of lax (or pseudo) morphisms y -> z and their
    transformations.  Objects are named (F#, n#) after the functor and
    comparison-cell identifiers in the underlying hom categories; data
    and trans recover the actual structures."""

    def __init__(self, U, y, z, cls):
        if cls not in ("lax", "pseudo"):
            raise ValueError("class must be 'lax' or 'pseudo', got %r" % cls)
        Y, Z = y.Z, z.Z
        d1 = hom_cat(Y, Z)
        d2 = hom_cat(U.T(Y), Z)
        objects, data = [], {}
        for fid in d1.objects:
            f = d1.functor_of(fid)
            src = compose_fun(z.a, U.T_fun(f))
            tgt = compose_fun(f, y.a)
            for nid in d2.hom(d2.obj_id(src), d2.obj_id(tgt)):
                phi = LaxMorphism(f, d2.nat_of(nid), src_alg=y, tgt_alg=z)
                try:
                    k = check_lax_morphism(U, y, z, phi)
                except CoherenceViolation:
                    continue
                if cls == "pseudo" and k == "lax":
                    continue
                o = "(%s,%s)" % (fid, nid)
                objects.append(o)
                data[o] = phi

        morphisms, dom, cod, trans, under = [], {}, {}, {}, {}
        for o1 in objects:
            for o2 in objects:
                phi, psi = data[o1], data[o2]
                f1 = d1.obj_id(phi.f)
                f2 = d1.obj_id(psi.f)
                for mid in d1.hom(f1, f2):
                    cell = d1.nat_of(mid)
                    if check_transformation(U, phi, psi, cell):
                        mm = "[%s:%s->%s]" % (mid, o1, o2)
                        morphisms.append(mm)
                        dom[mm], cod[mm] = o1, o2
                        trans[mm] = cell
                        under[mm] = mid

        identity = {}
        for o in objects:
            fid = d1.obj_id(data[o].f)
            identity[o] = "[%s:%s->%s]" % (d1.identity[fid], o, o)
        compose = {}
        for m2 in morphisms:
            for m1 in morphisms:
                if cod[m1] == dom[m2]:
                    c = d1.compose(under[m2], under[m1])
                    compose[(m2, m1)] = "[%s:%s->%s]" % (c, dom[m1], cod[m2])

        checked = make_fincat(objects, morphisms, dom, cod, identity, compose)
        FinCat.__init__(
            self,
            checked.objects,
            checked.morphisms,
            checked.dom,
            checked.cod,
            checked.identity,
            checked.compose_table,
        )
        self.data = data
        self.trans = trans
        self.hom_class = cls


def enumerate_hom_category(U, y, z, cls="lax"):
    """All valid lax (or pseudo) morphisms y -> z with their
    transformations, assembled into a finite category."""
    return AlgHomCat(U, y, z, cls)


def build_Tzy(U, y, z):
    """The three-level diagram whose lax descent category consists of the
    lax morphisms y -> z.

    Levels are the hom categories out of Y, TY, T^2 Y into Z; the faces
    precompose with the action/multiplication or apply a_z.T(-); the
    comparison cells whisker zbar/zbar0 of the two algebras."""
    Y, Z = y.Z, z.Z
    TY = U.T(Y)
    T2Y = U.T(TY)
    d1 = hom_cat(Y, Z)
    d2 = hom_cat(TY, Z)
    d3 = hom_cat(T2Y, Z)

    def mk(src_h, tgt_h, on_f, on_n):
        return make_fun(
            src_h,
            tgt_h,
            {o: tgt_h.obj_id(on_f(src_h.functor_of(o))) for o in src_h.objects},
            {m: tgt_h.mor_id(on_n(src_h.nat_of(m))) for m in src_h.morphisms},
        )

    Dd0 = mk(d1, d2, lambda F: compose_fun(F, y.a), lambda n: whisker_right(n, y.a))
    Dd1 = mk(
        d1,
        d2,
        lambda F: compose_fun(z.a, U.T_fun(F)),
        lambda n: whisker_left(z.a, U.T_nat(n)),
    )
    Ds0 = mk(
        d2, d1, lambda G: compose_fun(G, U.eta(Y)), lambda n: whisker_right(n, U.eta(Y))
    )
    Dp0 = mk(
        d2,
        d3,
        lambda G: compose_fun(G, U.T_fun(y.a)),
        lambda n: whisker_right(n, U.T_fun(y.a)),
    )
    Dp1 = mk(
        d2, d3, lambda G: compose_fun(G, U.m(Y)), lambda n: whisker_right(n, U.m(Y))
    )
    Dp2 = mk(
        d2,
        d3,
        lambda G: compose_fun(z.a, U.T_fun(G)),
        lambda n: whisker_left(z.a, U.T_nat(n)),
    )

    sig00, sig20, sig21, n0, n1 = {}, {}, {}, {}, {}
    p2d0 = compose_fun(Dp2, Dd0)
    for o in d1.objects:
        f = d1.functor_of(o)
        sig00[o] = d3.mor_id(whisker_left(f, y.zbar))
        sig20[o] = d3.identity[p2d0.ob(o)]
        sig21[o] = d3.mor_id(whisker_right(z.zbar, U.T_fun(U.T_fun(f))))
        n0[o] = d1.mor_id(whisker_left(f, y.zbar0))
        n1[o] = d1.mor_id(whisker_right(z.zbar0, f))

    return make_delta_diagram(
        D1=d1,
        D2=d2,
        D3=d3,
        Dd0=Dd0,
        Dd1=Dd1,
        Ds0=Ds0,
        Dp0=Dp0,
        Dp1=Dp1,
        Dp2=Dp2,
        Dsig00=make_nat(compose_fun(Dp0, Dd0), compose_fun(Dp1, Dd0), sig00),
        Dsig20=make_nat(compose_fun(Dp2, Dd0), compose_fun(Dp0, Dd1), sig20),
        Dsig21=make_nat(compose_fun(Dp2, Dd1), compose_fun(Dp1, Dd1), sig21),
        Dn0=make_nat(identity_fun(d1), compose_fun(Ds0, Dd0), n0),
        Dn1=make_nat(identity_fun(d1), compose_fun(Ds0, Dd1), n1),
    )


def _compare_identity(H, K):
    """Exact comparison of two categories sharing an object/morphism naming
    scheme: returns (True, None) when the identity maps are mutually
    inverse isomorphisms, else (False, first discrepancy)."""
    if set(H.objects) != set(K.objects):
        d = set(H.objects) ^ set(K.objects)
        return False, "object mismatch: %r" % (sorted(d)[0],)
    if set(H.morphisms) != set(K.morphisms):
        d = set(H.morphisms) ^ set(K.morphisms)
        return False, "morphism mismatch: %r" % (sorted(d)[0],)
    try:
        make_fun(H, K, {o: o for o in H.objects}, {m: m for m in H.morphisms})
        make_fun(K, H, {o: o for o in K.objects}, {m: m for m in K.morphisms})
    except Exception as e:
        return False, str(e)
    return True, None


def verify_prop_descent(U, y, z):
    """Compute the hom category of morphisms y -> z twice (directly, and
    as the lax descent category of build_Tzy) and compare exactly.

    Does this for the lax morphisms against lax descent, and for the
    pseudo morphisms against descent.  Returns a report dict."""
    D = build_Tzy(U, y, z)
    report = {"status": "pass", "counterexample": None}
    for key, dc in (("lax", lax_descent(D)), ("pseudo", strict_descent(D))):
        H = enumerate_hom_category(U, y, z, key)
        ok, why = _compare_identity(H, dc.carrier)
        report[key] = {
            "hom_objects": len(H.objects),
            "hom_morphisms": len(H.morphisms),
            "descent_objects": len(dc.carrier.objects),
            "descent_morphisms": len(dc.carrier.morphisms),
            "match": ok,
        }
        if not ok:
            report["status"] = "fail"
            if report["counterexample"] is None:
                report["counterexample"] = "%s: %s" % (key, why)
    return report
