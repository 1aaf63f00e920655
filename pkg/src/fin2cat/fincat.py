"""Finite categories, functors, natural transformations, and pasting.

Everything here is exhaustively validated at construction time: building a
FinCat checks every identity/associativity instance, building a Fun checks
functoriality on the whole composition table, building a NatT checks every
naturality square.  Later modules lean on this: if an assembled structure
would be mathematically wrong, the constructor refuses it.

Objects and morphisms are identifier strings; a category is its composition
table.
"""

from .errors import (
    AxiomViolation,
    BoundaryMismatch,
    FunctorialityViolation,
    NaturalityViolation,
)


class FinCat:
    """A finite category given by explicit tables.

    Use make_fincat rather than calling this directly; the constructor
    trusts its input.
    """

    def __init__(self, objects, morphisms, dom, cod, identity, compose_table):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.dom = dict(dom)
        self.cod = dict(cod)
        self.identity = dict(identity)
        self.compose_table = dict(compose_table)
        self._identities = set(self.identity.values())
        self._hom = {}
        for m in self.morphisms:
            self._hom.setdefault((self.dom[m], self.cod[m]), []).append(m)

    def hom(self, x, y):
        return tuple(self._hom.get((x, y), ()))

    def compose(self, g, f):
        """Composite of f followed by g."""
        try:
            return self.compose_table[(g, f)]
        except KeyError:
            raise BoundaryMismatch(
                "cannot compose %r after %r: cod %r != dom %r"
                % (g, f, self.cod.get(f), self.dom.get(g))
            )

    def is_identity(self, m):
        return m in self._identities

    def inverse(self, m):
        """The two-sided inverse of m, or None."""
        x, y = self.dom[m], self.cod[m]
        for w in self.hom(y, x):
            if (
                self.compose_table[(w, m)] == self.identity[x]
                and self.compose_table[(m, w)] == self.identity[y]
            ):
                return w
        return None

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.dom == other.dom
            and self.cod == other.cod
            and self.identity == other.identity
            and self.compose_table == other.compose_table
        )

    def __repr__(self):
        return "FinCat(%d objects, %d morphisms)" % (
            len(self.objects),
            len(self.morphisms),
        )


def make_fincat(objects, morphisms, dom, cod, identity, compose):
    """Build a FinCat, checking every category law.

    compose maps pairs (g, f) with cod(f) = dom(g) to the composite of f
    followed by g.  The table must cover exactly the composable pairs.
    Raises AxiomViolation naming the first broken law.
    """
    objects = list(objects)
    morphisms = list(morphisms)
    if len(set(objects)) != len(objects):
        raise AxiomViolation("duplicate object identifiers")
    if len(set(morphisms)) != len(morphisms):
        raise AxiomViolation("duplicate morphism identifiers")
    obj_set, mor_set = set(objects), set(morphisms)

    if set(dom) != mor_set or set(cod) != mor_set:
        raise AxiomViolation("dom/cod must be defined on exactly the morphisms")
    for m in morphisms:
        if dom[m] not in obj_set or cod[m] not in obj_set:
            raise AxiomViolation("morphism %r has boundary outside objects" % m)

    if set(identity) != obj_set:
        raise AxiomViolation("identity must be defined on exactly the objects")
    for x in objects:
        i = identity[x]
        if i not in mor_set or dom[i] != x or cod[i] != x:
            raise AxiomViolation("identity of %r is not an endomorphism: %r" % (x, i))

    composable = {
        (g, f) for f in morphisms for g in morphisms if cod[f] == dom[g]
    }
    given = set(compose)
    if given != composable:
        missing = composable - given
        extra = given - composable
        if missing:
            raise AxiomViolation(
                "composition table missing composable pair %r" % (sorted(missing)[0],)
            )
        raise AxiomViolation(
            "composition table has non-composable pair %r" % (sorted(extra)[0],)
        )
    for (g, f), h in compose.items():
        if h not in mor_set or dom[h] != dom[f] or cod[h] != cod[g]:
            raise AxiomViolation(
                "composite of (%r after %r) has wrong boundary: %r" % (g, f, h)
            )

    for f in morphisms:
        if compose[(f, identity[dom[f]])] != f:
            raise AxiomViolation("right identity law fails at %r" % f)
        if compose[(identity[cod[f]], f)] != f:
            raise AxiomViolation("left identity law fails at %r" % f)

    by_dom = {}
    for m in morphisms:
        by_dom.setdefault(dom[m], []).append(m)
    for f in morphisms:
        for g in by_dom.get(cod[f], ()):
            gf = compose[(g, f)]
            for h in by_dom.get(cod[g], ()):
                if compose[(h, gf)] != compose[(compose[(h, g)], f)]:
                    raise AxiomViolation(
                        "associativity fails on (%r, %r, %r)" % (h, g, f)
                    )

    return FinCat(objects, morphisms, dom, cod, identity, compose)


class Fun:
    """A functor between FinCats, stored as object/morphism maps."""

    def __init__(self, src, tgt, on_obj, on_mor):
        self.src = src
        self.tgt = tgt
        self.on_obj = dict(on_obj)
        self.on_mor = dict(on_mor)

    def ob(self, x):
        return self.on_obj[x]

    def mor(self, m):
        return self.on_mor[m]

    def __eq__(self, other):
        if not isinstance(other, Fun):
            return NotImplemented
        return (
            self.src == other.src
            and self.tgt == other.tgt
            and self.on_obj == other.on_obj
            and self.on_mor == other.on_mor
        )

    def __repr__(self):
        return "Fun(%r -> %r)" % (self.src, self.tgt)


def make_fun(src, tgt, on_obj, on_mor):
    """Build a functor, checking totality, typing and functoriality."""
    if set(on_obj) != set(src.objects):
        raise FunctorialityViolation("object map must cover exactly the source objects")
    if set(on_mor) != set(src.morphisms):
        raise FunctorialityViolation(
            "morphism map must cover exactly the source morphisms"
        )
    tgt_obj, tgt_mor = set(tgt.objects), set(tgt.morphisms)
    for x, fx in on_obj.items():
        if fx not in tgt_obj:
            raise FunctorialityViolation("image of object %r not in target" % x)
    for m, fm in on_mor.items():
        if fm not in tgt_mor:
            raise FunctorialityViolation("image of morphism %r not in target" % m)
        if tgt.dom[fm] != on_obj[src.dom[m]] or tgt.cod[fm] != on_obj[src.cod[m]]:
            raise FunctorialityViolation(
                "image of %r has wrong boundary: %r" % (m, fm)
            )
    for x in src.objects:
        if on_mor[src.identity[x]] != tgt.identity[on_obj[x]]:
            raise FunctorialityViolation("identity of %r not preserved" % x)
    for (g, f), gf in src.compose_table.items():
        if tgt.compose_table[(on_mor[g], on_mor[f])] != on_mor[gf]:
            raise FunctorialityViolation(
                "composition not preserved on (%r, %r)" % (g, f)
            )
    return Fun(src, tgt, on_obj, on_mor)


def identity_fun(C):
    return Fun(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms})


def compose_fun(G, F):
    """The functor F followed by G."""
    if F.tgt != G.src:
        raise BoundaryMismatch("functors not composable")
    return Fun(
        F.src,
        G.tgt,
        {x: G.on_obj[fx] for x, fx in F.on_obj.items()},
        {m: G.on_mor[fm] for m, fm in F.on_mor.items()},
    )


class NatT:
    """A natural transformation, stored as its component family."""

    def __init__(self, src, tgt, components):
        self.src = src
        self.tgt = tgt
        self.components = dict(components)

    def at(self, x):
        return self.components[x]

    def __eq__(self, other):
        if not isinstance(other, NatT):
            return NotImplemented
        return (
            self.src == other.src
            and self.tgt == other.tgt
            and self.components == other.components
        )

    def __repr__(self):
        return "NatT(%d components)" % len(self.components)


def make_nat(F, G, components):
    """Build a natural transformation F => G, checking every square."""
    if F.src != G.src or F.tgt != G.tgt:
        raise BoundaryMismatch("F and G are not parallel functors")
    C, D = F.src, F.tgt
    if set(components) != set(C.objects):
        raise BoundaryMismatch("components must cover exactly the source objects")
    for x, c in components.items():
        if c not in set(D.morphisms) or D.dom[c] != F.on_obj[x] or D.cod[c] != G.on_obj[x]:
            raise BoundaryMismatch(
                "component at %r must be a morphism %r -> %r, got %r"
                % (x, F.on_obj[x], G.on_obj[x], c)
            )
    for m in C.morphisms:
        x, y = C.dom[m], C.cod[m]
        left = D.compose_table[(G.on_mor[m], components[x])]
        right = D.compose_table[(components[y], F.on_mor[m])]
        if left != right:
            raise NaturalityViolation("naturality square fails at %r" % m)
    return NatT(F, G, components)


def identity_nat(F):
    return NatT(F, F, {x: F.tgt.identity[F.on_obj[x]] for x in F.src.objects})


def paste(kind, beta, alpha):
    """Paste two natural transformations.

    kind "vertical": alpha: F => G, beta: G => H gives F => H.
    kind "horizontal": alpha: F => G between C -> D, beta: H => K between
    D -> E gives H.F => K.G (composite functors).
    """
    if kind == "vertical":
        if beta.src != alpha.tgt:
            raise BoundaryMismatch("vertical paste: target of alpha != source of beta")
        D = alpha.src.tgt
        comps = {
            x: D.compose_table[(beta.components[x], alpha.components[x])]
            for x in alpha.src.src.objects
        }
        return NatT(alpha.src, beta.tgt, comps)
    if kind == "horizontal":
        if alpha.src.tgt != beta.src.src:
            raise BoundaryMismatch("horizontal paste: middle categories differ")
        E = beta.src.tgt
        F, G = alpha.src, alpha.tgt
        H, K = beta.src, beta.tgt
        comps = {
            x: E.compose_table[
                (K.on_mor[alpha.components[x]], beta.components[F.on_obj[x]])
            ]
            for x in F.src.objects
        }
        return NatT(compose_fun(H, F), compose_fun(K, G), comps)
    raise ValueError("paste kind must be 'vertical' or 'horizontal', got %r" % kind)


def whisker_left(H, alpha):
    """H applied after a transformation: id_H pasted horizontally on alpha."""
    return paste("horizontal", identity_nat(H), alpha)


def whisker_right(beta, F):
    """A transformation restricted along F: beta pasted on id_F."""
    return paste("horizontal", beta, identity_nat(F))


class ProductCat(FinCat):
    """Product category; carries the projection functors and pair indexes."""

    def __init__(self, C, D):
        obj_pair, mor_pair = {}, {}
        objects = []
        for c in C.objects:
            for d in D.objects:
                o = "(%s,%s)" % (c, d)
                objects.append(o)
                obj_pair[o] = (c, d)
        morphisms, dom, cod = [], {}, {}
        for f in C.morphisms:
            for g in D.morphisms:
                m = "(%s,%s)" % (f, g)
                morphisms.append(m)
                mor_pair[m] = (f, g)
                dom[m] = "(%s,%s)" % (C.dom[f], D.dom[g])
                cod[m] = "(%s,%s)" % (C.cod[f], D.cod[g])
        identity = {
            o: "(%s,%s)" % (C.identity[c], D.identity[d])
            for o, (c, d) in obj_pair.items()
        }
        compose = {}
        for m2, (f2, g2) in mor_pair.items():
            for m1, (f1, g1) in mor_pair.items():
                if cod[m1] == dom[m2]:
                    compose[(m2, m1)] = "(%s,%s)" % (
                        C.compose_table[(f2, f1)],
                        D.compose_table[(g2, g1)],
                    )
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
        self.factors = (C, D)
        self.obj_pair = obj_pair
        self.mor_pair = mor_pair
        self.proj1 = Fun(
            self, C, {o: p[0] for o, p in obj_pair.items()},
            {m: p[0] for m, p in mor_pair.items()},
        )
        self.proj2 = Fun(
            self, D, {o: p[1] for o, p in obj_pair.items()},
            {m: p[1] for m, p in mor_pair.items()},
        )

    def pair_obj(self, c, d):
        return "(%s,%s)" % (c, d)

    def pair_mor(self, f, g):
        return "(%s,%s)" % (f, g)


def product_cat(C, D):
    """The product category C x D with projection functors attached."""
    return ProductCat(C, D)


def _fun_key(F):
    return (
        tuple(F.on_obj[x] for x in F.src.objects),
        tuple(F.on_mor[m] for m in F.src.morphisms),
    )


def _nat_key(a, src_id, tgt_id):
    return (src_id, tgt_id, tuple(a.components[x] for x in a.src.src.objects))


def _enumerate_functors(C, D):
    """All functors C -> D, by backtracking over object then morphism images."""
    objs = list(C.objects)
    non_id = [m for m in C.morphisms if not C.is_identity(m)]
    out = []

    def assign_mors(on_obj, i, on_mor):
        if i == len(non_id):
            full = dict(on_mor)
            for x in objs:
                full[C.identity[x]] = D.identity[on_obj[x]]
            # final functoriality check over the whole table
            for (g, f), gf in C.compose_table.items():
                if D.compose_table[(full[g], full[f])] != full[gf]:
                    return
            out.append(Fun(C, D, dict(on_obj), full))
            return
        m = non_id[i]
        for im in D.hom(on_obj[C.dom[m]], on_obj[C.cod[m]]):
            on_mor[m] = im
            # early pruning: composites with already-assigned factors
            ok = True
            for n in non_id[:i]:
                for (g, f) in ((m, n), (n, m)):
                    if C.cod[f] == C.dom[g]:
                        gf = C.compose_table[(g, f)]
                        if gf in on_mor or C.is_identity(gf):
                            want = (
                                D.identity[on_obj[C.dom[f]]]
                                if C.is_identity(gf)
                                else on_mor[gf]
                            )
                            if D.compose_table[(on_mor[g], on_mor[f])] != want:
                                ok = False
                                break
                if not ok:
                    break
            if ok:
                assign_mors(on_obj, i + 1, on_mor)
            del on_mor[m]

    def assign_objs(i, on_obj):
        if i == len(objs):
            assign_mors(on_obj, 0, {})
            return
        for d in D.objects:
            on_obj[objs[i]] = d
            assign_objs(i + 1, on_obj)
            del on_obj[objs[i]]

    assign_objs(0, {})
    return out


def _enumerate_nats(F, G):
    """All natural transformations F => G for parallel functors."""
    C, D = F.src, F.tgt
    objs = list(C.objects)
    out = []

    def assign(i, comps):
        if i == len(objs):
            out.append(NatT(F, G, dict(comps)))
            return
        x = objs[i]
        for c in D.hom(F.on_obj[x], G.on_obj[x]):
            comps[x] = c
            ok = True
            for m in C.morphisms:
                a, b = C.dom[m], C.cod[m]
                if a in comps and b in comps:
                    if (
                        D.compose_table[(G.on_mor[m], comps[a])]
                        != D.compose_table[(comps[b], F.on_mor[m])]
                    ):
                        ok = False
                        break
            if ok:
                assign(i + 1, comps)
            del comps[x]

    assign(0, {})
    return out


class HomCat(FinCat):
    """The category of functors C -> D and natural transformations.

    Objects/morphisms get enumeration identifiers F0, F1, ... and n0, n1,
    ... assigned in a canonical order, so two builds over equal inputs give
    identical names.  functor_of/nat_of and obj_id/mor_id translate between
    identifiers and the actual structures.
    """

    def __init__(self, C, D):
        funs = _enumerate_functors(C, D)
        funs.sort(key=_fun_key)
        self._funs = {}
        self._fun_ids = {}
        for i, F in enumerate(funs):
            fid = "F%d" % i
            self._funs[fid] = F
            self._fun_ids[_fun_key(F)] = fid

        nats = []
        for F in funs:
            src_id = self._fun_ids[_fun_key(F)]
            for G in funs:
                tgt_id = self._fun_ids[_fun_key(G)]
                for a in _enumerate_nats(F, G):
                    nats.append((_nat_key(a, src_id, tgt_id), a, src_id, tgt_id))
        nats.sort(key=lambda t: t[0])
        self._nats = {}
        self._nat_ids = {}
        dom, cod = {}, {}
        for i, (key, a, src_id, tgt_id) in enumerate(nats):
            nid = "n%d" % i
            self._nats[nid] = a
            self._nat_ids[key] = nid
            dom[nid] = src_id
            cod[nid] = tgt_id

        identity = {}
        for fid, F in self._funs.items():
            ia = identity_nat(F)
            identity[fid] = self._nat_ids[_nat_key(ia, fid, fid)]
        compose = {}
        for n2, b in self._nats.items():
            for n1, a in self._nats.items():
                if cod[n1] == dom[n2]:
                    v = paste("vertical", b, a)
                    compose[(n2, n1)] = self._nat_ids[
                        _nat_key(v, dom[n1], cod[n2])
                    ]
        checked = make_fincat(
            sorted(self._funs, key=lambda s: int(s[1:])),
            sorted(self._nats, key=lambda s: int(s[1:])),
            dom,
            cod,
            identity,
            compose,
        )
        FinCat.__init__(
            self,
            checked.objects,
            checked.morphisms,
            checked.dom,
            checked.cod,
            checked.identity,
            checked.compose_table,
        )
        self.source_cat = C
        self.target_cat = D

    def functor_of(self, obj_id):
        return self._funs[obj_id]

    def nat_of(self, mor_id):
        return self._nats[mor_id]

    def obj_id(self, F):
        return self._fun_ids[_fun_key(F)]

    def mor_id(self, a):
        return self._nat_ids[
            _nat_key(a, self.obj_id(a.src), self.obj_id(a.tgt))
        ]


def hom_cat(C, D):
    """The functor category [C, D] with lookup indexes attached."""
    return HomCat(C, D)


def _obj_profile(C):
    sizes = {}
    for x in C.objects:
        row = sorted(len(C.hom(x, y)) for y in C.objects)
        col = sorted(len(C.hom(y, x)) for y in C.objects)
        sizes[x] = (len(C.hom(x, x)), tuple(row), tuple(col))
    return sizes


def iso_categories(C, D):
    """Search for an isomorphism of categories.

    Returns a pair of mutually inverse functors (C -> D, D -> C), or None
    if the categories are not isomorphic.  Deterministic backtracking:
    objects are matched by hom-profile first, then morphism bijections are
    extended hom-set by hom-set and the composition table is verified.
    """
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None
    pc, pd = _obj_profile(C), _obj_profile(D)
    cobjs = sorted(C.objects)

    def match_mors(omap):
        pairs = []
        for x in cobjs:
            for y in cobjs:
                hc = C.hom(x, y)
                hd = D.hom(omap[x], omap[y])
                if len(hc) != len(hd):
                    return None
                pairs.append((list(hc), list(hd)))

        mmap = {}

        def extend(i):
            if i == len(pairs):
                for (g, f), gf in C.compose_table.items():
                    if D.compose_table[(mmap[g], mmap[f])] != mmap[gf]:
                        return False
                return True
            hc, hd = pairs[i]

            def pick(j, used):
                if j == len(hc):
                    return extend(i + 1)
                m = hc[j]
                for im in hd:
                    if im in used:
                        continue
                    if C.is_identity(m) != D.is_identity(im):
                        continue
                    mmap[m] = im
                    if pick(j + 1, used | {im}):
                        return True
                    del mmap[m]
                return False

            return pick(0, frozenset())

        if extend(0):
            return dict(mmap)
        return None

    omap = {}

    def assign(i, used):
        if i == len(cobjs):
            return match_mors(omap)
        x = cobjs[i]
        for d in sorted(D.objects):
            if d in used:
                continue
            if pc[x] != pd[d]:
                continue
            omap[x] = d
            got = assign(i + 1, used | {d})
            if got is not None:
                return got
            del omap[x]
        return None

    mmap = assign(0, frozenset())
    if mmap is None:
        return None
    fwd = Fun(C, D, dict(omap), mmap)
    back = Fun(
        D,
        C,
        {v: k for k, v in omap.items()},
        {v: k for k, v in mmap.items()},
    )
    return fwd, back
