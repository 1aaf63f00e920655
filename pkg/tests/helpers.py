"""Shared small categories and builders used across the test suite."""

from fin2cat import fincat
from fin2cat.deltadiag import make_delta_diagram, make_dot_extension
from fin2cat.fincat import make_fincat, make_fun, make_nat


def terminal_cat():
    return make_fincat(
        objects=["*"],
        morphisms=["id*"],
        dom={"id*": "*"},
        cod={"id*": "*"},
        identity={"*": "id*"},
        compose={("id*", "id*"): "id*"},
    )


def walking_arrow():
    """Two objects 0, 1 and a single non-identity morphism u: 0 -> 1."""
    return make_fincat(
        objects=["0", "1"],
        morphisms=["id0", "id1", "u"],
        dom={"id0": "0", "id1": "1", "u": "0"},
        cod={"id0": "0", "id1": "1", "u": "1"},
        identity={"0": "id0", "1": "id1"},
        compose={
            ("id0", "id0"): "id0",
            ("id1", "id1"): "id1",
            ("u", "id0"): "u",
            ("id1", "u"): "u",
        },
    )


def discrete(names):
    names = list(names)
    return make_fincat(
        objects=names,
        morphisms=["id%s" % n for n in names],
        dom={"id%s" % n: n for n in names},
        cod={"id%s" % n: n for n in names},
        identity={n: "id%s" % n for n in names},
        compose={("id%s" % n, "id%s" % n): "id%s" % n for n in names},
    )


def chain3():
    """The poset 0 < 1 < 2 as a category."""
    objects = ["0", "1", "2"]
    morphisms = ["id0", "id1", "id2", "u01", "u02", "u12"]
    dom = {"id0": "0", "id1": "1", "id2": "2", "u01": "0", "u02": "0", "u12": "1"}
    cod = {"id0": "0", "id1": "1", "id2": "2", "u01": "1", "u02": "2", "u12": "2"}
    compose = {}
    for m in morphisms:
        compose[(m, "id%s" % dom[m])] = m
        compose[("id%s" % cod[m], m)] = m
    compose[("u12", "u01")] = "u02"
    return make_fincat(
        objects=objects,
        morphisms=morphisms,
        dom=dom,
        cod=cod,
        identity={"0": "id0", "1": "id1", "2": "id2"},
        compose=compose,
    )


def identity_fun_on(C):
    return make_fun(
        C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms}
    )


def constant_fun(C, D, obj):
    return make_fun(
        C,
        D,
        {x: obj for x in C.objects},
        {m: D.identity[obj] for m in C.morphisms},
    )


def nat(F, G, components):
    return make_nat(F, G, components)


def one_object_cat(elements, unit, table):
    """The one-object category on a monoid given by a multiplication dict."""
    return make_fincat(
        objects=["*"],
        morphisms=list(elements),
        dom={m: "*" for m in elements},
        cod={m: "*" for m in elements},
        identity={"*": unit},
        compose={(g, f): table[(g, f)] for g in elements for f in elements},
    )


def z2_cat():
    t = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}
    return one_object_cat(["e", "s"], "e", t)


def idem_cat():
    t = {("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a", ("a", "a"): "a"}
    return one_object_cat(["e", "a"], "e", t)


def monoid_diagram(C, sig00, sig20, sig21, n0, n1):
    """All three levels the one-object category C, all functors identities,
    comparison cells given by single (central) monoid elements."""
    i = fincat.identity_fun(C)

    def cell(value):
        return make_nat(i, i, {"*": value})

    return make_delta_diagram(
        D1=C, D2=C, D3=C,
        Dd0=i, Dd1=i, Ds0=i, Dp0=i, Dp1=i, Dp2=i,
        Dsig00=cell(sig00), Dsig20=cell(sig20), Dsig21=cell(sig21),
        Dn0=cell(n0), Dn1=cell(n1),
    )


def identity_diagram(C):
    """Every level C, every functor the identity, every cell the identity."""
    i = fincat.identity_fun(C)
    cell = fincat.identity_nat(i)
    return make_delta_diagram(
        D1=C, D2=C, D3=C,
        Dd0=i, Dd1=i, Ds0=i, Dp0=i, Dp1=i, Dp2=i,
        Dsig00=cell, Dsig20=cell, Dsig21=cell, Dn0=cell, Dn1=cell,
    )


def monoid_extension(diagram, theta):
    C = diagram.D1
    i = fincat.identity_fun(C)
    return make_dot_extension(
        base=diagram,
        D0=C,
        Dd=i,
        Dtheta=make_nat(i, i, {"*": theta}),
    )
