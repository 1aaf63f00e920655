"""Presented categories, word-rewriting quotients, Kleisli categories, and
the strictification pipeline.

The Kleisli construction here is a standalone oracle (hom sets are read off
the base category directly); strictify must reproduce it up to isomorphism
through the completely different presentation/rewriting route.
"""

import pytest

from fin2cat import codescent, fincat, laxalg
from fin2cat.codescent import (
    FINITE,
    UNDECIDED,
    CodescentData,
    PresentedCategory,
    build_Ay_strict,
    identity_adjunction,
    kleisli,
    lax_codescent,
    make_codescent_data,
    quotient_category,
    strictify,
    verify_codescent_universal,
)
from fin2cat.errors import (
    AdjunctionNotStrict,
    AxiomViolation,
    BoundaryMismatch,
    MalformedWord,
    MonadLawViolation,
)
from fin2cat.laxalg import Monoid, monad_algebra, monoid_two_monad

from helpers import chain3, constant_fun, terminal_cat, walking_arrow, z2_cat


def triv_universe(C, depth=3):
    M = Monoid(["e"], "e", {("e", "e"): "e"})
    return monoid_two_monad(M, [("C", C)], depth)


def const1_monad(C):
    t = constant_fun(C, C, "1")
    mu = fincat.make_nat(fincat.compose_fun(t, t), t, {"0": "id1", "1": "id1"})
    eta = fincat.make_nat(fincat.identity_fun(C), t, {"0": "u", "1": "id1"})
    return t, mu, eta


def closure_monad(Z):
    t = fincat.make_fun(
        Z,
        Z,
        {"0": "1", "1": "1", "2": "2"},
        {"id0": "id1", "id1": "id1", "id2": "id2",
         "u01": "id1", "u02": "u12", "u12": "u12"},
    )
    mu = fincat.make_nat(
        fincat.compose_fun(t, t), t, {"0": "id1", "1": "id1", "2": "id2"}
    )
    eta = fincat.make_nat(
        fincat.identity_fun(Z), t, {"0": "u01", "1": "id1", "2": "id2"}
    )
    return t, mu, eta


def identity_monad(Z):
    t = fincat.identity_fun(Z)
    ids = {o: Z.identity[o] for o in Z.objects}
    mu = fincat.make_nat(fincat.compose_fun(t, t), t, ids)
    eta = fincat.make_nat(fincat.identity_fun(Z), t, ids)
    return t, mu, eta


def loop_presentation(relations):
    return PresentedCategory(
        ["*"], [("s", "*", "*")], [(l, r, "*") for l, r in relations]
    )


# ---------------------------------------------------------------------------
# presentations and quotients


def test_presentation_rejects_duplicate_generators():
    with pytest.raises(MalformedWord):
        PresentedCategory(["x"], [("f", "x", "x"), ("f", "x", "x")], [])


def test_presentation_rejects_bad_words():
    with pytest.raises(MalformedWord):
        PresentedCategory(["x"], [("f", "x", "x")], [(("g",), (), "x")])
    with pytest.raises(MalformedWord):
        # sides are not parallel: f goes x -> y, the empty word stays at x
        PresentedCategory(
            ["x", "y"], [("f", "x", "y")], [(("f",), (), "x")]
        )
    with pytest.raises(MalformedWord):
        # non-composable chain
        PresentedCategory(
            ["x", "y"], [("f", "x", "y")], [(("f", "f"), ("f",), "x")]
        )


def test_quotient_of_free_arrow_presentation():
    P = PresentedCategory(["x", "y"], [("f", "x", "y")], [])
    Q = quotient_category(P)
    assert Q.status == FINITE
    assert sorted(Q.category.objects) == ["x", "y"]
    assert sorted(Q.category.morphisms) == ["f", "id[x]", "id[y]"]


def test_quotient_involution_gives_two_morphisms():
    Q = quotient_category(loop_presentation([(("s", "s"), ())]))
    assert Q.status == FINITE
    assert sorted(Q.category.morphisms) == ["id[*]", "s"]
    assert Q.category.compose("s", "s") == "id[*]"


def test_quotient_idempotent_loop():
    Q = quotient_category(loop_presentation([(("s", "s"), ("s",))]))
    assert Q.status == FINITE
    assert sorted(Q.category.morphisms) == ["id[*]", "s"]
    assert Q.category.compose("s", "s") == "s"


def test_quotient_order_three_loop():
    Q = quotient_category(loop_presentation([(("s", "s", "s"), ())]))
    assert Q.status == FINITE
    assert sorted(Q.category.morphisms) == ["id[*]", "s", "s*s"]
    assert Q.category.compose("s*s", "s") == "id[*]"
    assert Q.category.compose("s", "s*s") == "id[*]"


def test_quotient_free_loop_is_undecided():
    Q = quotient_category(loop_presentation([]))
    assert Q.status == UNDECIDED
    assert Q.category is None
    assert any("infinite" in line for line in Q.trace)


def test_quotient_budget_exhaustion_is_undecided():
    Q = quotient_category(loop_presentation([(("s", "s"), ())]), budget=0)
    assert Q.status == UNDECIDED
    assert any("budget" in line for line in Q.trace)


def test_quotient_reverifies_input_relations():
    Q = quotient_category(loop_presentation([(("s", "s"), ()), (("s", "s", "s"), ())]))
    # s^2 = s^3 = id forces s = id
    assert Q.status == FINITE
    assert sorted(Q.category.morphisms) == ["id[*]"]


def test_quotient_normalize_is_exposed():
    Q = quotient_category(loop_presentation([(("s", "s"), ())]))
    assert Q.normalize(("s", "s", "s"), "*") == ("s",)
    assert Q.word_id(("s", "s"), "*") == "id[*]"
    assert Q.word_id(("s",), "*") == "s"


# ---------------------------------------------------------------------------
# the Kleisli oracle


def test_kleisli_of_identity_monad_is_the_base():
    Z = chain3()
    K = kleisli(Z, *identity_monad(Z))
    assert len(K.objects) == 3 and len(K.morphisms) == 6
    pair = fincat.iso_categories(K, Z)
    assert pair is not None


def test_kleisli_of_const1_monad_is_codiscrete():
    C = walking_arrow()
    K = kleisli(C, *const1_monad(C))
    assert len(K.objects) == 2 and len(K.morphisms) == 4
    for x in K.objects:
        for y in K.objects:
            assert len(K.hom(x, y)) == 1


def test_kleisli_of_closure_monad_frozen_counts():
    Z = chain3()
    K = kleisli(Z, *closure_monad(Z))
    assert len(K.objects) == 3 and len(K.morphisms) == 7
    assert K.hom("2", "0") == () and K.hom("2", "1") == ()
    assert len(K.hom("0", "2")) == 1
    # composite 0 ~> 1 ~> 2 is witnessed by u02
    f = K.hom("0", "1")[0]
    g = K.hom("1", "2")[0]
    assert K.compose(g, f) == "(u02:0->2)"


def test_kleisli_rejects_broken_unit():
    # the swap is a perfectly natural t.t => t for t = id, but it fails the
    # unit law mu . eta_t = id
    Z = z2_cat()
    t = fincat.identity_fun(Z)
    mu = fincat.make_nat(fincat.compose_fun(t, t), t, {"*": "s"})
    eta = fincat.make_nat(fincat.identity_fun(Z), t, {"*": "e"})
    with pytest.raises(MonadLawViolation):
        kleisli(Z, t, mu, eta)


def test_kleisli_checks_mu_boundary():
    Z = chain3()
    t, mu, eta = closure_monad(Z)
    with pytest.raises(BoundaryMismatch):
        kleisli(Z, t, eta, eta)


# ---------------------------------------------------------------------------
# codescent data from a lax algebra


def test_build_ay_frozen_shapes_for_const1():
    C = walking_arrow()
    U = triv_universe(C)
    y = monad_algebra(U, C, *const1_monad(C))
    A = build_Ay_strict(U, y)
    assert A.A1 == U.T(C)
    assert A.A2 == U.T(U.T(C))
    assert A.Ad0 == U.m(C)
    assert A.Ad1 == U.T_fun(y.a)
    assert A.As0 == U.T_fun(U.eta(C))
    # the nontrivial unit cell is T of the algebra unit
    assert A.An0.at("(e,0)") == "(e,u)"
    assert A.An0.at("(e,1)") == "(e,id1)"
    # An1 is the strict triangle, so an identity
    assert all(A.A1.is_identity(A.An1.at(x)) for x in A.A1.objects)
    # Asig21 is T of the algebra multiplication cell
    assert A.Asig21.at("(e,(e,(e,0)))") == "(e,id1)"
    # both strict-interchange cells are identities
    assert all(A.A1.is_identity(A.Asig00.at(v)) for v in A.A3.objects)
    assert all(A.A1.is_identity(A.Asig20.at(v)) for v in A.A3.objects)


def test_make_codescent_data_validates_boundaries():
    C = walking_arrow()
    U = triv_universe(C)
    y = monad_algebra(U, C, *const1_monad(C))
    A = build_Ay_strict(U, y)
    fields = {f: getattr(A, f) for f in CodescentData.FIELDS}
    bad = dict(fields)
    bad["Ad0"] = fincat.identity_fun(A.A1)
    with pytest.raises(BoundaryMismatch) as err:
        make_codescent_data(**bad)
    assert "Ad0" in str(err.value)
    bad = dict(fields)
    bad["An0"], bad["An1"] = bad["An1"], bad["An0"]
    with pytest.raises(BoundaryMismatch):
        make_codescent_data(**bad)


def test_broken_adjunction_is_rejected():
    C = walking_arrow()
    U = triv_universe(C)
    y = monad_algebra(U, C, *const1_monad(C))
    adj = identity_adjunction(U)
    bent = codescent.StrictAdjunction(
        U,
        free=adj.free,
        rho=adj.rho,
        counit=lambda z: constant_fun(U.T(z.Z), z.Z, z.Z.objects[0]),
    )
    with pytest.raises(AdjunctionNotStrict):
        build_Ay_strict(U, y, bent)


# ---------------------------------------------------------------------------
# strictification against the Kleisli oracle


def test_strictify_const1_matches_kleisli():
    C = walking_arrow()
    U = triv_universe(C)
    t, mu, eta = const1_monad(C)
    z = monad_algebra(U, C, t, mu, eta)
    Q = strictify(U, z)
    assert Q.status == FINITE
    assert len(Q.category.objects) == 2
    assert len(Q.category.morphisms) == 4
    assert fincat.iso_categories(Q.category, kleisli(C, t, mu, eta)) is not None


def test_strictify_closure_matches_kleisli():
    Z = chain3()
    U = triv_universe(Z)
    t, mu, eta = closure_monad(Z)
    z = monad_algebra(U, Z, t, mu, eta)
    Q = strictify(U, z)
    assert Q.status == FINITE
    assert len(Q.category.objects) == 3
    assert len(Q.category.morphisms) == 7
    assert fincat.iso_categories(Q.category, kleisli(Z, t, mu, eta)) is not None


def test_strictify_identity_monad_on_group():
    Z = z2_cat()
    U = triv_universe(Z)
    t, mu, eta = identity_monad(Z)
    z = monad_algebra(U, Z, t, mu, eta)
    Q = strictify(U, z)
    assert Q.status == FINITE
    assert len(Q.category.objects) == 1
    assert len(Q.category.morphisms) == 2
    assert fincat.iso_categories(Q.category, kleisli(Z, t, mu, eta)) is not None


def test_lax_codescent_returns_presentation_and_trace():
    C = walking_arrow()
    U = triv_universe(C)
    z = monad_algebra(U, C, *const1_monad(C))
    A = build_Ay_strict(U, z)
    Q = lax_codescent(A)
    assert Q.status == FINITE
    assert Q.presentation.objects == list(A.A1.objects)
    assert Q.trace and any("rule" in line for line in Q.trace)


# ---------------------------------------------------------------------------
# the universal property, probed by mapping out


def test_verify_codescent_universal_closure():
    Z = chain3()
    U = triv_universe(Z)
    t, mu, eta = closure_monad(Z)
    z = monad_algebra(U, Z, t, mu, eta)
    A = build_Ay_strict(U, z)
    Q = lax_codescent(A)
    report = verify_codescent_universal(
        A, Q, [("1", terminal_cat()), ("2", walking_arrow())]
    )
    assert report["status"] == "pass"
    assert set(report["probes"]) == {"1", "2"}
    for entry in report["probes"].values():
        assert entry["iso"] is True
        assert entry["hom_objects"] == entry["descent_objects"]
        assert entry["hom_morphisms"] == entry["descent_morphisms"]


def test_verify_codescent_universal_identity_monad():
    Z = z2_cat()
    U = triv_universe(Z)
    z = monad_algebra(U, Z, *identity_monad(Z))
    A = build_Ay_strict(U, z)
    Q = lax_codescent(A)
    report = verify_codescent_universal(A, Q, [("2", walking_arrow())])
    assert report["status"] == "pass"
    assert report["probes"]["2"]["iso"] is True


def test_verify_codescent_universal_undecided_quotient():
    Z = chain3()
    U = triv_universe(Z)
    z = monad_algebra(U, Z, *closure_monad(Z))
    A = build_Ay_strict(U, z)
    Q = lax_codescent(A, budget=0)
    assert Q.status == UNDECIDED
    report = verify_codescent_universal(A, Q, [("1", terminal_cat())])
    assert report["status"] == "undecided"
