import pytest

from fin2cat import fincat
from fin2cat.deltadiag import (
    check_dot_extension,
    make_delta_diagram,
    make_dot_extension,
    theta_invertible,
)
from fin2cat.errors import BoundaryMismatch
from helpers import (
    idem_cat,
    monoid_diagram,
    monoid_extension,
    terminal_cat,
    walking_arrow,
    z2_cat,
)


def test_terminal_diagram_builds_and_checks():
    T = terminal_cat()
    i = fincat.identity_fun(T)
    cell = fincat.identity_nat(i)
    d = make_delta_diagram(
        D1=T, D2=T, D3=T,
        Dd0=i, Dd1=i, Ds0=i, Dp0=i, Dp1=i, Dp2=i,
        Dsig00=cell, Dsig20=cell, Dsig21=cell, Dn0=cell, Dn1=cell,
    )
    ext = make_dot_extension(base=d, D0=T, Dd=i, Dtheta=cell)
    v = check_dot_extension(ext)
    assert v and v.failures == []
    assert theta_invertible(ext)


def test_diagram_rejects_wrong_functor_boundary():
    T = terminal_cat()
    W = walking_arrow()
    i = fincat.identity_fun(T)
    cell = fincat.identity_nat(i)
    with pytest.raises(BoundaryMismatch):
        make_delta_diagram(
            D1=T, D2=T, D3=T,
            Dd0=fincat.identity_fun(W),  # wrong category
            Dd1=i, Ds0=i, Dp0=i, Dp1=i, Dp2=i,
            Dsig00=cell, Dsig20=cell, Dsig21=cell, Dn0=cell, Dn1=cell,
        )


def test_diagram_rejects_wrong_cell_boundary():
    C = z2_cat()
    i = fincat.identity_fun(C)

    def cell(v):
        return fincat.make_nat(i, i, {"*": v})

    # sabotage: Dn0 built against a different functor pair
    W = walking_arrow()
    j = fincat.identity_fun(W)
    bad = fincat.identity_nat(j)
    with pytest.raises(BoundaryMismatch) as err:
        make_delta_diagram(
            D1=C, D2=C, D3=C,
            Dd0=i, Dd1=i, Ds0=i, Dp0=i, Dp1=i, Dp2=i,
            Dsig00=cell("e"), Dsig20=cell("e"), Dsig21=cell("e"),
            Dn0=bad, Dn1=cell("e"),
        )
    assert "Dn0" in str(err.value)


def test_associativity_equation_detected():
    # With every 1-cell an identity, the first equation reads
    # sig00 . sig20 = sig21 composed in Z/2; choosing s on one side only
    # must fail, and the identity equation (n0 = n1 here) still passes.
    C = z2_cat()
    d = monoid_diagram(C, sig00="s", sig20="e", sig21="e", n0="e", n1="e")
    v = check_dot_extension(monoid_extension(d, "e"))
    assert not v
    assert any("associativity" in f for f in v.failures)
    assert not any("identity" in f for f in v.failures)


def test_identity_equation_detected():
    C = z2_cat()
    d = monoid_diagram(C, sig00="e", sig20="e", sig21="e", n0="s", n1="e")
    v = check_dot_extension(monoid_extension(d, "e"))
    assert not v
    assert any("identity" in f for f in v.failures)
    assert not any("associativity" in f for f in v.failures)


def test_theta_enters_both_equations():
    # theta appears twice on the left of the associativity equation (so it
    # cancels in Z/2) and once in the identity equation.  The cell choices
    # below balance exactly when theta = s.
    C = z2_cat()
    d = monoid_diagram(C, sig00="s", sig20="e", sig21="e", n0="s", n1="e")
    assert check_dot_extension(monoid_extension(d, "s"))
    v = check_dot_extension(monoid_extension(d, "e"))
    assert any("associativity" in f for f in v.failures)
    assert any("identity" in f for f in v.failures)


def test_theta_invertible():
    C = idem_cat()
    i = fincat.identity_fun(C)

    def cell(v):
        return fincat.make_nat(i, i, {"*": v})

    d = make_delta_diagram(
        D1=C, D2=C, D3=C,
        Dd0=i, Dd1=i, Ds0=i, Dp0=i, Dp1=i, Dp2=i,
        Dsig00=cell("e"), Dsig20=cell("e"), Dsig21=cell("e"),
        Dn0=cell("e"), Dn1=cell("e"),
    )
    good = make_dot_extension(base=d, D0=C, Dd=i, Dtheta=cell("e"))
    assert theta_invertible(good)
    bad = make_dot_extension(base=d, D0=C, Dd=i, Dtheta=cell("a"))
    assert not theta_invertible(bad)
