import pytest

from traced import get_instance, psi, tr_hat, trace_pairing, rat
from traced.bordism import IN, OUT, Bord, Iso
from traced.errors import DomainMismatch, NotBordism, NotEndo
from traced.gens import gen_bordism, gen_point_set, gen_triple, trial_stream

rb = get_instance("rbord1")


def test_interval_gluing_adds_lengths():
    f = rb.interval("w", "x", 3)
    g = rb.interval("x", "y", 2)
    h = rb.compose(g, f)
    assert h.payload == Bord.make([(((IN, "w")), (OUT, "y"), 5)])


def test_loop_closing_composition():
    ab = rb.points(["a", "b"])
    cap = rb.bord_mor(rb.unit_object(), ab, [((OUT, "a"), (OUT, "b"), 1)])
    cup = rb.bord_mor(ab, rb.unit_object(), [((IN, "a"), (IN, "b"), 2)])
    assert rb.compose(cup, cap).payload == Bord.make([], [3])


def test_iso_composition_relabels():
    g = rb.interval("x", "y", 2)
    ren = rb.iso_mor(rb.points(["y"]), rb.points(["u"]), {"y": "u"})
    out = rb.compose(ren, g)
    assert out.payload == Bord.make([((IN, "x"), (OUT, "u"), 2)])
    pre = rb.iso_mor(rb.points(["w"]), rb.points(["x"]), {"w": "x"})
    assert rb.compose(g, pre).payload == Bord.make([((IN, "w"), (OUT, "y"), 2)])


def test_iso_iso_composition():
    a = rb.iso_mor(rb.points(["x"]), rb.points(["y"]), {"x": "y"})
    b = rb.iso_mor(rb.points(["y"]), rb.points(["u"]), {"y": "u"})
    out = rb.compose(b, a)
    assert isinstance(out.payload, Iso)
    assert out.payload.as_dict() == {"x": "u"}


def test_empty_identity_is_empty_bordism():
    ident = rb.identity(rb.unit_object())
    assert isinstance(ident.payload, Bord)
    assert ident.payload == Bord.make([])
    again = rb.compose(ident, ident)
    assert again == ident


def test_tensor_disjoint_union():
    a = rb.interval("x", "y", 1)
    b = rb.interval("u", "v", 2)
    both = rb.tensor(a, b)
    assert both.payload == Bord.make(
        [((IN, "x"), (OUT, "y"), 1), ((IN, "u"), (OUT, "v"), 2)]
    )


def test_tensor_label_collision_rejected():
    a = rb.interval("x", "y", 1)
    with pytest.raises(DomainMismatch):
        rb.tensor(a, a)


def test_tensor_with_identity_iso_stays_normalized():
    a = rb.interval("x", "y", 1)
    u = rb.points(["u"])
    hybrid = rb.tensor(a, rb.identity(u))
    assert isinstance(hybrid.payload, Bord)
    lengths = sorted(l for (_x, _y, l) in hybrid.payload.arcs)
    assert lengths == [0, 1]
    # composing hybrids adds lengths along each strand; the untouched
    # identity strand stays thin while the thick one glues up
    b = rb.interval("y", "w", 2)
    out = rb.compose(rb.tensor(b, rb.identity(u)), hybrid)
    by_arc = {(p, q): l for (p, q, l) in out.payload.arcs}
    assert by_arc[((IN, "u"), (OUT, "u"))] == 0
    assert by_arc[((IN, "x"), (OUT, "w"))] == 3
    # all-thin tensors collapse back to isometries
    two = rb.tensor(rb.identity(rb.points(["p"])), rb.identity(u))
    assert isinstance(two.payload, Iso)


def test_switching_is_relabelling_identity():
    x, y = rb.points(["x"]), rb.points(["y"])
    s = rb.switching(x, y)
    assert isinstance(s.payload, Iso)
    assert s.source == rb.tensor_obj(x, y)
    assert s.target == rb.tensor_obj(y, x)


def test_bord_mor_validation():
    x = rb.points(["x"])
    with pytest.raises(DomainMismatch):
        rb.bord_mor(x, x, [((IN, "x"), (OUT, "x"), 0)])  # zero length
    with pytest.raises(DomainMismatch):
        rb.bord_mor(x, x, [])  # unmatched boundary
    with pytest.raises(DomainMismatch):
        rb.bord_mor(x, x, [((IN, "x"), (OUT, "q"), 1)])  # off-boundary point


def test_glue_trace_examples():
    sigma = rb.interval("x", "x", 3)
    assert rb.glue_trace(sigma).payload == Bord.make([], [3])

    uv = rb.points(["u", "v"])
    swap = rb.bord_mor(uv, uv, [((IN, "u"), (OUT, "v"), 1), ((IN, "v"), (OUT, "u"), 2)])
    assert rb.glue_trace(swap).payload == Bord.make([], [3])

    par = rb.bord_mor(uv, uv, [((IN, "u"), (OUT, "u"), rat(1, 2)), ((IN, "v"), (OUT, "v"), 2)])
    assert rb.glue_trace(par).payload == Bord.make([], [rat(1, 2), 2])

    with pytest.raises(NotEndo):
        rb.glue_trace(rb.interval("x", "y", 1))
    with pytest.raises(NotBordism):
        rb.glue_trace(rb.identity(rb.points(["x"])))


def test_cut_thickener_structure():
    sigma = rb.interval("x", "x", 5)
    tri = rb.cut_thickener(sigma, rat(1, 5))
    assert tri.z.payload == ("x'",)
    assert tri.t.payload == Bord.make([((OUT, "x"), (OUT, "x'"), 1)])
    assert tri.b.payload == Bord.make([((IN, "x"), (IN, "x'"), 4)])
    assert rb.mor_equal(psi(tri), sigma)
    assert tr_hat(tri).payload == Bord.make([], [5])


def test_cut_rejects_isometries_and_bad_fractions():
    with pytest.raises(NotBordism):
        rb.cut_thickener(rb.identity(rb.points(["x"])), rat(1, 2))
    sigma = rb.interval("x", "x", 5)
    with pytest.raises(DomainMismatch):
        rb.cut_thickener(sigma, rat(3, 2))


def test_cut_carries_free_circles():
    x = rb.points(["x"])
    sigma = rb.bord_mor(x, x, [((IN, "x"), (OUT, "x"), 1)], circles=[7])
    tri = rb.cut_thickener(sigma, rat(1, 2))
    assert tri.b.payload.circles == (rat(7),)
    assert rb.mor_equal(psi(tri), sigma)
    assert tr_hat(tri).payload == Bord.make([], [1, 7])


def test_two_cuts_agree_with_witness():
    rng = trial_stream(17, "cuts", 0)
    for k in range(100):
        x = gen_point_set(rb, rng, rng.randint(1, 4), prefix="x")
        sigma = gen_bordism(rb, x, x, rng)
        r1, r2 = rat(1, 4), rat(2, 3)
        c1 = rb.cut_thickener(sigma, r1)
        c2 = rb.cut_thickener(sigma, r2)
        assert rb.mor_equal(tr_hat(c1), tr_hat(c2))
        assert rb.mor_equal(psi(c1), sigma)
        w = rb.cut_witness(sigma, r1, r2)
        assert w.holds()


def test_glue_equals_trace_of_cut():
    rng = trial_stream(18, "glue", 0)
    for k in range(200):
        x = gen_point_set(rb, rng, rng.randint(1, 4), prefix="x")
        sigma = gen_bordism(rb, x, x, rng)
        r = rat(rng.randint(1, 9), 10)
        assert rb.mor_equal(rb.glue_trace(sigma), tr_hat(rb.cut_thickener(sigma, r)))


def test_pairing_is_glued_circle():
    f = rb.interval("x", "y", 1)
    g = rb.interval("y", "x", 2)
    f_hat = rb.cut_thickener(f, rat(1, 2))
    assert trace_pairing(f_hat, g).payload == Bord.make([], [3])


def test_psi_of_triples_is_thick():
    rng = trial_stream(19, "thick", 0)
    for k in range(200):
        par = rng.randint(0, 1)
        x = gen_point_set(rb, rng, par + 2 * rng.randint(0, 1), prefix="x")
        y = gen_point_set(rb, rng, par + 2 * rng.randint(0, 1), prefix="y")
        tri = gen_triple(rb, x, y, rng)
        value = psi(tri)
        assert isinstance(value.payload, Bord)
        assert all(l > 0 for (_a, _b, l) in value.payload.arcs)


def test_mor_equal_canonical_forms():
    """Endpoint order inside an arc and the order circles are listed in do
    not affect equality; the canonical form sorts both."""
    x, u = rb.points(["x"]), rb.points(["u"])
    a = rb.bord_mor(x, u, [((IN, "x"), (OUT, "u"), 1)], circles=[1, 2])
    b = rb.bord_mor(x, u, [((OUT, "u"), (IN, "x"), 1)], circles=[2, 1])
    assert rb.mor_equal(a, b)
    c = rb.bord_mor(x, u, [((IN, "x"), (OUT, "u"), 1)], circles=[2, 2])
    assert not rb.mor_equal(a, c)
