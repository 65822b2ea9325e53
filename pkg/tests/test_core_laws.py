"""Cross-instance checks of the strict monoidal interface."""

import pytest

from traced import get_instance
from traced.gens import gen_morphism, gen_object, trial_stream
from traced.suites import REGISTRY, SuiteConfig, run_one

INSTANCES = ["finvect", "supervect", "graded(q=2)", "rbord1"]


@pytest.mark.parametrize("iid", INSTANCES)
def test_laws_suite_two_hundred_trials(iid):
    key = "graded" if iid.startswith("graded") else iid
    cfg = SuiteConfig(seed=42, trials=200)
    for family in ("core.laws", "core.naturality"):
        res = run_one(REGISTRY[f"{family}.{key}"], cfg)
        assert res.passed and res.failures == 0


@pytest.mark.parametrize("iid", ["finvect", "supervect"])
def test_symmetric_involution(iid):
    cfg = SuiteConfig(seed=42, trials=200)
    res = run_one(REGISTRY[f"core.symmetry.{iid}"], cfg)
    assert res.passed


@pytest.mark.parametrize("iid", INSTANCES)
def test_mor_equal_is_equivalence(iid):
    inst = get_instance(iid)
    rng = trial_stream(30, f"eq-{iid}", 0)
    for k in range(50):
        if iid == "rbord1":
            from traced.gens import gen_point_set

            x = gen_point_set(inst, rng, 2, prefix="x")
            y = gen_point_set(inst, rng, 2, prefix="y")
        else:
            x = gen_object(inst, rng, 3, 2)
            y = gen_object(inst, rng, 3, 2)
        f = gen_morphism(inst, x, y, rng)
        g = gen_morphism(inst, x, y, rng)
        assert inst.mor_equal(f, f)
        assert inst.mor_equal(f, g) == inst.mor_equal(g, f)


@pytest.mark.parametrize("iid", INSTANCES)
def test_tensor_obj_associative_and_unital(iid):
    inst = get_instance(iid)
    rng = trial_stream(31, f"obj-{iid}", 0)
    unit = inst.unit_object()
    for k in range(50):
        if iid == "rbord1":
            from traced.gens import gen_point_set

            a = gen_point_set(inst, rng, rng.randint(0, 2), prefix="a")
            b = gen_point_set(inst, rng, rng.randint(0, 2), prefix="b")
            c = gen_point_set(inst, rng, rng.randint(0, 2), prefix="c")
        else:
            a = gen_object(inst, rng, 3, 2)
            b = gen_object(inst, rng, 3, 2)
            c = gen_object(inst, rng, 3, 2)
        assert inst.tensor_obj(inst.tensor_obj(a, b), c) == inst.tensor_obj(a, inst.tensor_obj(b, c))
        assert inst.tensor_obj(unit, a) == a
        assert inst.tensor_obj(a, unit) == a


def test_capability_table():
    fv = get_instance("finvect")
    sv = get_instance("supervect")
    gq = get_instance("graded(q=2)")
    rb = get_instance("rbord1")
    for inst in (fv, sv):
        caps = inst.capabilities
        assert caps.additive and caps.braided and caps.balanced and caps.symmetric
    assert gq.capabilities.balanced and not gq.capabilities.symmetric
    caps = rb.capabilities
    assert not (caps.additive or caps.braided or caps.balanced or caps.symmetric)
    assert not rb.has_dual(rb.points(["x"]))
    assert fv.has_dual(fv.space(3))


def test_capability_invariants_enforced():
    from traced.core import Capabilities

    with pytest.raises(ValueError):
        Capabilities(symmetric=True)
    with pytest.raises(ValueError):
        Capabilities(balanced=True)
    Capabilities(symmetric=True, balanced=True, braided=True)
