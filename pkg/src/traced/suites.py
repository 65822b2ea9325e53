"""Theorem-indexed property suites and the machine-readable report.

Every suite draws each trial from an independent PRNG stream derived from
(seed, suite id, trial index), so identical configs give identical reports
and parallel execution cannot change results.  All comparisons are exact;
there are no tolerances anywhere.

Negative-control suites invert pass semantics: they PASS when a
counterexample is found within the trial budget, and record it.  Pinned
regression inputs shipped with the package are re-checked first.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from importlib import resources

from . import serde
from .core import get_instance
from .gens import (
    Stream,
    gen_bordism,
    gen_endo_pair,
    gen_matrix_mor,
    gen_morphism,
    gen_object,
    gen_point_set,
    gen_triple,
    trial_stream,
)
from .matrices import RatMatrix
from .thickened import (
    ThickTriple,
    add_triples,
    canonical_thickener,
    hat_comp_witness,
    negate_triple,
    pad_thickener,
    post_compose,
    pre_compose,
    psi,
    slide_pair,
    tensor_triples,
    tr_hat,
    trace_pairing,
    zero_triple,
)
from .vect import alpha, phi, phi_inv
from .field_theory import field_theory
from ._rat import rat, rat_str

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SuiteConfig:
    suites: tuple = ("all",)
    seed: int = 42
    trials: int = 200
    max_dim: int = 4
    max_degree: int = 4
    q: str = "2"

    def as_dict(self):
        return {
            "suites": list(self.suites),
            "seed": self.seed,
            "trials": self.trials,
            "max_dim": self.max_dim,
            "max_degree": self.max_degree,
            "q": self.q,
        }


@dataclass
class SuiteResult:
    suite_id: str
    tag: str
    trials: int
    failures: int
    passed: bool
    expect_counterexample: bool
    counterexamples_found: int
    counterexample: dict | None
    wall_time_s: float

    def as_json(self):
        """Stable JSON form; wall time is deliberately excluded so identical
        seeds give byte-identical reports."""
        return {
            "id": self.suite_id,
            "tag": self.tag,
            "trials": self.trials,
            "failures": self.failures,
            "passed": self.passed,
            "expect_counterexample": self.expect_counterexample,
            "counterexamples_found": self.counterexamples_found,
            "counterexample": self.counterexample,
        }


@dataclass
class SuiteReport:
    config: SuiteConfig
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def as_json(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "config": self.config.as_dict(),
            "suites": [r.as_json() for r in self.results],
            "passed": self.passed,
        }


@dataclass(frozen=True)
class Suite:
    suite_id: str
    tag: str
    description: str
    gen: object
    check: object
    expect_counterexample: bool = False
    pinned: str | None = None  # package-data file of regression inputs
    data_gen: object = None  # data-driven suites (corpus) use this instead of gen


def _inst(key: str, cfg: SuiteConfig):
    if key == "graded":
        return get_instance(f"graded(q={cfg.q})")
    return get_instance(key)


# ---------------------------------------------------------------------------
# generators and checks, one family per invariant cluster
# ---------------------------------------------------------------------------


def _sized(cfg: SuiteConfig, cap: int) -> int:
    return min(cfg.max_dim, cap)


def _gen_chain_objects(inst, rng: Stream, cfg: SuiteConfig, count: int, prefix: str):
    """Objects usable in a composable chain; in rbord1 all share one parity
    so random matchings exist between consecutive ones."""
    if inst.instance_id == "rbord1":
        par = rng.randint(0, 1)
        sizes = [par + 2 * rng.randint(0, 1) for _ in range(count)]
        return [gen_point_set(inst, rng, s, prefix=f"{prefix}{i}") for i, s in enumerate(sizes)]
    return [gen_object(inst, rng, cfg.max_dim, cfg.max_degree) for _ in range(count)]


def suite_core_laws(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        a, b, c, d = _gen_chain_objects(inst, rng, cfg, 4, "a")
        e, f3, g3 = _gen_chain_objects(inst, rng, cfg, 3, "m")
        return {
            "f": gen_morphism(inst, a, b, rng),
            "g": gen_morphism(inst, b, c, rng),
            "h": gen_morphism(inst, c, d, rng),
            "p": gen_morphism(inst, e, f3, rng),
            "q": gen_morphism(inst, f3, g3, rng),
        }

    def check(inputs):
        f, g, h = inputs["f"], inputs["g"], inputs["h"]
        p, q = inputs["p"], inputs["q"]
        inst = get_instance(f.instance_id)
        assoc = inst.mor_equal(
            inst.compose(inst.compose(h, g), f), inst.compose(h, inst.compose(g, f))
        )
        unit = inst.mor_equal(inst.compose(inst.identity(f.target), f), f) and inst.mor_equal(
            inst.compose(f, inst.identity(f.source)), f
        )
        lhs = inst.tensor(inst.compose(g, f), inst.compose(q, p))
        rhs = inst.compose(inst.tensor(g, q), inst.tensor(f, p))
        inter = inst.mor_equal(lhs, rhs)
        strict = inst.mor_equal(inst.tensor(f, inst.identity(inst.unit_object())), f)
        if not assoc:
            return False, "associativity failed"
        if not unit:
            return False, "unit law failed"
        if not inter:
            return False, "interchange law failed"
        if not strict:
            return False, "strict unit failed"
        return True, ""

    return Suite(
        suite_id=f"core.laws.{key}",
        tag="core.laws",
        description="associativity, unit laws, interchange, strict unit",
        gen=gen,
        check=check,
    )


def suite_core_naturality(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x1, x2 = _gen_chain_objects(inst, rng, cfg, 2, "x")
        y1, y2 = _gen_chain_objects(inst, rng, cfg, 2, "y")
        return {
            "g": gen_morphism(inst, x1, x2, rng),
            "h": gen_morphism(inst, y1, y2, rng),
        }

    def check(inputs):
        g, h = inputs["g"], inputs["h"]
        inst = get_instance(g.instance_id)
        lhs = inst.compose(inst.switching(g.target, h.target), inst.tensor(g, h))
        rhs = inst.compose(inst.tensor(h, g), inst.switching(g.source, h.source))
        return inst.mor_equal(lhs, rhs), "naturality square broken"

    return Suite(
        suite_id=f"core.naturality.{key}",
        tag="core.naturality",
        description="naturality of the switching isomorphism",
        gen=gen,
        check=check,
    )


def suite_core_symmetry(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        y = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        return {"x": inst.identity(x), "y": inst.identity(y)}

    def check(inputs):
        xi, yi = inputs["x"], inputs["y"]
        inst = get_instance(xi.instance_id)
        x, y = xi.source, yi.source
        both = inst.compose(inst.switching(y, x), inst.switching(x, y))
        return (
            inst.mor_equal(both, inst.identity(inst.tensor_obj(x, y))),
            "switching is not involutive",
        )

    return Suite(
        suite_id=f"core.symmetry.{key}",
        tag="core.symmetry",
        description="s(Y,X) . s(X,Y) = id in symmetric instances",
        gen=gen,
        check=check,
    )


def suite_whtr_welldef(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        if inst.instance_id == "rbord1":
            x = gen_point_set(inst, rng, rng.randint(0, cfg.max_dim), prefix="x")
            par = len(x.payload) % 2
            nz = rng.randint(0, cfg.max_dim)
            nz += (nz + par) % 2
            nz2 = rng.randint(0, cfg.max_dim)
            nz2 += (nz2 + par) % 2
            z = gen_point_set(inst, rng, nz, prefix="z")
            z2 = gen_point_set(inst, rng, nz2, prefix="w")
            t = gen_bordism(inst, inst.unit_object(), inst.tensor_obj(x, z), rng, max_circles=0)
            bp = gen_bordism(inst, inst.tensor_obj(z2, x), inst.unit_object(), rng, max_circles=0)
            g = gen_morphism(inst, z, z2, rng)
        else:
            x = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
            z = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
            z2 = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
            t = gen_matrix_mor(inst, inst.unit_object(), inst.tensor_obj(x, z), rng)
            bp = gen_matrix_mor(inst, inst.tensor_obj(z2, x), inst.unit_object(), rng)
            g = gen_matrix_mor(inst, z, z2, rng)
        return {"t": t, "bp": bp, "g": g, "x": inst.identity(x)}

    def check(inputs):
        t, bp, g = inputs["t"], inputs["bp"], inputs["g"]
        x = inputs["x"].source
        inst = get_instance(t.instance_id)
        w = slide_pair(t, bp, g, dom=x, cod=x)
        if not w.holds():
            return False, "constructed slide witness does not satisfy its equations"
        if not inst.mor_equal(psi(w.left), psi(w.right)):
            return False, "psi not slide-invariant"
        if not inst.mor_equal(tr_hat(w.left), tr_hat(w.right)):
            return False, "tr_hat not slide-invariant"
        return True, ""

    return Suite(
        suite_id=f"whtr.welldef.{key}",
        tag="whtr.welldef",
        description="psi and tr_hat are invariant under slides of representatives",
        gen=gen,
        check=check,
    )


def suite_whtr_pad(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x, tr = gen_endo_pair(inst, rng, cfg.max_dim, cfg.max_degree)
        w = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        junk = gen_matrix_mor(inst, inst.tensor_obj(w, x), inst.unit_object(), rng)
        return {"t": tr.t, "b": tr.b, "z": inst.identity(tr.z), "x": inst.identity(x),
                "w": inst.identity(w), "junk": junk}

    def check(inputs):
        inst = get_instance(inputs["t"].instance_id)
        x = inputs["x"].source
        tr = ThickTriple(dom=x, cod=x, z=inputs["z"].source, t=inputs["t"], b=inputs["b"])
        padded = pad_thickener(tr, inputs["w"].source, inputs["junk"])
        if not inst.mor_equal(psi(padded), psi(tr)):
            return False, "psi changed under padding"
        if not inst.mor_equal(tr_hat(padded), tr_hat(tr)):
            return False, "tr_hat changed under padding"
        return True, ""

    return Suite(
        suite_id=f"whtr.pad.{key}",
        tag="whtr.welldef",
        description="padding the thickening object with junk changes nothing",
        gen=gen,
        check=check,
    )


def _gen_triple_and_back(inst, rng, cfg):
    """A triple over (X, Y) and a morphism Y -> X."""
    if inst.instance_id == "rbord1":
        par = rng.randint(0, 1)
        x = gen_point_set(inst, rng, par + 2 * rng.randint(0, 1), prefix="x")
        y = gen_point_set(inst, rng, par + 2 * rng.randint(0, 1), prefix="y")
    else:
        x = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        y = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
    f_hat = gen_triple(inst, x, y, rng, cfg.max_dim, cfg.max_degree)
    g = gen_morphism(inst, y, x, rng)
    return x, y, f_hat, g


def suite_whtr_1(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x, y, f_hat, g = _gen_triple_and_back(inst, rng, cfg)
        return {"t": f_hat.t, "b": f_hat.b, "z": inst.identity(f_hat.z),
                "x": inst.identity(x), "y": inst.identity(y), "g": g}

    def check(inputs):
        inst = get_instance(inputs["t"].instance_id)
        f_hat = ThickTriple(dom=inputs["x"].source, cod=inputs["y"].source,
                            z=inputs["z"].source, t=inputs["t"], b=inputs["b"])
        g = inputs["g"]
        lhs = tr_hat(pre_compose(f_hat, g))
        rhs = tr_hat(post_compose(g, f_hat))
        return inst.mor_equal(lhs, rhs), "tr_hat(hat(f).g) != tr_hat(g.hat(f))"

    return Suite(
        suite_id=f"whtr.1.{key}",
        tag="whtr.1",
        description="symmetry of the thickened trace under cyclic exchange",
        gen=gen,
        check=check,
    )


def suite_main2_1(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        if inst.instance_id == "rbord1":
            par = rng.randint(0, 1)
            x = gen_point_set(inst, rng, par + 2 * rng.randint(0, 1), prefix="x")
            y = gen_point_set(inst, rng, par + 2 * rng.randint(0, 1), prefix="y")
        else:
            x = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
            y = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        f_hat = gen_triple(inst, x, y, rng, cfg.max_dim, cfg.max_degree)
        g_hat = gen_triple(inst, y, x, rng, cfg.max_dim, cfg.max_degree)
        return {"ft": f_hat.t, "fb": f_hat.b, "fz": inst.identity(f_hat.z),
                "gt": g_hat.t, "gb": g_hat.b, "gz": inst.identity(g_hat.z),
                "x": inst.identity(x), "y": inst.identity(y)}

    def check(inputs):
        inst = get_instance(inputs["ft"].instance_id)
        x, y = inputs["x"].source, inputs["y"].source
        f_hat = ThickTriple(dom=x, cod=y, z=inputs["fz"].source, t=inputs["ft"], b=inputs["fb"])
        g_hat = ThickTriple(dom=y, cod=x, z=inputs["gz"].source, t=inputs["gt"], b=inputs["gb"])
        lhs = trace_pairing(f_hat, psi(g_hat))
        rhs = trace_pairing(g_hat, psi(f_hat))
        return inst.mor_equal(lhs, rhs), "tr(f,g) != tr(g,f)"

    return Suite(
        suite_id=f"main2.1.{key}",
        tag="main2.1",
        description="symmetry of the trace pairing",
        gen=gen,
        check=check,
    )


def suite_pairing_trace(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x, y, f_hat, g = _gen_triple_and_back(inst, rng, cfg)
        return {"t": f_hat.t, "b": f_hat.b, "z": inst.identity(f_hat.z),
                "x": inst.identity(x), "y": inst.identity(y), "g": g}

    def check(inputs):
        inst = get_instance(inputs["t"].instance_id)
        f_hat = ThickTriple(dom=inputs["x"].source, cod=inputs["y"].source,
                            z=inputs["z"].source, t=inputs["t"], b=inputs["b"])
        g = inputs["g"]
        pair = trace_pairing(f_hat, g)
        composite = inst.compose(psi(f_hat), g)
        via_trace = tr_hat(canonical_thickener(composite))
        return inst.mor_equal(pair, via_trace), "tr(f,g) != tr(f.g)"

    return Suite(
        suite_id=f"pairing.trace.{key}",
        tag="main2.1",
        description="the pairing equals the categorical trace of the composite",
        gen=gen,
        check=check,
    )


def suite_whtr_2(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x, tr1 = gen_endo_pair(inst, rng, cfg.max_dim, cfg.max_degree)
        tr2 = gen_triple(inst, x, x, rng, cfg.max_dim, cfg.max_degree)
        return {"t1": tr1.t, "b1": tr1.b, "z1": inst.identity(tr1.z),
                "t2": tr2.t, "b2": tr2.b, "z2": inst.identity(tr2.z),
                "x": inst.identity(x)}

    def check(inputs):
        inst = get_instance(inputs["t1"].instance_id)
        x = inputs["x"].source
        tr1 = ThickTriple(dom=x, cod=x, z=inputs["z1"].source, t=inputs["t1"], b=inputs["b1"])
        tr2 = ThickTriple(dom=x, cod=x, z=inputs["z2"].source, t=inputs["t2"], b=inputs["b2"])
        total = add_triples(tr1, tr2)
        if not inst.mor_equal(psi(total), inst.add_mor(psi(tr1), psi(tr2))):
            return False, "psi is not additive"
        if not inst.mor_equal(tr_hat(total), inst.add_mor(tr_hat(tr1), tr_hat(tr2))):
            return False, "tr_hat is not additive"
        cancel = add_triples(tr1, negate_triple(tr1))
        if not psi(cancel).payload.is_zero():
            return False, "tr + (-tr) does not vanish under psi"
        if not tr_hat(cancel).payload.is_zero():
            return False, "tr + (-tr) does not vanish under tr_hat"
        zt = zero_triple(inst, x, x)
        with_zero = add_triples(tr1, zt)
        if not inst.mor_equal(psi(with_zero), psi(tr1)):
            return False, "zero triple changes psi"
        if not inst.mor_equal(tr_hat(with_zero), tr_hat(tr1)):
            return False, "zero triple changes tr_hat"
        return True, ""

    return Suite(
        suite_id=f"whtr.2.{key}",
        tag="whtr.2",
        description="additivity of psi and tr_hat; abelian-group structure",
        gen=gen,
        check=check,
    )


def suite_main2_2(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        y = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        tr1 = gen_triple(inst, x, y, rng, cfg.max_dim, cfg.max_degree)
        tr2 = gen_triple(inst, x, y, rng, cfg.max_dim, cfg.max_degree)
        g1 = gen_matrix_mor(inst, y, x, rng)
        g2 = gen_matrix_mor(inst, y, x, rng)
        return {"t1": tr1.t, "b1": tr1.b, "z1": inst.identity(tr1.z),
                "t2": tr2.t, "b2": tr2.b, "z2": inst.identity(tr2.z),
                "x": inst.identity(x), "y": inst.identity(y), "g1": g1, "g2": g2}

    def check(inputs):
        inst = get_instance(inputs["t1"].instance_id)
        x, y = inputs["x"].source, inputs["y"].source
        tr1 = ThickTriple(dom=x, cod=y, z=inputs["z1"].source, t=inputs["t1"], b=inputs["b1"])
        tr2 = ThickTriple(dom=x, cod=y, z=inputs["z2"].source, t=inputs["t2"], b=inputs["b2"])
        g1, g2 = inputs["g1"], inputs["g2"]
        left = trace_pairing(add_triples(tr1, tr2), g1)
        right = inst.add_mor(trace_pairing(tr1, g1), trace_pairing(tr2, g1))
        if not inst.mor_equal(left, right):
            return False, "pairing not additive in the first slot"
        left = trace_pairing(tr1, inst.add_mor(g1, g2))
        right = inst.add_mor(trace_pairing(tr1, g1), trace_pairing(tr1, g2))
        if not inst.mor_equal(left, right):
            return False, "pairing not additive in the second slot"
        return True, ""

    return Suite(
        suite_id=f"main2.2.{key}",
        tag="main2.2",
        description="bilinearity of the trace pairing",
        gen=gen,
        check=check,
    )


def suite_whtr_3(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        dim_cap = _sized(cfg, 3)
        x1 = gen_object(inst, rng, dim_cap, cfg.max_degree)
        x2 = gen_object(inst, rng, dim_cap, cfg.max_degree)
        tr1 = gen_triple(inst, x1, x1, rng, dim_cap, cfg.max_degree)
        tr2 = gen_triple(inst, x2, x2, rng, dim_cap, cfg.max_degree)
        return {"t1": tr1.t, "b1": tr1.b, "z1": inst.identity(tr1.z),
                "t2": tr2.t, "b2": tr2.b, "z2": inst.identity(tr2.z),
                "x1": inst.identity(x1), "x2": inst.identity(x2)}

    def check(inputs):
        inst = get_instance(inputs["t1"].instance_id)
        x1, x2 = inputs["x1"].source, inputs["x2"].source
        tr1 = ThickTriple(dom=x1, cod=x1, z=inputs["z1"].source, t=inputs["t1"], b=inputs["b1"])
        tr2 = ThickTriple(dom=x2, cod=x2, z=inputs["z2"].source, t=inputs["t2"], b=inputs["b2"])
        tt = tensor_triples(tr1, tr2)
        if not inst.mor_equal(psi(tt), inst.tensor(psi(tr1), psi(tr2))):
            return False, "psi is not multiplicative"
        if not inst.mor_equal(tr_hat(tt), inst.compose(tr_hat(tr1), tr_hat(tr2))):
            return False, "tr_hat is not multiplicative"
        return True, ""

    return Suite(
        suite_id=f"whtr.3.{key}",
        tag="whtr.3",
        description="multiplicativity of psi and tr_hat under the triple tensor",
        gen=gen,
        check=check,
    )


def suite_main2_3(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        dim_cap = _sized(cfg, 3)
        objs = [gen_object(inst, rng, dim_cap, cfg.max_degree) for _ in range(4)]
        x1, y1, x2, y2 = objs
        tr1 = gen_triple(inst, x1, y1, rng, dim_cap, cfg.max_degree)
        tr2 = gen_triple(inst, x2, y2, rng, dim_cap, cfg.max_degree)
        g1 = gen_matrix_mor(inst, y1, x1, rng)
        g2 = gen_matrix_mor(inst, y2, x2, rng)
        return {"t1": tr1.t, "b1": tr1.b, "z1": inst.identity(tr1.z),
                "t2": tr2.t, "b2": tr2.b, "z2": inst.identity(tr2.z),
                "x1": inst.identity(x1), "y1": inst.identity(y1),
                "x2": inst.identity(x2), "y2": inst.identity(y2),
                "g1": g1, "g2": g2}

    def check(inputs):
        inst = get_instance(inputs["t1"].instance_id)
        tr1 = ThickTriple(dom=inputs["x1"].source, cod=inputs["y1"].source,
                          z=inputs["z1"].source, t=inputs["t1"], b=inputs["b1"])
        tr2 = ThickTriple(dom=inputs["x2"].source, cod=inputs["y2"].source,
                          z=inputs["z2"].source, t=inputs["t2"], b=inputs["b2"])
        g1, g2 = inputs["g1"], inputs["g2"]
        lhs = trace_pairing(tensor_triples(tr1, tr2), inst.tensor(g1, g2))
        rhs = inst.compose(trace_pairing(tr1, g1), trace_pairing(tr2, g2))
        return inst.mor_equal(lhs, rhs), "tr(f1(x)f2, g1(x)g2) != tr(f1,g1).tr(f2,g2)"

    return Suite(
        suite_id=f"main2.3.{key}",
        tag="main2.3",
        description="multiplicativity of the trace pairing",
        gen=gen,
        check=check,
    )


def suite_lem_witness(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        if inst.instance_id == "rbord1":
            par = rng.randint(0, 1)
            u = gen_point_set(inst, rng, par + 2 * rng.randint(0, 1), prefix="u")
            x = gen_point_set(inst, rng, par + 2 * rng.randint(0, 1), prefix="x")
            y = gen_point_set(inst, rng, par + 2 * rng.randint(0, 1), prefix="y")
        else:
            u = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
            x = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
            y = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        tr1 = gen_triple(inst, x, y, rng, cfg.max_dim, cfg.max_degree, z_prefix="z")
        tr2 = gen_triple(inst, u, x, rng, cfg.max_dim, cfg.max_degree, z_prefix="w")
        return {"t1": tr1.t, "b1": tr1.b, "z1": inst.identity(tr1.z),
                "t2": tr2.t, "b2": tr2.b, "z2": inst.identity(tr2.z),
                "u": inst.identity(u), "x": inst.identity(x), "y": inst.identity(y)}

    def check(inputs):
        inst = get_instance(inputs["t1"].instance_id)
        tr1 = ThickTriple(dom=inputs["x"].source, cod=inputs["y"].source,
                          z=inputs["z1"].source, t=inputs["t1"], b=inputs["b1"])
        tr2 = ThickTriple(dom=inputs["u"].source, cod=inputs["x"].source,
                          z=inputs["z2"].source, t=inputs["t2"], b=inputs["b2"])
        w = hat_comp_witness(tr1, tr2)
        if not w.holds():
            return False, "witness equations fail"
        target = inst.compose(psi(tr1), psi(tr2))
        if not inst.mor_equal(psi(w.left), target) or not inst.mor_equal(psi(w.right), target):
            return False, "witnessed triples do not factor the composite"
        return True, ""

    return Suite(
        suite_id=f"lem.witness.{key}",
        tag="whtr.witness",
        description="hat(f1).f2 and f1.hat(f2) are one explicit slide apart",
        gen=gen,
        check=check,
    )


def suite_vect_rank() -> Suite:
    def gen(cfg, rng):
        inst = get_instance("finvect")
        x = gen_object(inst, rng, cfg.max_dim, 0)
        y = gen_object(inst, rng, cfg.max_dim, 0)
        return {"f": gen_matrix_mor(inst, x, y, rng)}

    def check(inputs):
        f = inputs["f"]
        inst = get_instance("finvect")
        t = phi_inv(f)
        if not inst.mor_equal(phi(t, f.source), f):
            return False, "phi . phi_inv is not the identity"
        # rank-one images: a basis element of Y (x) X* maps to a matrix unit
        nx, ny = len(f.source.payload), len(f.target.payload)
        if nx and ny:
            i, j = 0, nx - 1
            target = inst.tensor_obj(f.target, inst.dual_obj(f.source))
            basis = inst.mor(inst.unit_object(), target,
                             RatMatrix(ny * nx, 1, {(i * nx + j, 0): 1}))
            unit_matrix = inst.mor(f.source, f.target, RatMatrix(ny, nx, {(i, j): 1}))
            if not inst.mor_equal(phi(basis, f.source), unit_matrix):
                return False, "phi of a basis tensor is not a matrix unit"
        return True, ""

    return Suite(
        suite_id="vect.rank.finvect",
        tag="vect.1",
        description="the image of phi is every (finite-rank) linear map",
        gen=gen,
        check=check,
    )


def suite_vect_injective(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        y = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        t = gen_matrix_mor(inst, inst.unit_object(),
                           inst.tensor_obj(y, inst.dual_obj(x)), rng)
        return {"t": t, "x": inst.identity(x)}

    def check(inputs):
        t = inputs["t"]
        x = inputs["x"].source
        inst = get_instance(t.instance_id)
        image = phi(t, x)
        if t.payload.is_zero() != image.payload.is_zero():
            return False, "phi(t) = 0 does not match t = 0"
        if not t.payload.is_zero():
            zero = inst.zero_mor(t.source, t.target)
            if inst.mor_equal(t, zero):  # pragma: no cover - is_zero covers this
                return False, "inconsistent zero test"
        return True, ""

    return Suite(
        suite_id=f"vect.injective.{key}",
        tag="vect.2",
        description="phi (hence psi) is injective: phi(t) = 0 iff t = 0",
        gen=gen,
        check=check,
    )


def suite_vect_trace() -> Suite:
    def gen(cfg, rng):
        inst = get_instance("finvect")
        x = gen_object(inst, rng, min(cfg.max_dim + 1, 5), 0)
        t = gen_matrix_mor(inst, inst.unit_object(),
                           inst.tensor_obj(x, inst.dual_obj(x)), rng)
        return {"t": t, "x": inst.identity(x)}

    def check(inputs):
        inst = get_instance("finvect")
        t, x = inputs["t"], inputs["x"].source
        got = inst.scalar_value(tr_hat(alpha(t, x)))
        want = inst.classical_trace(phi(t, x))
        return got == want, f"categorical {rat_str(got)} != classical {rat_str(want)}"

    return Suite(
        suite_id="vect.trace.finvect",
        tag="vect.3",
        description="the categorical trace agrees with the diagonal sum",
        gen=gen,
        check=check,
    )


def suite_dual_bijection(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        y = gen_object(inst, rng, cfg.max_dim, cfg.max_degree)
        return {"f": gen_matrix_mor(inst, x, y, rng), "x": inst.identity(x)}

    def check(inputs):
        f = inputs["f"]
        x = inputs["x"].source
        inst = get_instance(f.instance_id)
        xd, ev, coev = inst.dual_data(x)
        idx = inst.identity(x)
        idxd = inst.identity(xd)
        zig1 = inst.compose(inst.tensor(idx, ev), inst.tensor(coev, idx))
        zig2 = inst.compose(inst.tensor(ev, idxd), inst.tensor(idxd, coev))
        if not inst.mor_equal(zig1, idx) or not inst.mor_equal(zig2, idxd):
            return False, "zigzag identities fail"
        back = psi(alpha(phi_inv(f), x))
        return inst.mor_equal(back, f), "psi . alpha . phi_inv is not the identity"

    return Suite(
        suite_id=f"dual.bijection.{key}",
        tag="dual.1",
        description="on dualizable objects psi is a bijection (witnessed section)",
        gen=gen,
        check=check,
    )


def suite_dual_trace(key: str) -> Suite:
    def gen(cfg, rng):
        inst = _inst(key, cfg)
        x = gen_object(inst, rng, min(cfg.max_dim + 1, 5), cfg.max_degree)
        return {"f": gen_matrix_mor(inst, x, x, rng)}

    def check(inputs):
        f = inputs["f"]
        inst = get_instance(f.instance_id)
        got = inst.scalar_value(tr_hat(canonical_thickener(f)))
        if inst.instance_id == "supervect":
            want = inst.super_trace(f)
            label = "super trace"
        else:
            want = inst.classical_trace(f)
            label = "classical trace"
        return got == want, f"categorical {rat_str(got)} != {label} {rat_str(want)}"

    return Suite(
        suite_id=f"dual.trace.{key}",
        tag="dual.2",
        description="trace of the canonical thickener matches the classical value",
        gen=gen,
        check=check,
    )


def suite_bal_relations() -> Suite:
    def gen(cfg, rng):
        inst = _inst("graded", cfg)
        xs = [gen_object(inst, rng, _sized(cfg, 3), cfg.max_degree) for _ in range(3)]
        return {"x": inst.identity(xs[0]), "y": inst.identity(xs[1]), "z": inst.identity(xs[2])}

    def check(inputs):
        inst = get_instance(inputs["x"].instance_id)
        x, y, z = (inputs[k].source for k in "xyz")
        idx, idy, idz = inst.identity(x), inst.identity(y), inst.identity(z)
        lhs = inst.braiding_c(x, inst.tensor_obj(y, z))
        rhs = inst.compose(inst.tensor(idy, inst.braiding_c(x, z)),
                           inst.tensor(inst.braiding_c(x, y), idz))
        if not inst.mor_equal(lhs, rhs):
            return False, "braiding relation (first) fails"
        lhs = inst.braiding_c(inst.tensor_obj(x, y), z)
        rhs = inst.compose(inst.tensor(inst.braiding_c(x, z), idy),
                           inst.tensor(idx, inst.braiding_c(y, z)))
        if not inst.mor_equal(lhs, rhs):
            return False, "braiding relation (second) fails"
        return True, ""

    return Suite(
        suite_id="balanced.relations",
        tag="bal.relations",
        description="both braiding coherence relations hold exactly",
        gen=gen,
        check=check,
    )


def suite_bal_twist() -> Suite:
    def gen(cfg, rng):
        inst = _inst("graded", cfg)
        x = gen_object(inst, rng, _sized(cfg, 3), cfg.max_degree)
        y = gen_object(inst, rng, _sized(cfg, 3), cfg.max_degree)
        return {"x": inst.identity(x), "y": inst.identity(y)}

    def check(inputs):
        inst = get_instance(inputs["x"].instance_id)
        x, y = inputs["x"].source, inputs["y"].source
        lhs = inst.twist_theta(inst.tensor_obj(x, y))
        rhs = inst.compose(
            inst.braiding_c(y, x),
            inst.compose(inst.braiding_c(x, y),
                         inst.tensor(inst.twist_theta(x), inst.twist_theta(y))),
        )
        return inst.mor_equal(lhs, rhs), "twist equation fails"

    return Suite(
        suite_id="balanced.twist",
        tag="bal.twist",
        description="theta on a tensor equals the double braiding times the twists",
        gen=gen,
        check=check,
    )


def suite_bal_crossing() -> Suite:
    def gen(cfg, rng):
        inst = _inst("graded", cfg)
        v = gen_object(inst, rng, _sized(cfg, 3), cfg.max_degree)
        w = gen_object(inst, rng, _sized(cfg, 3), cfg.max_degree)
        f = gen_matrix_mor(inst, v, inst.unit_object(), rng)
        g = gen_matrix_mor(inst, inst.unit_object(), w, rng)
        return {"f": f, "g": g, "v": inst.identity(v), "w": inst.identity(w)}

    def check(inputs):
        inst = get_instance(inputs["f"].instance_id)
        v, w = inputs["v"].source, inputs["w"].source
        f, g = inputs["f"], inputs["g"]
        idv, idw = inst.identity(v), inst.identity(w)
        over = inst.compose(inst.tensor(idw, f), inst.braiding_c(v, w))
        flat = inst.tensor(f, idw)
        under = inst.compose(inst.tensor(idw, f), inst.braiding_c_inv(w, v))
        if not (inst.mor_equal(over, flat) and inst.mor_equal(flat, under)):
            return False, "a map into the unit does not slide through crossings"
        over = inst.compose(inst.braiding_c(v, w), inst.tensor(idv, g))
        flat = inst.tensor(g, idv)
        under = inst.compose(inst.braiding_c_inv(w, v), inst.tensor(idv, g))
        if not (inst.mor_equal(over, flat) and inst.mor_equal(flat, under)):
            return False, "a map out of the unit does not slide through crossings"
        return True, ""

    return Suite(
        suite_id="balanced.crossing",
        tag="bal.crossing",
        description="unit-valued boxes slide over and under crossings",
        gen=gen,
        check=check,
    )


def _gen_graded_endo_triples(cfg, rng):
    """Endomorphism triples with guaranteed mixed-degree support: the
    thickening object carries the negated degrees of X, so t has nonzero
    degree-0 components at every degree of X and convention errors in the
    crossings cannot hide behind vanishing blocks."""
    inst = _inst("graded", cfg)
    deg_cap = max(1, min(cfg.max_degree, 2))

    def one(prefix_unused):
        degs = sorted(
            rng.choice([d for d in range(-deg_cap, deg_cap + 1) if d != 0])
            for _ in range(rng.randint(1, 2))
        )
        x = inst.obj(degs)
        z = inst.obj([-d for d in degs])
        unit = inst.unit_object()
        t = gen_matrix_mor(inst, unit, inst.tensor_obj(x, z), rng, density=100)
        b = gen_matrix_mor(inst, inst.tensor_obj(z, x), unit, rng, density=100)
        return x, ThickTriple(dom=x, cod=x, z=z, t=t, b=b)

    x1, tr1 = one("a")
    x2, tr2 = one("b")
    return inst, x1, x2, tr1, tr2


def _triple_inputs(inst, name, tr):
    return {f"{name}t": tr.t, f"{name}b": tr.b, f"{name}z": inst.identity(tr.z)}


def _triple_from_inputs(inputs, name, dom, cod):
    return ThickTriple(dom=dom, cod=cod, z=inputs[f"{name}z"].source,
                       t=inputs[f"{name}t"], b=inputs[f"{name}b"])


def _tr_hat_with(inst, tr: ThickTriple, switch):
    return inst.compose(tr.b, inst.compose(switch(tr.dom, tr.z), tr.t))


def suite_negative_control() -> Suite:
    def gen(cfg, rng):
        inst, x1, x2, tr1, tr2 = _gen_graded_endo_triples(cfg, rng)
        out = {"x1": inst.identity(x1), "x2": inst.identity(x2)}
        out.update(_triple_inputs(inst, "a", tr1))
        out.update(_triple_inputs(inst, "b", tr2))
        return out

    def check(inputs):
        """ok means the multiplicativity identity HOLDS with the plain swap
        in tr_hat; the suite passes if some trial returns ok = False."""
        inst = get_instance(inputs["at"].instance_id)
        tr1 = _triple_from_inputs(inputs, "a", inputs["x1"].source, inputs["x1"].source)
        tr2 = _triple_from_inputs(inputs, "b", inputs["x2"].source, inputs["x2"].source)
        tt = tensor_triples(tr1, tr2)
        lhs = _tr_hat_with(inst, tt, inst.plain_swap)
        rhs = inst.compose(_tr_hat_with(inst, tr1, inst.plain_swap),
                           _tr_hat_with(inst, tr2, inst.plain_swap))
        return inst.mor_equal(lhs, rhs), "plain-swap tr_hat multiplicativity violated"

    return Suite(
        suite_id="balanced.negative-control",
        tag="whtr.3",
        description="plain degree-swap in tr_hat should break multiplicativity"
                    " (no counterexample exists: the balanced switching acts as"
                    " the plain swap on all degree-0 vectors, see ledger)",
        gen=gen,
        check=check,
        expect_counterexample=True,
    )


def suite_twistless_control() -> Suite:
    def gen(cfg, rng):
        inst, x1, x2, tr1, tr2 = _gen_graded_endo_triples(cfg, rng)
        out = {"x1": inst.identity(x1), "x2": inst.identity(x2)}
        out.update(_triple_inputs(inst, "a", tr1))
        out.update(_triple_inputs(inst, "b", tr2))
        return out

    def check(inputs):
        inst = get_instance(inputs["at"].instance_id)
        tr1 = _triple_from_inputs(inputs, "a", inputs["x1"].source, inputs["x1"].source)
        tr2 = _triple_from_inputs(inputs, "b", inputs["x2"].source, inputs["x2"].source)
        tt = tensor_triples(tr1, tr2)
        lhs = _tr_hat_with(inst, tt, inst.braiding_c)
        rhs = inst.compose(_tr_hat_with(inst, tr1, inst.braiding_c),
                           _tr_hat_with(inst, tr2, inst.braiding_c))
        return inst.mor_equal(lhs, rhs), "twistless tr_hat multiplicativity violated"

    return Suite(
        suite_id="balanced.twistless-control",
        tag="whtr.3",
        description="dropping only the twist (switching := braiding) breaks"
                    " multiplicativity: the balanced hypothesis is necessary",
        gen=gen,
        check=check,
        expect_counterexample=True,
        pinned="twistless_counterexample.json",
    )


def tensor_triples_uniform_crossing(tr1: ThickTriple, tr2: ThickTriple) -> ThickTriple:
    """The wrong convention: both crossings read as the over-crossing."""
    inst = get_instance(tr1.instance_id)
    z = inst.tensor_obj(tr1.z, tr2.z)
    chi_t = inst.braiding_c(tr1.z, tr2.cod)
    t = inst.compose(
        inst.tensor(inst.tensor(inst.identity(tr1.cod), chi_t), inst.identity(tr2.z)),
        inst.tensor(tr1.t, tr2.t),
    )
    chi_b = inst.braiding_c(tr2.z, tr1.dom)
    b = inst.compose(
        inst.tensor(tr1.b, tr2.b),
        inst.tensor(inst.tensor(inst.identity(tr1.z), chi_b), inst.identity(tr2.dom)),
    )
    return ThickTriple(dom=inst.tensor_obj(tr1.dom, tr2.dom),
                       cod=inst.tensor_obj(tr1.cod, tr2.cod), z=z, t=t, b=b)


def suite_crossing_regression() -> Suite:
    def gen(cfg, rng):
        inst, x1, x2, tr1, tr2 = _gen_graded_endo_triples(cfg, rng)
        out = {"x1": inst.identity(x1), "x2": inst.identity(x2)}
        out.update(_triple_inputs(inst, "a", tr1))
        out.update(_triple_inputs(inst, "b", tr2))
        return out

    def check(inputs):
        inst = get_instance(inputs["at"].instance_id)
        tr1 = _triple_from_inputs(inputs, "a", inputs["x1"].source, inputs["x1"].source)
        tr2 = _triple_from_inputs(inputs, "b", inputs["x2"].source, inputs["x2"].source)
        wrong = tensor_triples_uniform_crossing(tr1, tr2)
        ok = inst.mor_equal(psi(wrong), inst.tensor(psi(tr1), psi(tr2)))
        return ok, "uniform-crossing tensor breaks psi multiplicativity"

    return Suite(
        suite_id="graded.crossing-regression",
        tag="whtr.3",
        description="reading both crossings the same way breaks psi"
                    " multiplicativity at mixed degrees (pinned regression)",
        gen=gen,
        check=check,
        expect_counterexample=True,
        pinned="crossing_counterexample.json",
    )


def suite_bord_thick() -> Suite:
    def gen(cfg, rng):
        inst = get_instance("rbord1")
        par = rng.randint(0, 1)
        x = gen_point_set(inst, rng, par + 2 * rng.randint(0, 1), prefix="x")
        y = gen_point_set(inst, rng, par + 2 * rng.randint(0, 1), prefix="y")
        tr = gen_triple(inst, x, y, rng, cfg.max_dim, cfg.max_degree)
        return {"t": tr.t, "b": tr.b, "z": inst.identity(tr.z),
                "x": inst.identity(x), "y": inst.identity(y)}

    def check(inputs):
        from .bordism import Bord

        inst = get_instance("rbord1")
        tr = ThickTriple(dom=inputs["x"].source, cod=inputs["y"].source,
                         z=inputs["z"].source, t=inputs["t"], b=inputs["b"])
        value = psi(tr)
        if not isinstance(value.payload, Bord):
            return False, "psi produced an isometry"
        if any(l <= 0 for (_a, _b, l) in value.payload.arcs):
            return False, "psi produced a thin arc"
        return True, ""

    return Suite(
        suite_id="bord.thick",
        tag="bord.1",
        description="psi of every constructible triple is a genuine bordism",
        gen=gen,
        check=check,
    )


def suite_bord_cuts() -> Suite:
    def gen(cfg, rng):
        inst = get_instance("rbord1")
        x = gen_point_set(inst, rng, rng.randint(1, cfg.max_dim), prefix="x")
        sigma = gen_bordism(inst, x, x, rng)
        d1 = rng.randint(2, 9)
        n1 = rng.randint(1, d1 - 1)
        r1 = rat(n1, d1)
        r2 = r1 + rat(rng.randint(1, 3), 37)
        return {"sigma": sigma, "r1": r1, "r2": r2}

    def check(inputs):
        inst = get_instance("rbord1")
        sigma, r1, r2 = inputs["sigma"], inputs["r1"], inputs["r2"]
        c1 = inst.cut_thickener(sigma, r1)
        c2 = inst.cut_thickener(sigma, r2)
        if not inst.mor_equal(tr_hat(c1), tr_hat(c2)):
            return False, "two cuts give different traces"
        if not inst.mor_equal(psi(c1), sigma) or not inst.mor_equal(psi(c2), sigma):
            return False, "re-gluing a cut does not recover the bordism"
        w = inst.cut_witness(sigma, r1, r2)
        if not w.holds():
            return False, "connecting collar is not a valid slide"
        return True, ""

    return Suite(
        suite_id="bord.cuts",
        tag="bord.2",
        description="independent cuts agree and are connected by the collar slide",
        gen=gen,
        check=check,
    )


def suite_bord_glue() -> Suite:
    def gen(cfg, rng):
        inst = get_instance("rbord1")
        x = gen_point_set(inst, rng, rng.randint(1, cfg.max_dim), prefix="x")
        sigma = gen_bordism(inst, x, x, rng)
        r = rat(rng.randint(1, 9), 10)
        return {"sigma": sigma, "r": r}

    def check(inputs):
        inst = get_instance("rbord1")
        sigma, r = inputs["sigma"], inputs["r"]
        lhs = inst.glue_trace(sigma)
        rhs = tr_hat(inst.cut_thickener(sigma, r))
        return inst.mor_equal(lhs, rhs), "glue_trace != tr_hat . cut_thickener"

    return Suite(
        suite_id="bord.glue",
        tag="bord.3",
        description="the categorical trace is the glued-up closed bordism",
        gen=gen,
        check=check,
    )


def suite_partition() -> Suite:
    def gen(cfg, rng):
        inst = get_instance("rbord1")
        d = rng.choice([2, 2, 3])
        n = rng.randint(1, 3 if d == 2 else 2)
        x = gen_point_set(inst, rng, n, prefix="x")
        y = gen_point_set(inst, rng, n, prefix="y")
        s1 = gen_bordism(inst, x, y, rng, integer=True, directed=True, max_circles=1)
        s2 = gen_bordism(inst, y, x, rng, integer=True, directed=True, max_circles=0)
        ent = {}
        for i in range(d):
            for j in range(d):
                if rng.chance(4, 5):
                    ent[(i, j)] = rng.fraction()
        vect = get_instance("finvect")
        a = vect.mor(vect.space(d), vect.space(d), RatMatrix(d, d, ent))
        return {"s1": s1, "s2": s2, "a": a}

    def check(inputs):
        inst = get_instance("rbord1")
        vect = get_instance("finvect")
        s1, s2, a = inputs["s1"], inputs["s2"], inputs["a"]
        e = field_theory(a.payload)
        sigma = inst.compose(s1, s2)
        glued = inst.glue_trace(sigma)
        lhs = rat(1)
        for c in glued.payload.circles:
            lhs *= e.circle_value(c)
        e2 = e(s2)
        e1 = e(s1)
        rhs = vect.scalar_value(trace_pairing(canonical_thickener(e2), e1))
        return lhs == rhs, f"partition value {rat_str(lhs)} != pairing {rat_str(rhs)}"

    return Suite(
        suite_id="sec2.partition",
        tag="sec2.partition",
        description="the closed evaluation equals the trace pairing of the parts",
        gen=gen,
        check=check,
    )


def _corpus_files():
    root = resources.files("traced").joinpath("data/corpus")
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".diag"))


def suite_dsl_corpus() -> Suite:
    def check(inputs):
        from .dsl import parse, pretty, run_text

        text = inputs["text"]
        prog = parse(text)
        if pretty(prog) != text:
            return False, "pretty . parse is not the identity"
        report = run_text(text)
        if not report.ok:
            return False, "an assertion inside the program failed"
        return True, ""

    def data_gen(cfg, trial):
        name = _corpus_files()[trial]
        text = resources.files("traced").joinpath(f"data/corpus/{name}").read_text()
        return {"name": name, "text": text}

    return Suite(
        suite_id="dsl.corpus",
        tag="dsl.corpus",
        description="golden corpus round-trips and all program assertions hold",
        gen=None,
        check=check,
        data_gen=data_gen,
    )


# ---------------------------------------------------------------------------
# registry and runner
# ---------------------------------------------------------------------------


def build_registry() -> dict:
    suites = []
    all_inst = ("finvect", "supervect", "graded", "rbord1")
    matrix_inst = ("finvect", "supervect", "graded")
    for key in all_inst:
        suites.append(suite_core_laws(key))
        suites.append(suite_core_naturality(key))
        suites.append(suite_whtr_welldef(key))
        suites.append(suite_whtr_1(key))
        suites.append(suite_main2_1(key))
        suites.append(suite_lem_witness(key))
    for key in ("finvect", "supervect"):
        suites.append(suite_core_symmetry(key))
        suites.append(suite_vect_injective(key))
        suites.append(suite_dual_trace(key))
    for key in matrix_inst:
        suites.append(suite_whtr_pad(key))
        suites.append(suite_pairing_trace(key))
        suites.append(suite_whtr_2(key))
        suites.append(suite_main2_2(key))
    for key in ("supervect", "graded"):
        suites.append(suite_whtr_3(key))
        suites.append(suite_main2_3(key))
    suites.append(suite_vect_rank())
    suites.append(suite_vect_trace())
    for key in matrix_inst:
        suites.append(suite_dual_bijection(key))
    suites.append(suite_bal_relations())
    suites.append(suite_bal_twist())
    suites.append(suite_bal_crossing())
    suites.append(suite_negative_control())
    suites.append(suite_twistless_control())
    suites.append(suite_crossing_regression())
    suites.append(suite_bord_thick())
    suites.append(suite_bord_cuts())
    suites.append(suite_bord_glue())
    suites.append(suite_partition())
    suites.append(suite_dsl_corpus())
    return {s.suite_id: s for s in suites}


REGISTRY = build_registry()


def _load_pinned(name: str) -> dict:
    text = resources.files("traced").joinpath(f"data/{name}").read_text()
    return json.loads(text)


def run_one(suite: Suite, cfg: SuiteConfig) -> SuiteResult:
    start = time.perf_counter()
    failures = 0
    found = 0
    counterexample = None

    if suite.suite_id == "dsl.corpus":
        files = _corpus_files()
        trials = len(files)
        for trial in range(trials):
            inputs = suite.data_gen(cfg, trial)
            ok, detail = suite.check(inputs)
            if not ok:
                failures += 1
                if counterexample is None:
                    counterexample = {"trial": trial, "detail": detail,
                                      "inputs": serde.dump_inputs(inputs)}
        passed = failures == 0
        return SuiteResult(suite.suite_id, suite.tag, trials, failures, passed,
                           False, 0, counterexample, time.perf_counter() - start)

    pinned_ok = True
    if suite.pinned is not None:
        data = _load_pinned(suite.pinned)
        inputs = serde.load_inputs(data["inputs"])
        ok, _detail = suite.check(inputs)
        pinned_ok = not ok  # the stored counterexample must still violate

    for trial in range(cfg.trials):
        rng = trial_stream(cfg.seed, suite.suite_id, trial)
        inputs = suite.gen(cfg, rng)
        ok, detail = suite.check(inputs)
        if suite.expect_counterexample:
            if not ok:
                found += 1
                if counterexample is None:
                    counterexample = {"trial": trial, "detail": detail,
                                      "inputs": serde.dump_inputs(inputs)}
        else:
            if not ok:
                failures += 1
                if counterexample is None:
                    counterexample = {"trial": trial, "detail": detail,
                                      "inputs": serde.dump_inputs(inputs)}

    if suite.expect_counterexample:
        passed = found >= 1 and pinned_ok
        failures = 0 if passed else 1
    else:
        passed = failures == 0
    return SuiteResult(suite.suite_id, suite.tag, cfg.trials, failures, passed,
                       suite.expect_counterexample, found, counterexample,
                       time.perf_counter() - start)


def select_suites(cfg: SuiteConfig) -> list:
    wanted = []
    for pattern in cfg.suites:
        if pattern == "all":
            return list(REGISTRY.values())
        if pattern in REGISTRY:
            wanted.append(REGISTRY[pattern])
            continue
        matches = [s for sid, s in REGISTRY.items() if sid.startswith(pattern)]
        if not matches:
            raise KeyError(f"no suite matches {pattern!r}")
        wanted.extend(matches)
    return wanted


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    results = [run_one(s, cfg) for s in select_suites(cfg)]
    return SuiteReport(config=cfg, results=results)


def replay_entry(suite_id: str, inputs_data: dict):
    """Re-run one stored counterexample; returns (reproduced, detail)."""
    suite = REGISTRY[suite_id]
    inputs = serde.load_inputs(inputs_data)
    ok, detail = suite.check(inputs)
    return (not ok), detail
