"""Thick triples and their calculus.

A triple (Z, t, b) with t: I -> Y (x) Z and b: Z (x) X -> I is a chosen
representative of a thickened morphism from X to Y.  The two computable
functionals on representatives are

    psi(Z, t, b)    = (id_Y (x) b) . (t (x) id_X) : X -> Y
    tr_hat(Z, t, b) = b . s_{X,Z} . t            : I -> I   (X = Y only)

Both are invariant under slides along g: Z -> Z', i.e. under replacing
(Z, t, b' . (g (x) id_X)) by (Z', (id_Y (x) g) . t, b').  Equivalence
classes themselves are never materialized: the engine only ever checks
equalities of psi and tr_hat, plus explicitly constructed slide witnesses.

The remaining operations mirror the calculus: pre/post composition with
ordinary morphisms, the canonical witness that hat(f1).f2 and f1.hat(f2)
are one slide apart, the trace pairing, sums of triples over a biproduct,
and the braided tensor product of triples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Morphism, ObjectRef, instance_of
from .errors import DomainMismatch, NotEndo


@dataclass(frozen=True)
class ThickTriple:
    dom: ObjectRef
    cod: ObjectRef
    z: ObjectRef
    t: Morphism
    b: Morphism

    def __post_init__(self):
        inst = instance_of(self.dom)
        unit = inst.unit_object()
        if self.t.source != unit or self.t.target != inst.tensor_obj(self.cod, self.z):
            raise DomainMismatch("t must map I into cod (x) Z")
        if self.b.source != inst.tensor_obj(self.z, self.dom) or self.b.target != unit:
            raise DomainMismatch("b must map Z (x) dom into I")

    @property
    def instance_id(self) -> str:
        return self.dom.instance_id


@dataclass(frozen=True)
class SlideWitness:
    """g: Z -> Z' together with the two triples it connects.

    Validity means exactly: right.t = (id (x) g) . left.t and
    left.b = right.b . (g (x) id)."""

    g: Morphism
    left: ThickTriple
    right: ThickTriple

    def holds(self) -> bool:
        inst = instance_of(self.g)
        lt, rt = self.left, self.right
        ok_t = inst.mor_equal(
            rt.t, inst.compose(inst.tensor(inst.identity(lt.cod), self.g), lt.t)
        )
        ok_b = inst.mor_equal(
            lt.b, inst.compose(rt.b, inst.tensor(self.g, inst.identity(lt.dom)))
        )
        return ok_t and ok_b


def psi(tr: ThickTriple) -> Morphism:
    """(id_Y (x) b) . (t (x) id_X): the morphism the triple factors.

    Label-carried instances cannot form Y (x) Z (x) X when dom and cod share
    points (endomorphism triples), so the incoming copy is relabelled
    freshly and the relabelling isometry conjugated away afterwards.
    """
    inst = instance_of(tr.dom)
    dom2, to_orig, from_orig = inst.disjoint_copy(tr.dom, avoid=(tr.cod, tr.z))
    b = tr.b if dom2 == tr.dom else inst.compose(tr.b, inst.tensor(inst.identity(tr.z), to_orig))
    top = inst.tensor(tr.t, inst.identity(dom2))
    bottom = inst.tensor(inst.identity(tr.cod), b)
    out = inst.compose(bottom, top)
    if dom2 != tr.dom:
        out = inst.compose(out, from_orig)
    return out


def tr_hat(tr: ThickTriple) -> Morphism:
    """b . s_{X,Z} . t for an endomorphism-shaped triple."""
    if tr.dom != tr.cod:
        raise NotEndo("tr_hat needs dom = cod")
    inst = instance_of(tr.dom)
    s = inst.switching(tr.dom, tr.z)
    return inst.compose(tr.b, inst.compose(s, tr.t))


def pre_compose(tr: ThickTriple, f: Morphism) -> ThickTriple:
    """Triple for hat . f: replace b by b . (id_Z (x) f)."""
    inst = instance_of(tr.dom)
    if f.target != tr.dom:
        raise DomainMismatch("pre_compose needs target(f) = dom of the triple")
    b = inst.compose(tr.b, inst.tensor(inst.identity(tr.z), f))
    return ThickTriple(dom=f.source, cod=tr.cod, z=tr.z, t=tr.t, b=b)


def post_compose(f: Morphism, tr: ThickTriple) -> ThickTriple:
    """Triple for f . hat: replace t by (f (x) id_Z) . t."""
    inst = instance_of(tr.dom)
    if f.source != tr.cod:
        raise DomainMismatch("post_compose needs source(f) = cod of the triple")
    t = inst.compose(inst.tensor(f, inst.identity(tr.z)), tr.t)
    return ThickTriple(dom=tr.dom, cod=f.target, z=tr.z, t=t, b=tr.b)


def hat_comp_witness(tr1: ThickTriple, tr2: ThickTriple) -> SlideWitness:
    """The slide connecting hat(f1).f2 with f1.hat(f2).

    For triples of f1: X -> Y and f2: U -> X the witness is
    g = (b1 (x) id_{Z2}) . (id_{Z1} (x) t2): Z1 -> Z2, an equivalence from
    pre_compose(tr1, psi(tr2)) to post_compose(psi(tr1), tr2).
    """
    if tr2.cod != tr1.dom:
        raise DomainMismatch("middle objects do not match")
    inst = instance_of(tr1.dom)
    g = inst.compose(
        inst.tensor(tr1.b, inst.identity(tr2.z)),
        inst.tensor(inst.identity(tr1.z), tr2.t),
    )
    left = pre_compose(tr1, psi(tr2))
    right = post_compose(psi(tr1), tr2)
    return SlideWitness(g=g, left=left, right=right)


def trace_pairing(f_hat: ThickTriple, g: Morphism) -> Morphism:
    """tr(f, g) = tr_hat(hat(f) . g) for f: X -> Y (thickened) and g: Y -> X.

    Which side carries the hat does not matter: hat(f).g and f.hat(g) are
    one slide apart (see hat_comp_witness), so the value is independent of
    the representative and of the side."""
    if g.source != f_hat.cod or g.target != f_hat.dom:
        raise DomainMismatch("pairing needs g: cod -> dom opposite the triple")
    return tr_hat(pre_compose(f_hat, g))


def slide_pair(t: Morphism, b_prime: Morphism, g: Morphism,
               dom: ObjectRef, cod: ObjectRef) -> SlideWitness:
    """Build a valid slide witness from free data.

    Given t: I -> cod (x) Z, b': Z' (x) dom -> I and any g: Z -> Z', the
    triples (Z, t, b'.(g (x) id)) and (Z', (id (x) g).t, b') are connected
    by g; this is the generic way to produce equivalent representatives.
    """
    inst = instance_of(g)
    z, z2 = g.source, g.target
    left_b = inst.compose(b_prime, inst.tensor(g, inst.identity(dom)))
    right_t = inst.compose(inst.tensor(inst.identity(cod), g), t)
    left = ThickTriple(dom=dom, cod=cod, z=z, t=t, b=left_b)
    right = ThickTriple(dom=dom, cod=cod, z=z2, t=right_t, b=b_prime)
    return SlideWitness(g=g, left=left, right=right)


# -- additive structure ------------------------------------------------------


def add_triples(tr1: ThickTriple, tr2: ThickTriple) -> ThickTriple:
    """Sum over the biproduct: Z = Z1 (+) Z2 with t the column (t1; t2) and
    b the row (b1, b2); psi and tr_hat are additive in the summands."""
    inst = instance_of(tr1.dom)
    inst._need("additive")
    if (tr1.dom, tr1.cod) != (tr2.dom, tr2.cod):
        raise DomainMismatch("summands must share dom and cod")
    ds = inst.direct_sum(tr1.z, tr2.z)
    idc = inst.identity(tr1.cod)
    idd = inst.identity(tr1.dom)
    t = inst.add_mor(
        inst.compose(inst.tensor(idc, ds.inj1), tr1.t),
        inst.compose(inst.tensor(idc, ds.inj2), tr2.t),
    )
    b = inst.add_mor(
        inst.compose(tr1.b, inst.tensor(ds.proj1, idd)),
        inst.compose(tr2.b, inst.tensor(ds.proj2, idd)),
    )
    return ThickTriple(dom=tr1.dom, cod=tr1.cod, z=ds.obj, t=t, b=b)


def negate_triple(tr: ThickTriple) -> ThickTriple:
    inst = instance_of(tr.dom)
    inst._need("additive")
    return ThickTriple(dom=tr.dom, cod=tr.cod, z=tr.z, t=inst.negate_mor(tr.t), b=tr.b)


def zero_triple(inst, dom: ObjectRef, cod: ObjectRef) -> ThickTriple:
    """The additive unit: the zero object with both structure maps zero."""
    inst._need("additive")
    z = inst.zero_object()
    t = inst.zero_mor(inst.unit_object(), inst.tensor_obj(cod, z))
    b = inst.zero_mor(inst.tensor_obj(z, dom), inst.unit_object())
    return ThickTriple(dom=dom, cod=cod, z=z, t=t, b=b)


def pad_thickener(tr: ThickTriple, w: ObjectRef, junk: Morphism) -> ThickTriple:
    """Enlarge the thickening object to Z (+) W, sending t through the first
    summand and extending b by an arbitrary junk map W (x) X -> I.  Both psi
    and tr_hat ignore the padding (the W component of t is zero)."""
    inst = instance_of(tr.dom)
    inst._need("additive")
    ds = inst.direct_sum(tr.z, w)
    t = inst.compose(inst.tensor(inst.identity(tr.cod), ds.inj1), tr.t)
    idd = inst.identity(tr.dom)
    b = inst.add_mor(
        inst.compose(tr.b, inst.tensor(ds.proj1, idd)),
        inst.compose(junk, inst.tensor(ds.proj2, idd)),
    )
    return ThickTriple(dom=tr.dom, cod=tr.cod, z=ds.obj, t=t, b=b)


# -- braided tensor product ---------------------------------------------------


def tensor_triples(tr1: ThickTriple, tr2: ThickTriple) -> ThickTriple:
    """Tensor product of triples over Z = Z1 (x) Z2.

    The two crossings are pinned by the multiplicativity of psi in a
    non-symmetric instance: the top one is the over-crossing braiding
    c_{Z1,Y2}: Z1 (x) Y2 -> Y2 (x) Z1, the bottom one the inverse braiding
    Z2 (x) X1 -> X1 (x) Z2; with both read the same way multiplicativity
    fails at mixed degrees.
    """
    inst = instance_of(tr1.dom)
    inst._need("braided")
    z = inst.tensor_obj(tr1.z, tr2.z)
    chi_t = inst.braiding_c(tr1.z, tr2.cod)
    t = inst.compose(
        inst.tensor(inst.tensor(inst.identity(tr1.cod), chi_t), inst.identity(tr2.z)),
        inst.tensor(tr1.t, tr2.t),
    )
    chi_b = inst.braiding_c_inv(tr1.dom, tr2.z)
    b = inst.compose(
        inst.tensor(tr1.b, tr2.b),
        inst.tensor(inst.tensor(inst.identity(tr1.z), chi_b), inst.identity(tr2.dom)),
    )
    return ThickTriple(
        dom=inst.tensor_obj(tr1.dom, tr2.dom),
        cod=inst.tensor_obj(tr1.cod, tr2.cod),
        z=z,
        t=t,
        b=b,
    )


def canonical_thickener(f: Morphism) -> ThickTriple:
    """For a morphism out of a dualizable object: (X*, (f (x) id).coev, ev)."""
    from .vect import alpha, phi_inv

    return alpha(phi_inv(f), f.source)
