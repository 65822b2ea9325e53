"""The 1-dimensional Riemannian bordism category.

Objects are finite ordered sets of labelled points.  A morphism X -> Y is
either an isometry (a bijection of labels) or a bordism: a perfect matching
of the boundary (in-points of X and out-points of Y) by arcs carrying
positive rational lengths, together with a multiset of free circles.  In
dimension one the isometry class of a component is exactly its length, so
this data is the whole morphism.

Composition glues along the shared boundary, adding lengths along each
chain; chains that close up leave the boundary and become circles.  The
monoidal structure is disjoint union (labels must stay distinct), and the
switching isomorphism is the relabelling isometry X (+) Y -> Y (+) X.

The identity isometry of the empty set and the empty bordism are the same
morphism; the canonical form stores it as the empty bordism.  Zero-length
arcs never appear in user-built bordisms, but show up transiently when a
bordism is tensored with an identity isometry; a composite whose arcs all
have length zero collapses back to an isometry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Capabilities, CategoryInstance, Morphism, ObjectRef
from .errors import DomainMismatch, NotBordism, NotEndo
from ._rat import rat

IN = "in"
OUT = "out"


def _canon_arc(a, b, length):
    a = (a[0], a[1])
    b = (b[0], b[1])
    return (a, b, length) if a <= b else (b, a, length)


@dataclass(frozen=True)
class Bord:
    """arcs: perfect matching on (in-boundary + out-boundary), each with a
    length; circles: multiset of circle lengths.  Both canonically sorted."""

    arcs: tuple
    circles: tuple

    @staticmethod
    def make(arcs, circles=()):
        arcs = tuple(sorted(_canon_arc(a, b, rat(l)) for (a, b, l) in arcs))
        return Bord(arcs, tuple(sorted(rat(c) for c in circles)))


@dataclass(frozen=True)
class Iso:
    """A bijection of point labels, stored as pairs sorted by source label."""

    mapping: tuple

    @staticmethod
    def make(pairs):
        return Iso(tuple(sorted((str(a), str(b)) for (a, b) in pairs)))

    def as_dict(self):
        return dict(self.mapping)


class RBord1(CategoryInstance):
    instance_id = "rbord1"
    capabilities = Capabilities()

    # objects ---------------------------------------------------------------

    def points(self, labels) -> ObjectRef:
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise DomainMismatch(f"duplicate point labels in {labels!r}")
        return ObjectRef(self.instance_id, labels)

    def unit_object(self) -> ObjectRef:
        return self.points(())

    def tensor_obj(self, x: ObjectRef, y: ObjectRef) -> ObjectRef:
        self._own_obj(x)
        self._own_obj(y)
        merged = x.payload + y.payload
        if len(set(merged)) != len(merged):
            raise DomainMismatch(f"label collision in disjoint union: {x.payload} + {y.payload}")
        return ObjectRef(self.instance_id, merged)

    # morphism builders -------------------------------------------------------

    def _normalize(self, src: ObjectRef, tgt: ObjectRef, payload) -> Morphism:
        if isinstance(payload, Iso):
            if not src.payload and not tgt.payload:
                payload = Bord.make(())
        else:
            if (
                not payload.circles
                and payload.arcs
                and all(l == 0 for (_a, _b, l) in payload.arcs)
                and all(a[0] == IN and b[0] == OUT for (a, b, _l) in payload.arcs)
            ):
                payload = Iso.make((a[1], b[1]) for (a, b, _l) in payload.arcs)
                if not src.payload and not tgt.payload:  # pragma: no cover
                    payload = Bord.make(())
        return Morphism(self.instance_id, src, tgt, payload)

    def iso_mor(self, src: ObjectRef, tgt: ObjectRef, mapping: dict) -> Morphism:
        self._own_obj(src)
        self._own_obj(tgt)
        mapping = {str(k): str(v) for k, v in mapping.items()}
        if set(mapping) != set(src.payload) or set(mapping.values()) != set(tgt.payload):
            raise DomainMismatch("isometry must be a bijection of the point labels")
        if len(set(mapping.values())) != len(mapping):
            raise DomainMismatch("isometry mapping is not injective")
        return self._normalize(src, tgt, Iso.make(mapping.items()))

    def bord_mor(self, src: ObjectRef, tgt: ObjectRef, arcs, circles=()) -> Morphism:
        """Bordism from explicit arcs ((side,label),(side,label),length)."""
        self._own_obj(src)
        self._own_obj(tgt)
        boundary = {(IN, x) for x in src.payload} | {(OUT, y) for y in tgt.payload}
        seen = set()
        canon = []
        for (a, b, l) in arcs:
            a, b = (a[0], str(a[1])), (b[0], str(b[1]))
            l = rat(l)
            if l <= 0:
                raise DomainMismatch(f"arc length must be positive, got {l}")
            for e in (a, b):
                if e not in boundary:
                    raise DomainMismatch(f"arc endpoint {e!r} is not on the boundary")
                if e in seen:
                    raise DomainMismatch(f"endpoint {e!r} used twice")
                seen.add(e)
            canon.append((a, b, l))
        if seen != boundary:
            missing = boundary - seen
            raise DomainMismatch(f"boundary points not matched: {sorted(missing)}")
        for c in circles:
            if rat(c) <= 0:
                raise DomainMismatch("circle length must be positive")
        return self._normalize(src, tgt, Bord.make(canon, circles))

    def interval(self, x: str, y: str, length) -> Morphism:
        """The interval of the given length from point x to point y."""
        return self.bord_mor(self.points([x]), self.points([y]),
                             [((IN, x), (OUT, y), length)])

    def circles_mor(self, lengths) -> Morphism:
        unit = self.unit_object()
        return self._normalize(unit, unit, Bord.make((), lengths))

    def is_bordism(self, f: Morphism) -> bool:
        return isinstance(f.payload, Bord)

    # category structure --------------------------------------------------------

    def identity(self, x: ObjectRef) -> Morphism:
        self._own_obj(x)
        return self._normalize(x, x, Iso.make((p, p) for p in x.payload))

    def switching(self, x: ObjectRef, y: ObjectRef) -> Morphism:
        src = self.tensor_obj(x, y)
        tgt = self.tensor_obj(y, x)
        return self._normalize(src, tgt, Iso.make((p, p) for p in src.payload))

    @staticmethod
    def _arc_form(f: Morphism):
        if isinstance(f.payload, Bord):
            return list(f.payload.arcs), list(f.payload.circles)
        zero = rat(0)
        return [((IN, a), (OUT, b), zero) for (a, b) in f.payload.mapping], []

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """Glue f then g along their shared boundary, adding arc lengths;
        chains that close up become circles."""
        self.check_composable(g, f)
        if isinstance(f.payload, Iso) and isinstance(g.payload, Iso):
            fm, gm = f.payload.as_dict(), g.payload.as_dict()
            return self._normalize(f.source, g.target,
                                   Iso.make((a, gm[b]) for (a, b) in fm.items()))

        f_arcs, f_circ = self._arc_form(f)
        g_arcs, g_circ = self._arc_form(g)
        # Nodes are tagged so that f's and g's label spaces cannot collide;
        # ("fout", m) and ("gin", m) are glued for every middle point m.
        arc_at = {}

        def add_arc(tagged_a, tagged_b, length):
            arc_at[tagged_a] = (tagged_b, length)
            arc_at[tagged_b] = (tagged_a, length)

        for (a, b, l) in f_arcs:
            add_arc(("f" + a[0], a[1]), ("f" + b[0], b[1]), l)
        for (a, b, l) in g_arcs:
            add_arc(("g" + a[0], a[1]), ("g" + b[0], b[1]), l)

        def cross(node):
            tag, label = node
            if tag == "fout":
                return ("gin", label)
            if tag == "gin":
                return ("fout", label)
            return None

        outer = {("fin", x): (IN, x) for x in f.source.payload}
        outer.update({("gout", y): (OUT, y) for y in g.target.payload})

        visited = set()
        arcs, circles = [], list(f_circ) + list(g_circ)
        for start in outer:
            if start in visited:
                continue
            visited.add(start)
            total = rat(0)
            cur = start
            while True:
                nxt, l = arc_at[cur]
                total += l
                visited.add(nxt)
                if nxt in outer:
                    arcs.append((outer[start], outer[nxt], total))
                    break
                cur = cross(nxt)
                visited.add(cur)
        for node in arc_at:
            if node in visited or node in outer:
                continue
            total = rat(0)
            cur = node
            while True:
                visited.add(cur)
                nxt, l = arc_at[cur]
                total += l
                visited.add(nxt)
                cur = cross(nxt)
                if cur == node:
                    circles.append(total)
                    break
        return self._normalize(f.source, g.target, Bord.make(arcs, circles))

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        self._own_mor(f)
        self._own_mor(g)
        src = self.tensor_obj(f.source, g.source)
        tgt = self.tensor_obj(f.target, g.target)
        fa, fc = self._arc_form(f)
        ga, gc = self._arc_form(g)
        return self._normalize(src, tgt, Bord.make(fa + ga, fc + gc))

    def disjoint_copy(self, x: ObjectRef, avoid=()):
        taken = set(x.payload)
        for other in avoid:
            taken |= set(other.payload)
        x2 = self._fresh_labels(x, taken)
        to_orig = self.iso_mor(x2, x, dict(zip(x2.payload, x.payload)))
        from_orig = self.iso_mor(x, x2, dict(zip(x.payload, x2.payload)))
        return x2, to_orig, from_orig

    # cutting and gluing ---------------------------------------------------------

    def _fresh_labels(self, base: ObjectRef, avoid) -> ObjectRef:
        taken = set(avoid)
        labels = []
        for y in base.payload:
            z = y + "'"
            while z in taken:
                z += "'"
            taken.add(z)
            labels.append(z)
        return self.points(labels)

    def _collar_widths(self, sigma: Morphism, fraction):
        """Collar width at each out-point: a fraction of the incident arc,
        halved when both ends of the arc sit on the out-boundary."""
        widths = {}
        for (a, b, l) in sigma.payload.arcs:
            if a[0] == OUT and b[0] == OUT:
                widths[a[1]] = fraction * l / 2
                widths[b[1]] = fraction * l / 2
            elif b[0] == OUT:
                widths[b[1]] = fraction * l
            elif a[0] == OUT:  # pragma: no cover - canonical order puts "in" first
                widths[a[1]] = fraction * l
        return widths

    def cut_thickener(self, sigma: Morphism, cut_fraction):
        """Cut a collar of the given fractional width off the out-boundary of
        a bordism X -> Y, producing the thick triple (Z, t, b) with Z a fresh
        copy of Y, t the collar and b the remainder.  Re-gluing recovers
        sigma; for an endomorphism the trace of the triple is the glued-up
        closed bordism."""
        from .thickened import ThickTriple

        self._own_mor(sigma)
        if not isinstance(sigma.payload, Bord):
            raise NotBordism("isometries are thin; only bordisms can be cut")
        r = rat(cut_fraction)
        if not (0 < r < 1):
            raise DomainMismatch("cut fraction must lie strictly between 0 and 1")
        x_obj, y_obj = sigma.source, sigma.target
        z_obj = self._fresh_labels(y_obj, avoid=set(x_obj.payload) | set(y_obj.payload))
        z_of = dict(zip(y_obj.payload, z_obj.payload))
        widths = self._collar_widths(sigma, r)

        t_arcs = [((OUT, y), (OUT, z_of[y]), widths[y]) for y in y_obj.payload]
        b_arcs = []
        for (a, b, l) in sigma.payload.arcs:
            if a[0] == OUT and b[0] == OUT:
                b_arcs.append(((IN, z_of[a[1]]), (IN, z_of[b[1]]), l - widths[a[1]] - widths[b[1]]))
            elif b[0] == OUT:
                b_arcs.append(((IN, a[1]), (IN, z_of[b[1]]), l - widths[b[1]]))
            else:
                b_arcs.append((a, b, l))
        t = self.bord_mor(self.unit_object(), self.tensor_obj(y_obj, z_obj), t_arcs)
        b = self.bord_mor(self.tensor_obj(z_obj, x_obj), self.unit_object(),
                          b_arcs, sigma.payload.circles)
        return ThickTriple(dom=x_obj, cod=y_obj, z=z_obj, t=t, b=b)

    def cut_witness(self, sigma: Morphism, r1, r2):
        """The connecting collar between two cut positions r1 < r2 of the
        same bordism, as a slide witness between the two triples."""
        from .thickened import SlideWitness

        r1, r2 = rat(r1), rat(r2)
        if not (0 < r1 < r2 < 1):
            raise DomainMismatch("need 0 < r1 < r2 < 1")
        left = self.cut_thickener(sigma, r1)
        right = self.cut_thickener(sigma, r2)
        w1 = self._collar_widths(sigma, r1)
        w2 = self._collar_widths(sigma, r2)
        z_of = dict(zip(sigma.target.payload, left.z.payload))
        arcs = [((IN, z_of[y]), (OUT, z_of[y]), w2[y] - w1[y]) for y in sigma.target.payload]
        g = self.bord_mor(left.z, right.z, arcs)
        return SlideWitness(g=g, left=left, right=right)

    def glue_trace(self, sigma: Morphism) -> Morphism:
        """Close an endomorphism bordism by identifying its in- and
        out-copies of X; the result is a disjoint union of circles."""
        self._own_mor(sigma)
        if not isinstance(sigma.payload, Bord):
            raise NotBordism("only bordisms can be glued up")
        if sigma.source != sigma.target:
            raise NotEndo("gluing requires an endomorphism bordism")
        arc_at = {}
        for (a, b, l) in sigma.payload.arcs:
            arc_at[a] = (b, l)
            arc_at[b] = (a, l)

        def cross(node):
            side, label = node
            return (OUT if side == IN else IN, label)

        circles = list(sigma.payload.circles)
        visited = set()
        for node in arc_at:
            if node in visited:
                continue
            total = rat(0)
            cur = node
            while True:
                visited.add(cur)
                nxt, l = arc_at[cur]
                total += l
                visited.add(nxt)
                cur = cross(nxt)
                if cur == node:
                    circles.append(total)
                    break
        return self.circles_mor(circles)


def compose_rbord(g: Morphism, f: Morphism) -> Morphism:
    from .core import get_instance

    return get_instance("rbord1").compose(g, f)
