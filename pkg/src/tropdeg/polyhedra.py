"""Exact rational polyhedra with canonical dual descriptions.

A polyhedron in R^m is stored in both representations at once:

* H-rep: homogenized integer rows ``(c0, c1, ..., cm)`` meaning
  ``c0 + c . x >= 0`` (inequalities) or ``== 0`` (equalities).  Equalities
  are kept in RREF-canonical form; inequality normals are reduced modulo
  the equality space, scaled primitive, and sorted, so the H-rep of a
  point set is unique and drives equality/hashing.
* V-rep: vertices (representative points of the minimal faces, reduced
  modulo the lineality space), primitive rays, and an RREF-canonical
  lineality basis.

Conversion in both directions runs the double description method on the
homogenization cone, entirely in integer arithmetic.  The empty
polyhedron is a first-class value.

Polyhedra are immutable; the per-instance caches and the intern pool are
memoization only, so concurrent re-computation is benign.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (
    DimensionMismatchError,
    EmptyPolyhedronError,
    InvariantError,
)
from .linalg import (
    IntVec,
    Vec,
    frac_vec,
    gcd_list,
    int_kernel,
    is_zero_vec,
    lcm_list,
    primitive,
    rref,
    vadd,
    vdot,
    vneg,
    vscale,
    vsub,
)

HomRow = IntVec  # length m+1: (c0, c1, ..., cm)


def int_row(entries) -> HomRow:
    """Clear denominators and divide by gcd, preserving orientation."""
    if all(type(e) is int for e in entries):
        g = gcd_list(entries)
        if g > 1:
            return tuple(x // g for x in entries)
        return tuple(entries)
    fv = [Fraction(e) for e in entries]
    den = lcm_list([e.denominator for e in fv]) if fv else 1
    ints = [int(e * den) for e in fv]
    g = gcd_list(ints)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def norm_hyperplane(row: HomRow) -> HomRow:
    """Sign-normalized hyperplane key: first nonzero entry positive."""
    for e in row:
        if e != 0:
            return row if e > 0 else tuple(-x for x in row)
    return row


def eval_row(row, point) -> Fraction:
    """c0 + c . x at a point."""
    return row[0] + sum(c * x for c, x in zip(row[1:], point, strict=True))


def eval_dir(row, direction):
    """c . d for a direction vector."""
    return sum(c * x for c, x in zip(row[1:], direction, strict=True))


# ---------------------------------------------------------------------------
# double description on a homogeneous cone
# ---------------------------------------------------------------------------

def dual_description(dim: int, constraints) -> tuple[list[IntVec], list[IntVec]]:
    """Extreme rays and lineality basis of {x in R^dim : c.x >= 0 / == 0}.

    ``constraints`` is a sequence of (integer row, is_equality) pairs.  The
    incremental double description with the combinatorial adjacency test;
    all arithmetic on integers.
    """
    lin: list[IntVec] = [tuple(r) for r in linalg.identity_rows(dim)]
    rays: list[list] = []   # [vector, tight-bitmask over processed constraints]
    n_done = 0
    prior_mask = 0

    for row, is_eq in constraints:
        c = tuple(row)
        if is_zero_vec(c):
            continue
        bit = 1 << n_done
        pivot = next((l for l in lin if vdot(c, l) != 0), None)
        if pivot is not None:
            lin.remove(pivot)
            s0 = vdot(c, pivot)
            if s0 < 0:
                pivot = vneg(pivot)
                s0 = -s0
            new_lin = []
            for l in lin:
                s = vdot(c, l)
                if s != 0:
                    l = _reduce(tuple(s0 * a - s * b for a, b in zip(l, pivot)))
                new_lin.append(l)
            lin = new_lin
            new_rays = []
            for vec, mask in rays:
                s = vdot(c, vec)
                if s != 0:
                    vec = tuple(s0 * a - s * b for a, b in zip(vec, pivot))
                    if is_zero_vec(vec):
                        continue
                    vec = _reduce(vec)
                new_rays.append([vec, mask | bit])
            rays = _dedupe(new_rays)
            if not is_eq:
                rays.append([pivot, prior_mask])
        else:
            pos, zero, neg = [], [], []
            for vec, mask in rays:
                s = vdot(c, vec)
                if s > 0:
                    pos.append([vec, mask, s])
                elif s < 0:
                    neg.append([vec, mask, s])
                else:
                    zero.append([vec, mask | bit])
            combos = []
            for vp, mp, sp in pos:
                for vn, mn, sn in neg:
                    t = mp & mn
                    if not _adjacent(t, rays, vp, vn):
                        continue
                    w = tuple(sp * a - sn * b for a, b in zip(vn, vp))
                    if is_zero_vec(w):
                        continue
                    combos.append([_reduce(w), t | bit])
            keep = zero if is_eq else [[v, m] for v, m, _ in pos] + zero
            rays = _dedupe(keep + combos)
        n_done += 1
        prior_mask |= bit
    return [r[0] for r in rays], lin


def _reduce(vec: IntVec) -> IntVec:
    g = gcd_list(vec)
    return vec if g <= 1 else tuple(x // g for x in vec)


def _dedupe(rays):
    seen = set()
    out = []
    for item in rays:
        if item[0] not in seen:
            seen.add(item[0])
            out.append(item)
    return out


def _adjacent(t, rays, vp, vn) -> bool:
    for vec, mask, *_ in rays:
        if vec is vp or vec is vn:
            continue
        if t & mask == t:
            return False
    return True


# ---------------------------------------------------------------------------
# Polyhedron
# ---------------------------------------------------------------------------

class Polyhedron:
    __slots__ = ("m", "eqs", "ineqs", "vertices", "rays", "lineality",
                 "is_empty", "_cache")

    #: canonical instances by H-rep key, so face/lattice caches are shared
    _interned: dict = {}

    def __init__(self, *, m, eqs, ineqs, vertices, rays, lineality, is_empty):
        self.m = m
        self.eqs = eqs
        self.ineqs = ineqs
        self.vertices = vertices
        self.rays = rays
        self.lineality = lineality
        self.is_empty = is_empty
        self._cache: dict = {}

    def _intern(self) -> "Polyhedron":
        return Polyhedron._interned.setdefault(self.key, self)

    # -- construction -------------------------------------------------------

    @classmethod
    def empty(cls, m: int) -> "Polyhedron":
        return cls(m=m, eqs=(), ineqs=(), vertices=(), rays=(), lineality=(),
                   is_empty=True)._intern()

    @classmethod
    def from_hrep(cls, m: int, ineqs=(), eqs=()) -> "Polyhedron":
        """Polyhedron {x : c0 + c.x >= 0 for ineqs, == 0 for eqs}."""
        ineq_rows, eq_rows = [], []
        for row in ineqs:
            r = int_row(row)
            _check_len(r, m)
            if is_zero_vec(r[1:]):
                if r[0] < 0:
                    return cls.empty(m)
                continue
            ineq_rows.append(r)
        for row in eqs:
            r = int_row(row)
            _check_len(r, m)
            if is_zero_vec(r[1:]):
                if r[0] != 0:
                    return cls.empty(m)
                continue
            eq_rows.append(r)
        x0 = (1,) + (0,) * m
        constraints = [(r, True) for r in eq_rows] + [(x0, False)] + \
                      [(r, False) for r in ineq_rows]
        gen_rays, gen_lin = dual_description(m + 1, constraints)
        return cls._from_cone_output(m, gen_rays, gen_lin)

    @classmethod
    def from_generators(cls, m: int, vertices=(), rays=(), lineality=()) -> "Polyhedron":
        """Polyhedron conv(vertices) + cone(rays) + span(lineality).

        At least one vertex is required for a nonempty result.
        """
        verts = [frac_vec(v) for v in vertices]
        for v in verts:
            if len(v) != m:
                raise DimensionMismatchError(
                    f"vertex of length {len(v)} in R^{m}")
        ray_vecs = [primitive(r) for r in rays if not is_zero_vec(r)]
        lin_vecs = [primitive(l) for l in lineality if not is_zero_vec(l)]
        if not verts:
            return cls.empty(m)
        vertices_c, rays_c, lin_c = _canon_generators(verts, ray_vecs, lin_vecs)
        ineqs, eqs = cls._hrep_from_generators(m, vertices_c, rays_c, lin_c)
        # second pass makes the generator side irredundant and canonical
        x0 = (1,) + (0,) * m
        constraints = [(r, True) for r in eqs] + [(x0, False)] + \
                      [(r, False) for r in ineqs]
        gen_rays, gen_lin = dual_description(m + 1, constraints)
        poly = cls._from_cone_output(m, gen_rays, gen_lin, hrep=(ineqs, eqs))
        if poly.is_empty:
            raise InvariantError("generator input produced an empty polyhedron")
        return poly

    @classmethod
    def point(cls, coords) -> "Polyhedron":
        coords = frac_vec(coords)
        return cls.from_generators(len(coords), vertices=[coords])

    @classmethod
    def full_space(cls, m: int) -> "Polyhedron":
        zero = (Fraction(0),) * m
        basis = tuple(tuple(r) for r in linalg.identity_rows(m))
        return cls(m=m, eqs=(), ineqs=(), vertices=(zero,), rays=(),
                   lineality=basis, is_empty=False)._intern()

    @classmethod
    def _from_cone_output(cls, m, gen_rays, gen_lin, hrep=None) -> "Polyhedron":
        verts, rays = [], []
        for r in gen_rays:
            if r[0] > 0:
                verts.append(tuple(Fraction(x, r[0]) for x in r[1:]))
            elif r[0] == 0:
                rays.append(tuple(r[1:]))
            else:
                raise InvariantError("homogenization ray with negative height")
        lin = []
        for l in gen_lin:
            if l[0] != 0:
                raise InvariantError("homogenization lineality with nonzero height")
            lin.append(tuple(l[1:]))
        if not verts:
            return cls.empty(m)
        vertices_c, rays_c, lin_c = _canon_generators(verts, rays, lin)
        if hrep is None:
            ineqs, eqs = cls._hrep_from_generators(m, vertices_c, rays_c, lin_c)
        else:
            ineqs, eqs = hrep
        return cls(m=m, eqs=eqs, ineqs=ineqs, vertices=vertices_c,
                   rays=rays_c, lineality=lin_c, is_empty=False)._intern()

    @staticmethod
    def _hrep_from_generators(m, vertices, rays, lineality):
        constraints = [((0,) + tuple(l), True) for l in lineality]
        gens = [int_row((1,) + tuple(v)) for v in vertices] + \
               [(0,) + tuple(r) for r in rays]
        constraints += [(g, False) for g in gens]
        dual_rays, dual_lin = dual_description(m + 1, constraints)
        eq_rows = [row for row in dual_lin if not is_zero_vec(row[1:])]
        eqs = _canon_eqs(eq_rows)
        ineq_rows = [row for row in dual_rays if not is_zero_vec(row[1:])]
        ineqs = _canon_ineqs(ineq_rows, eqs)
        return ineqs, eqs

    # -- canonical identity --------------------------------------------------

    @property
    def key(self):
        if self.is_empty:
            return (self.m, "empty")
        return (self.m, self.eqs, self.ineqs)

    def __eq__(self, other):
        return isinstance(other, Polyhedron) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.is_empty:
            return f"Polyhedron.empty({self.m})"
        return (f"Polyhedron(m={self.m}, dim={self.dim}, "
                f"#eq={len(self.eqs)}, #ineq={len(self.ineqs)}, "
                f"#V={len(self.vertices)}, #R={len(self.rays)}, "
                f"#L={len(self.lineality)})")

    # -- basic geometry -------------------------------------------------------

    @property
    def dim(self) -> int:
        if self.is_empty:
            return -1
        return self.m - len(self.eqs)

    def contains(self, point) -> bool:
        if self.is_empty:
            return False
        p = frac_vec(point)
        return (all(eval_row(r, p) == 0 for r in self.eqs)
                and all(eval_row(r, p) >= 0 for r in self.ineqs))

    def relint_contains(self, point) -> bool:
        if self.is_empty:
            return False
        p = frac_vec(point)
        return (all(eval_row(r, p) == 0 for r in self.eqs)
                and all(eval_row(r, p) > 0 for r in self.ineqs))

    def direction_basis(self) -> tuple[IntVec, ...]:
        """Saturated lattice basis of Lin(P) (== Lin(P) spanning rows)."""
        if "dirs" not in self._cache:
            if self.is_empty:
                self._cache["dirs"] = ()
            else:
                homog = [r[1:] for r in self.eqs]
                self._cache["dirs"] = int_kernel(homog, self.m)
        return self._cache["dirs"]

    def relative_interior_point(self) -> Vec:
        if self.is_empty:
            raise EmptyPolyhedronError("relative interior of the empty set")
        if "relint" in self._cache:
            return self._cache["relint"]
        nv = len(self.vertices)
        base = tuple(sum(v[i] for v in self.vertices) / nv for i in range(self.m))
        bump = (Fraction(0),) * self.m
        for r in self.rays:
            bump = vadd(bump, r)
        for i, l in enumerate(self.lineality):
            bump = vadd(bump, l) if i % 2 == 0 else vsub(bump, l)
        coeff = Fraction(1, 2 * (len(self.rays) + len(self.lineality) + 1))
        for _ in range(128):
            p = vadd(base, vscale(coeff, bump))
            if all(eval_row(r, p) > 0 for r in self.ineqs):
                self._cache["relint"] = p
                return p
            coeff /= 2
        raise InvariantError("relative interior search did not converge")

    # -- derived polyhedra ----------------------------------------------------

    def intersect(self, other: "Polyhedron") -> "Polyhedron":
        if self.m != other.m:
            raise DimensionMismatchError(
                f"ambient dimensions differ: {self.m} vs {other.m}")
        if self.is_empty or other.is_empty:
            return Polyhedron.empty(self.m)
        return Polyhedron.from_hrep(self.m,
                                    ineqs=self.ineqs + other.ineqs,
                                    eqs=self.eqs + other.eqs)

    def recession_cone(self) -> "Polyhedron":
        if self.is_empty:
            raise EmptyPolyhedronError("recession cone of the empty set")
        if "recession" not in self._cache:
            ineqs = [(0,) + r[1:] for r in self.ineqs]
            eqs = [(0,) + r[1:] for r in self.eqs]
            self._cache["recession"] = Polyhedron.from_hrep(self.m, ineqs, eqs)
        return self._cache["recession"]

    def translate(self, v) -> "Polyhedron":
        if self.is_empty:
            return self
        v = frac_vec(v)
        if len(v) != self.m:
            raise DimensionMismatchError(
                f"translation vector of length {len(v)} in R^{self.m}")
        eqs = _canon_eqs([int_row((r[0] - eval_dir(r, v),) + r[1:]) for r in self.eqs])
        ineqs = _canon_ineqs([int_row((r[0] - eval_dir(r, v),) + r[1:])
                              for r in self.ineqs], eqs)
        verts = sorted(_reduce_mod_lin(vadd(p, v), self.lineality)
                       for p in self.vertices)
        return Polyhedron(m=self.m, eqs=eqs, ineqs=ineqs,
                          vertices=tuple(verts), rays=self.rays,
                          lineality=self.lineality, is_empty=False)._intern()

    def product(self, other: "Polyhedron") -> "Polyhedron":
        """Cartesian product, coordinates of ``other`` appended after self's."""
        if self.is_empty or other.is_empty:
            return Polyhedron.empty(self.m + other.m)
        a, b = self.m, other.m
        eqs = [(r[0],) + r[1:] + (0,) * b for r in self.eqs] + \
              [(r[0],) + (0,) * a + r[1:] for r in other.eqs]
        ineqs = [(r[0],) + r[1:] + (0,) * b for r in self.ineqs] + \
                [(r[0],) + (0,) * a + r[1:] for r in other.ineqs]
        eqs_c = _canon_eqs(eqs)
        ineqs_c = tuple(sorted(ineqs))
        verts = tuple(sorted(v1 + v2 for v1 in self.vertices
                             for v2 in other.vertices))
        rays = tuple(sorted([r + (0,) * b for r in self.rays] +
                            [(0,) * a + r for r in other.rays]))
        lin = _canon_lineality([l + (0,) * b for l in self.lineality] +
                               [(0,) * a + l for l in other.lineality])
        return Polyhedron(m=a + b, eqs=eqs_c, ineqs=ineqs_c, vertices=verts,
                          rays=rays, lineality=lin, is_empty=False)._intern()

    def linear_image(self, matrix, m_out: int) -> "Polyhedron":
        """Image under x -> matrix @ x (matrix given as m_out rows of length m)."""
        if self.is_empty:
            return Polyhedron.empty(m_out)
        apply = lambda x: tuple(vdot(row, x) for row in matrix)
        verts = [apply(v) for v in self.vertices]
        rays = [r2 for r2 in (apply(r) for r in self.rays) if not is_zero_vec(r2)]
        lin = [l2 for l2 in (apply(l) for l in self.lineality) if not is_zero_vec(l2)]
        return Polyhedron.from_generators(m_out, verts, rays, lin)

    def face(self, ineq_row: HomRow) -> "Polyhedron":
        """The face where one of this polyhedron's inequalities is tight."""
        return Polyhedron.from_hrep(self.m, ineqs=self.ineqs,
                                    eqs=self.eqs + (ineq_row,))

    def facet_faces(self) -> tuple["Polyhedron", ...]:
        """Codimension-1 faces (one per irredundant inequality)."""
        if "facets" not in self._cache:
            faces = []
            for row in self.ineqs:
                f = self.face(row)
                if f.is_empty or f.dim != self.dim - 1:
                    raise InvariantError("inequality is not facet-defining")
                faces.append(f)
            self._cache["facets"] = tuple(faces)
        return self._cache["facets"]

    def all_faces(self) -> tuple["Polyhedron", ...]:
        """All nonempty faces, including the polyhedron itself."""
        if "faces" not in self._cache:
            seen = {self.key: self}
            frontier = [self]
            while frontier:
                nxt = []
                for f in frontier:
                    for g in f.facet_faces():
                        if g.key not in seen:
                            seen[g.key] = g
                            nxt.append(g)
                frontier = nxt
            self._cache["faces"] = tuple(sorted(seen.values(), key=lambda p: p.key))
        return self._cache["faces"]

    # -- splitting ------------------------------------------------------------

    def evaluate_signs(self, row: HomRow):
        """(has_positive, has_negative) of c0 + c.x over the polyhedron."""
        has_pos = has_neg = False
        for v in self.vertices:
            s = eval_row(row, v)
            has_pos |= s > 0
            has_neg |= s < 0
        for r in self.rays:
            s = eval_dir(row, r)
            has_pos |= s > 0
            has_neg |= s < 0
        for l in self.lineality:
            if eval_dir(row, l) != 0:
                has_pos = has_neg = True
        return has_pos, has_neg

    def split(self, row: HomRow) -> list["Polyhedron"]:
        """Pieces of the same dimension on both sides of the hyperplane row."""
        has_pos, has_neg = self.evaluate_signs(row)
        if not (has_pos and has_neg):
            return [self]
        out = []
        for signed in (row, tuple(-x for x in row)):
            piece = Polyhedron.from_hrep(self.m, ineqs=self.ineqs + (signed,),
                                         eqs=self.eqs)
            if not piece.is_empty and piece.dim == self.dim:
                out.append(piece)
        return out


# ---------------------------------------------------------------------------
# canonicalization helpers
# ---------------------------------------------------------------------------

def _check_len(vec, m):
    if len(vec) != m + 1:
        raise DimensionMismatchError(
            f"vector of length {len(vec)} in ambient dimension {m + 1}")


def _canon_eqs(rows) -> tuple[HomRow, ...]:
    red, _ = rref(rows)
    return tuple(int_row(r) for r in red)


def _canon_ineqs(rows, eqs) -> tuple[HomRow, ...]:
    pivots = [_pivot_col(e) for e in eqs]
    out = set()
    for row in rows:
        fr = [Fraction(x) for x in row]
        for e, p in zip(eqs, pivots):
            if fr[p] != 0:
                f = fr[p] / e[p]
                fr = [a - f * b for a, b in zip(fr, e)]
        if all(x == 0 for x in fr[1:]):
            continue   # trivial after reduction
        out.add(int_row(fr))
    return tuple(sorted(out))


def _pivot_col(row) -> int:
    return next(i for i, x in enumerate(row) if x != 0)


def _canon_lineality(rows) -> tuple[IntVec, ...]:
    red, _ = rref(rows)
    return tuple(int_row(r) for r in red)


def _reduce_mod_lin(vec, lin_rows):
    """Zero out the lineality pivot coordinates of a vector."""
    out = list(Fraction(x) for x in vec)
    for l in lin_rows:
        p = _pivot_col(l)
        if out[p] != 0:
            f = out[p] / l[p]
            out = [a - f * b for a, b in zip(out, l)]
    return tuple(out)


def _canon_generators(vertices, rays, lineality):
    lin = _canon_lineality(lineality)
    rays_c = sorted({primitive(_reduce_mod_lin(r, lin))
                     for r in rays if not is_zero_vec(_reduce_mod_lin(r, lin))})
    verts_c = sorted({_reduce_mod_lin(v, lin) for v in vertices})
    return tuple(verts_c), tuple(rays_c), lin


# ---------------------------------------------------------------------------
# covering and refinement
# ---------------------------------------------------------------------------

def hyperplane_pool(polys) -> list[HomRow]:
    """Deduplicated constraint hyperplanes (equalities and facet rows)."""
    seen = set()
    out = []
    for p in polys:
        for row in p.eqs + p.ineqs:
            h = norm_hyperplane(row)
            if h not in seen:
                seen.add(h)
                out.append(h)
    return out


def refine_by_hyperplanes(cell: Polyhedron, rows) -> list[Polyhedron]:
    """Subdivide a cell by hyperplanes, keeping pieces of the cell's dimension."""
    cutting = []
    for row in rows:
        has_pos, has_neg = cell.evaluate_signs(row)
        if has_pos and has_neg:
            cutting.append(row)
    pieces = [cell]
    for row in cutting:
        nxt = []
        for p in pieces:
            nxt.extend(p.split(row))
        pieces = nxt
    return pieces


def face_key_set(poly: Polyhedron) -> frozenset:
    if "face_keys" not in poly._cache:
        poly._cache["face_keys"] = frozenset(f.key for f in poly.all_faces())
    return poly._cache["face_keys"]


def quickly_disjoint(a: Polyhedron, b: Polyhedron) -> bool:
    """Cheap sufficient test: some constraint of one strictly avoids the other."""
    for p, q in ((a, b), (b, a)):
        for row in p.ineqs:
            if all(eval_row(row, v) < 0 for v in q.vertices) \
                    and all(eval_dir(row, r) <= 0 for r in q.rays) \
                    and all(eval_dir(row, l) == 0 for l in q.lineality):
                return True
        for row in p.eqs:
            for sign in (1, -1):
                if all(sign * eval_row(row, v) < 0 for v in q.vertices) \
                        and all(sign * eval_dir(row, r) <= 0 for r in q.rays) \
                        and all(eval_dir(row, l) == 0 for l in q.lineality):
                    return True
    return False


def common_refinement(cells) -> list[Polyhedron]:
    """Refine same-dimension cells until every pairwise intersection is a
    common face.

    In transverse position the input already is a complex and no cell is
    touched; otherwise only cells with offending overlaps are split, by
    the constraint rows of their counterparts.  Falls back to the full
    hyperplane-arrangement refinement if the local process stalls.
    """
    out: dict = {}
    for cell in cells:
        out.setdefault(cell.key, cell)
    current = sorted(out.values(), key=lambda p: p.key)
    for _ in range(8):
        cuts: dict = {}
        for ia in range(len(current)):
            for ib in range(ia + 1, len(current)):
                a, b = current[ia], current[ib]
                if quickly_disjoint(a, b):
                    continue
                inter = a.intersect(b)
                if inter.is_empty:
                    continue
                if inter.key in face_key_set(a) and inter.key in face_key_set(b):
                    continue
                cuts.setdefault(ia, set()).update(b.eqs + b.ineqs)
                cuts.setdefault(ib, set()).update(a.eqs + a.ineqs)
        if not cuts:
            return current
        out = {}
        for idx, cell in enumerate(current):
            if idx in cuts:
                for piece in refine_by_hyperplanes(cell, sorted(cuts[idx])):
                    out.setdefault(piece.key, piece)
            else:
                out.setdefault(cell.key, cell)
        current = sorted(out.values(), key=lambda p: p.key)
    pool = hyperplane_pool(current)
    out = {}
    for cell in current:
        for piece in refine_by_hyperplanes(cell, pool):
            out.setdefault(piece.key, piece)
    return sorted(out.values(), key=lambda p: p.key)


def is_covered(target: Polyhedron, cover) -> bool:
    """Exact test for target being a subset of the union of the cover."""
    cover = list(cover)
    for p in cover:
        if p.m != target.m:
            raise DimensionMismatchError("cover member in a different ambient space")
    if target.is_empty:
        return True
    pool = []
    for row in hyperplane_pool(cover):
        has_pos, has_neg = target.evaluate_signs(row)
        if has_pos and has_neg:
            pool.append(row)
    for cell in refine_by_hyperplanes(target, pool):
        point = cell.relative_interior_point()
        if not any(p.contains(point) for p in cover):
            return False
    return True
