"""Chevalley-Eilenberg complex with adjoint coefficients, degrees 1..3.

All signs are trivial in characteristic 2:
    (d1 b)(x,y)   = [b(x),y] + [x,b(y)] + b([x,y])
    (d2 c)(x,y,z) = [x,c(y,z)] + [y,c(x,z)] + [z,c(x,y)]
                  + c([x,y],z) + c([x,z],y) + c([y,z],x)
Cochains are stored sparsely on i<j pairs with GF(2) mask values.
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .divpow import mono_text
from .grading import cochain_term_weight, cochain_weight
from .liealg import Algebra, AlgebraError, compute_h1_dim  # noqa: F401 (H^1 lives here too)

Pair = Tuple[int, int]


class CochainError(ValueError):
    pass


class Cochain2:
    """Alternating 2-cochain with adjoint values over GF(2)."""

    def __init__(self, algebra: Algebra, terms: Optional[Dict[Pair, int]] = None):
        self.algebra = algebra
        self.terms: Dict[Pair, int] = {}
        if terms:
            for (i, j), v in terms.items():
                if i == j:
                    raise CochainError("repeated differential d(e_%d)^d(e_%d)" % (i, i))
                if i > j:
                    i, j = j, i
                if v:
                    self.terms[(i, j)] = self.terms.get((i, j), 0) ^ v
                    if not self.terms[(i, j)]:
                        del self.terms[(i, j)]

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Cochain2) and self.algebra is other.algebra and self.terms == other.terms

    def __add__(self, other: "Cochain2") -> "Cochain2":
        assert other.algebra is self.algebra
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) ^ v
        return Cochain2(self.algebra, out)

    def pair_value(self, i: int, j: int) -> int:
        if i == j:
            return 0
        key = (i, j) if i < j else (j, i)
        return self.terms.get(key, 0)

    def evaluate(self, u: int, v: int) -> int:
        """Bilinear extension c(u, v) for mask vectors."""
        acc = 0
        for i in gf2.bits(u):
            for j in gf2.bits(v):
                acc ^= self.pair_value(i, j)
        return acc

    def weight(self, mode: str) -> Tuple[int, ...]:
        return cochain_weight(self, mode)

    def text(self) -> str:
        g = self.algebra
        names = g.meta.get("vars")
        monos = g.meta.get("mono_degrees")

        def nm(k: int) -> str:
            if names and monos:
                return mono_text(monos[k], names)
            return g.labels[k]

        parts = []
        for (i, j) in sorted(self.terms):
            for k in sorted(gf2.bits(self.terms[(i, j)])):
                parts.append("%s (x) d(%s)^d(%s)" % (nm(k), nm(i), nm(j)))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "<2-cochain %s>" % self.text()


def d1(g: Algebra, images: Sequence[int]) -> Cochain2:
    """Differential of the linear map e_i -> images[i]."""
    n = g.dim
    T = g.pair_table()
    terms: Dict[Pair, int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            acc = g.bracket(images[i], 1 << j)
            acc ^= g.bracket(1 << i, images[j])
            acc ^= gf2.apply_rows(images, T[i * n + j])
            if acc:
                terms[(i, j)] = acc
    return Cochain2(g, terms)


def d2(c: Cochain2) -> Dict[Tuple[int, int, int], int]:
    """The 3-cochain d2(c) as a sparse dict on i<j<k triples."""
    g = c.algebra
    n = g.dim
    T = g.pair_table()
    out: Dict[Tuple[int, int, int], int] = {}

    def hit(tri, w):
        if w:
            out[tri] = out.get(tri, 0) ^ w
            if not out[tri]:
                del out[tri]

    # [e_z, c(e_a, e_b)] over all (a<b) in the support and z outside
    for (a, b), v in c.terms.items():
        for z in range(n):
            if z == a or z == b:
                continue
            w = g.bracket(1 << z, v)
            hit(tuple(sorted((a, b, z))), w)
    # c([e_x, e_y], e_z) over bracket pairs and z outside
    for (x, y) in g.sc:
        wmask = T[x * n + y]
        for z in range(n):
            if z == x or z == y:
                continue
            acc = 0
            for u in gf2.bits(wmask):
                acc ^= c.pair_value(u, z)
            hit(tuple(sorted((x, y, z))), acc)
    return out


def is_cocycle(c: Cochain2) -> bool:
    return not d2(c)


# ---------------------------------------------------------------------------
# coordinates and weight blocks
# ---------------------------------------------------------------------------

def _pairs(n: int) -> List[Pair]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def c1_weight(g: Algebra, target: int, source: int, mode: str) -> Tuple[int, ...]:
    """Weight of the 1-cochain coordinate e_target ⊗ d(e_source)."""
    monos = g.meta["mono_degrees"]
    x, y = monos[target], monos[source]
    if mode == "z":
        return tuple((a - 1) - (b - 1) for a, b in zip(x, y))
    if mode == "mod2":
        return tuple((a - b) % 2 for a, b in zip(x, y))
    if mode == "outer":
        return (sum(x) - sum(y),)
    raise AlgebraError("unknown weight mode %r" % mode)


Constraint = Tuple[str, Tuple[int, ...]]


def _match2(g: Algebra, k: int, pair: Pair, constraints: Sequence[Constraint]) -> bool:
    return all(cochain_term_weight(g, k, pair, mode) == tuple(w) for mode, w in constraints)


def _match1(g: Algebra, k: int, i: int, constraints: Sequence[Constraint]) -> bool:
    return all(c1_weight(g, k, i, mode) == tuple(w) for mode, w in constraints)


class H2Basis:
    """Representatives of H^2(g;g), independent modulo coboundaries."""

    def __init__(self, algebra: Algebra, representatives: List[Cochain2],
                 dims: Tuple[int, int, int], constraints: Sequence[Constraint] = ()):
        self.algebra = algebra
        self.representatives = representatives
        self.dims = dims  # (dim Z2, dim B2, dim H2) within the block
        self.constraints = list(constraints)

    @property
    def dim(self) -> int:
        return self.dims[2]

    def weights(self, mode: str) -> List[Tuple[int, ...]]:
        return [c.weight(mode) for c in self.representatives]

    def __repr__(self):
        return "<H2 block dim %d (Z2=%d, B2=%d)>" % (self.dims[2], self.dims[0], self.dims[1])


def compute_h2(g: Algebra, weight_filter: Optional[Tuple[int, ...]] = None, mode: str = "z",
               constraints: Optional[Sequence[Constraint]] = None,
               budget: int = 20_000_000) -> H2Basis:
    """Kernel of d2 modulo image of d1, optionally inside one weight block.

    weight_filter + mode is the simple interface; `constraints` allows
    several simultaneous (mode, weight) restrictions.  The matrix budget
    guards against accidentally huge unrestricted computations.
    """
    if constraints is None:
        constraints = []
    if weight_filter is not None:
        constraints = list(constraints) + [(mode, tuple(weight_filter))]
    n = g.dim
    pairs = _pairs(n)
    if constraints and "mono_degrees" not in g.meta:
        raise AlgebraError("weight filters need an algebra with monomial degrees")
    coords: List[Tuple[Pair, int]] = []
    for pr in pairs:
        for k in range(n):
            if not constraints or _match2(g, k, pr, constraints):
                coords.append((pr, k))
    coord_index = {c: i for i, c in enumerate(coords)}
    if not constraints:
        est_c3 = n * n * (n - 1) * (n - 2) // 6
        if len(coords) * est_c3 > budget:
            raise AlgebraError(
                "d2 matrix would have ~%d entries (> budget %d); restrict to a weight block"
                % (len(coords) * est_c3, budget))

    # d2 images of unit coordinates, encoded over on-demand C3 coordinates
    c3_index: Dict[Tuple[int, int, int, int], int] = {}

    def encode3(tri_val: Dict[Tuple[int, int, int], int]) -> int:
        m = 0
        for tri, w in tri_val.items():
            for l in gf2.bits(w):
                key = tri + (l,)
                pos = c3_index.get(key)
                if pos is None:
                    pos = len(c3_index)
                    c3_index[key] = pos
                m |= 1 << pos
        return m

    images = []
    for (pr, k) in coords:
        unit = Cochain2(g, {pr: 1 << k})
        images.append(encode3(d2(unit)))
    width3 = max(1, len(c3_index))
    z2_masks = gf2.combination_kernel(images, width3)

    # coboundaries within the block
    b2_span = gf2.Span()
    for k in range(n):
        for i in range(n):
            if constraints and not _match1(g, k, i, constraints):
                continue
            imgs = [0] * n
            imgs[i] = 1 << k
            cb = d1(g, imgs)
            if not cb:
                continue
            b2_span.add(_cochain_to_coords(cb, coord_index, strict=bool(constraints)))
    dim_b2 = b2_span.dim

    # representatives: reduce cocycles through B2 plus previously chosen reps,
    # so each one is independent modulo coboundaries and coboundary-reduced
    reps: List[Cochain2] = []
    combined = b2_span.copy()
    for zm in z2_masks:
        res = combined.reduce(zm)
        if res:
            combined.add(res)
            reps.append(_coords_to_cochain(g, res, coords))
    dims = (len(z2_masks), dim_b2, len(reps))
    return H2Basis(g, reps, dims, constraints)


def _cochain_to_coords(c: Cochain2, coord_index: Dict[Tuple[Pair, int], int], strict: bool) -> int:
    m = 0
    for pr, v in c.terms.items():
        for k in gf2.bits(v):
            pos = coord_index.get((pr, k))
            if pos is None:
                if strict:
                    raise AlgebraError("cochain leaves the weight block at %r" % ((pr, k),))
                continue
            m |= 1 << pos
    return m


def _coords_to_cochain(g: Algebra, mask: int, coords: List[Tuple[Pair, int]]) -> Cochain2:
    terms: Dict[Pair, int] = {}
    for pos in gf2.bits(mask):
        pr, k = coords[pos]
        terms[pr] = terms.get(pr, 0) ^ (1 << k)
    return Cochain2(g, terms)


def coboundary_of(c: Cochain2, constraints: Sequence[Constraint] = ()) -> Optional[List[int]]:
    """Solve d1(b) = c; returns the images of b or None if c is not a coboundary."""
    g = c.algebra
    n = g.dim
    pairs = _pairs(n)
    coord_index = {(pr, k): t * n + k for t, pr in enumerate(pairs) for k in range(n)}
    width = len(pairs) * n
    span = gf2.TaggedSpan(width)
    gens: List[Tuple[int, int]] = []
    for k in range(n):
        for i in range(n):
            if constraints and not _match1(g, k, i, constraints):
                continue
            imgs = [0] * n
            imgs[i] = 1 << k
            cb = d1(g, imgs)
            mask = _cochain_to_coords(cb, coord_index, strict=False)
            span.add(mask)
            gens.append((k, i))
    target = _cochain_to_coords(c, coord_index, strict=False)
    sol = span.solve(target)
    if sol is None:
        return None
    images = [0] * n
    for pos in gf2.bits(sol):
        k, i = gens[pos]
        images[i] ^= 1 << k
    return images


def is_coboundary(c: Cochain2) -> bool:
    return coboundary_of(c) is not None


def coboundary_block(g: Algebra, constraints: Sequence[Constraint]) -> List[Cochain2]:
    """A basis of the coboundaries restricted to a weight block."""
    n = g.dim
    span = gf2.Span()
    pairs = _pairs(n)
    coord_index = {(pr, k): t * n + k for t, pr in enumerate(pairs) for k in range(n)}
    out = []
    for k in range(n):
        for i in range(n):
            if constraints and not _match1(g, k, i, constraints):
                continue
            imgs = [0] * n
            imgs[i] = 1 << k
            cb = d1(g, imgs)
            if cb and span.add(_cochain_to_coords(cb, coord_index, strict=False)):
                out.append(cb)
    return out


def block_consistent_representative(g: Algebra, printed: Cochain2,
                                    constraints: Sequence[Constraint]) -> Optional[Cochain2]:
    """A non-coboundary cocycle of the weight block whose coordinates agree
    with every term of a partially printed cochain, or None.

    Solves linearly over the block's cocycle representatives plus its
    coboundaries; the class part of the solution is forced nonzero.
    """
    blk = compute_h2(g, constraints=constraints)
    if blk.dim == 0:
        return None
    gens = blk.representatives + coboundary_block(g, list(constraints))
    coords = [(pr, k) for pr, v in printed.terms.items() for k in gf2.bits(v)]
    if not coords:
        return None
    rows = []
    for (pr, k) in coords:
        row = 0
        for t, gen in enumerate(gens):
            if (gen.terms.get(pr, 0) >> k) & 1:
                row |= 1 << t
        rows.append(row)
    x0 = gf2.solve(rows, [1] * len(rows), len(gens))
    if x0 is None:
        return None
    class_mask = (1 << blk.dim) - 1
    if not (x0 & class_mask):
        for kv in gf2.kernel(rows, len(gens)):
            if kv & class_mask:
                x0 ^= kv
                break
        else:
            return None
    out = Cochain2(g, {})
    for t in gf2.bits(x0):
        out = out + gens[t]
    assert all((out.terms.get(pr, 0) >> k) & 1 for (pr, k) in coords)
    return out


def consistent_class_masks(g: Algebra, printed: Cochain2,
                           constraints: Sequence[Constraint]) -> Tuple[H2Basis, List[int]]:
    """All cohomology classes of the block (as masks over the block basis)
    admitting a representative whose coordinates contain every printed term."""
    blk = compute_h2(g, constraints=constraints)
    gens = blk.representatives + coboundary_block(g, list(constraints))
    coords = [(pr, k) for pr, v in printed.terms.items() for k in gf2.bits(v)]
    rows = []
    for (pr, k) in coords:
        row = 0
        for t, gen in enumerate(gens):
            if (gen.terms.get(pr, 0) >> k) & 1:
                row |= 1 << t
        rows.append(row)
    x0 = gf2.solve(rows, [1] * len(rows), len(gens))
    if x0 is None:
        return blk, []
    class_mask = (1 << blk.dim) - 1
    proj = gf2.Span(kv & class_mask for kv in gf2.kernel(rows, len(gens)))
    base = x0 & class_mask
    out = {base}
    # the achievable classes form an affine subspace; enumerate it
    rows_p = proj.sorted_rows()
    for sub in range(1 << len(rows_p)):
        v = base
        for t in gf2.bits(sub):
            v ^= rows_p[t]
        out.add(v)
    return blk, sorted(out)


def h2_weight_table(g: Algebra, mode: str = "z") -> Dict[Tuple[int, ...], H2Basis]:
    """Full H^2 split into weight blocks of the given mode."""
    n = g.dim
    weights = set()
    for pr in _pairs(n):
        for k in range(n):
            weights.add(cochain_term_weight(g, k, pr, mode))
    out = {}
    for w in sorted(weights):
        blk = compute_h2(g, weight_filter=w, mode=mode)
        if blk.dim:
            out[w] = blk
    return out


# ---------------------------------------------------------------------------
# the printed-cocycle grammar: "x (x) d(y)^d(z) + ..."
# ---------------------------------------------------------------------------

def _d_arguments(text: str) -> List[str]:
    """Balanced-paren arguments of every d(...) in the text."""
    out = []
    i = 0
    while True:
        start = text.find("d(", i)
        if start < 0:
            break
        depth = 0
        j = start + 1
        while j < len(text):
            if text[j] == "(":
                depth += 1
            elif text[j] == ")":
                depth -= 1
                if depth == 0:
                    break
            j += 1
        if depth != 0:
            raise CochainError("unbalanced parentheses in %r" % text)
        out.append(text[start + 2:j])
        i = j + 1
    return out


def _parse_mono(text: str, g: Algebra) -> Tuple[int, ...]:
    names = g.meta.get("vars")
    N = g.meta.get("N")
    if names is None or N is None:
        raise CochainError("algebra carries no generating-function data")
    text = text.strip()
    exps = [0] * len(names)
    if text in ("1", ""):
        return tuple(exps)
    pos = {nm: i for i, nm in enumerate(names)}
    for factor in re.split(r"[*\s]+", text):
        if not factor:
            continue
        m = re.match(r"^(?P<v>[A-Za-z][A-Za-z0-9]*)(\^\((?P<e>-?\d+)\))?$", factor)
        if not m:
            raise CochainError("cannot parse monomial factor %r in %r" % (factor, text))
        v = m.group("v")
        if v not in pos:
            raise CochainError("unknown generating function %r in %r" % (v, text))
        e = int(m.group("e") or 1)
        i = pos[v]
        if e < 0 or e >= (1 << N[i]):
            raise CochainError("exponent out of range: %s^(%d) with N=%d" % (v, e, N[i]))
        exps[i] += e
        if exps[i] >= (1 << N[i]):
            raise CochainError("exponent out of range after combining factors in %r" % text)
    return tuple(exps)


def parse_cocycle(text: str, g: Algebra) -> Cochain2:
    """Parse the "value (x) d(y)^d(z) + ..." grammar into a 2-cochain."""
    monos = g.meta.get("mono_degrees")
    if monos is None:
        raise CochainError("algebra carries no monomial basis")
    index = {m: i for i, m in enumerate(monos)}
    terms: Dict[Pair, int] = {}
    text = text.strip()
    if not text:
        return Cochain2(g, {})
    for raw in text.split("+"):
        raw = raw.strip()
        if not raw:
            continue
        if "(x)" not in raw:
            raise CochainError("term %r lacks the (x) separator" % raw)
        val_txt, dif_txt = raw.split("(x)", 1)
        args = _d_arguments(dif_txt)
        if len(args) != 2:
            raise CochainError("expected exactly 2 differentials in %r (found %d)" % (raw, len(args)))
        val = _parse_mono(val_txt, g)
        y1 = _parse_mono(args[0], g)
        y2 = _parse_mono(args[1], g)
        if y1 == y2:
            raise CochainError("repeated differential in %r" % raw)
        for mono, what in ((val, "value"), (y1, "argument"), (y2, "argument")):
            if mono not in index:
                raise CochainError("%s %r is not a basis function of %s" % (what, mono, g.name))
        i, j = sorted((index[y1], index[y2]))
        terms[(i, j)] = terms.get((i, j), 0) ^ (1 << index[val])
        if not terms[(i, j)]:
            del terms[(i, j)]
    return Cochain2(g, terms)
