"""Matrix-product codes: block generators, the duality identity, Hermitian
containment, the two-code pairing with the [[1,1],[1,p-1]] mixer, and the
distance ladder built on top of it."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BadDimension,
    DistanceOutOfRange,
    EvenCharacteristic,
    HypothesisViolated,
    LengthMismatch,
    MixedFields,
    NotDualContaining,
    ParityMismatch,
    RankDeficientMixer,
)
from .gf import Field, field_for_q
from .grs import (
    ConstructionParams,
    LinearCode,
    _family_a_spec,
    construct_extended,
    construct_family_A,
    construct_full_field,
    euclidean_dual,
    grs_generator,
    hermitian_dual,
)
from .linalg import (
    Matrix,
    entrywise_frobenius,
    inverse,
    rank,
    row_equivalent,
    row_space_contains,
    transpose,
)


@dataclass(frozen=True)
class MpcSpec:
    """Ingredient codes plus the s x l mixer that interleaves them."""

    codes: tuple[LinearCode, ...]
    mixer: Matrix

    def __post_init__(self):
        object.__setattr__(self, "codes", tuple(self.codes))
        if not self.codes:
            raise BadDimension("need at least one ingredient code")
        f = self.codes[0].field
        if any(c.field is not f for c in self.codes) or self.mixer.field is not f:
            raise MixedFields("ingredients and mixer must share one field")
        length = self.codes[0].n
        if any(c.n != length for c in self.codes):
            raise LengthMismatch("ingredient codes must share one length")
        s, l = self.mixer.rows, self.mixer.cols
        if len(self.codes) != s:
            raise BadDimension(f"{len(self.codes)} codes against {s} mixer rows")
        if s > l or rank(self.mixer) != s:
            raise RankDeficientMixer("mixer must have full row rank")

    @property
    def field(self) -> Field:
        return self.codes[0].field


def matrix_product(spec: MpcSpec) -> LinearCode:
    """The [ml, k_1 + ... + k_s] code with block-row generator (a_ij G_i).

    The recorded distance bound is min_i {d_i * delta_i}, where delta_i is
    the exact minimum distance of the code spanned by the first i mixer
    rows and d_i is whatever distance floor ingredient i carries (1 when it
    claims nothing).
    """
    f = spec.field
    mix = spec.mixer
    m = spec.codes[0].n
    rows = []
    for arow, code in zip(mix.data, spec.codes):
        for grow in code.generator.data:
            out: list[int] = []
            for aij in arow:
                if aij == 0:
                    out.extend([0] * m)
                elif aij == 1:
                    out.extend(grow)
                else:
                    out.extend(f.mul(aij, x) for x in grow)
            rows.append(out)
    gen = Matrix(f, rows, cols=mix.cols * m)
    deltas = mixer_prefix_distances(mix)
    floors = [_distance_floor(c) for c in spec.codes]
    bound = min(fl * de for fl, de in zip(floors, deltas))
    return LinearCode(
        field=f,
        generator=gen,
        claimed_distance_lb=bound,
        provenance={"construction": "matrix-product"},
    )


def mixer_prefix_distances(mixer: Matrix) -> list[int]:
    """delta_i for i = 1..s: exact minimum distance of the length-l code
    spanned by the first i mixer rows, found by exhausting all q^(2i) - 1
    combinations."""
    f = mixer.field
    out = []
    for i in range(1, mixer.rows + 1):
        rows = mixer.data[:i]
        best = mixer.cols
        for msg in itertools.product(f.elements(), repeat=i):
            if not any(msg):
                continue
            w = 0
            for c in range(mixer.cols):
                acc = 0
                for x, row in zip(msg, rows):
                    if x and row[c]:
                        acc = f.add(acc, f.mul(x, row[c]))
                if acc:
                    w += 1
            if w < best:
                best = w
        out.append(best)
    return out


def _distance_floor(code: LinearCode) -> int:
    if code.known_distance is not None:
        return code.known_distance
    if code.claimed_distance_lb is not None:
        return code.claimed_distance_lb
    return 1


def mpc_dual(spec: MpcSpec) -> LinearCode:
    """Euclidean dual of the product: the ingredient duals mixed through the
    inverse transpose of the mixer."""
    if spec.mixer.rows != spec.mixer.cols:
        raise RankDeficientMixer("the dual identity needs a square nonsingular mixer")
    duals = tuple(euclidean_dual(c) for c in spec.codes)
    out = matrix_product(MpcSpec(codes=duals, mixer=transpose(inverse(spec.mixer))))
    out.provenance = {"construction": "matrix-product-dual"}
    return out


def hermitian_containment_check(spec: MpcSpec) -> bool:
    """Whether the Hermitian dual of the product lies inside the product of
    the same ingredients through the conjugated inverse-transpose mixer.

    Guaranteed to hold when every ingredient contains its own Hermitian
    dual; outside that hypothesis the outcome is reported, not asserted.
    """
    if spec.mixer.rows != spec.mixer.cols:
        raise RankDeficientMixer("the containment identity needs a square mixer")
    prod = matrix_product(spec)
    dual = hermitian_dual(prod)
    # conjugation is a field automorphism, so the conjugated mixer is again
    # nonsingular and the inverse below cannot fail
    target_mixer = transpose(inverse(entrywise_frobenius(spec.mixer)))
    target = matrix_product(MpcSpec(codes=spec.codes, mixer=target_mixer))
    return row_space_contains(target.generator, dual.generator)


# -- the two-code pairing --------------------------------------------------------


def pair_mixer(field: Field) -> Matrix:
    """[[1, 1], [1, p-1]] over GF(q^2); needs odd characteristic."""
    if field.p == 2:
        raise EvenCharacteristic("the pairing mixer needs odd characteristic")
    return Matrix(field, [[1, 1], [1, field.element(field.p - 1)]])


def pair_construction(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """[2n, k1 + k2] product of two dual-containing codes, itself certified
    dual-containing, with distance bound min{2 d1, d2}.

    The mixer's conjugated inverse transpose is checked against its
    closed form and shown to span the same code, which is what makes the
    dual-containment argument go through.
    """
    f = c1.field
    mixer = pair_mixer(f)
    for c in (c1, c2):
        if not row_space_contains(c.generator, hermitian_dual(c).generator):
            raise HypothesisViolated("ingredient is not Hermitian dual-containing")
    out = matrix_product(MpcSpec(codes=(c1, c2), mixer=mixer))
    half = (f.p + 1) // 2
    expected = Matrix(
        f,
        [[f.element(half), f.element(half)], [f.element(half), f.element(half - 1)]],
    )
    conj_mixer = transpose(inverse(entrywise_frobenius(mixer)))
    assert conj_mixer == expected
    rephrased = matrix_product(MpcSpec(codes=(c1, c2), mixer=conj_mixer))
    assert row_equivalent(out.generator, rephrased.generator)
    if not row_space_contains(out.generator, hermitian_dual(out).generator):
        raise NotDualContaining("pair output failed its dual-containment certificate")
    out.provenance = {"construction": "pair"}
    return out


# -- the distance ladder ----------------------------------------------------------

# variant -> (ingredient kind, required d parity)
_LADDER = {
    1: ("extended", 0),
    2: ("extended", 1),
    3: ("full-field", 0),
    4: ("full-field", 1),
    5: ("family-a", 0),
    6: ("family-a", 1),
}

_LADDER_LENGTH = {"extended": 1, "full-field": 0, "family-a": -1}


def mp6_ladder(q: int, d: int, variant: int, force: bool = False) -> LinearCode:
    """Dual-containing [2n', ...] code pairing a design-distance ceil(d/2)
    ingredient with a design-distance d one of the same length n'.

    Variants 1/2 draw ingredients of length q^2 + 1, 3/4 of length q^2,
    5/6 of length q^2 - 1; odd-numbered variants take even d and vice
    versa.  Out-of-range d raises unless force is set, in which case the
    object is still assembled and its failed certificates are recorded in
    the provenance instead of being enforced.
    """
    if variant not in _LADDER:
        raise BadDimension(f"variant must be 1..6, got {variant}")
    if q < 3 or q % 2 == 0:
        raise EvenCharacteristic(f"q must be an odd prime power >= 3, got {q}")
    kind, parity = _LADDER[variant]
    if d % 2 != parity:
        raise ParityMismatch(f"variant {variant} needs {'even' if parity == 0 else 'odd'} d, got {d}")
    if d < 2:
        raise DistanceOutOfRange("design distance starts at 2")
    dmax = q + 1 if kind == "extended" else q
    in_range = d <= dmax
    if not in_range and not force:
        raise DistanceOutOfRange(
            f"variant {variant} certifies 2 <= d <= {dmax}; d={d} requires force and loses the certificate"
        )
    field = field_for_q(q)
    d1 = (d + 1) // 2
    c1 = _ladder_ingredient(field, kind, d1, force=not in_range)
    c2 = _ladder_ingredient(field, kind, d, force=not in_range)
    if in_range:
        out = pair_construction(c1, c2)
        forced_checks = None
    else:
        out = matrix_product(MpcSpec(codes=(c1, c2), mixer=pair_mixer(field)))
        forced_checks = {
            "ingredient_dual_containing": [
                row_space_contains(c.generator, hermitian_dual(c).generator) for c in (c1, c2)
            ],
            "output_dual_containing": row_space_contains(
                out.generator, hermitian_dual(out).generator
            ),
        }
    out.provenance = {
        "construction": "paired-ladder",
        "variant": variant,
        "q": q,
        "d": d,
        "certified": in_range,
    }
    if forced_checks is not None:
        out.provenance["forced_checks"] = forced_checks
    n_form = 2 * (q * q + _LADDER_LENGTH[kind])
    k_form = n_form + 2 - d - d1
    assert (out.n, out.k) == (n_form, k_form)
    if out.claimed_distance_lb is not None:
        assert out.claimed_distance_lb >= d
    return out


def _ladder_ingredient(field: Field, kind: str, dprime: int, force: bool = False) -> LinearCode:
    """Dual-containing code of the kind's length with design distance dprime.

    dprime = 1 is the full space; otherwise the dual of the corresponding
    self-orthogonal construction.  With force, range and Gram gates are
    bypassed and the caller owns the consequences.
    """
    q = field.q
    if dprime == 1:
        length = q * q + _LADDER_LENGTH[kind]
        return LinearCode(
            field=field,
            generator=Matrix.identity(field, length),
            known_distance=1,
            provenance={"construction": "full-space"},
        )
    k = dprime - 1
    if kind == "extended":
        # the multiplier solver has no forced mode; its range is a hard precondition
        return construct_extended(field, k)
    if kind == "full-field":
        return construct_full_field(field, k, check=not force)
    m = (q - 1) // 2
    if force:
        spec = _family_a_spec(field, 1, k)
    else:
        spec = construct_family_A(ConstructionParams(q=q, a=1, m=m, d=dprime))
    dual = hermitian_dual(grs_generator(spec))
    # dual of an MDS code is MDS, so the design distance holds with or
    # without the self-orthogonality certificate
    dual.claimed_distance_lb = dprime
    dual.provenance = {"construction": "family-a-dual", "q": q, "d": dprime, "certified": not force}
    return dual
