"""Generalized Reed-Solomon codes over GF(q^2).

Generator matrices, the Hermitian self-orthogonality criterion, three
parametric self-orthogonal families, and the length q^2 / q^2 + 1
dual-containing realizations.  Constructors verify their own Gram matrix
before returning, so a successfully constructed object doubles as a
certificate.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dataclass_field

from .errors import (
    BadDimension,
    CongruenceViolated,
    DimensionMismatch,
    DimensionOutOfRange,
    DistanceOutOfRange,
    DuplicatePoints,
    EvenCharacteristic,
    NotSelfOrthogonal,
    SolverFailure,
    ZeroMultiplier,
)
from .gf import Field, field_for_q
from .linalg import Matrix, entrywise_frobenius, mat_vec, nullspace, rank

# the multiplier-norm solver gives up after this many kernel samples
SOLVER_RETRIES = 100


@dataclass(frozen=True)
class GrsSpec:
    """Evaluation data for a GRS code: points, column multipliers, dimension."""

    field: Field
    points: tuple[int, ...]
    multipliers: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "multipliers", tuple(self.multipliers))
        n = len(self.points)
        if len(set(self.points)) != n:
            raise DuplicatePoints("evaluation points must be pairwise distinct")
        if len(self.multipliers) != n:
            raise BadDimension(f"{n} points against {len(self.multipliers)} multipliers")
        if any(v == 0 for v in self.multipliers):
            raise ZeroMultiplier("column multipliers must be nonzero")
        if not 1 <= self.k <= n:
            raise BadDimension(f"dimension {self.k} outside 1..{n}")

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass
class LinearCode:
    """An [n, k] code presented by a full-rank generator matrix.

    known_distance is only ever set once an exact enumeration certifies it;
    until then claimed_distance_lb carries the best provable lower bound,
    with the provenance dict saying where the claim comes from.
    """

    field: Field
    generator: Matrix
    known_distance: int | None = None
    claimed_distance_lb: int | None = None
    provenance: dict = dataclass_field(default_factory=dict)

    def __post_init__(self):
        if self.generator.field is not self.field:
            raise DimensionMismatch("generator matrix lives in a different field")
        if rank(self.generator) != self.generator.rows:
            raise BadDimension("generator rows are linearly dependent")

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q2}))"


@dataclass(frozen=True)
class ConstructionParams:
    """(q, a, m, d) for the parametric families.

    Family-specific congruences between q, a and m are the constructor's
    business; only shape sanity lives here.
    """

    q: int
    a: int
    m: int
    d: int

    def __post_init__(self):
        if self.q < 3 or self.q % 2 == 0:
            raise EvenCharacteristic(f"q must be an odd prime power >= 3, got {self.q}")
        if self.a < 0 or self.m < 1:
            raise CongruenceViolated(f"bad divisor parameters a={self.a}, m={self.m}")
        if self.d < 2:
            raise DistanceOutOfRange("design distance starts at 2")


def grs_generator(spec: GrsSpec) -> LinearCode:
    """The code with rows (v_1 a_1^j, ..., v_n a_n^j) for j = 0..k-1.

    GRS codes are MDS, so n - k + 1 is recorded as a claimed distance lower
    bound; the verify module promotes it to known_distance after an
    exhaustive enumeration.
    """
    f = spec.field
    mul, pw = f.mul, f.pow
    pts, mults = spec.points, spec.multipliers
    rows = [[mul(v, pw(a, j)) for a, v in zip(pts, mults)] for j in range(spec.k)]
    return LinearCode(
        field=f,
        generator=Matrix(f, rows, cols=spec.n),
        claimed_distance_lb=spec.n - spec.k + 1,
        provenance={"construction": "grs", "distance_claim": "mds"},
    )


def power_sum(spec: GrsSpec, e: int) -> int:
    """Sum of norm(v_i) * a_i^e over the support points, with 0^0 = 1."""
    f = spec.field
    acc = 0
    for a, v in zip(spec.points, spec.multipliers):
        acc = f.add(acc, f.mul(f.norm(v), f.pow(a, e)))
    return acc


def hermitian_gram(code: LinearCode) -> Matrix:
    """The k x k matrix of pairwise Hermitian inner products of generator rows.

    All-zero exactly when the code is contained in its Hermitian dual.
    """
    f = code.field
    add, mul, frob = f.add, f.mul, f.frobenius_q
    g = code.generator.data
    conj = [[frob(x) for x in row] for row in g]
    out = []
    for gi in g:
        row = []
        for cj in conj:
            acc = 0
            for x, y in zip(gi, cj):
                if x and y:
                    acc = add(acc, mul(x, y))
            row.append(acc)
        out.append(row)
    return Matrix(f, out, cols=len(g))


def hermitian_dual(code: LinearCode) -> LinearCode:
    """Generator of {x : <x, c>_H = 0 for every codeword c}; dimension n - k."""
    ker = nullspace(entrywise_frobenius(code.generator))
    return LinearCode(field=code.field, generator=ker, provenance={"construction": "hermitian-dual"})


def euclidean_dual(code: LinearCode) -> LinearCode:
    ker = nullspace(code.generator)
    return LinearCode(field=code.field, generator=ker, provenance={"construction": "euclidean-dual"})


# -- the three parametric families ---------------------------------------------


def construct_family_A(params: ConstructionParams) -> GrsSpec:
    """Self-orthogonal GRS spec of length (q^2 - 1)/a at q = 2am + 1.

    Points run through the powers of omega^a; multipliers repeat a block of
    doubled powers.  The literal left-to-right pairing is checked against
    the Gram oracle and, should it ever fail, the block-regrouped point
    order is tried before giving up.
    """
    q, a, m, d = params.q, params.a, params.m, params.d
    if a < 1 or q != 2 * a * m + 1:
        raise CongruenceViolated(f"family A needs q = 2am + 1, got q={q}, a={a}, m={m}")
    if not 2 <= d <= (a + 1) * m + 1:
        raise DistanceOutOfRange(f"family A supports 2 <= d <= {(a + 1) * m + 1}, got d={d}")
    field = field_for_q(q)
    spec = _family_a_spec(field, a, d - 1)
    if hermitian_gram(grs_generator(spec)).is_zero():
        return spec
    # defensive fallback; no (q, a, m, d) in the tested sweep reaches it
    spec = _family_a_spec(field, a, d - 1, regrouped=True)
    if hermitian_gram(grs_generator(spec)).is_zero():
        return spec
    raise NotSelfOrthogonal("family A spec failed its own Gram certificate")


def _family_a_spec(field: Field, a: int, k: int, regrouped: bool = False) -> GrsSpec:
    # no range policing; forced paths build beyond the certified window
    q = field.q
    n = (q * q - 1) // a
    if regrouped:
        points = []
        for s in range((q + 1) // 2):
            base = 2 * s * (q - 1)
            for i in range((q - 1) // a):
                points.append(field.exp(base + a * (2 * i + 1)))
                points.append(field.exp(base + a * (2 * i + 2)))
    else:
        points = [field.exp(a * i) for i in range(1, n + 1)]
    block = []
    for e in [q - 1] + [a * s for s in range(1, (q - 1) // a)]:
        block += [field.exp(e), field.exp(e)]
    return GrsSpec(
        field=field,
        points=tuple(points),
        multipliers=tuple(block * ((q + 1) // 2)),
        k=k,
    )


def construct_family_B(params: ConstructionParams) -> GrsSpec:
    """Self-orthogonal GRS spec of length (q - 1)(m - 1) at q = 2am - 1.

    Multiplier exponents come from a GF(q)-valued kernel vector of a small
    matrix of omega powers; points are the powers of omega^(2a) whose
    exponents avoid the multiples of q + 1.
    """
    q, a, m, d = params.q, params.a, params.m, params.d
    if a < 1 or q != 2 * a * m - 1:
        raise CongruenceViolated(f"family B needs q = 2am - 1, got q={q}, a={a}, m={m}")
    if m < 2:
        raise BadDimension("family B is empty for m < 2")
    if not 2 <= d <= (a + 1) * m - 2:
        raise DistanceOutOfRange(f"family B supports 2 <= d <= {(a + 1) * m - 2}, got d={d}")
    field = field_for_q(q)
    spec = _kernel_family_spec(
        field,
        m,
        d - 1,
        # the factor a makes each row a sum over a full coset when the power
        # sums are regrouped; for a = 1 or m <= 3 it changes nothing
        row_exponent=lambda i, j: 2 * a * j * ((i - 1) * (q - 1) + m - 3),
        point_exponent=lambda j: 2 * a * j,
        multiplier_shift=-(m - 3),
    )
    if not hermitian_gram(grs_generator(spec)).is_zero():
        raise SolverFailure("family B spec failed its own Gram certificate")
    return spec


def construct_family_C(params: ConstructionParams) -> GrsSpec:
    """Self-orthogonal GRS spec of length (q - 1)(m - 1) at q = (2a + 1)m - 1.

    Same kernel-vector pipeline as family B with its own exponent pattern;
    a = 0 is allowed and gives the length q^2 - q family.
    """
    q, a, m, d = params.q, params.a, params.m, params.d
    w = 2 * a + 1
    if q != w * m - 1:
        raise CongruenceViolated(f"family C needs q = (2a + 1)m - 1, got q={q}, a={a}, m={m}")
    if m < 2:
        raise BadDimension("family C is empty for m < 2")
    if not 2 <= d <= (a + 1) * m - 1:
        raise DistanceOutOfRange(f"family C supports 2 <= d <= {(a + 1) * m - 1}, got d={d}")
    field = field_for_q(q)
    spec = _kernel_family_spec(
        field,
        m,
        d - 1,
        # same coset-regrouping factor as family B, here 2a + 1
        row_exponent=lambda i, j: w * (i * (q - 1) - 1) * j,
        point_exponent=lambda j: w * j,
        multiplier_shift=1,
    )
    if not hermitian_gram(grs_generator(spec)).is_zero():
        raise SolverFailure("family C spec failed its own Gram certificate")
    return spec


def _kernel_family_spec(field, m, k, row_exponent, point_exponent, multiplier_shift) -> GrsSpec:
    """Shared pipeline for families B and C.

    Build the (m-2) x (m-1) matrix of omega powers, take its GF(q)-valued
    kernel vector, divide the discrete logs by q + 1 to get the base
    multiplier exponents, then roll them across q - 1 blocks with the
    family's per-block shift.
    """
    q = field.q
    rows = [
        [field.exp(row_exponent(i, j)) for j in range(1, m)]
        for i in range(1, m - 1)
    ]
    kernel = _subfield_kernel(Matrix(field, rows, cols=m - 1))
    exps = []
    for c in kernel:
        if c == 0:
            raise SolverFailure("kernel vector has a zero coordinate")
        exps.append(field.log(c) // (q + 1))  # log is a multiple of q+1 for GF(q) elements
    points = tuple(
        field.exp(point_exponent(j)) for j in range(1, (q - 1) * m + 1) if j % m
    )
    mults = tuple(
        field.exp(e + multiplier_shift * s) for s in range(q - 1) for e in exps
    )
    return GrsSpec(field=field, points=points, multipliers=mults, k=k)


def _subfield_kernel(mtx: Matrix) -> list[int]:
    from .linalg import subfield_nullvector

    return subfield_nullvector(mtx)


def valid_parameter_sets(family: str, q: int) -> list[ConstructionParams]:
    """Every (a, m, d) the named family accepts at this q, ordered by (a, d).

    family is one of "grs-a", "grs-b", "grs-c".  The congruence fixes m once
    a divides the relevant half of q -+ 1, and d sweeps the certified window.
    """
    if q < 3 or q % 2 == 0:
        raise EvenCharacteristic(f"q must be an odd prime power >= 3, got {q}")
    out = []
    if family == "grs-a":
        half = (q - 1) // 2
        for a in range(1, half + 1):
            if half % a:
                continue
            m = half // a
            out.extend(
                ConstructionParams(q=q, a=a, m=m, d=d) for d in range(2, (a + 1) * m + 2)
            )
    elif family == "grs-b":
        half = (q + 1) // 2
        for a in range(1, half + 1):
            if half % a:
                continue
            m = half // a
            if m < 2:
                continue
            out.extend(
                ConstructionParams(q=q, a=a, m=m, d=d) for d in range(2, (a + 1) * m - 1)
            )
    elif family == "grs-c":
        for w in range(1, q + 2, 2):
            if (q + 1) % w:
                continue
            a, m = (w - 1) // 2, (q + 1) // w
            if m < 2:
                continue
            out.extend(
                ConstructionParams(q=q, a=a, m=m, d=d) for d in range(2, (a + 1) * m)
            )
    else:
        raise BadDimension(f"unknown family {family!r}")
    return out


# -- length q^2: every field element a point ------------------------------------


def full_field_spec(field: Field, k: int) -> GrsSpec:
    """GRS_k on all of GF(q^2) with unit multipliers; self-orthogonal for k <= q - 1."""
    return GrsSpec(
        field=field,
        points=tuple(field.elements()),
        multipliers=(1,) * field.q2,
        k=k,
    )


def construct_full_field(field: Field, k: int, check: bool = True) -> LinearCode:
    """Hermitian dual-containing [q^2, q^2 - k] code with design distance k + 1.

    The self-orthogonal side is the unit-multiplier GRS code on the whole
    field (power sums vanish because every exponent below q^2 - 1 sums to
    zero over a full field); what is returned is its Hermitian dual.
    """
    q = field.q
    if check and not 1 <= k <= q - 1:
        raise DimensionOutOfRange(f"need 1 <= k <= q - 1 = {q - 1}, got k={k}")
    primal = grs_generator(full_field_spec(field, k))
    if check and not hermitian_gram(primal).is_zero():
        raise NotSelfOrthogonal("full-field spec failed its own Gram certificate")
    dual = hermitian_dual(primal)
    dual.claimed_distance_lb = k + 1
    dual.provenance = {
        "construction": "full-field",
        "q": q,
        "k": k,
        "distance_claim": "dual-of-mds",
    }
    return dual


# -- length q^2 + 1: one extension coordinate ------------------------------------


def construct_extended(field: Field, k: int) -> LinearCode:
    """Hermitian dual-containing [q^2 + 1, q^2 + 1 - k] code, design distance k + 1."""
    primal = extended_self_orthogonal(field, k)
    dual = hermitian_dual(primal)
    dual.claimed_distance_lb = k + 1
    dual.provenance = {
        "construction": "extended",
        "q": field.q,
        "k": k,
        "distance_claim": "dual-of-mds",
    }
    return dual


def extended_self_orthogonal(field: Field, k: int) -> LinearCode:
    """Self-orthogonal [q^2 + 1, k] code: GRS rows on every field element
    plus one extension coordinate folded into the top-degree row.

    The multiplier norms u_i (GF(q)-valued) must kill every power sum
    except the top one, whose value the extension coordinate absorbs.  The
    u vector is drawn from the kernel of that GF(q)-linear system: a few
    structured kernel members come first (all ones; a root-free polynomial
    in the norm; a norm-plus-trace perturbation), then seeded random kernel
    combinations, up to SOLVER_RETRIES draws in total.
    """
    q, q2 = field.q, field.q2
    if not 1 <= k <= q:
        raise DimensionOutOfRange(f"need 1 <= k <= q = {q}, got k={k}")
    points = list(field.elements())
    system = _extension_system(field, k, points)
    kernel = nullspace(system)
    top_exponent = (q + 1) * (k - 1)
    draws = 0
    for u in _extension_candidates(field, k, points, kernel):
        draws += 1
        if draws > SOLVER_RETRIES:
            break
        if any(x == 0 for x in u):
            continue
        if any(mat_vec(system, u)):
            continue  # not actually in the kernel; never trust a candidate
        top = 0
        for alpha, x in zip(points, u):
            top = field.add(top, field.mul(x, field.pow(alpha, top_exponent)))
        if top == 0:
            continue  # the extension coordinate would need norm zero
        eta = field.norm_preimage(field.neg(top))
        mults = [field.norm_preimage(x) for x in u]
        rows = []
        for j in range(k):
            row = [field.mul(v, field.pow(alpha, j)) for alpha, v in zip(points, mults)]
            row.append(eta if j == k - 1 else 0)
            rows.append(row)
        code = LinearCode(
            field=field,
            generator=Matrix(field, rows, cols=q2 + 1),
            claimed_distance_lb=q2 + 2 - k,
            provenance={
                "construction": "extended-self-orthogonal",
                "q": q,
                "k": k,
                "distance_claim": "mds",
            },
        )
        if not hermitian_gram(code).is_zero():
            raise NotSelfOrthogonal("extension solver produced a non-certifying code")
        return code
    raise SolverFailure(
        f"no usable all-nonzero kernel vector within {SOLVER_RETRIES} draws (q={q}, k={k})"
    )


def _extension_system(field: Field, k: int, points: list[int]) -> Matrix:
    """The GF(q)-linear constraints on the multiplier norms, two rows per
    power sum: a GF(q^2) equation with GF(q) unknowns splits along the
    basis {1, omega}."""
    f = field
    q = f.q
    omega = f.omega
    denom = f.sub(omega, f.frobenius_q(omega))  # nonzero: omega is outside GF(q)
    rows = []
    for j in range(k):
        for l in range(k):
            if j == k - 1 and l == k - 1:
                continue
            e = q * j + l
            coeffs = [f.pow(alpha, e) for alpha in points]
            comp1 = [f.div(f.sub(c, f.frobenius_q(c)), denom) for c in coeffs]
            comp0 = [f.sub(c, f.mul(z1, omega)) for c, z1 in zip(coeffs, comp1)]
            rows.append(comp0)
            rows.append(comp1)
    return Matrix(f, rows, cols=len(points))


def _extension_candidates(field: Field, k: int, points: list[int], kernel: Matrix):
    """Candidate u vectors: deterministic structured picks, then random
    kernel samples.  Every yield is (or is believed to be) a kernel member;
    the caller re-checks membership regardless."""
    q = field.q
    subfield = field.subfield_elements()
    nonzero_sub = subfield[1:]
    norms = [field.norm(alpha) for alpha in points]
    structured_cap = 60
    if k == q:
        # all power sums below the top vanish over the whole field
        yield [1] * len(points)
    elif k == q - 1:
        # 1 + lam*N(alpha) + Tr(b*alpha^gamma) stays in the kernel for
        # 2 <= gamma <= q - 1; hunt for a combination with no zero entry
        count = 0
        for gamma in range(2, q):
            for lam in nonzero_sub:
                for b in range(1, field.q2):
                    u = []
                    for alpha, nrm in zip(points, norms):
                        z = field.mul(b, field.pow(alpha, gamma))
                        tr = field.add(z, field.frobenius_q(z))
                        u.append(field.add(field.add(1, field.mul(lam, nrm)), tr))
                    yield u
                    count += 1
                    if count >= structured_cap:
                        break
                else:
                    continue
                break
            else:
                continue
            break
    else:
        # a polynomial P of exact degree q - k with P(0) = 1 and no root in
        # GF(q), applied to the point norms, is a kernel member whose top
        # power sum equals minus its leading coefficient
        deg = q - k
        count = 0
        for tail in itertools.product(subfield, repeat=deg - 1):
            for lead in nonzero_sub:
                coeffs = (1,) + tail + (lead,)
                if any(_poly_eval(field, coeffs, x) == 0 for x in subfield):
                    continue
                yield [_poly_eval(field, coeffs, nrm) for nrm in norms]
                count += 1
                if count >= structured_cap:
                    break
            else:
                continue
            break
    rng = random.Random(0x5EED + field.q2 * (k + 1))
    nsub = len(subfield)
    while True:
        u = [0] * len(points)
        for row in kernel.data:
            c = subfield[rng.randrange(nsub)]
            if c:
                u = [field.add(x, field.mul(c, y)) for x, y in zip(u, row)]
        yield u


def _poly_eval(field: Field, coeffs, x: int) -> int:
    """Horner evaluation, coefficients listed from the constant term up."""
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc
