"""Named property checks over seeded random instances.

Each check derives its own generator from the suite seed and its name,
so checks can run in any order (or in parallel) without changing
results. A failing check carries a witness with enough data to re-run
the offending instance through the corresponding single operation.

The mutation hooks deliberately corrupt one computation so the harness
itself can be tested: a corrupted run must fail with a witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import rationals, serialization
from .algebra import Algebra
from .errors import (InputError, NonCentralRatio, NotCentralRow,
                     SideUnrepresentable, SkewAffineError)
from .linalg import (LEFT, RIGHT, Matrix, member, pivot_complement,
                     qspan_matrix, row_echelon, standard_basis_vector,
                     subspace_dim, vector, zero_vector)
from .maps import (MatrixMul, check_line_preservation, decompose, eval_map,
                   extract_alpha, factor_matrix_central, identify_morphism,
                   image_affine, Morphism)
from .randomgen import (derive_seed, rand_matrix, rand_purely_left_line_in,
                        rand_purely_sided_subspace, rand_scalar,
                        rand_semilinear_form, rand_subspace,
                        rand_two_sided_plane, rand_two_sided_subspace,
                        rand_vector)
from .subspaces import (AffineSubspace, Sidedness, VectorSubspace,
                        bimodule_normalize, classify_sidedness,
                        connect_planes, extend_to_flag,
                        line_intersection_characterization)


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 1
    trials: int = 50
    height: int = 8
    dim: int = 3
    algebra: Algebra = field(default_factory=Algebra.quaternions)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # pass | fail
    trials: int
    witness: Optional[dict] = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _result(name, ok, trials, witness=None, note=""):
    return CheckResult(name, "pass" if ok else "fail", trials,
                       witness if not ok else None, note)


def _sub_json(space) -> dict:
    return serialization.subspace_to_json(space)


# -- checks ----------------------------------------------------------------


def check_echelon_dimension(config: SuiteConfig, mutations=frozenset()):
    """Echelon rank equals ambient minus complement size, and matches the
    rank of the rational coordinate span."""
    name = "echelon_dimension"
    rng = random.Random(derive_seed(config.seed, name))
    algebra = config.algebra
    block = algebra.block_dim
    corrupt = "corrupt_echelon" in mutations
    for _ in range(config.trials):
        n = rng.randint(1, max(1, config.dim))
        m = rand_matrix(rng, algebra, rng.randint(1, n + 2), n,
                        config.height)
        side = rng.choice((LEFT, RIGHT))
        dim = subspace_dim(m, side)
        if corrupt:
            dim = dim + 1 if dim < n else dim - 1
        complement = pivot_complement(m, side)
        qrank = rationals.rank(qspan_matrix(m, side), block * n)
        if dim != n - len(complement.indices) or block * dim != qrank:
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "side": side,
                       "matrix": serialization.matrix_to_json(m),
                       "claimed_dim": dim,
                       "complement_size": len(complement.indices),
                       "rational_rank": str(qrank)}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def check_dimension_comparison(config: SuiteConfig, mutations=frozenset()):
    """A right subspace inside a left one has no larger dimension,
    strictly smaller when the inclusion is proper (and mirrored)."""
    name = "dimension_comparison"
    rng = random.Random(derive_seed(config.seed, name))
    algebra = config.algebra
    n_total = max(1, config.dim)
    for _ in range(config.trials):
        n = rng.randint(1, n_total)
        outer_side = rng.choice((LEFT, RIGHT))
        inner_side = RIGHT if outer_side == LEFT else LEFT
        u = rand_two_sided_subspace(rng, algebra, n, config.height)
        if u.dim == 0:
            w = VectorSubspace.zero(algebra, n, inner_side)
        else:
            w_rows = []
            for _ in range(rng.randint(1, u.dim)):
                acc = zero_vector(algebra, n)
                for r in u.rows:
                    c = rand_scalar(rng, algebra, 3)
                    acc = acc + (r.right_mul(c) if inner_side == RIGHT
                                 else r.left_mul(c))
                w_rows.append(acc)
            w = VectorSubspace.from_vectors(algebra, w_rows, inner_side, n)
        extra = [rand_vector(rng, algebra, n, config.height)
                 for _ in range(rng.randint(0, 2))]
        v = VectorSubspace.from_vectors(
            algebra, list(u.rows) + extra, outer_side, n)
        contained = all(v.contains(r) for r in w.rows)
        same_set = rationals.rref(w.qrows(), algebra.block_dim * n)[0] == \
            rationals.rref(v.qrows(), algebra.block_dim * n)[0]
        ok = contained and w.dim <= v.dim and (same_set or w.dim < v.dim)
        if not ok:
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "inner": _sub_json(w), "outer": _sub_json(v),
                       "inner_dim": w.dim, "outer_dim": v.dim,
                       "proper": not same_set}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def check_central_ratio_lines(config: SuiteConfig, mutations=frozenset()):
    """span{(x, y)} is two-sided exactly when x^-1 y is central."""
    name = "central_ratio_lines"
    rng = random.Random(derive_seed(config.seed, name))
    algebra = config.algebra
    for _ in range(config.trials):
        x = rand_scalar(rng, algebra, config.height, nonzero=True)
        y = rand_scalar(rng, algebra, config.height)
        span = VectorSubspace.from_vectors(
            algebra, [vector(algebra, [x, y])], LEFT, 2)
        expected = (x.inverse() * y).is_central()
        got = classify_sidedness(span) is Sidedness.TWO_SIDED
        if got != expected:
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "x": serialization.scalar_to_json(x),
                       "y": serialization.scalar_to_json(y),
                       "classified_two_sided": got,
                       "central_ratio": expected}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def check_single_right_line(config: SuiteConfig, mutations=frozenset()):
    """A purely left affine 2-plane holds at most one right line through
    any of its points."""
    name = "single_right_line"
    algebra = config.algebra
    if algebra.commutative:
        return _result(name, True, 0, note="skipped: commutative algebra")
    rng = random.Random(derive_seed(config.seed, name))
    n = max(3, config.dim)
    from .randomgen import rand_purely_sided_subspace
    for _ in range(config.trials):
        sub = rand_purely_sided_subspace(rng, algebra, n, config.height,
                                         dim=2, side=LEFT)
        point = rand_vector(rng, algebra, n, config.height)
        plane = AffineSubspace(point, sub)
        from .subspaces import right_lines_in
        found = right_lines_in(plane, plane.point)
        ok = found.enumerable and len(found.lines) <= 1
        if ok:
            for line in found.lines:
                d = line.rows[0]
                ok = ok and all(sub.contains(d.right_mul(c))
                                for c in algebra.basis())
        if not ok:
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "plane": _sub_json(plane),
                       "line_count": len(found.lines),
                       "enumerable": found.enumerable}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def check_intersection_trichotomy(config: SuiteConfig, mutations=frozenset(),
                                  lines_per_subspace: int = 20):
    """Two-sided subspaces meet every line in nothing, a point or the
    line; purely one-sided subspaces admit a violating witness line."""
    name = "intersection_trichotomy"
    rng = random.Random(derive_seed(config.seed, name))
    algebra = config.algebra
    n = max(2, config.dim)
    for _ in range(config.trials):
        dim = rng.randint(0, n)
        sub = rand_two_sided_subspace(rng, algebra, n, config.height,
                                      dim=dim)
        space = AffineSubspace(rand_vector(rng, algebra, n, config.height),
                               sub)
        report = line_intersection_characterization(
            space, trials=lines_per_subspace, seed=rng.randrange(1 << 30))
        if not report.ok:
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "subspace": _sub_json(space),
                       "line": _sub_json(report.witness)}
            return _result(name, False, config.trials, witness)
    if not algebra.commutative:
        for _ in range(config.trials):
            sub = rand_purely_sided_subspace(
                rng, algebra, n, config.height,
                dim=rng.randint(1, max(1, n - 1)))
            space = AffineSubspace(
                rand_vector(rng, algebra, n, config.height), sub)
            report = line_intersection_characterization(
                space, trials=1, seed=rng.randrange(1 << 30))
            if not (report.ok and report.witness is not None):
                witness = {"algebra": serialization.algebra_to_json(algebra),
                           "subspace": _sub_json(space),
                           "note": "no violating line found"}
                return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def check_two_sided_standard_form(config: SuiteConfig, mutations=frozenset(),
                                  samples: int = 20):
    """Standardizing maps commute with both scalar actions and land the
    subspace on the leading coordinate block."""
    name = "two_sided_standard_form"
    rng = random.Random(derive_seed(config.seed, name))
    algebra = config.algebra
    n = max(2, config.dim)
    for _ in range(config.trials):
        sub = rand_two_sided_subspace(rng, algebra, n, config.height)
        cmap = bimodule_normalize(sub)
        ok = True
        for _ in range(samples):
            v = rand_vector(rng, algebra, n, 4)
            c = rand_scalar(rng, algebra, 4)
            if cmap.apply(v.left_mul(c)) != cmap.apply(v).left_mul(c) or \
                    cmap.apply(v.right_mul(c)) != cmap.apply(v).right_mul(c):
                ok = False
                break
        if ok and sub.dim:
            image = VectorSubspace.from_vectors(
                algebra, [cmap.apply(r) for r in sub.rows], sub.side, n)
            ok = set(image.pivots) == set(range(sub.dim))
        if not ok:
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "subspace": _sub_json(sub)}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def check_plane_chain(config: SuiteConfig, mutations=frozenset()):
    """Chains of two-sided planes join any two planes with consecutive
    intersections of dimension exactly one."""
    name = "plane_chain"
    rng = random.Random(derive_seed(config.seed, name))
    algebra = config.algebra
    dims = [d for d in (3, 4) if d <= max(3, config.dim)] or [3]
    for _ in range(config.trials):
        n = rng.choice(dims)
        p = rand_two_sided_plane(rng, algebra, n, config.height)
        q = rand_two_sided_plane(rng, algebra, n, config.height)
        chain = connect_planes(p, q)
        if not (chain.validate() and chain.planes[0].set_equal(p)
                and chain.planes[-1].set_equal(q)):
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "first": _sub_json(p), "second": _sub_json(q),
                       "chain_length": len(chain.planes)}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def check_dimension_preservation(config: SuiteConfig, mutations=frozenset()):
    """Images of affine subspaces under built forms keep their dimension
    in every dimension, via flags."""
    name = "dimension_preservation"
    rng = random.Random(derive_seed(config.seed, name))
    algebra = config.algebra
    n = max(2, config.dim)
    from .randomgen import rand_affine
    for _ in range(config.trials):
        form = rand_semilinear_form(rng, algebra, n, 4)
        f = form.build()
        a = rand_affine(rng, algebra, n, 4, dim=rng.randint(0, n))
        flag = extend_to_flag(a)
        dims = [image_affine(f, member_).dim for member_ in flag.members]
        if dims != list(range(n + 1)):
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "form": serialization.form_to_json(form),
                       "subspace": _sub_json(a),
                       "image_dims": dims}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def check_decomposition_round_trip(config: SuiteConfig,
                                   mutations=frozenset(),
                                   opaque: bool = True):
    """decompose(build(form)) equals the canonical form, from structured
    evaluation and from bare point evaluations."""
    name = "decomposition_round_trip"
    rng = random.Random(derive_seed(config.seed, name))
    algebra = config.algebra
    n = max(2, config.dim)
    for idx in range(config.trials):
        mode = ("same_side" if algebra.commutative
                else ("same_side" if idx % 2 == 0 else "side_swap"))
        form = rand_semilinear_form(rng, algebra, n, 4, mode=mode)
        f = form.build()
        expected = form.normalize()
        try:
            got = decompose(f, mode=mode, seed=rng.randrange(1 << 30))
            ok = got == expected
            if ok and opaque:
                got2 = decompose(lambda v: eval_map(f, v), mode=mode,
                                 n=n, algebra=algebra,
                                 seed=rng.randrange(1 << 30))
                ok = got2 == expected
        except SkewAffineError as err:
            ok = False
        if not ok:
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "form": serialization.form_to_json(form)}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def check_anti_automorphism_tables(config: SuiteConfig,
                                   mutations=frozenset(),
                                   pairs: int = 50):
    """Scaling-map extraction on plane collineations: tables agree across
    base vectors, reverse products, and are realized by a conjugating
    element."""
    name = "anti_automorphism_tables"
    algebra = config.algebra
    if algebra.commutative:
        return _result(name, True, 0, note="skipped: commutative algebra")
    rng = random.Random(derive_seed(config.seed, name))
    for _ in range(config.trials):
        form = rand_semilinear_form(rng, algebra, 2, 4, mode="side_swap")
        f = form.build()
        zero = zero_vector(algebra, 2)
        base = eval_map(f, zero)

        def h(v, _f=f, _b=base):
            return eval_map(_f, v) - _b

        try:
            table = extract_alpha(h, algebra, seed=rng.randrange(1 << 30),
                                  pairs=pairs)
            morphism = identify_morphism(
                table.images, Morphism.ANTI_AUTOMORPHISM, algebra)
            ok = all(morphism(c) == img
                     for c, img in zip(algebra.basis(), table.images))
            ok = ok and all(morphism(c) == img for c, img in table.probes)
        except SkewAffineError:
            ok = False
        if not ok:
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "form": serialization.form_to_json(form)}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


def component_shear(algebra: Algebra, n: int):
    """Rational-linear bijection swapping the i and j coordinates of the
    first entry: takes rational lines to lines but is not semilinear."""
    def shear(v):
        e = v[0]
        swapped = algebra.scalar(e.t, e.y, e.x, e.z)
        return vector(algebra, [swapped] + list(v.entries[1:]))
    return shear


def check_negative_controls(config: SuiteConfig, mutations=frozenset(),
                            matrices: int = 20):
    """Maps violating the hypothesis are rejected with re-checkable
    witnesses: the coordinate shear breaks some line, and matrices
    without a central factorization break some right line."""
    name = "negative_controls"
    algebra = config.algebra
    if algebra.commutative:
        return _result(name, True, 0, note="skipped: commutative algebra")
    rng = random.Random(derive_seed(config.seed, name))
    n = max(2, config.dim)

    shear = component_shear(algebra, n)
    report = check_line_preservation(shear, trials=max(config.trials, 40),
                                     seed=rng.randrange(1 << 30),
                                     n=n, algebra=algebra)
    if report.ok or report.witness is None:
        return _result(name, False, config.trials,
                       {"note": "shear was not rejected"})
    recheck = check_line_preservation(
        shear, trials=0, seed=0, n=n, algebra=algebra,
        probe_lines=[report.witness.line])
    if recheck.ok:
        return _result(name, False, config.trials,
                       {"note": "shear witness did not re-fail"})

    rejected = 0
    attempts = 0
    while rejected < matrices and attempts < matrices * 40:
        attempts += 1
        m = rand_matrix(rng, algebra, n, n, config.height)
        if subspace_dim(m, LEFT) != n:
            continue
        try:
            factor_matrix_central(m)
            continue  # factorable matrices are not negative controls
        except (NotCentralRow, NonCentralRatio):
            pass
        except InputError:
            continue
        f = MatrixMul(m)
        witness_line = None
        probes = []
        for idx in range(n):
            probes.append(standard_basis_vector(algebra, n, idx))
        for idx in range(n):
            for jdx in range(idx + 1, n):
                probes.append(standard_basis_vector(algebra, n, idx)
                              + standard_basis_vector(algebra, n, jdx))
        for d in probes:
            line = AffineSubspace(
                zero_vector(algebra, n),
                VectorSubspace.from_vectors(algebra, [d], RIGHT, n))
            try:
                img = image_affine(f, line)
                if classify_sidedness(img) is Sidedness.PURELY_LEFT:
                    witness_line = line
                    break
            except SideUnrepresentable:
                witness_line = line
                break
        if witness_line is None:
            return _result(name, False, config.trials,
                           {"matrix": serialization.matrix_to_json(m),
                            "note": "no violated right line found"})
        rejected += 1
    if rejected < matrices:
        return _result(name, False, config.trials,
                       {"note": f"only {rejected} matrices rejected"})
    return _result(name, True, config.trials,
                   note=f"shear and {rejected} matrices rejected")


def check_commutative_oracle(config: SuiteConfig, mutations=frozenset()):
    """In commutative mode, echelon, dimension and membership agree with
    classical Gaussian elimination over the rationals."""
    name = "commutative_oracle"
    rng = random.Random(derive_seed(config.seed, name))
    algebra = Algebra.rationals()
    corrupt = "corrupt_echelon" in mutations
    for _ in range(config.trials):
        n = rng.randint(1, max(2, config.dim))
        m = rand_matrix(rng, algebra, rng.randint(1, n + 2), n,
                        config.height)
        side = rng.choice((LEFT, RIGHT))
        ech = row_echelon(m, side)
        rows = [[e.t for e in r] for r in m.rows]
        red, piv = rationals.rref(rows, n)
        got_rows = [[e.t for e in r] for r in ech.rows]
        if corrupt and got_rows:
            got_rows[0] = [c + 1 for c in got_rows[0]]
        v = rand_vector(rng, algebra, n, config.height)
        ok = (list(ech.pivots) == piv and got_rows == red
              and member(v, m, side) == rationals.in_span(
                  [e.t for e in v], red, piv))
        if not ok:
            witness = {"algebra": serialization.algebra_to_json(algebra),
                       "matrix": serialization.matrix_to_json(m),
                       "side": side,
                       "vector": serialization.vector_to_json(v)}
            return _result(name, False, config.trials, witness)
    return _result(name, True, config.trials)


LEMMA_CHECKS: dict[str, Callable] = {
    "echelon_dimension": check_echelon_dimension,
    "dimension_comparison": check_dimension_comparison,
    "central_ratio_lines": check_central_ratio_lines,
    "single_right_line": check_single_right_line,
    "intersection_trichotomy": check_intersection_trichotomy,
    "two_sided_standard_form": check_two_sided_standard_form,
    "plane_chain": check_plane_chain,
}

THEOREM_CHECKS: dict[str, Callable] = {
    "dimension_preservation": check_dimension_preservation,
    "decomposition_round_trip": check_decomposition_round_trip,
    "anti_automorphism_tables": check_anti_automorphism_tables,
}

EXTRA_CHECKS: dict[str, Callable] = {
    "negative_controls": check_negative_controls,
    "commutative_oracle": check_commutative_oracle,
}

SUITES = {
    "lemmas": LEMMA_CHECKS,
    "theorem": THEOREM_CHECKS,
    "all": {**LEMMA_CHECKS, **THEOREM_CHECKS, **EXTRA_CHECKS},
}


def run_suite(name: str, config: SuiteConfig,
              mutations: frozenset = frozenset()) -> list[CheckResult]:
    try:
        checks = SUITES[name]
    except KeyError as err:
        raise InputError(f"unknown suite {name!r}; "
                         f"choose from {sorted(SUITES)}") from err
    return [fn(config, mutations) for fn in checks.values()]
