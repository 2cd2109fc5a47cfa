"""Brute-force second routes and seeded generators for every closed form.

Each verifier recomputes a quantity along a structurally different path
(cross-product jump sums instead of telescoped ones, term-by-term field
summation instead of closed forms) and reports exact mismatches.  All
arithmetic is exact, so any failure is a defect, never a tolerance issue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bounds import ed_p_value, ed_upper_bound, gerbe_ed_p, gerbe_ed_upper, gerbe_index
from .core import (
    ParabolicBundle,
    Weights,
    bundle_on,
    flag_dim,
    hom_datum,
    jumps,
    root_line_datum,
)
from .cyclotomic import (
    cyclo_field,
    geometric_sum,
    inertia_term,
    inertia_total,
    inverse_sum,
    ratio_sum,
    shifted_sum,
)
from .errors import InvalidArgumentError
from .exact_arith import factorize
from .riemann_roch import (
    end_bundle,
    end_euler_char,
    euler_char,
    global_term,
    inertia_bundle_total,
    stacky_degree,
)


class Lcg64:
    """Deterministic 64-bit linear congruential generator.

    State transition: state <- (6364136223846793005 * state
    + 1442695040888963407) mod 2^64, with the new state returned as the
    draw.  ``below(n)`` maps draws into [0, n) by rejection sampling
    (draws at or above the largest multiple of n below 2^64 are discarded),
    so results are reproducible in any language with 64-bit integers.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MODULUS = 1 << 64

    def __init__(self, seed: int):
        self.state = seed % self.MODULUS

    def next_u64(self) -> int:
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) % self.MODULUS
        return self.state

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n < 1:
            raise InvalidArgumentError(f"below requires n >= 1, got {n}")
        limit = (self.MODULUS // n) * n
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n


@dataclass
class VerificationReport:
    """Outcome of one identity sweep: pass iff no failures were recorded."""

    name: str
    parameter_range: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, params: str, expected: object, got: object) -> None:
        self.cases += 1
        if expected != got:
            self.failures.append(
                {"params": params, "expected": str(expected), "got": str(got)}
            )

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "range": self.parameter_range,
            "cases": self.cases,
            "failures": self.failures,
            "pass": self.passed,
        }


def _draw_weights(rng: Lcg64, e: int, r: int) -> Weights:
    """Uniform valid weight vector with n_0 = r, n_e = 0.

    The e - 1 interior values are a uniform multiset from {0..r}, drawn via
    the standard bijection with (e-1)-element subsets of {0..r+e-2}: distinct
    values are collected by rejection, sorted decreasingly, and de-staircased.
    """
    m = e - 1
    if m == 0:
        return Weights((r, 0))
    universe = r + m
    chosen: set[int] = set()
    while len(chosen) < m:
        chosen.add(rng.below(universe))
    vals = sorted(chosen, reverse=True)
    interior = [vals[t] - (m - 1 - t) for t in range(m)]
    return Weights((r, *interior, 0))


def random_weights(e: int, r: int, seed: int) -> Weights:
    """Seeded uniform weight vector; deterministic for a given seed."""
    if e < 1 or r < 1:
        raise InvalidArgumentError("random_weights requires e >= 1 and r >= 1")
    return _draw_weights(Lcg64(seed), e, r)


def _draw_bundle(
    rng: Lcg64,
    genus_range: tuple[int, int] = (0, 5),
    max_points: int = 3,
    max_ram: int = 8,
    max_rank: int = 6,
    max_abs_degree: int = 10,
    max_residue_degree: int = 3,
) -> ParabolicBundle:
    """One random bundle; draw order is part of the determinism contract:
    genus, point count, rank, degree, then per point degree/ramification/weights."""
    g_lo, g_hi = genus_range
    g = g_lo + rng.below(g_hi - g_lo + 1)
    npoints = rng.below(max_points + 1)
    rank = 1 + rng.below(max_rank)
    degree = rng.below(2 * max_abs_degree + 1) - max_abs_degree
    points = []
    for _ in range(npoints):
        f = 1 + rng.below(max_residue_degree)
        e = 1 + rng.below(max_ram)
        w = _draw_weights(rng, e, rank)
        points.append((f, e, w.entries))
    return bundle_on(g, rank, degree, points)


def random_bundle(seed: int, **ranges) -> ParabolicBundle:
    """Seeded random bundle; see _draw_bundle for the draw order."""
    return _draw_bundle(Lcg64(seed), **ranges)


def root_line_bundle(genus: int, e: int, i: int, residue_degree: int = 1) -> ParabolicBundle:
    """The i-th root-line power as a bundle: rank 1, degree floor(i/e) * f."""
    w = root_line_datum(i, e)
    return bundle_on(genus, 1, (i // e) * residue_degree,
                     [(residue_degree, e, w.entries)])


def brute_flag_dim(w: Weights) -> int:
    """Flag dimension by the cross-product jump sum over pairs i < j."""
    delta = jumps(w)
    return sum(
        delta[i] * delta[j]
        for i in range(len(delta))
        for j in range(i + 1, len(delta))
    )


def verify_hom_identity(w: Weights) -> VerificationReport:
    """Check the endomorphism-datum identity on one weight vector.

    The jump-weighted correction of the hom datum, the flag dimension, and
    the brute-force cross sum must agree exactly, and the hom datum must
    start at n_0^2.
    """
    report = VerificationReport("hom-datum-identity", f"weights {w.entries}")
    e = w.ramification
    m = hom_datum(w).entries
    corr = Fraction(sum(d * (m[d] - m[d + 1]) for d in range(e)), e)
    fd = flag_dim(w)
    report.check(f"{w.entries} correction-vs-flag", corr, Fraction(fd))
    report.check(f"{w.entries} flag-vs-brute", fd, brute_flag_dim(w))
    report.check(f"{w.entries} m0", w.rank**2, m[0])
    report.check(f"{w.entries} jumps-sum", w.rank, sum(jumps(w)))
    return report


def hom_identity_suite(count: int, seed: int, max_ram: int = 12,
                       max_rank: int = 10) -> VerificationReport:
    """Hom-datum identity on seeded random weights (e <= max_ram, r <= max_rank)."""
    rng = Lcg64(seed)
    report = VerificationReport(
        "hom-datum-identity",
        f"{count} random weights, e <= {max_ram}, r <= {max_rank}, seed {seed}",
    )
    for _ in range(count):
        e = 1 + rng.below(max_ram)
        r = 1 + rng.below(max_rank)
        single = verify_hom_identity(_draw_weights(rng, e, r))
        report.cases += single.cases
        report.failures.extend(single.failures)
    return report


def verify_cyclotomic_suite(e_max: int) -> VerificationReport:
    """All root-of-unity identities for 2 <= e <= e_max, exact equality.

    Field sums (geometric, inverse, ratio, shifted) against their closed
    forms; the ratio sums additionally against telescoped power sums, which
    use no division at all.
    """
    if e_max < 2:
        raise InvalidArgumentError(f"verify_cyclotomic_suite requires e_max >= 2, got {e_max}")
    report = VerificationReport("cyclotomic-identities", f"2 <= e <= {e_max}")
    for e in range(2, e_max + 1):
        field_e = cyclo_field(e)
        for k in range(e):
            expected = Fraction(e - 1 if k == 0 else -1)
            report.check(f"geometric e={e} k={k}", expected, geometric_sum(e, k))
        report.check(f"inverse e={e}", Fraction(-(e - 1), 2), inverse_sum(e))
        # telescoped route: running power-count vectors, reduced per d
        counts = [0] * e
        for d in range(1, e):
            for i in range(1, e):
                counts[(i * (d - 1)) % e] += 1
            telescoped = field_e.from_cover(counts).to_rational()
            report.check(f"ratio e={e} d={d}", Fraction(e - d), ratio_sum(e, d))
            report.check(f"telescoped e={e} d={d}", Fraction(e - d), telescoped)
        for d in range(1, e + 1):
            report.check(
                f"shifted e={e} d={d}", Fraction(e - 2 * d + 1, 2), shifted_sum(e, d)
            )
    return report


def verify_inertia_totals(e_max: int) -> VerificationReport:
    """Sum of inertia terms vs the closed form (e - 1 - 2d)/(2e), all d < e <= e_max."""
    if e_max < 2:
        raise InvalidArgumentError(f"verify_inertia_totals requires e_max >= 2, got {e_max}")
    report = VerificationReport("inertia-totals", f"2 <= e <= {e_max}, 0 <= d < e")
    for e in range(2, e_max + 1):
        field_e = cyclo_field(e)
        for d in range(e):
            total = field_e.zero()
            for i in range(1, e):
                total = total + inertia_term(e, d, i)
            if not total.is_rational():
                report.cases += 1
                report.failures.append(
                    {"params": f"e={e} d={d}", "expected": "a rational value",
                     "got": repr(total)}
                )
                continue
            report.check(
                f"e={e} d={d}", inertia_total(e, d), total.to_rational()
            )
    return report


def verify_chi_two_routes(bundle: ParabolicBundle) -> VerificationReport:
    """Check both Euler characteristic assemblies on one bundle.

    Global term plus inertia contributions must equal chi, and chi must
    equal underlying degree + (1 - g) * rank.
    """
    b = bundle
    report = VerificationReport(
        "chi-two-routes",
        f"g={b.curve.genus} r={b.rank} d={b.degree} points={len(b.curve.points)}",
    )
    rep = euler_char(b)
    pts = [(p.degree, p.ramification) for p in b.curve.points]
    assembled = global_term(rep.stacky_degree, b.rank, b.curve.genus, pts) + sum(
        (p.degree * inertia_bundle_total(p) for p in b.curve.points), Fraction(0)
    )
    params = f"g={b.curve.genus} r={b.rank} d={b.degree} pts={pts}"
    report.check(f"{params} global+inertia", rep.chi, assembled)
    report.check(
        f"{params} pushforward",
        Fraction(b.degree + (1 - b.curve.genus) * b.rank),
        rep.chi,
    )
    return report


def chi_suite(count: int, seed: int, **ranges) -> VerificationReport:
    """Two-route Euler characteristic check over seeded random bundles."""
    rng = Lcg64(seed)
    report = VerificationReport(
        "chi-two-routes", f"{count} random bundles, seed {seed}"
    )
    for _ in range(count):
        single = verify_chi_two_routes(_draw_bundle(rng, **ranges))
        report.cases += single.cases
        report.failures.extend(single.failures)
    return report


def root_line_suite(max_ram: int = 10, genera: Sequence[int] = (0, 1, 2, 5),
                    residue_degrees: Sequence[int] = (1, 2)) -> VerificationReport:
    """Root-line powers have chi = floor(i/e) * f + 1 - g; in particular
    chi = 1 - g for 0 <= i < e.  Validates the stacky/underlying degree
    bookkeeping on the one family where both are known independently."""
    report = VerificationReport(
        "root-line-chi", f"0 <= i < 2e, e <= {max_ram}, g in {tuple(genera)}"
    )
    for g in genera:
        for f in residue_degrees:
            for e in range(1, max_ram + 1):
                for i in range(2 * e):
                    b = root_line_bundle(g, e, i, f)
                    rep = euler_char(b)
                    params = f"g={g} f={f} e={e} i={i}"
                    expected = Fraction((i // e) * f + 1 - g)
                    report.check(f"{params} chi", expected, rep.chi)
                    report.check(
                        f"{params} stacky", Fraction(i * f, e), rep.stacky_degree
                    )
                    chk = verify_chi_two_routes(b)
                    report.cases += chk.cases
                    report.failures.extend(chk.failures)
    return report


def verify_end_chi(bundle: ParabolicBundle) -> VerificationReport:
    """Endomorphism Euler characteristic along two routes.

    The flag-dimension formula must match euler_char of the hom-datum
    bundle whose stacky degree is zero.
    """
    b = bundle
    report = VerificationReport(
        "end-chi-two-routes",
        f"g={b.curve.genus} r={b.rank} d={b.degree} points={len(b.curve.points)}",
    )
    params = f"g={b.curve.genus} r={b.rank} d={b.degree}"
    endo = end_bundle(b)
    report.check(f"{params} end-stacky-zero", Fraction(0), stacky_degree(endo))
    report.check(f"{params} end-chi", end_euler_char(b), euler_char(endo).chi)
    return report


def end_chi_suite(count: int, seed: int, **ranges) -> VerificationReport:
    """Two-route endomorphism chi check over seeded random bundles."""
    rng = Lcg64(seed)
    report = VerificationReport(
        "end-chi-two-routes", f"{count} random bundles, seed {seed}"
    )
    for _ in range(count):
        single = verify_end_chi(_draw_bundle(rng, **ranges))
        report.cases += single.cases
        report.failures.extend(single.failures)
    return report


def ed_consistency_suite(count: int, seed: int, **ranges) -> VerificationReport:
    """ed_p <= ed upper bound for every p | h, and the gerbe terms sum up.

    Bundles are drawn with genus >= 2, the standing hypothesis of the
    essential-dimension formulas.
    """
    rng = Lcg64(seed)
    ranges.setdefault("genus_range", (2, 5))
    report = VerificationReport(
        "ed-consistency", f"{count} random bundles, seed {seed}, genus >= 2"
    )
    for _ in range(count):
        b = _draw_bundle(rng, **ranges)
        upper = ed_upper_bound(b)
        h = upper.h
        params = f"g={b.curve.genus} r={b.rank} d={b.degree} h={h}"
        for p, _a in factorize(h):
            edp = ed_p_value(b, p)
            report.check(
                f"{params} p={p} ed_p<=ed",
                True,
                edp.total <= upper.total,
            )
            report.check(f"{params} p={p} gerbe-term", gerbe_ed_p(h, p), edp.gerbe_term)
        report.check(
            f"{params} gerbe-sum",
            gerbe_ed_upper(h),
            sum(gerbe_ed_p(h, p) for p, _a in factorize(h)),
        )
        report.check(f"{params} h", gerbe_index(b), h)
    return report


def run_all(e_max: int = 12, random_count: int = 100, seed: int = 1) -> list[VerificationReport]:
    """Every verification suite, in a fixed order with derived seeds."""
    return [
        verify_cyclotomic_suite(e_max),
        verify_inertia_totals(min(e_max, 40)),
        hom_identity_suite(random_count, seed),
        chi_suite(random_count, seed + 1),
        root_line_suite(),
        end_chi_suite(random_count, seed + 2),
        ed_consistency_suite(random_count, seed + 3),
    ]
