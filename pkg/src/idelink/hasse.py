"""Verifiers: decide each norm-principle identity as an exact lattice fact.

Every check runs on a single branched-cover scenario and returns a
record with a verdict, a witness on failure, and a timing.  Failures are
verdicts rather than errors: the tool exists to probe where truncated
identities hold, so a principled failure is data and always carries an
explicit witness (for lattice equalities, a vector lying in exactly one
side; for invariant claims, the mismatched invariants).

``run_suite`` enumerates every braid word within given bounds, every
listed cover degree, runs all checks, and aggregates deterministic,
JSON-serializable reports.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from . import __version__
from .covers import (
    CoverData,
    deck_matrix,
    lift_braid,
    principal_pushforward,
    pushforward_idele,
    pushforward_image,
    pushforward_matrix,
    pushforward_surface,
)
from .ideles import (
    IdeleVector,
    SurfaceClass,
    boundary_punctured_surface,
    class_quotient,
    diagonal_map,
    meridian_subgroup,
    principal_lattice,
    project_idele,
)
from .links import BraidWord, LinkUniverse
from .zlattice import (
    SubLattice,
    lattice_equal,
    lattice_intersect,
    lattice_member,
    lattice_sum,
    preimage_lattice,
    quotient_invariants,
    relative_quotient_invariants,
)

REPORT_SCHEMA = 1


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    millis: float
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "name": self.name,
            "verdict": "pass" if self.passed else "fail",
        }
        if self.witness is not None:
            out["witness"] = self.witness
        out["millis"] = self.millis
        return out


@dataclass(frozen=True)
class VerificationReport:
    strands: int
    word: tuple[int, ...]
    degree: int
    checks: tuple[CheckRecord, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "scenario": {
                "strands": self.strands,
                "word": list(self.word),
                "degree": self.degree,
            },
            "checks": [c.to_json_dict() for c in self.checks],
            "passed": self.passed,
        }


def _coordinate_labels(u: LinkUniverse, ascii_labels: bool = True) -> list[str]:
    mu, lam = ("mu_", "lam_") if ascii_labels else ("μ_", "λ_")
    out = []
    for name in u.labels:
        out.extend((mu + name, lam + name))
    return out


def equality_witness(a: SubLattice, b: SubLattice) -> tuple[int, ...] | None:
    """A vector in exactly one of two sublattices, or None when equal.

    Some canonical generator of the larger-looking side must escape the
    other side whenever the lattices differ, so scanning generators is
    complete.
    """
    for col in a.canonical_form.columns():
        if not lattice_member(col, b):
            return col
    for col in b.canonical_form.columns():
        if not lattice_member(col, a):
            return col
    return None


def _timed(fn: Callable[[], tuple[bool, dict | None]], name: str) -> CheckRecord:
    start = time.perf_counter()
    passed, witness = fn()
    millis = round((time.perf_counter() - start) * 1000.0, 3)
    return CheckRecord(name=name, passed=passed, millis=millis, witness=witness)


def verify_norm_principle(c: CoverData) -> CheckRecord:
    """Principal-intersect-image equals pushed-forward principal, exactly."""

    def run():
        base = c.spec.base
        left = lattice_intersect(principal_lattice(base), pushforward_image(c))
        right = principal_pushforward(c)
        if lattice_equal(left, right):
            return True, None
        vec = equality_witness(left, right)
        return False, {
            "vector": list(vec),
            "in_intersection": lattice_member(vec, left),
            "in_pushforward": lattice_member(vec, right),
            "coordinates": _coordinate_labels(base),
        }

    return _timed(run, "norm_principle")


def verify_diagonal_commutes(c: CoverData) -> CheckRecord:
    """Pushing a lifted surface's boundary equals the image surface's boundary.

    Checked exactly on every upstairs generator and on their sum.
    """

    def run():
        classes = [SurfaceClass.single(j) for j in range(c.total.size)]
        classes.append(
            SurfaceClass(tuple(range(c.total.size)), (1,) * c.total.size)
        )
        for s in classes:
            lhs = pushforward_idele(c, diagonal_map(c.total, s))
            rhs = diagonal_map(c.spec.base, pushforward_surface(c, s))
            if lhs != rhs:
                return False, {
                    "surface_support": list(s.support),
                    "surface_coeffs": list(s.coeffs),
                    "pushed_boundary": list(lhs.coeffs),
                    "boundary_of_image": list(rhs.coeffs),
                    "coordinates": _coordinate_labels(c.spec.base),
                }
        return True, None

    return _timed(run, "diagonal_commutes")


def verify_meridian_pushforward(c: CoverData) -> CheckRecord:
    """Pushed-forward meridians carry no longitude coordinates."""

    def run():
        for j in range(c.total.size):
            unit = IdeleVector.build(range(c.total.size), {j: (1, 0)})
            image = pushforward_idele(c, unit)
            if any(image.coeffs[1::2]):
                return False, {
                    "upstairs_component": c.total.labels[j],
                    "image": list(image.coeffs),
                    "coordinates": _coordinate_labels(c.spec.base),
                }
        return True, None

    return _timed(run, "meridian_pushforward")


def _sublinks(size: int) -> Iterator[tuple[int, ...]]:
    for r in range(size + 1):
        yield from itertools.combinations(range(size), r)


def verify_class_quotient_free(c: CoverData) -> CheckRecord:
    """Idele group mod (principal + off-sublink meridians) is free on the sublink.

    Checked for every sublink of the base and of the upstairs universe.
    """

    def run():
        for tag, u in (("base", c.spec.base), ("cover", c.total)):
            principal = principal_lattice(u)
            for sub in _sublinks(u.size):
                relations = lattice_sum(principal, meridian_subgroup(u, sub).lattice)
                inv = quotient_invariants(2 * u.size, relations)
                if inv.free_rank != len(sub) or inv.torsion:
                    return False, {
                        "universe": tag,
                        "sublink": [u.labels[k] for k in sub],
                        "free_rank": inv.free_rank,
                        "torsion": list(inv.torsion),
                        "expected_free_rank": len(sub),
                    }
        return True, None

    return _timed(run, "class_quotient_free")


def verify_projection_compatibility(c: CoverData) -> CheckRecord:
    """Boundary data restricts coherently along nested sublinks.

    For every pair L inside L' and every generator on L, the boundary
    taken on L' and projected down to L equals the boundary taken on L.
    """

    def run():
        for tag, u in (("base", c.spec.base), ("cover", c.total)):
            for big in _sublinks(u.size):
                for small in _sublinks(len(big)):
                    sub = tuple(big[i] for i in small)
                    for k in sub:
                        via_big = project_idele(
                            boundary_punctured_surface(u, k, big), sub
                        )
                        direct = project_idele(
                            boundary_punctured_surface(u, k, sub), sub
                        )
                        if via_big != direct:
                            return False, {
                                "universe": tag,
                                "sublink": [u.labels[t] for t in sub],
                                "larger": [u.labels[t] for t in big],
                                "generator": u.labels[k],
                                "projected": list(via_big.coeffs),
                                "direct": list(direct.coeffs),
                            }
        return True, None

    return _timed(run, "projection_compatibility")


def verify_cover_exact_sequence(c: CoverData) -> CheckRecord:
    """The quotient sequence of the cover is exact, as lattice identities.

    With R_N = principal + meridians away from the lifted branch axis
    and R_M its base counterpart: (i) the preimage of R_M under the
    pushforward equals (deck - 1)-image + R_N (middle exactness), and
    (ii) the induced quotient map has isomorphic source-mod-kernel and
    image, computed through two independent routes.
    """

    def run():
        base = c.spec.base
        total = c.total
        f = pushforward_matrix(c)
        r_m = lattice_sum(
            principal_lattice(base),
            meridian_subgroup(base, (base.axis_index,)).lattice,
        )
        r_n = lattice_sum(
            principal_lattice(total),
            meridian_subgroup(total, (total.axis_index,)).lattice,
        )
        kernel_side = preimage_lattice(f, r_m)
        tau = deck_matrix(c)
        shifted = [
            tuple(
                tau.entries[i][j] - (1 if i == j else 0)
                for i in range(2 * total.size)
            )
            for j in range(2 * total.size)
        ]
        deck_image = SubLattice.from_columns(2 * total.size, shifted)
        exact_side = lattice_sum(deck_image, r_n)
        if not lattice_equal(kernel_side, exact_side):
            vec = equality_witness(kernel_side, exact_side)
            return False, {
                "part": "middle_exactness",
                "vector": list(vec),
                "in_kernel_preimage": lattice_member(vec, kernel_side),
                "in_deck_image_plus_relations": lattice_member(vec, exact_side),
                "coordinates": _coordinate_labels(total),
            }
        source_mod_kernel = quotient_invariants(2 * total.size, kernel_side)
        image_side = relative_quotient_invariants(
            lattice_sum(pushforward_image(c), r_m), r_m
        )
        if source_mod_kernel != image_side:
            return False, {
                "part": "image_isomorphism",
                "source_mod_kernel": {
                    "free_rank": source_mod_kernel.free_rank,
                    "torsion": list(source_mod_kernel.torsion),
                },
                "image": {
                    "free_rank": image_side.free_rank,
                    "torsion": list(image_side.torsion),
                },
            }
        return True, None

    return _timed(run, "cover_exact_sequence")


CHECKS: dict[str, Callable[[CoverData], CheckRecord]] = {
    "norm_principle": verify_norm_principle,
    "diagonal_commutes": verify_diagonal_commutes,
    "meridian_pushforward": verify_meridian_pushforward,
    "class_quotient_free": verify_class_quotient_free,
    "projection_compatibility": verify_projection_compatibility,
    "cover_exact_sequence": verify_cover_exact_sequence,
}


def resolve_checks(names: Sequence[str] | None) -> list[str]:
    if names is None:
        return list(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(
            f"unknown checks: {', '.join(unknown)}; available: {', '.join(CHECKS)}"
        )
    return list(names)


def run_scenario(
    b: BraidWord, degree: int, checks: Sequence[str] | None = None
) -> VerificationReport:
    """Lift one braid scenario and run the requested checks."""
    cover = lift_braid(b, degree)
    names = resolve_checks(checks)
    records = tuple(CHECKS[name](cover) for name in names)
    return VerificationReport(
        strands=b.strands, word=b.letters, degree=degree, checks=records
    )


def iter_braid_words(max_strands: int, max_length: int) -> Iterator[BraidWord]:
    """All braid words within the bounds, in deterministic order.

    Strand counts ascend, then lengths, then letters lexicographically
    over the signed alphabet -(k-1)..-1, 1..k-1.
    """
    for strands in range(1, max_strands + 1):
        alphabet = [g for g in range(-(strands - 1), strands) if g]
        for length in range(max_length + 1):
            for letters in itertools.product(alphabet, repeat=length):
                yield BraidWord(strands, letters)


def count_scenarios(max_strands: int, max_length: int, degrees: Sequence[int]) -> int:
    words = 0
    for strands in range(1, max_strands + 1):
        a = 2 * (strands - 1)
        words += sum(a**l for l in range(max_length + 1)) if a else 1
    return words * len(degrees)


@dataclass(frozen=True)
class SuiteResult:
    max_strands: int
    max_length: int
    degrees: tuple[int, ...]
    reports: tuple[VerificationReport, ...]
    complete: bool

    @property
    def check_count(self) -> int:
        return sum(len(r.checks) for r in self.reports)

    @property
    def failure_count(self) -> int:
        return sum(1 for r in self.reports for c in r.checks if not c.passed)

    def to_json_dict(self) -> dict:
        total_millis = round(
            sum(c.millis for r in self.reports for c in r.checks), 3
        )
        return {
            "version": __version__,
            "schema": REPORT_SCHEMA,
            "bounds": {
                "max_strands": self.max_strands,
                "max_length": self.max_length,
                "degrees": list(self.degrees),
            },
            "complete": self.complete,
            "scenarios": [r.to_json_dict() for r in self.reports],
            "summary": {
                "scenarios": len(self.reports),
                "checks": self.check_count,
                "passes": self.check_count - self.failure_count,
                "failures": self.failure_count,
                "total_millis": total_millis,
            },
        }


def run_suite(
    max_strands: int,
    max_length: int,
    degrees: Iterable[int],
    checks: Sequence[str] | None = None,
    scenario_cap: int | None = None,
) -> SuiteResult:
    """Run every (word, degree) scenario within bounds, in deterministic order.

    When ``scenario_cap`` is hit the result is truncated and flagged
    incomplete instead of raising.
    """
    degrees = tuple(degrees)
    if max_strands < 1 or max_length < 0:
        raise ValueError("bounds must cover at least one scenario")
    for n in degrees:
        if n < 1:
            raise ValueError("cover degrees must be >= 1")
    names = resolve_checks(checks)
    reports: list[VerificationReport] = []
    complete = True
    done = 0
    for b in iter_braid_words(max_strands, max_length):
        for n in degrees:
            if scenario_cap is not None and done >= scenario_cap:
                complete = False
                break
            reports.append(run_scenario(b, n, names))
            done += 1
        if not complete:
            break
    return SuiteResult(
        max_strands=max_strands,
        max_length=max_length,
        degrees=degrees,
        reports=tuple(reports),
        complete=complete,
    )


def scenario_report_json(report: VerificationReport) -> dict:
    return {
        "version": __version__,
        "schema": REPORT_SCHEMA,
        **report.to_json_dict(),
    }
