"""Named end-to-end verification scenarios with machine-readable reports.

Each scenario runs a fixed list of checks and records one evidence row per
check (claim, computed value, expected value, provenance of the expected
value).  A report passes exactly when every row matches.  Scenarios that
sample record their seed, so reports are reproducible bit for bit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import fixtures
from .cones import (
    FaceCertificate,
    RayCone,
    evaluate_functional,
    find_supporting_functional,
    membership,
    principal_cone_contains,
    sigma_of_matrix,
    validate_face_certificate,
)
from .delone import (
    delone_subdivision,
    delone_with_window_growth,
    secondary_cone_check,
    subdivisions_equal,
)
from .exact import IntMatrix, RatMatrix
from .matroids import complete_graph, graphic_representation
from .quadforms import (
    QuadForm,
    WellSuitedPair,
    h_functional,
    h_functional_matrix,
    is_perfect,
    is_positive_definite,
    is_well_suited,
    minimal_vectors,
    q0_principal,
    q5,
    q5_families,
    well_suited_sum1,
    well_suited_sum2,
    well_suited_sum3,
)
from .tumatrix import TUMatrix, is_simple_matrix, is_totally_unimodular

DEFAULT_SEED = 1908


def _render(value) -> str:
    """Readable rendering with Fractions shown as p/q."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple, set, frozenset)):
        items = list(value) if not isinstance(value, (set, frozenset)) else sorted(value)
        inner = ", ".join(_render(v) for v in items)
        return "(" + inner + ")" if isinstance(value, tuple) else "[" + inner + "]"
    return str(value)


@dataclass(frozen=True)
class EvidenceRow:
    claim: str
    computed: str
    expected: str
    provenance: str

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


@dataclass
class Report:
    scenario: str
    seed: int
    evidence: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if all(row.ok for row in self.evidence) else "fail"

    def add(self, claim, computed, expected, provenance) -> None:
        self.evidence.append(
            EvidenceRow(claim, _render(computed), _render(expected), provenance)
        )

    def to_json_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "status": self.status,
            "seed": self.seed,
            "wall_time_s": round(self.wall_time, 3),
            "evidence": [
                {
                    "claim": r.claim,
                    "computed": r.computed,
                    "expected": r.expected,
                    "provenance": r.provenance,
                    "ok": r.ok,
                }
                for r in self.evidence
            ],
        }

    def to_text(self) -> str:
        lines = [f"scenario: {self.scenario}  [{self.status}]  "
                 f"(seed {self.seed}, {self.wall_time:.2f}s)"]
        for r in self.evidence:
            mark = "ok " if r.ok else "FAIL"
            lines.append(f"  [{mark}] {r.claim}")
            lines.append(f"         computed: {r.computed}")
            if not r.ok:
                lines.append(f"         expected: {r.expected}")
        return "\n".join(lines)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - t0
        return report

    return wrapper


def _vecset(vs) -> str:
    return "{" + ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in sorted(vs)) + "}"


# ---------------------------------------------------------------------------
# scenario: the rank-5 ten-element certificate


@_timed
def verify_r10(a10: Optional[IntMatrix] = None,
               functional: Optional[RatMatrix] = None,
               seed: int = DEFAULT_SEED) -> Report:
    """Five checks that the ten-column cone is a face of a full perfect cone.

    The optional arguments override the fixture matrix and the supporting
    functional; the tests use them to confirm the verifier can fail.
    """
    rep = Report("r10", seed)
    a = a10 if a10 is not None else fixtures.load_int_matrix("A10.txt")
    qq = q5()

    rep.add(
        "representation matrix is totally unimodular and simple",
        (is_totally_unimodular(a), is_simple_matrix(a)),
        (True, True),
        "fixture A10.txt",
    )
    rep.add(
        "anchor form is positive definite and perfect",
        (is_positive_definite(qq), is_perfect(qq)),
        (True, True),
        "fixture Q5.txt",
    )
    mv = minimal_vectors(qq)
    es, fs, gs, hs = q5_families()
    fam = {tuple(v) if v[_first_nonzero(v)] > 0 else tuple(-x for x in v)
           for v in (*es, *fs, *gs, *hs)}
    rep.add(
        "minimum 2 with the 20 cyclic-family vectors (up to sign)",
        (mv.minimum, len(mv.vectors), set(mv.vectors) == fam),
        (Fraction(2), 20, True),
        "derived: exact lattice enumeration",
    )
    h = functional if functional is not None else h_functional_matrix()
    vals = tuple(
        sorted({evaluate_functional(h, v) for v in fam_list})
        for fam_list in (es, fs, gs, hs)
    )
    rep.add(
        "functional values on the four families",
        vals,
        ([Fraction(0)], [Fraction(-2)], [Fraction(0)], [Fraction(-2)]),
        "fixed cyclic functional",
    )
    cone10 = sigma_of_matrix(TUMatrix(a, verified=is_totally_unimodular(a)))
    cone20 = RayCone.from_vectors(5, mv.vectors, provenance="perfect")
    sub = [i for i, v in enumerate(cone20.generators)
           if v in set(cone10.generators)]
    face_ok = False
    if len(sub) == len(cone10.generators):
        # the fixed functional must be accepted, and the LP must also find one
        cert = FaceCertificate(
            h, tuple(sub), tuple(j for j in range(len(cone20.generators))
                                 if j not in set(sub)),
            tuple(evaluate_functional(h, v) for v in cone20.generators),
        )
        face_ok = validate_face_certificate(cert, cone20, sub) and \
            find_supporting_functional(sub, cone20) is not None
    rep.add(
        "10-generator cone is a face of the 20-generator perfect cone",
        face_ok,
        True,
        "derived: exact LP certificate",
    )
    return rep


def _first_nonzero(v):
    for i, x in enumerate(v):
        if x != 0:
            return i
    return 0


# ---------------------------------------------------------------------------
# scenario: principal cone identities


@_timed
def verify_principal(g: int, samples: int = 100, seed: int = DEFAULT_SEED) -> Report:
    """Minimal vectors, generators, and the inequality description agree."""
    if not 2 <= g <= 5:
        raise ValueError("principal scenario supports 2 <= g <= 5")
    rep = Report(f"principal-g{g}", seed)
    rng = random.Random(seed)
    q0 = q0_principal(g)
    ak = graphic_representation(complete_graph(g + 1))
    akt = TUMatrix.check(ak)
    cone = sigma_of_matrix(akt)

    mv = minimal_vectors(q0)
    cols = {_canon(c) for c in ak.columns()}
    rep.add(
        "minimal vectors equal the complete-graph columns (up to sign)",
        (mv.minimum, set(mv.vectors) == cols),
        (Fraction(1), True),
        "derived: exact enumeration",
    )
    pc = RayCone.from_vectors(g, mv.vectors)
    rep.add(
        "perfect cone generators equal the matroidal cone generators",
        set(pc.generators) == set(cone.generators),
        True,
        "derived: generator set comparison",
    )

    ok_in = True
    for _ in range(samples):
        lam = [Fraction(rng.randint(0, 8), rng.randint(1, 3)) for _ in cone.generators]
        qm = _combo(cone, lam)
        if not principal_cone_contains(qm):
            ok_in = False
            break
    rep.add(
        f"{samples} random cone combinations satisfy the inequality description",
        ok_in,
        True,
        "derived: sampling both descriptions",
    )
    ok_out = True
    for _ in range(samples):
        qm = _random_inequality_form(g, rng)
        if membership(qm, cone) is None:
            ok_out = False
            break
    rep.add(
        f"{samples} random inequality-description forms lie in the cone",
        ok_out,
        True,
        "derived: sampling both descriptions",
    )
    bad = QuadForm(RatMatrix(
        [[Fraction(2) if i == j else Fraction(1, 2) for j in range(g)] for i in range(g)]
    ))
    rep.add(
        "a positive off-diagonal form is rejected by both descriptions",
        (principal_cone_contains(bad), membership(bad, cone) is None),
        (False, True),
        "derived: violator spot check",
    )
    return rep


def _canon(v):
    for x in v:
        if x != 0:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def _combo(cone: RayCone, lam) -> QuadForm:
    g = cone.g
    rows = [[sum(l * v[i] * v[j] for l, v in zip(lam, cone.generators))
             for j in range(g)] for i in range(g)]
    return QuadForm(RatMatrix(rows))


def _random_inequality_form(g: int, rng) -> QuadForm:
    rows = [[Fraction(0)] * g for _ in range(g)]
    for i in range(g):
        for j in range(i + 1, g):
            rows[i][j] = rows[j][i] = -Fraction(rng.randint(0, 6), rng.randint(1, 3))
    for i in range(g):
        slack = Fraction(rng.randint(0, 5), rng.randint(1, 2))
        rows[i][i] = -sum(rows[i][j] for j in range(g) if j != i) + slack
    return QuadForm(RatMatrix(rows))


# ---------------------------------------------------------------------------
# scenario: the g = 2 taxonomy


@_timed
def verify_taxonomy_g2(samples: int = 5, seed: int = DEFAULT_SEED) -> Report:
    """The four perfect classes and the four Delone types coincide for g = 2."""
    rep = Report("taxonomy-g2", seed)
    rng = random.Random(seed)

    full = {(1, 0), (0, 1), (1, -1)}
    diag = {(1, 0), (0, 1)}
    ray = {(1, 0)}
    reps_perfect = [
        (q0_principal(2), full),
        (QuadForm.from_rows([[1, "1/4"], ["1/4", 1]]), diag),
        (QuadForm.from_rows([[1, 0], [0, 3]]), ray),
    ]
    got = []
    for form, expected in reps_perfect:
        mv = minimal_vectors(form)
        got.append(set(mv.vectors) == expected)
    rep.add(
        "three positive-dimensional perfect classes from representative forms",
        got,
        [True, True, True],
        "fixture forms",
    )

    del_reps = [
        fixtures.load_matrix("QHEX.txt"),
        fixtures.load_matrix("I2.txt"),
        RatMatrix([[1, 0], [0, 0]]),
        RatMatrix([[0, 0], [0, 0]]),
    ]
    subs = [delone_subdivision(QuadForm(m)) for m in del_reps]
    distinct = all(
        not subdivisions_equal(subs[i], subs[j])
        for i in range(4) for j in range(i + 1, 4)
    )
    rep.add(
        "four Delone types from representative forms are pairwise distinct",
        (len(subs), distinct),
        (4, True),
        "fixture forms",
    )

    cones = [
        RayCone.from_vectors(2, sorted(full)),
        RayCone.from_vectors(2, sorted(diag)),
        RayCone.from_vectors(2, sorted(ray)),
    ]
    agree = True
    ref_cache = {}
    for idx, (cone, sub) in enumerate(zip(cones, subs[:3])):
        for _ in range(samples):
            lam = [Fraction(rng.randint(1, 6), rng.randint(1, 3))
                   for _ in cone.generators]
            got, r = delone_with_window_growth(_combo(cone, lam))
            if r not in ref_cache:
                ref_cache[r] = [delone_subdivision(QuadForm(m), r) for m in del_reps]
            if not subdivisions_equal(got, ref_cache[r][idx]):
                agree = False
    rep.add(
        "interior forms of each cone reproduce the matching Delone type",
        agree,
        True,
        "derived: interior sampling",
    )

    perfect_list = sorted(
        [frozenset(minimal_vectors(f).vectors) for f, _ in reps_perfect]
        + [frozenset()]
    , key=len)
    secondary_list = sorted(
        [frozenset(c.generators) for c in cones] + [frozenset()]
    , key=len)
    rep.add(
        "the perfect-class list and the secondary-cone list coincide",
        perfect_list == secondary_list,
        True,
        "derived: set comparison (zero cone included in both)",
    )
    return rep


# ---------------------------------------------------------------------------
# scenario: the sum pipeline


def _load_pair(qname: str, aname: str) -> WellSuitedPair:
    q = QuadForm(fixtures.load_matrix(qname))
    a = TUMatrix.check(fixtures.load_int_matrix(aname))
    return WellSuitedPair.check(q, a)


@_timed
def verify_seymour_pipeline(samples: int = 200, seed: int = DEFAULT_SEED) -> Report:
    """Build the fixture sums, re-verify each by enumeration, check the
    square-completion bounds on random integer vectors."""
    rep = Report("seymour", seed)
    rng = random.Random(seed)

    k3 = _load_pair("Q0_2.txt", "AK3.txt")
    s1 = well_suited_sum1(k3, k3)
    r10_pair = _load_pair("QW10.txt", "A10.txt")
    unit = WellSuitedPair.check(
        QuadForm.from_rows([[1]]), TUMatrix.check(IntMatrix([[1]]))
    )
    s1b = well_suited_sum1(r10_pair, unit)
    rep.add(
        "direct sums re-verify as well-suited (two triangle pairs; ten-column pair + unit)",
        (is_well_suited(s1.form, s1.matrix), is_well_suited(s1b.form, s1b.matrix)),
        (True, True),
        "derived: enumeration oracle",
    )

    p2 = well_suited_sum2(
        _load_pair("SUM2_LEFT_Q.txt", "SUM2_LEFT_A.txt"),
        _load_pair("SUM2_RIGHT_Q.txt", "SUM2_RIGHT_A.txt"),
    )
    expected = RatMatrix([
        [1, Fraction(1, 2), Fraction(1, 4)],
        [Fraction(1, 2), 1, Fraction(1, 2)],
        [Fraction(1, 4), Fraction(1, 2), 1],
    ])
    rep.add(
        "2-sum fixture reproduces the pinned glued form and re-verifies",
        (p2.form.matrix == expected, is_well_suited(p2.form, p2.matrix)),
        (True, True),
        "derived: block formula + enumeration oracle",
    )

    p3 = well_suited_sum3(
        _load_pair("SUM3_LEFT_Q.txt", "SUM3_LEFT_A.txt"),
        _load_pair("SUM3_RIGHT_Q.txt", "SUM3_RIGHT_A.txt"),
    )
    p3z = well_suited_sum3(
        _load_pair("SUM3Z_LEFT_Q.txt", "SUM3Z_LEFT_A.txt"),
        _load_pair("SUM3Z_RIGHT_Q.txt", "SUM3Z_RIGHT_A.txt"),
    )
    rep.add(
        "3-sum fixtures (coupled and zero-coupling) re-verify as well-suited",
        (is_well_suited(p3.form, p3.matrix), is_well_suited(p3z.form, p3z.matrix)),
        (True, True),
        "derived: enumeration oracle",
    )

    # square-completion bound for the shared-column sum: >= 3/4, tight at 1
    tight = Fraction(1) - Fraction(1, 4)
    bound_ok, tight_seen = _check_sum2_bounds(rng, samples)
    rep.add(
        f"shared-column bound >= 3/4 on {samples} samples per side, tight case 3/4",
        (bound_ok, tight_seen == Fraction(3, 4) and tight == Fraction(3, 4)),
        (True, True),
        "derived: sampling; tight at the unit vector",
    )

    # triangle-sum bound: >= 3/4 on the zero-coupling fixture; the coupled
    # fixture shows the sharp constant is 2/3, attained
    zc_ok = _check_sum3_bound(("SUM3Z_LEFT_Q.txt", 1), rng, samples, Fraction(3, 4))
    coupled_ok = _check_sum3_bound(("SUM3_LEFT_Q.txt", 1), rng, samples, Fraction(2, 3))
    coupled_tight = _sum3_bound_value("SUM3_LEFT_Q.txt", (1,))
    rep.add(
        "triangle-sum bound: >= 3/4 (zero coupling), sharp 2/3 attained (coupled)",
        (zc_ok, coupled_ok, coupled_tight),
        (True, True, Fraction(2, 3)),
        "derived: sampling; the 3/4 constant does not extend to coupled fixtures",
    )
    return rep


def _split2(qname: str):
    q = fixtures.load_matrix(qname)
    g1 = q.rows - 1
    q1 = RatMatrix([row[:g1] for row in q.data[:g1]])
    r1 = [q.data[i][g1] for i in range(g1)]
    return q1, r1


def _check_sum2_bounds(rng, samples) -> tuple:
    q1, r1 = _split2("SUM2_LEFT_Q.txt")
    ok = True
    best = None
    for _ in range(samples):
        xi = [rng.randint(-9, 9) for _ in range(q1.rows)]
        if all(x == 0 for x in xi):
            xi[0] = 1
        val = _eval(q1, xi) - sum(a * b for a, b in zip(r1, xi)) ** 2
        if val < Fraction(3, 4):
            ok = False
        if best is None or val < best:
            best = val
    # force the tight sample into the record
    tight_val = _eval(q1, [1]) - sum(r1) ** 2
    best = tight_val if best is None or tight_val < best else best
    return ok and tight_val == Fraction(3, 4), best


def _split3(qname: str):
    q = fixtures.load_matrix(qname)
    g1 = q.rows - 2
    q1 = RatMatrix([row[:g1] for row in q.data[:g1]])
    r1 = [q.data[i][g1] for i in range(g1)]
    s1 = [q.data[i][g1 + 1] for i in range(g1)]
    return q1, r1, s1


def _sum3_bound_value(qname: str, xi) -> Fraction:
    q1, r1, s1 = _split3(qname)
    a = sum(x * y for x, y in zip(r1, xi))
    b = sum(x * y for x, y in zip(s1, xi))
    return _eval(q1, xi) - Fraction(4, 3) * (a * a + b * b + a * b)


def _check_sum3_bound(source, rng, samples, floor_val) -> bool:
    qname, g1 = source
    for _ in range(samples):
        xi = [rng.randint(-9, 9) for _ in range(g1)]
        if all(x == 0 for x in xi):
            xi[0] = 1
        if _sum3_bound_value(qname, tuple(xi)) < floor_val:
            return False
    return True


def _eval(q: RatMatrix, xi) -> Fraction:
    return sum(q.data[i][j] * xi[i] * xi[j]
               for i in range(q.rows) for j in range(q.rows))


# ---------------------------------------------------------------------------
# scenario: the Erdahl-Ryshkov dicing identity (used by the CLI's verify
# front end alongside the four named scenarios)


@_timed
def verify_dicings(samples: int = 5, seed: int = DEFAULT_SEED) -> Report:
    """delone(interior form) == dicing for the five fixture systems."""
    rep = Report("dicings", seed)
    rng = random.Random(seed)
    from .matroids import cographic_representation

    systems = [
        ("AK3.txt", None),
        ("AK4.txt", None),
        ("I2.txt", None),
        ("I3.txt", None),
        (None, "THETA.graph"),
    ]
    for mname, gname in systems:
        if mname:
            a = TUMatrix.check(fixtures.load_int_matrix(mname))
            label = mname
        else:
            a = TUMatrix.check(cographic_representation(fixtures.load_graph(gname)))
            label = f"cographic({gname})"
        ok = secondary_cone_check(a, samples, rng)
        rep.add(
            f"{label}: {samples} interior samples reproduce the dicing",
            ok,
            True,
            "derived: exact subdivision comparison",
        )
    return rep


SCENARIOS = {
    "r10": lambda seed, samples: verify_r10(seed=seed),
    "principal": None,  # needs g; handled by the CLI
    "taxonomy-g2": lambda seed, samples: verify_taxonomy_g2(seed=seed),
    "seymour": lambda seed, samples: verify_seymour_pipeline(
        samples=samples or 200, seed=seed
    ),
    "dicings": lambda seed, samples: verify_dicings(
        samples=samples or 5, seed=seed
    ),
}
