"""Acceptance suite: one check per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s` to see the verdicts inline.
"""

import random
import time
from fractions import Fraction

from commprob.branching import branching_matrix, verify_structure
from commprob.cli import run as cli_run
from commprob.counting import (
    FamilySpec,
    asymptotic_ratio,
    class_count,
    commuting_tuple_total,
    cp,
    family_asymptote,
    family_base,
    family_max_abelian,
    lie_type_estimate,
    max_abelian,
    oracle_class_count,
)
from commprob.symbolic import (
    cp_bounds,
    diagonal_degree_interval,
    fixture,
    max_entry_degree,
    tropical_first_column_degrees,
    verify_symbolic_structure,
)

from conftest import bruteforce_max_abelian_order
from test_symbolic import GL2_ROWS, GL3_ROWS, GL4_ROWS, parse_rows, random_condition_matrix


def _verdict(criterion, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" ({detail})" if detail else ""))
    assert ok, f"{criterion}: {detail}"


def test_c01_counting_identity(corpus):
    start = time.monotonic()
    mismatches = []
    for name, group in corpus.items():
        dmax = 4 if group.order <= 50 else 3
        for d in range(1, dmax + 1):
            if class_count(group, d) != oracle_class_count(group, d):
                mismatches.append((name, d))
    elapsed = time.monotonic() - start
    _verdict(
        "1 counting identity: matrix power equals orbit-count oracle",
        not mismatches and elapsed < 60,
        f"elapsed {elapsed:.1f}s" + (f", mismatches {mismatches}" if mismatches else ""),
    )


def test_c02_hand_derived_fixtures(corpus):
    s3_matrix, _ = branching_matrix(corpus["s3"])
    q8_matrix, _ = branching_matrix(corpus["q8"])
    ok = (
        [list(r) for r in s3_matrix.entries] == [[1, 0, 0], [1, 2, 0], [1, 0, 3]]
        and q8_matrix.size == 4
        and [row[0] for row in q8_matrix.entries] == [2, 1, 1, 1]
        and [q8_matrix.entries[i][i] for i in range(4)] == [2, 4, 4, 4]
        and class_count(corpus["s3"], 2) == 8
        and class_count(corpus["q8"], 2) == 22
        and cp(corpus["s3"], 2) == Fraction(1, 2)
        and cp(corpus["q8"], 2) == Fraction(5, 8)
    )
    _verdict("2 hand-derived S3/Q8 matrices and pair statistics", ok)


def test_c03_max_abelian_law(corpus):
    bad = []
    for name, group in corpus.items():
        matrix, _ = branching_matrix(group)
        if matrix.max_entry() != bruteforce_max_abelian_order(group):
            bad.append(name)
        if max_abelian(group)[0] != matrix.max_entry():
            bad.append(name + ":witness")
    expected_gl = (
        max_abelian(corpus["gl2_f2"])[0] == 3
        and max_abelian(corpus["gl2_f3"])[0] == 8
        and max_abelian(corpus["gl3_f2"])[0] == 7
    )
    _verdict(
        "3 max entry of the matrix equals the maximal abelian order",
        not bad and expected_gl,
        f"failures {bad}" if bad else "",
    )


def test_c04_asymptotic_constant(corpus):
    q8 = asymptotic_ratio(corpus["q8"], 20)
    exact = all(
        ratio == Fraction(3, 2) - Fraction(1, 2 ** (d + 1))
        for d, ratio in enumerate(q8.ratios, start=1)
    )
    cauchy = True
    for name, group in corpus.items():
        matrix, _ = branching_matrix(group)
        ratios = asymptotic_ratio(group, 50).ratios
        deltas = [abs(ratios[i + 1] - ratios[i]) for i in range(len(ratios) - 1)]
        for d in range(matrix.size, len(deltas) - 1):
            if deltas[d + 1] > deltas[d]:
                cauchy = False
    _verdict(
        "4 ratio sequence: exact Q8 identity and Cauchy-decreasing deltas",
        exact and cauchy,
    )


def test_c05_symbolic_fixtures_match():
    ok = True
    details = []
    for name, rows, alpha in (
        ("gl2", GL2_ROWS, 2),
        ("gl3", GL3_ROWS, 3),
        ("gl4", GL4_ROWS, 5),
    ):
        matrix = fixture(name)
        if matrix.exponent_grid() != parse_rows(rows):
            ok, details = False, details + [f"{name} grid"]
        if max_entry_degree(matrix) != alpha:
            ok, details = False, details + [f"{name} alpha"]
        report = verify_symbolic_structure(matrix)
        if not report.ok:
            ok, details = False, details + [f"{name} structure: {report.summary()}"]
    gl4 = fixture("gl4")
    if gl4.size != 19 or gl4.depths != (1,) * 14 + (2,) * 4 + (3,):
        ok, details = False, details + ["gl4 block layout"]
    _verdict("5 symbolic matrices entry-for-entry with structural checks", ok, "; ".join(details))


def test_c06_degree_bounds():
    start = time.monotonic()
    ok = True
    details = []
    for name, limit in (("gl2", Fraction(1, 2)), ("gl3", Fraction(1, 3)), ("gl4", Fraction(5, 16))):
        matrix = fixture(name)
        alpha, beta = max_entry_degree(matrix), matrix.size
        degrees = tropical_first_column_degrees(matrix, 1000)
        if not all(
            (d - beta) * alpha <= degrees[d - 1] <= d * alpha for d in range(1, 1001)
        ):
            ok, details = False, details + [f"{name} window"]
        lower, upper = cp_bounds(matrix, 1000)
        if abs(lower - limit) > Fraction(1, 1000) or abs(upper - limit) > Fraction(1, 1000):
            ok, details = False, details + [f"{name} limit"]
        known_pair = Fraction(matrix.group_dim + matrix.rank, 2 * matrix.group_dim)
        low2, high2 = cp_bounds(matrix, 2)
        if not low2 <= known_pair <= high2:
            ok, details = False, details + [f"{name} pair bracket"]
    if tropical_first_column_degrees(fixture("gl2"), 50) != [2 * d for d in range(1, 51)]:
        ok, details = False, details + ["gl2 2d law"]
    elapsed = time.monotonic() - start
    if elapsed >= 5:
        ok, details = False, details + [f"too slow: {elapsed:.1f}s"]
    _verdict("6 degree bounds, windows and limits up to d = 1000", ok, "; ".join(details))


def test_c07_symbolised_diagonal_suite():
    violations = 0
    for m, trials, seed in ((4, 200, 11), (6, 100, 22)):
        rng = random.Random(seed)
        for _ in range(trials):
            entries = random_condition_matrix(rng, m)
            for l in range(m):
                for r in range(2, 11):
                    try:
                        diagonal_degree_interval(entries, l, r)
                    except Exception:
                        violations += 1
    _verdict(
        "7 symbolised-diagonal degree interval on 300 random matrices",
        violations == 0,
        f"{violations} violations" if violations else "",
    )


def test_c08_family_formulas(corpus):
    ok = True
    details = []

    def products(q, lo, hi, sign=False):
        out = 1
        for i in range(lo, hi + 1):
            out *= q**i - ((-1) ** i if sign else 1)
        return out

    for q in (3, 5, 7, 9):
        displayed = {
            ("GL", 2): Fraction(1, q * (q - 1)),
            ("GL", 3): Fraction(1, q**3 * (q**2 - 1) * (q - 1)),
            ("GL", 4): Fraction(1, q**2 * products(q, 2, 4)),
            ("GL", 5): Fraction(1, q**4 * products(q, 2, 5)),
            ("U", 3): Fraction(1, q**3 * (q**2 - q + 1) * (q - 1)),
            ("U", 4): Fraction(1, q**2 * products(q, 2, 4, sign=True)),
            ("U", 5): Fraction(1, q**4 * products(q, 2, 5, sign=True)),
            ("Sp", 1): Fraction(2, q**2 - 1),
            ("Sp", 2): Fraction(2, q * (q**2 - 1) * (q**4 - 1)),
            ("O", 2): Fraction(1, q * (q**2 - 1) * (q**4 - 1)),
        }
        for (family, size), expected in displayed.items():
            if family_asymptote(FamilySpec(family, size, q)).base != expected:
                ok, details = False, details + [f"{family}_{size} at q={q}"]
        for n in (4, 5, 6):
            if abs(family_base("GL", n, -q)) != family_base("U", n, q):
                ok, details = False, details + [f"duality n={n} q={q}"]
    for name, family, size, q in (
        ("gl2_f2", "GL", 2, 2),
        ("gl2_f3", "GL", 2, 3),
        ("gl3_f2", "GL", 3, 2),
    ):
        if family_max_abelian(family, size, q) != max_abelian(corpus[name])[0]:
            ok, details = False, details + [f"a mismatch {name}"]
    _verdict("8 classical-family bases, duality and abelian orders", ok, "; ".join(details))


def test_c09_lie_type_sanity(corpus):
    exact = commuting_tuple_total(corpus["gl2_f3"], 2)
    estimate = lie_type_estimate(4, 2, 3, 2)
    ratio = Fraction(exact, estimate)
    _verdict(
        "9 exact pair count within factor 4 of the leading-order estimate",
        Fraction(1, 4) <= ratio <= 4,
        f"|C_2| = {exact}, estimate = {estimate}",
    )


def test_c10_determinism(capsys):
    outputs = []
    for _ in range(2):
        for argv in (
            ["branching", "gl2_f3", "--format", "json"],
            ["branching", "s4"],
            ["cpd", "q8", "--d", "3", "--oracle"],
        ):
            code = cli_run(argv)
            captured = capsys.readouterr()
            outputs.append((tuple(argv), code, captured.out.encode()))
    half = len(outputs) // 2
    ok = outputs[:half] == outputs[half:]
    with capsys.disabled():
        _verdict("10 byte-identical reruns of branching and cpd", ok)


def test_structure_reports_all_pass(corpus):
    # umbrella re-check that every verifier stays green on the corpus
    ok = all(
        verify_structure(*branching_matrix(group)).ok for group in corpus.values()
    ) and all(verify_symbolic_structure(fixture(n)).ok for n in ("gl2", "gl3", "gl4"))
    _verdict("structure verifiers green on corpus and fixtures", ok)
