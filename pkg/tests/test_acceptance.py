"""Acceptance criteria, one test each, timed and reported as a pass/fail line.

Run with pytest, or directly as ``python tests/test_acceptance.py``.
"""
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import CRITERIA_LINES, GOLDEN_DIR, load_json, random_brauerian  # noqa: E402
from proofnet.arrows import ArrowType, c_and, check_theory, comp, ident, typeof  # noqa: E402
from proofnet.brauer import Endpoint, SplitEquivalence, compose, identity  # noqa: E402
from proofnet.decide import equal_in  # noqa: E402
from proofnet.formula import AND, OR, Theory, letters  # noqa: E402
from proofnet.generate import random_instance, random_term, random_walk  # noqa: E402
from proofnet.rewrite import axiom_catalog, develop, is_developed, theorem_catalog  # noqa: E402
from proofnet.semantics import g_arrow, lemma_violations  # noqa: E402
from proofnet.syntax import parse_arrow, parse_file, parse_formula  # noqa: E402
from proofnet.translate import f_arrow, f_object, iso_i, iso_i_inv  # noqa: E402

p, = letters("p")


def median_time(fn, runs=5):
    """Median wall time of ``runs`` calls, for the sub-millisecond criteria."""
    times = []
    for _ in range(runs):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def report(number, title, ok, seconds, limit=None, detail=""):
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    line = (f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title}"
            f" [{seconds * 1000:.3f} ms{budget}]{' ' + detail if detail else ''}")
    CRITERIA_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_composition():
    data = load_json("composition.json")
    R = SplitEquivalence.from_json(data["R"])
    P = SplitEquivalence.from_json(data["P"])
    expected = SplitEquivalence.from_json(data["P_after_R"])
    ok = compose(P, R) == expected
    seconds = median_time(lambda: compose(P, R))
    report(1, "worked composition P*R", ok and seconds < 1e-3, seconds, 1e-3)


def test_criterion_02_graph_goldens():
    defs = parse_file((GOLDEN_DIR / "worked_graphs.pnc").read_text(encoding="utf-8"))
    expected = load_json("worked_graphs.json")
    ok, worst = True, 0.0
    for name, graph in expected.items():
        ok &= g_arrow(defs[name]) == SplitEquivalence.from_json(graph)
        worst = max(worst, median_time(lambda: g_arrow(defs[name])))
    report(2, "three worked graphs", ok and worst < 1e-3, worst, 1e-3, "(slowest of three)")


def test_criterion_03_eleven_factor_composite():
    defs = parse_file((GOLDEN_DIR / "eleven_factor.pnc").read_text(encoding="utf-8"))
    golden = load_json("eleven_factor.json")
    f = defs["eleven_factor"]

    def check():
        pq = parse_formula(golden["source"])
        return (typeof(f) == ArrowType(pq, parse_formula(golden["target"]))
                and g_arrow(f, Theory.PN) == identity(2)
                and bool(equal_in(f, parse_arrow(golden["equal_to"]), Theory.PN)))

    ok, seconds = timed(check)
    report(3, "eleven-factor composite equals the identity in PN", ok, seconds)


def _sweep(catalog_of, seed):
    rng = random.Random(seed)
    failures, count = [], 0
    for theory in Theory:
        for schema in catalog_of(theory):
            for _ in range(50):
                sides = random_instance(rng, schema, theory)
                count += 1
                types = {typeof(s) for s in sides}
                graphs = {g_arrow(s, theory) for s in sides}
                if len(types) != 1 or len(graphs) != 1:
                    failures.append((theory.value, schema.name))
    return failures, count


def test_criterion_04_axiom_sweep():
    (failures, count), seconds = timed(lambda: _sweep(axiom_catalog, 4))
    report(4, "axiom soundness sweep", not failures and seconds < 30, seconds, 30,
           f"{count} instances, {len(failures)} failures")


def test_criterion_05_theorem_sweep():
    (failures, count), seconds = timed(lambda: _sweep(theorem_catalog, 5))
    report(5, "theorem soundness sweep", not failures and seconds < 30, seconds, 30,
           f"{count} instances, {len(failures)} failures")


def test_criterion_06_brauer_category_laws():
    rng = random.Random(6)

    def run():
        bad = 0
        for _ in range(500):
            parity = rng.randint(0, 1)
            w, x, y, z = (rng.randint(0, 6) * 2 + parity for _ in range(4))
            R, Q, P = (random_brauerian(rng, w, x), random_brauerian(rng, x, y),
                       random_brauerian(rng, y, z))
            bad += not (compose(P, compose(Q, R)) == compose(compose(P, Q), R)
                        and compose(identity(x), R) == R and compose(R, identity(w)) == R
                        and compose(Q, R).is_brauerian and compose(P, Q).is_brauerian)
        return bad

    bad, seconds = timed(run)
    report(6, "Brauer category laws on 500 triples", bad == 0 and seconds < 5, seconds, 5,
           f"{bad} failures")


def test_criterion_07_negation_translation():
    rng = random.Random(7)

    def run():
        bad = 0
        for _ in range(200):
            f = random_term(rng, Theory.PN_NEG, rng.randint(0, 10))
            t, image = typeof(f), f_arrow(f)
            graph = g_arrow(f, Theory.PN_NEG)
            bad += not (check_theory(image, Theory.PN)
                        and typeof(image) == ArrowType(f_object(t.source), f_object(t.target))
                        and g_arrow(image, Theory.PN) == graph
                        and g_arrow(comp(iso_i_inv(t.target), image, iso_i(t.source))) == graph)
        return bad

    bad, seconds = timed(run)
    report(7, "negation-normal-form translation on 200 terms", bad == 0 and seconds < 30,
           seconds, 30, f"{bad} failures")


def test_criterion_08_development():
    rng = random.Random(8)

    def run():
        bad = 0
        for theory in Theory:
            for _ in range(300):
                f = random_term(rng, theory, rng.randint(0, 8))
                d = develop(f)
                bad += not (is_developed(d, primitive_heads=True) and typeof(d) == typeof(f)
                            and g_arrow(d, theory) == g_arrow(f, theory))
        return bad

    bad, seconds = timed(run)
    report(8, "development of 300 terms per theory", bad == 0 and seconds < 20, seconds, 20,
           f"{bad} failures")


def test_criterion_09_rewrite_walks():
    rng = random.Random(9)
    theories = list(Theory)

    def run():
        bad = steps = 0
        for k in range(200):
            theory = theories[k % len(theories)]
            f = random_term(rng, theory, rng.randint(1, 6))
            before = g_arrow(f, theory)
            for _, g in random_walk(rng, f, theory, steps=20):
                steps += 1
                bad += g_arrow(g, theory) != before or typeof(g) != typeof(f)
        return bad, steps

    (bad, steps), seconds = timed(run)
    report(9, "200 rewrite walks of up to 20 steps", bad == 0, seconds,
           detail=f"{steps} steps, {bad} failures")


def test_criterion_10_linking_fuzz():
    rng = random.Random(10)

    def run():
        bad = 0
        for _ in range(500):
            f = random_term(rng, Theory.DS, rng.randint(0, 10))
            bad += bool(lemma_violations(f, OR) or lemma_violations(f, AND))
        for _ in range(500):
            bad += bool(lemma_violations(random_term(rng, Theory.MDS, rng.randint(0, 10)), OR))
        return bad

    bad, seconds = timed(run)
    report(10, "linking conditions on 500 DS and 500 MDS terms", bad == 0, seconds,
           detail=f"{bad} failures")


def test_criterion_11_negative_control():
    verdict, seconds = timed(lambda: equal_in(c_and(p, p), ident(p & p), Theory.DS))
    ok = (not verdict.equal and verdict.reason == "graph-mismatch"
          and verdict.witness == (Endpoint("s", 0), Endpoint("t", 1)))
    report(11, "commutation on p /\\ p is not the identity", ok, seconds, detail=str(verdict))


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
