"""Acceptance suite: one test per shipped guarantee, each printing a single
PASS/FAIL line (emitted past pytest's capture, so it shows even without -s)."""

import time

import numpy as np
import pytest

from loewy import (
    Arrow,
    Quiver,
    Relation,
    a_dual,
    build_nakayama,
    build_path_algebra,
    capital_n,
    default_corpus,
    dual_layer_iso,
    dual_socle_capital_iso,
    dump_spec,
    expected_delta_table,
    expected_nakayama_shift,
    f_dual,
    find_isomorphism,
    hom_space,
    injective,
    is_symmetric,
    layer_table,
    load_spec,
    nakayama,
    nakayama_spec,
    projective,
    radical_layer,
    radical_n,
    regular_module,
    simple,
    socle_n,
    spec_text,
    verify_adjunction,
    verify_landrock,
    verify_main_theorem,
)
from loewy.cli import main
from loewy.linalg import rank

P = 5


@pytest.fixture
def verdict(capsys):
    def emit(num, name, ok, extra=""):
        tail = f" ({extra})" if extra else ""
        with capsys.disabled():
            print(f"acceptance {num:02d} {name}: {'PASS' if ok else 'FAIL'}{tail}")
        assert ok, f"acceptance criterion {num} ({name}) failed{tail}"

    return emit


def test_criterion_01_delta_tables_under_ten_seconds(verdict):
    t0 = time.perf_counter()
    ok = True
    for k in range(1, 6):
        for ell in range(1, 6):
            a = build_nakayama(k, ell, P)
            table = layer_table([projective(a, i) for i in range(k)], "radical")
            ok = ok and table == expected_delta_table(k, ell)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 10.0
    verdict(1, "delta tables k,l<=5", ok, f"{elapsed:.2f}s")


def test_criterion_02_triple_equality_on_corpus_under_sixty_seconds(verdict):
    t0 = time.perf_counter()
    corpus = default_corpus(seed=0)
    ok = len(corpus) == 16 + 6 + 20
    bad = []
    for name, a in corpus:
        rep = verify_main_theorem(a)
        if rep.status != "pass":
            bad.append(name)
    elapsed = time.perf_counter() - t0
    ok = ok and not bad and elapsed < 60.0
    verdict(2, "hom-dimension triple equality on corpus", ok, f"{elapsed:.2f}s, bad={bad}")


def test_criterion_03_nakayama_shift_witnesses(verdict):
    ok = True
    for k in range(1, 5):
        for ell in range(1, 5):
            a = build_nakayama(k, ell, P)
            for j in range(k):
                target = projective(a, expected_nakayama_shift(k, ell, j))
                r = find_isomorphism(nakayama(projective(a, j)), target)
                ok = ok and r.status == "yes" and r.witness.is_isomorphism()
    verdict(3, "nakayama functor shifts projectives", ok)


def test_criterion_04_symmetry_detection_matches_divisibility(verdict):
    ok = True
    for k in range(1, 5):
        for ell in range(1, 5):
            status = is_symmetric(build_nakayama(k, ell, P)).status
            want = "yes" if ell % k == 0 else "no"
            ok = ok and status == want  # "unknown" counts as failure
    verdict(4, "symmetric iff k divides l", ok)


def test_criterion_05_landrock_on_symmetric_instances(verdict):
    ok = True
    tested = 0
    for k in range(1, 5):
        for ell in range(1, 5):
            if ell % k:
                continue
            rep = verify_landrock(build_nakayama(k, ell, P))
            ok = ok and rep.status == "pass"
            tested += 1
    ok = ok and tested == 8
    verdict(5, "landrock refinement on symmetric grid", ok, f"{tested} instances")


def test_criterion_06_adjunction_round_trips_and_naturality(verdict):
    algebras = [
        build_nakayama(3, 2, P),
        build_nakayama(2, 2, P),
        build_path_algebra(Quiver(3, [Arrow("a", 0, 1), Arrow("b", 1, 2)]), [], 3, P),
    ]
    ok = True
    squares = 0
    trips = 0
    for a in algebras:
        for seed in range(6):
            rep = verify_adjunction(a, sample_size=5, seed=seed)
            ev = dict(rep.checks[0].evidence)
            ok = ok and rep.status == "pass" and ev["failures"] == 0
            squares += ev["naturality_squares"]
            trips += ev["round_trips"]
            if squares >= 50 and trips > 0:
                break
        if squares >= 50:
            break
    ok = ok and squares >= 50 and trips > 0
    verdict(6, "adjunction round trips and naturality", ok, f"{trips} trips, {squares} squares")


def test_criterion_07_duality_isomorphisms_and_dual_layers(verdict):
    ok = True
    for k, ell in [(2, 1), (3, 2), (2, 2), (4, 3)]:
        a = build_nakayama(k, ell, P)
        L = a.loewy_length
        for u in [regular_module(a)] + [projective(a, i) for i in range(k)]:
            for n in range(L + 1):
                eta, xi = dual_socle_capital_iso(u, n)  # constructor checks A^op-linearity
                d = eta.source.dim
                ok = ok and np.array_equal(
                    (eta.matrix @ xi.matrix) % P, np.eye(d, dtype=np.int64)
                )
                ok = ok and np.array_equal(
                    (xi.matrix @ eta.matrix) % P, np.eye(xi.source.dim, dtype=np.int64)
                )
            for n in range(1, L + 1):
                eta, xi = dual_layer_iso(u, n)
                ok = ok and eta.is_isomorphism() and xi.is_isomorphism()
        # layers of the dual projective are the expected dual simples
        for j in range(k):
            ad = a_dual(projective(a, j))
            for n in range(1, L + 1):
                lay = radical_layer(ad, n)
                want = f_dual(simple(a, (j - (n - 1)) % k))
                ok = ok and lay.dim == 1
                ok = ok and len(hom_space(lay, want)) == 1
    verdict(7, "duality isomorphisms and dual projective layers", ok)


def test_criterion_08_structural_invariants(verdict):
    square = build_path_algebra(
        Quiver(4, [Arrow("a", 0, 1), Arrow("b", 1, 3), Arrow("c", 0, 2), Arrow("d", 2, 3)]),
        [Relation.of((1, ("a", "b")), (-1, ("c", "d")))],
        3,
        P,
    )
    ok = True
    for a in (build_nakayama(3, 2, P), square):
        k, L = a.num_vertices, a.loewy_length
        reg = regular_module(a)
        ok = ok and sum(projective(a, i).dim for i in range(k)) == a.dim
        ok = ok and sum(injective(a, i).dim for i in range(k)) == a.dim
        # the module-level radical of the regular module is the algebra radical
        for n in range(L + 1):
            ok = ok and radical_n(reg, n) == a.radical_power(n)
        ok = ok and socle_n(reg, 0).dim == 0 and socle_n(reg, L).dim == a.dim
        chain = [radical_n(reg, n).dim for n in range(L + 1)]
        ok = ok and all(x > y for x, y in zip(chain, chain[1:]))
        mods = [reg] + [simple(a, j) for j in range(k)] + [injective(a, j) for j in range(k)]
        for i in range(k):
            p_i = projective(a, i)
            for v in mods:
                ok = ok and len(hom_space(p_i, v)) == rank(v.action[i], P)
        for v in mods:
            for n in range(L + 1):
                ok = ok and capital_n(v, n).dim == v.dim - radical_n(v, n).dim
    verdict(8, "structural invariants", ok)


def test_criterion_09_cli_golden_and_byte_stable_round_trip(tmp_path, capsys, verdict):
    ok = main(["show", "--nakayama", "3,2", "--module", "P0", "--series", "radical"]) == 0
    ok = ok and capsys.readouterr().out == "S_0\nS_1\nS_2\n"
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    ok = ok and main(["emit-nakayama", "--k", "3", "--l", "2", "--out", str(first)]) == 0
    dump_spec(load_spec(first), second)
    ok = ok and first.read_bytes() == second.read_bytes()
    ok = ok and spec_text(load_spec(first)) == spec_text(nakayama_spec(3, 2))
    verdict(9, "cli golden output and byte-stable specs", ok)
