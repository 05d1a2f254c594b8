"""Acceptance criteria 1-9, one PASS/FAIL line each (see the summary at the end of the run)."""
import hashlib
import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import naive
from prismatic.cactus import prism_ham_from_cactus, random_even_cactus, verify_prism_cycle
from prismatic.campaign import counterexample_check, load_allowlist
from prismatic.graph import cartesian_cycle, from_edge_list, prism, product_vertex
from prismatic.invariants import INFINITE, connectivity, independence_number, toughness
from prismatic.oracles import hamilton_cycle, verify_cycle
from prismatic.pipeline import prism_ham_certificate, to_prism_cycle_certificate, verify_certificate
from prismatic.products import (
    BoundedTree,
    cyclic_product_certificate,
    toughness_hamilton_check,
    tree_cycle_ham,
    ttree_to_twalk,
    twalk_to_tree,
    verify_product_cycle,
)
from prismatic.rng import Xoshiro256

ROOT = Path(__file__).resolve().parent.parent
ALLOW = ROOT / "allowlists" / "triaged_gaps.json"


def _prism_cycle_ok(g, cert):
    """Independent second check: walk the explicit prism graph."""
    cyc = to_prism_cycle_certificate(g, cert).payload["cycle"]
    flat = [product_vertex(v, lvl, g.n) for v, lvl in cyc]
    return verify_cycle(prism(g), flat, spanning=True)


def test_criterion_1_prism_sweep(acceptance):
    allow = load_allowlist(str(ALLOW))
    checked, expected, bad = 0, 0, []
    allowed, unexplained = set(), set()
    for n in range(2, 9):
        for line, g in naive.fixture_graphs(n):
            expected += naive.alpha(g) <= 2 * naive.kappa(g)
            a, _ = independence_number(g)
            k, _ = connectivity(g)
            if a > 2 * k:
                continue
            cert = prism_ham_certificate(g)
            checked += 1
            if not (verify_certificate(g, cert) and _prism_cycle_ok(g, cert)):
                bad.append(line)
            for gap in cert.gaps:
                (allowed if gap["graph6"] in allow else unexplained).add(gap["graph6"])
    ok = checked == expected and not bad and not unexplained
    acceptance(1, ok, f"{checked} graphs with alpha <= 2 kappa ({expected} by brute force), {len(bad)} unverified, "
                      f"{len(allowed)} triaged gaps {sorted(allowed)}, {len(unexplained)} unexplained")


def test_criterion_2_random_cacti(acceptance):
    good = 0
    sizes = set()
    for seed in range(1000):
        g, h = random_even_cactus(seed, max_vertices=30)
        sizes.add(g.n)
        c = prism_ham_from_cactus(g, h)
        if verify_prism_cycle(g, c):
            good += 1
    acceptance(2, good == 1000 and max(sizes) <= 30,
               f"{good}/1000 cacti spliced into verified prism cycles (n from {min(sizes)} to {max(sizes)})")


def test_criterion_3_sharpness(acceptance):
    out = []
    ok = True
    for k, a in ((2, 5), (3, 7)):
        r = counterexample_check(k, a)
        ok &= r["confirmed"] and not r["prism_hamiltonian"] and r["cut_components"] == a
        out.append(f"K{k},{a}: prism hamiltonian={r['prism_hamiltonian']}, "
                   f"cut {r['cut_size']} -> {r['cut_components']} components")
    acceptance(3, ok, "; ".join(out))


def test_criterion_4_tree_products_both_directions(acceptance):
    trees = [g for n in range(1, 9) for _, g in naive.fixture_graphs(n) if naive.is_tree(g)]
    built = refused = 0
    ok = True
    for tree in trees:
        for t in (3, 4):
            if tree.max_degree() <= t:
                cyc = tree_cycle_ham(tree, t)
                ok &= verify_product_cycle(tree, t, cyc)
                built += 1
            else:
                try:
                    tree_cycle_ham(tree, t)
                    ok = False
                except ValueError:
                    pass
                ok &= hamilton_cycle(cartesian_cycle(tree, t)) is None
                refused += 1
    acceptance(4, ok and refused > 0, f"{len(trees)} trees, {built} cycles verified, "
                                      f"{refused} refusals confirmed non-Hamiltonian by the oracle")


def _random_tree(rng, n, t):
    # random attachment with a degree cap keeps every instance a valid t-tree
    parent = [-1] + [0] * (n - 1)
    deg = [0] * n
    for v in range(1, n):
        choices = [u for u in range(v) if deg[u] < t]
        u = rng.choice(choices)
        parent[v] = u
        deg[u] += 1
        deg[v] += 1
    perm = list(range(n))
    rng.shuffle(perm)
    new = [0] * n
    for v in range(n):
        new[perm[v]] = -1 if parent[v] < 0 else perm[parent[v]]
    return BoundedTree(tuple(new), t)


def test_criterion_5_walk_tree_conversions(acceptance):
    rng = Xoshiro256(20240605)
    ok = True
    count = 0
    for _ in range(500):
        n = rng.randint(2, 30)
        t = rng.randint(2, 5)
        tree = _random_tree(rng, n, t)
        walk = ttree_to_twalk(tree)
        visits = walk.visits()
        degs = tree.degrees()
        ok &= all(visits[v] == degs[v] <= t for v in range(n))
        # host graph: the tree plus random chords, so the walk lives in a bigger graph
        extra = {(rng.randbelow(n), rng.randbelow(n)) for _ in range(n)}
        host = from_edge_list(n, tree.edges() + [(a, b) for a, b in extra if a != b])
        back = twalk_to_tree(host, walk)
        ok &= back.is_valid(host) and back.max_degree() <= t + 1
        count += 1
    acceptance(5, ok and count == 500, f"{count} seeded instances: visits == degree <= t, round trip max degree <= t+1")


def test_criterion_6_cyclic_products(acceptance):
    applicable = 0
    ok = True
    for n in range(1, 8):
        for _, g in naive.fixture_graphs(n):
            a, _ = independence_number(g)
            k, _ = connectivity(g)
            for t in (3, 4):
                res = cyclic_product_certificate(g, t)
                if a <= (t - 1) * k:
                    applicable += 1
                    ok &= res is not None and verify_product_cycle(g, t, res.sequence)
                else:
                    ok &= res is None
    acceptance(6, ok, f"{applicable} (graph, t) pairs with alpha <= (t-1) kappa, all product cycles verified")


def test_criterion_7_toughness_bounds(acceptance):
    claims_i = claims_ii = violations = 0
    for n in range(3, 9):
        for line, g in naive.fixture_graphs(n):
            rep = toughness_hamilton_check(g)
            tough = rep.toughness
            assert tough == INFINITE or isinstance(tough, Fraction)
            claims_i += rep.hamilton_bound
            claims_ii += rep.prism_bound
            if rep.violation:
                violations += 1
    acceptance(7, violations == 0, f"(i) held on {claims_i} graphs, (ii) on {claims_ii}, {violations} violations")


def test_criterion_8_invariants_vs_naive(acceptance):
    mismatches = 0
    total = 0
    for n in range(1, 8):
        for _, g in naive.fixture_graphs(n):
            total += 1
            ref_t = naive.toughness(g)
            if (independence_number(g)[0] != naive.alpha(g) or connectivity(g)[0] != naive.kappa(g)
                    or toughness(g)[0] != (INFINITE if ref_t is None else ref_t)):
                mismatches += 1
    acceptance(8, mismatches == 0 and total == 1252, f"{total} graphs, {mismatches} mismatches")


def _cli_outputs(tmp, tag, hashseed, jobs):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    fixtures = ROOT / "tests" / "fixtures"
    stream = tmp / "all.g6"
    if not stream.exists():
        stream.write_text("".join((fixtures / f"graphs_n{n}.g6").read_text() for n in range(2, 8)))
    runs = {
        "theorem3": ["verify", "--mode", "theorem3", "--input", str(stream), "--allow-gaps", str(ALLOW)],
        "audit": ["verify", "--mode", "audit", "--gen", "gnp n=10 p=0.4 count=150 seed=11"],
        "prop9": ["verify", "--mode", "prop9", "--t", "3", "--gen", "gnp n=9 p=0.5 count=100 seed=5"],
        "prop10": ["verify", "--mode", "prop10", "--gen", "gnp n=8 p=0.6 count=100 seed=3"],
    }
    digests, codes = {}, []
    for name, argv in runs.items():
        out = tmp / f"{tag}-{name}.jsonl"
        proc = subprocess.run([sys.executable, "-m", "prismatic.cli", *argv, "--report", str(out),
                               "--jobs", str(jobs)], env=env, check=False, capture_output=True)
        codes.append(proc.returncode)
        digests[name] = hashlib.sha256(out.read_bytes()).hexdigest()
    for g6 in ("G?`F~{", "E?~o", "I?AAD@O[O"):
        gfile = tmp / f"{tag}-{g6}.g6"
        gfile.write_text(g6 + "\n")
        cert = tmp / f"{tag}-{g6}.json"
        proc = subprocess.run([sys.executable, "-m", "prismatic.cli", "cert", "--graph", str(gfile), "--out", str(cert)],
                              env=env, check=False, capture_output=True)
        codes.append(proc.returncode)
        digests["cert " + g6] = hashlib.sha256(cert.read_bytes()).hexdigest()
    return digests, codes


def test_criterion_9_determinism(acceptance, tmp_path):
    a, codes_a = _cli_outputs(tmp_path, "a", 0, 1)
    b, codes_b = _cli_outputs(tmp_path, "b", 4242, 3)
    same = [k for k in a if a[k] == b[k]]
    clean = not any(codes_a + codes_b)
    acceptance(9, len(same) == len(a) and clean,
               f"{len(same)}/{len(a)} reports and certificates byte-identical across hash seeds "
               f"and --jobs 1 vs 3, exit codes {sorted(set(codes_a + codes_b))}")
