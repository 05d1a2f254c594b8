import json
from pathlib import Path

import pytest

from prismatic.cactus import EvenCactus, validate_even_cactus, verify_prism_cycle, PrismHamCycle
from prismatic.errors import TheoremViolation
from prismatic.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    parse_graph6,
    petersen_graph,
    random_gnp,
)
from prismatic.invariants import connectivity, independence_number
from prismatic.oracles import hamilton_path, verify_path
from prismatic.pipeline import (
    BRANCH_TAGS,
    Certificate,
    TwoPathConfig,
    _TwoPathEngine,
    certificate_json,
    kappa2_cactus,
    kappa3_cactus,
    prism_ham_certificate,
    segment_attachment,
    to_prism_cycle_certificate,
    verify_certificate,
)

FIXTURES = Path(__file__).parent / "fixtures"
BRANCH_EXAMPLES = json.loads((FIXTURES / "branch_examples.json").read_text())


def test_petersen_hamilton_path():
    g = petersen_graph()
    c = prism_ham_certificate(g)
    assert c.kind == "hamilton_path"
    assert c.trace == ("Direct.hamilton_path",)
    assert verify_certificate(g, c)


def test_k24_case1():
    g = complete_bipartite(2, 4)
    c = prism_ham_certificate(g)
    assert c.kind == "even_cactus"
    assert c.trace[0] == "Case1.cover"
    assert validate_even_cactus(g, EvenCactus.from_json(c.payload))
    assert verify_certificate(g, c)
    p = to_prism_cycle_certificate(g, c)
    assert p.kind == "prism_cycle" and verify_certificate(g, p)


def test_k25_refuted():
    g = complete_bipartite(2, 5)
    c = prism_ham_certificate(g)
    assert c.kind == "refuted_hypothesis"
    assert (c.payload["alpha"], c.payload["kappa"]) == (5, 2)
    assert verify_certificate(g, c)


@pytest.mark.parametrize("k, a", [(3, 6), (4, 8), (3, 5)])
def test_kappa3_bipartite(k, a):
    g = complete_bipartite(k, a)
    c = prism_ham_certificate(g)
    assert c.kind == "even_cactus"
    assert c.trace == ("Case2.cover", "Case2.even_cycle", "Case2.attach")
    assert verify_certificate(g, c)


def test_kappa3_precondition():
    with pytest.raises(ValueError):
        kappa3_cactus(petersen_graph())


def test_kappa2_on_c4_never_reached():
    g = cycle_graph(4)
    assert prism_ham_certificate(g).kind == "hamilton_path"


def test_too_small():
    with pytest.raises(ValueError):
        prism_ham_certificate(empty_graph(1))


def test_k2_boundary():
    c = prism_ham_certificate(complete_graph(2))
    assert c.kind == "hamilton_path" and verify_certificate(complete_graph(2), c)


def test_segment_attachment():
    paths = [(0, 1, 2, 3, 4), (5, 6)]
    att = segment_attachment(paths, [0, 2, 5, 7])
    assert att.hits == ((0, 2), (0,))
    assert att.segments == ((0, 1), (2, 3, 4), (5, 6))
    with pytest.raises(TheoremViolation):
        segment_attachment([(1, 0)], [0, 2, 5, 7])


def _engine_for(example):
    g = parse_graph6(example["graph6"])
    eng = _TwoPathEngine(g, *example["cover"])
    cfg = example["config"]
    config = TwoPathConfig(tuple(cfg["p1"]), tuple(cfg["p2"]), cfg["a1"], cfg["a2"], cfg["b1"], cfg["b2"])
    return g, eng, config


@pytest.mark.parametrize("tag", sorted(BRANCH_EXAMPLES))
def test_each_branch_constructor(tag):
    example = BRANCH_EXAMPLES[tag]
    g, eng, cfg = _engine_for(example)
    res = getattr(eng, example["step"])(cfg)
    assert res is not None
    assert res.trace == [tag]
    if res.path is not None:
        assert verify_path(g, res.path, spanning=True)
    else:
        assert validate_even_cactus(g, res.cactus)


def test_branch_examples_cover_the_ladder():
    ladder = {t for t in BRANCH_TAGS if t.startswith("Case1.") and "Claim1" not in t
              and t not in ("Case1.cover", "Case1.cover_is_hamilton_path", "Case1.gap_fallback")}
    assert ladder <= set(BRANCH_EXAMPLES)


def test_singleton_path_branches():
    # first cover path is a single vertex u: every construction for that shape
    seen = set()
    for seed in range(400):
        g = random_gnp(8, 0.35, seed)
        if connectivity(g)[0] < 2:
            continue
        for u in range(g.n):
            rest = [v for v in range(g.n) if v != u]
            sub, order = g.induced(rest)
            hp = hamilton_path(sub)
            if hp is None:
                continue
            eng = _TwoPathEngine(g, (u,), tuple(order[v] for v in hp))
            res = eng.claim1()
            if res is None:
                continue
            seen.add(res.trace[0])
            if res.path is not None:
                assert verify_path(g, res.path, spanning=True)
            else:
                assert validate_even_cactus(g, res.cactus)
    assert {t for t in BRANCH_TAGS if "Claim1" in t} <= seen


def test_gap_fallback_is_reported():
    g = parse_graph6("F?F~o")
    res = kappa2_cactus(g)
    assert res.trace[-1] == "Case1.gap_fallback"
    assert res.gaps[0]["reason"] == "order-2 cover path"
    assert res.gaps[0]["graph6"] == "F?F~o"
    c = prism_ham_certificate(g)
    assert c.gaps and verify_certificate(g, c)
    assert "gaps" in c.to_json()


def test_kappa2_random_graphs_validate():
    count = 0
    for seed in range(600):
        g = random_gnp(10, 0.35, seed)
        if connectivity(g)[0] != 2 or independence_number(g)[0] != 4:
            continue
        c = prism_ham_certificate(g)
        assert verify_certificate(g, c)
        count += 1
    assert count > 20


def test_verify_certificate_rejects_tampering():
    g = complete_bipartite(2, 4)
    c = prism_ham_certificate(g)
    bad_payload = dict(c.payload)
    bad_payload["cycles"] = [[0, 2, 1]]  # odd cycle smuggled in
    assert not verify_certificate(g, Certificate("even_cactus", bad_payload, c.trace))
    assert not verify_certificate(g, Certificate("even_cactus", c.payload, ()))
    assert not verify_certificate(g, Certificate("no_such_kind", c.payload, c.trace))
    assert not verify_certificate(g, Certificate("refuted_hypothesis", {"alpha": 4, "kappa": 2}, ()))
    assert not verify_certificate(g, Certificate("hamilton_path", {"path": [0, 2, 1]}, ("x",)))
    p = to_prism_cycle_certificate(g, c)
    seq = p.payload["cycle"]
    assert verify_certificate(g, p)
    assert not verify_certificate(g, Certificate("prism_cycle", {"cycle": seq[:-1]}, p.trace))


def test_certificate_json_is_canonical():
    g = complete_bipartite(2, 4)
    a = certificate_json(prism_ham_certificate(g))
    b = certificate_json(prism_ham_certificate(g))
    assert a == b and a.endswith("\n")
    obj = json.loads(a)
    assert set(obj) == {"kind", "payload", "trace"}
    assert Certificate.from_json(obj) == prism_ham_certificate(g)
    flat = [x for cyc in obj["payload"]["cycles"] for x in cyc]
    flat += [x for p in obj["payload"]["paths"] for x in p]
    assert all(type(x) is int for x in flat)


def test_prism_cycle_from_payload():
    g = complete_bipartite(3, 6)
    p = to_prism_cycle_certificate(g, prism_ham_certificate(g))
    assert verify_prism_cycle(g, PrismHamCycle.from_json(p.payload["cycle"]))
