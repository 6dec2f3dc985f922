import itertools
import random

import oracles
from turanlab.canon import (
    automorphism_generators,
    canonical_form,
    canonical_labeling,
    orbit,
    same_orbit,
)
from turanlab.counting import automorphism_count
from turanlab.presets import complete, cycle, path, petersen
from turanlab.turan import complete_multipartite


def test_examples():
    C4 = cycle(4)
    assert canonical_form(C4) == canonical_form(C4.relabel([2, 0, 3, 1]))
    assert canonical_form(C4) != canonical_form(path(4))
    assert canonical_form(complete_multipartite([1, 3])) != canonical_form(path(4))


def test_labeling_is_permutation():
    G = petersen()
    lab = canonical_labeling(G)
    assert sorted(lab) == list(range(10))


def test_invariant_under_relabelling():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 12)
        G = oracles.random_graph(n, rng.random(), rng)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(G) == canonical_form(G.relabel(perm))


def test_agrees_with_pairwise_isomorphism_on_five_vertices():
    graphs = list(oracles.all_labelled_graphs(5))
    rng = random.Random(1)
    sample = rng.sample(graphs, 120)
    forms = [canonical_form(G) for G in sample]
    for i, j in itertools.combinations(range(len(sample)), 2):
        assert (forms[i] == forms[j]) == oracles.isomorphic(sample[i], sample[j])


def test_class_count_six_vertices():
    forms = {canonical_form(G) for G in oracles.all_labelled_graphs(6)}
    assert len(forms) == len(oracles.brute_force_classes(6)) == 156


def test_generators_are_automorphisms_and_generate_group():
    for G in [petersen(), cycle(6), complete_multipartite([2, 3]), path(5), complete(4)]:
        gens = automorphism_generators(G)
        edges = set(G.edges())
        for g in gens:
            assert {tuple(sorted((g[u], g[v]))) for u, v in edges} == edges
        # closure size equals |Aut(G)|
        group = {tuple(range(G.n))}
        frontier = list(group)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = tuple(g[x[i]] for i in range(G.n))
                if y not in group:
                    group.add(y)
                    frontier.append(y)
        assert len(group) == automorphism_count(G)


def test_orbits():
    G = path(5)
    assert orbit(G, 0) == 0b10001
    assert orbit(G, 2) == 0b00100
    assert same_orbit(G, 1, 3)
    assert not same_orbit(G, 0, 2)
    S = complete_multipartite([1, 3])
    assert same_orbit(S, 1, 3) and not same_orbit(S, 0, 1)


def test_colored_forms_respect_colors():
    G = cycle(4)
    a = canonical_form(G, [0, 1, 0, 1])
    b = canonical_form(G, [0, 0, 1, 1])
    assert a != b
    assert a == canonical_form(G, [1, 0, 1, 0])
