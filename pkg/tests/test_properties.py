from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from turanlab import kernels
from turanlab.canon import canonical_form
from turanlab.counting import automorphism_count, count_copies, count_embeddings, walk_count
from turanlab.graph import chromatic_number, clique_number, new_graph
from turanlab.graph6 import graph6_decode, graph6_encode
from turanlab.multipartite import path_embeddings_multipartite
from turanlab.presets import path


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [p for p, c in zip(pairs, chosen) if c])


@given(graphs(max_n=64))
@settings(max_examples=150, deadline=None)
def test_graph6_round_trip(G):
    assert graph6_decode(graph6_encode(G)) == G


@given(graphs(), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_canonical_form_invariant(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    assert canonical_form(G) == canonical_form(G.relabel(perm))


@given(graphs(max_n=7), graphs(max_n=4))
@settings(max_examples=100, deadline=None)
def test_counts_match_injection_oracle(G, H):
    emb = count_embeddings(H, G)
    assert emb == oracles.injections(H, G)
    assert emb == count_copies(H, G) * automorphism_count(H)
    for b in kernels.available_backends():
        assert count_embeddings(H, G, backend=b) == emb


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_paths_bounded_by_walks(G):
    for ell in range(2, 7):
        assert 2 * count_copies(path(ell), G) <= walk_count(G, ell - 1)


@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_chi_at_least_omega(G):
    assert chromatic_number(G) >= clique_number(G)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5), st.integers(1, 7))
@settings(max_examples=100, deadline=None)
def test_multipartite_backends_agree(sizes, ell):
    values = {path_embeddings_multipartite(sizes, ell, backend=b) for b in kernels.available_backends()}
    assert len(values) == 1
