import pytest
from hypothesis import given

from knotiu.braids import braid_closure
from knotiu.diagram import (DiagramError, LinkDiagram, SignMatrixPair, canonical_form, crossing_sign,
                            faces, isomorphic, linking_matrix, mirror, permute_components, reverse_component,
                            validate, writhe)
from knotiu.fixtures import diagram

from strategies import diagrams

HOPF = LinkDiagram.from_pd([(3, 2, 4, 1), (2, 3, 1, 4)], [(1, 2), (3, 4)])
TREFOIL = braid_closure([1, 1, 1])


def test_free_loop_is_valid():
    rep = validate(LinkDiagram.unknot())
    assert rep.ok and LinkDiagram.unknot().n == 1


def test_hopf_fixture():
    assert validate(HOPF).ok
    assert HOPF.n == 2 and HOPF.c == 2
    assert [crossing_sign(HOPF, x) for x in range(2)] == [1, 1]
    assert linking_matrix(HOPF) == [[0, 1], [1, 0]]


def test_duplicate_arc_reported():
    d = LinkDiagram.from_pd([(1, 1, 2, 2), (1, 3, 2, 4)], [(1, 4)], signs=[1, 1])
    rep = validate(d)
    assert not rep.ok
    assert any("duplicate arc" in p for p in rep.problems)


def test_validation_never_raises_on_garbage():
    d = LinkDiagram(((9, 9, 9, 9),), ((1, 2),), (1,))
    assert not validate(d).ok


def test_mirror_negates_signs():
    m = mirror(HOPF)
    assert [crossing_sign(m, x) for x in range(2)] == [-1, -1]


def test_unknown_crossing():
    with pytest.raises(DiagramError):
        crossing_sign(HOPF, 5)


def test_writhe_examples():
    assert writhe(LinkDiagram.unknot()) == 0
    assert writhe(TREFOIL) == 3
    assert writhe(diagram("U")) == 4


def test_u_signs():
    from knotiu.fixtures import load

    fx = load("U")
    assert crossing_sign(fx.diagram, fx.crossing("p")) == -1
    assert crossing_sign(fx.diagram, fx.crossing("q")) == -1


def test_linking_examples():
    t24 = diagram("T(2,4)")
    assert abs(linking_matrix(t24)[0][1]) == 2
    assert linking_matrix(LinkDiagram.unknot(2)) == [[0, 0], [0, 0]]


def test_face_counts():
    assert len(faces(LinkDiagram.unknot())) == 2
    assert len(faces(TREFOIL)) == 5
    assert len(faces(HOPF)) == 4


def test_reverse_knot_keeps_writhe():
    assert writhe(reverse_component(TREFOIL, 1)) == 3
    with pytest.raises(DiagramError):
        reverse_component(TREFOIL, 2)


def test_sign_matrix_pair_rules():
    SignMatrixPair(((1, 0), (0, -1)), ((-1, 0), (0, 1)))
    with pytest.raises(DiagramError):
        SignMatrixPair(((1, 1), (0, 1)), ((1, 1), (0, 1)))
    with pytest.raises(DiagramError):
        SignMatrixPair(((1,),), ((0,),))


@given(diagrams())
def test_writhe_is_sum_of_signs(d):
    assert writhe(d) == sum(crossing_sign(d, x) for x in range(d.c))
    assert abs(writhe(d)) <= d.c


@given(diagrams())
def test_linking_matrix_shape(d):
    lk = linking_matrix(d)
    for i in range(d.n):
        assert lk[i][i] == 0
        for j in range(d.n):
            assert lk[i][j] == lk[j][i]
    if d.n >= 2:
        r = linking_matrix(reverse_component(d, 1))
        assert r[0][1] == -lk[0][1]


@given(diagrams())
def test_random_diagrams_pass_validation(d):
    # the validator includes the per-piece Euler check
    assert validate(d).ok, validate(d).problems


@given(diagrams())
def test_mirror_involution(d):
    m = mirror(d)
    assert isomorphic(mirror(m), d)
    assert all(crossing_sign(m, x) == -crossing_sign(d, x) for x in range(d.c))
    assert writhe(m) == -writhe(d)


@given(diagrams())
def test_canonical_form_ignores_relabeling(d):
    if d.c:
        # rotate arc labels along every component
        r = reverse_component(reverse_component(d, 1), 1)
        assert canonical_form(r) == canonical_form(d)


@given(diagrams(max_components=2))
def test_permute_components(d):
    order = list(range(d.n, 0, -1))
    p = permute_components(d, order)
    assert validate(p).ok
    assert linking_matrix(p) == [[linking_matrix(d)[i - 1][j - 1] for j in order] for i in order]
    assert writhe(p) == writhe(d)
    assert isomorphic(permute_components(p, order), d)
    with pytest.raises(DiagramError):
        permute_components(d, [1] * (d.n + 1))
