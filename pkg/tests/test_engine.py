import numpy as np
import pytest

from hyperforge import engine
from hyperforge import errors
from hyperforge import geometry as geo
from hyperforge.constructions import check_B1, check_B2
from hyperforge.iso import isomorphic, is_flag_transitive
from hyperforge.presentations import coxeter_presentation
from hyperforge.toddcox import todd_coxeter, perm_image

A3 = ((1, 3, 2), (3, 1, 3), (2, 3, 1))
B3 = ((1, 4, 2), (4, 1, 3), (2, 3, 1))


def regular_group(matrix, extra=()):
    return perm_image(todd_coxeter(coxeter_presentation(matrix, extra)))


@pytest.fixture(scope="module")
def cube_group():
    return regular_group(B3)


@pytest.fixture(scope="module")
def simplex_group():
    return regular_group(A3)


def test_left_mult_gens(simplex_group):
    pg = simplex_group
    lam = engine.left_mult_gens(pg)
    # left and right multiplication commute: lam_x(p . y) = lam_x(p) . y
    for x in range(pg.ngens):
        for y in range(pg.ngens):
            assert np.array_equal(lam[x][pg.gens[y]], pg.gens[y][lam[x]])
        # left multiplication at the identity gives the generator point
        assert int(lam[x][0]) == int(pg.gens[x][0])


def test_coset_geometry_of_cube_group(cube_group, cube):
    g = engine.coset_geometry(cube_group)
    assert g.type_counts() == (8, 12, 6)
    assert isomorphic(g, cube)


def test_coset_geometry_of_simplex_group(simplex_group, tetrahedron):
    g = engine.coset_geometry(simplex_group)
    assert isomorphic(g, tetrahedron)


def test_requires_regular():
    pq = perm_image(todd_coxeter(coxeter_presentation(A3),
                                 subgens=[(1,), (2,)]))
    with pytest.raises(errors.IncompleteTable):
        engine.coset_geometry(pq)


def test_natural_action_is_flag_transitive(cube_group):
    g = engine.coset_geometry(cube_group)
    act = engine.natural_action(g)
    assert is_flag_transitive(g, act)


def test_natural_action_needs_coset_data(cube):
    with pytest.raises(errors.NotAnAction):
        engine.natural_action(cube)


def test_halving_cube_gives_tetrahedron(cube_group, tetrahedron):
    # the vertex-edge graph of the cube is bipartite: index-2 subgroup
    hg = engine.halving_group(cube_group, (0, 1))
    assert hg.order() == 24
    # the halved generator order puts the facet role at type 1
    gh = geo.relabel_types(engine.coset_geometry(hg), {0: 0, 1: 2, 2: 1})
    assert isomorphic(gh, tetrahedron)


def test_halving_whole_group(simplex_group):
    # tetrahedron vertex-edge graph is K4: odd cycles, no index drop
    hg = engine.halving_group(simplex_group, (0, 1))
    assert hg.order() == 24


def test_parabolic_points(cube_group):
    assert len(engine.parabolic_points(cube_group, [1, 2])) == 6
    assert len(engine.parabolic_points(cube_group, [])) == 1


def test_b1_algebraic_matches_combinatorial(cube_group, hemicube):
    hpg, hgeo = hemicube
    cg = engine.coset_geometry(cube_group)
    assert engine.check_B1_algebraic(cube_group, (0, 1)) \
        == check_B1(cg, (0, 1)) is True
    assert engine.check_B1_algebraic(hpg, (2, 1)) \
        == check_B1(hgeo, (2, 1)) is False


def test_b2_algebraic(cube_group, hemicube):
    hpg, hgeo = hemicube
    cg = engine.coset_geometry(cube_group)
    assert engine.check_B2_algebraic_sufficient(cube_group, (0, 1))
    assert check_B2(cg, (0, 1))
    assert not engine.check_B2_algebraic_sufficient(hpg, (0, 1))
    assert not check_B2(hgeo, (0, 1))


def test_induced_geometry_map_identity(cube_group):
    g = engine.coset_geometry(cube_group)
    ident = [0, 1, 2]
    assert engine.induced_geometry_map(g, g, ident, ident) is not None


def test_induced_geometry_map_self_duality(simplex_group, cube_group):
    gt = engine.coset_geometry(simplex_group)
    rev = [2, 1, 0]
    # the tetrahedron is self-dual, the cube is not
    assert engine.induced_geometry_map(gt, gt, rev, rev) is not None
    gc = engine.coset_geometry(cube_group)
    assert engine.induced_geometry_map(gc, gc, rev, rev) is None


def test_induced_geometry_map_different_orders(simplex_group, cube_group):
    ga = engine.coset_geometry(simplex_group)
    gb = engine.coset_geometry(cube_group)
    assert engine.induced_geometry_map(ga, gb, [0, 1, 2], [0, 1, 2]) is None
