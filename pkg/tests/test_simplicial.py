from tropline.simplicial import (
    SimplicialComplex,
    euler_characteristic,
    f_vector,
    fan_validity,
    maximal_faces,
    purity_check,
)


def test_triangle():
    K = SimplicialComplex.from_facets([(0, 1, 2)])
    assert f_vector(K) == [3, 3, 1]
    assert euler_characteristic(K) == 0


def test_point_has_zero_reduced_euler_characteristic():
    assert euler_characteristic(SimplicialComplex.from_facets([(0,)])) == 0


def test_t33_counts(cx):
    K = cx(3, 3)
    assert f_vector(K) == [9, 27, 24]
    assert euler_characteristic(K) == 5


def test_t34_counts(cx):
    assert f_vector(cx(3, 4)) == [12, 54, 108, 78]


def test_t3n_euler_characteristic(cx):
    for n in range(3, 7):
        assert abs(euler_characteristic(cx(3, n))) == 2 ** n - 3


def test_purity(cx):
    for n in range(2, 6):
        assert purity_check(cx(3, n), n - 1)
    assert purity_check(cx(4, 4, "B"), 4)
    K = SimplicialComplex.from_facets([(0, 1, 2), (2, 3)])
    assert not purity_check(K, 2)


def test_maximal_faces_drops_contained_sets():
    assert maximal_faces([(0, 1), (0, 1, 2), (3,)]) == [(0, 1, 2), (3,)]


def test_from_facets_relabels_and_dedups():
    K = SimplicialComplex.from_facets([(5, 7), (7, 5), (7, 9)])
    assert K.vertex_count == 3 and K.facets == ((0, 1), (1, 2))


def test_faces_and_membership():
    K = SimplicialComplex.from_facets([(0, 1, 2), (2, 3)])
    assert K.faces(0) == [(0,), (1,), (2,), (3,)]
    assert K.is_face((2, 0)) and not K.is_face((0, 3)) and K.is_face(())


def test_restrict_keeps_geometry():
    K = SimplicialComplex(4, ((0, 1), (2, 3)), ["a", "b", "c", "d"], ["x", "y"])
    R = K.restrict([1])
    assert R.facets == ((0, 1),) and R.vertices == ["c", "d"] and R.facet_labels == ["y"]


def test_fan_validity_without_labels_is_vacuous_on_vertex_sets():
    assert fan_validity(SimplicialComplex.from_facets([(0, 1, 2), (1, 2, 3)]))


def test_fan_validity_detects_repeated_labels():
    K = SimplicialComplex.from_facets([(0, 1), (1, 2)])
    assert not fan_validity(K, lambda face: len(face))
