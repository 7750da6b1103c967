#!/usr/bin/env python3

# Standard libraries
import pytest
import itertools
import textwrap

# Internal libraries
from .test_constants import *
from .classes_mocks import antiprism, triangular_prism
from core.report import CheckStatus
from core.polyhedra import (
    AngleLabel,
    AngleSumViolation,
    CuspType,
    Edge,
    IcpFormatError,
    MalformedPolyhedron,
    MissingEdgeError,
    NonSimpleBoundary,
    PolyhedronCombinatorics,
    UnknownCatalogEntry,
    andreev_check,
    catalog,
    catalog_path,
    classify_cusp,
    compute_invariants,
    face_profile,
    find_isomorphism,
    is_isomorphic,
    load_icp,
    parse_icp,
    serialize_icp,
    validate,
)

########################################################################
#                              Data model                              #
########################################################################


def test_angle_labels():
    assert AngleLabel.parse(6) is AngleLabel.SIXTH
    assert AngleLabel.THIRD.angle == pytest.approx(1 / 3)

    with pytest.raises(ValueError, match="not in"):
        AngleLabel.parse(5)


def test_edge_sorted_faces():
    edge = Edge(3, 1, AngleLabel.RIGHT)
    assert edge.faces == (1, 3)

    with pytest.raises(MalformedPolyhedron):
        Edge(2, 2, AngleLabel.RIGHT)


@pytest.mark.parametrize(
    "labels, cusp_type",
    [
        ((2, 2, 2, 2), CuspType.TYPE_I),
        ((3, 3, 3), CuspType.TYPE_II),
        ((4, 2, 4), CuspType.TYPE_III),
        ((6, 3, 2), CuspType.TYPE_IV),
    ],
)
def test_cusp_types(labels: tuple[int, ...], cusp_type: CuspType):
    assert CuspType.from_labels(labels) is cusp_type


def test_non_euclidean_cusp():
    with pytest.raises(AngleSumViolation, match="angle sum"):
        CuspType.from_labels((2, 3, 4))


EUCLIDEAN_LINKS = {(2, 2, 2, 2), (3, 3, 3), (2, 4, 4), (2, 3, 6)}


@pytest.mark.parametrize("size", [3, 4])
def test_only_euclidean_links_classify(size: int):
    """
    Every label multiset around a cusp of 3 or 4 faces: exactly the four
    Euclidean links are accepted, by the cusp type and by the cusp of a
    model built around it.
    """
    for labels in itertools.combinations_with_replacement((2, 3, 4, 6), size):
        edges = [
            Edge(i, (i + 1) % size, AngleLabel(m)) for i, m in enumerate(labels)
        ]
        P = PolyhedronCombinatorics("LINK", 4, frozenset(edges), (tuple(range(size)),))

        if labels in EUCLIDEAN_LINKS:
            assert CuspType.from_labels(labels).value == labels
            assert classify_cusp(P.cusps[0], P) is CuspType.from_labels(labels)
        else:
            with pytest.raises(AngleSumViolation):
                CuspType.from_labels(labels)
            with pytest.raises(AngleSumViolation):
                classify_cusp(P.cusps[0], P)


def test_duplicate_cusp_rejected():
    """
    A cusp listed twice, even rotated or reversed, is refused.
    """
    P = catalog("P1")

    with pytest.raises(MalformedPolyhedron, match="Duplicate cusp"):
        PolyhedronCombinatorics("DUP", 4, P.edges, P.cusps + ((2, 1, 0),))


def test_missing_edge_lookup():
    P = triangular_prism()

    assert not P.has_edge(0, 1)
    with pytest.raises(MissingEdgeError):
        P.label(0, 1)


########################################################################
#                              ICP format                              #
########################################################################


def test_catalog_files_parse(catalog_model: PolyhedronCombinatorics):
    P = load_icp(catalog_path(catalog_model.name))

    assert P == catalog_model
    assert parse_icp(serialize_icp(P)) == P


def test_serialized_layout():
    text = serialize_icp(catalog("P1"))
    lines = text.splitlines()

    assert lines[:3] == ["name P1", "faces 4", "edge 0 1 3"]
    assert len([line for line in lines if line.startswith("cusp")]) == 4
    assert text.endswith("\n")


def test_comments_and_blanks_ignored():
    text = textwrap.dedent(
        """\
        # leading comment
        name T

        faces 4   # inline comment
        """
    ) + "\n".join(serialize_icp(catalog("P2")).splitlines()[2:])

    P = parse_icp(text)
    assert P.name == "T"
    assert len(P.edges) == 6


def test_malformed_file(arrange_assets: None):
    with pytest.raises(IcpFormatError, match="line 4") as e:
        load_icp(TEST_MALFORMED_FILE)
    assert e.value.line == TEST_MALFORMED_LINE


@pytest.mark.parametrize(
    "text, line",
    [
        ("faces 4\n", 1),
        ("name A B\nfaces 4\n", 1),
        ("name A\nfaces 3\n", 2),
        ("name A\nfaces 4\nvertex 0 1\n", 3),
        ("name A\nfaces 4\nedge 0 1 2\nedge 1 0 2\n", 4),
        ("name A\nfaces 4\nedge 0 1 2\nedge 0 1 3\n", 4),
        ("name A\nfaces 4\nedge 0 x 2\n", 3),
        ("name A\nfaces 4\ncusp 0 1 2 3 0\n", 3),
        ("name A\nfaces 4\ncusp 0 1 7\n", 3),
        ("name A\nfaces 4\ncusp 0 1 2\ncusp 1 2 0\n", 4),
    ],
)
def test_parse_errors(text: str, line: int):
    with pytest.raises(IcpFormatError) as e:
        parse_icp(text)
    assert e.value.line == line


def test_missing_file():
    with pytest.raises(OSError):
        load_icp("does/not/exist.icp")


########################################################################
#                              Invariants                              #
########################################################################


def test_catalog_invariants(catalog_model: PolyhedronCombinatorics):
    iv = compute_invariants(catalog_model)
    assert (
        iv.f, iv.c, iv.e, iv.e2, iv.e3, iv.e4, iv.e6, iv.c8, iv.c9, iv.c10, iv.c11
    ) == CATALOG_INVARIANTS[catalog_model.name]
    assert iv.is_right_angled == catalog_model.is_right_angled


def test_invariants_raise_on_bad_cusp(arrange_assets: None):
    with pytest.raises(AngleSumViolation):
        compute_invariants(load_icp(TEST_CORRUPTED_FILE))


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_antiprism_invariants(n: int):
    iv = compute_invariants(antiprism(n))

    assert (iv.f, iv.c, iv.e) == (2 * n + 2, 2 * n, 4 * n)
    assert iv.c8 == 2 * n
    assert iv.is_right_angled


def test_face_profile():
    profile = face_profile(catalog("P1"), 0)

    assert profile.boundary_faces == (1, 2, 3)
    assert profile.boundary_labels == (3, 2, 6)
    assert profile.cusp_count == 3
    assert (profile.e(2), profile.e(3), profile.e(4), profile.e(6)) == (1, 1, 0, 1)
    assert profile.c(6, 2) == profile.c(3, 6) == profile.c(2, 3) == 1
    assert profile.c(2, 2) == 0


def test_face_profile_right_angled():
    profile = face_profile(catalog("OCT"), 0)

    assert len(profile.boundary_faces) == 3
    assert profile.c(2, 2) == profile.cusp_count == 3


def test_face_profile_out_of_range():
    with pytest.raises(ValueError):
        face_profile(catalog("P1"), 4)


def test_face_profile_open_boundary():
    P = catalog("P1")
    opened = PolyhedronCombinatorics("OPEN", 4, P.edges, P.cusps[1:])

    with pytest.raises(NonSimpleBoundary):
        face_profile(opened, 1)


########################################################################
#                              Validation                              #
########################################################################


def test_catalog_validates(catalog_model: PolyhedronCombinatorics):
    report = validate(catalog_model)

    assert report.verdict, report.render()
    assert report.title == f"validation of {catalog_model.name}"
    assert report.status_of("euler") is CheckStatus.PASS


def test_hypotheses(catalog_model: PolyhedronCombinatorics):
    """
    Inequalities tied to the right angle hypothesis are skipped on the
    other family.
    """
    report = validate(catalog_model)

    if catalog_model.is_right_angled:
        assert report.status_of("cusp_lower_bound") is CheckStatus.SKIPPED
        assert report.status_of("cusp_face_balance") is CheckStatus.SKIPPED
        assert report.status_of("right_angled_cusps") is CheckStatus.PASS
    else:
        assert report.status_of("cusp_lower_bound") is CheckStatus.PASS
        assert report.status_of("right_angled_cusps") is CheckStatus.SKIPPED


def test_every_rule_reported():
    ids = [r.check_id for r in validate(catalog("P3")).results]

    assert ids[:6] == [
        "minimum_size",
        "cusp_edges",
        "edge_coverage",
        "face_cusps",
        "face_boundaries",
        "cusp_types",
    ]
    assert ids[6:16] == [
        "euler",
        "edge_count",
        "right_edges",
        "third_edges",
        "quarter_edges",
        "sixth_edges",
        "cusp_count",
        "edge_labels",
        "right_cusp_count",
        "triangular_cusps",
    ]
    assert ids[-1] == "mixed_cusp_bound"


def test_corrupted_model(arrange_assets: None):
    report = validate(load_icp(TEST_CORRUPTED_FILE))

    assert not report.verdict
    assert report.status_of("cusp_types") is CheckStatus.FAIL
    assert "angle sum" in (report.get("cusp_types").detail or "")


def test_missing_cusp_edge():
    P = catalog("P1")
    edges = frozenset(e for e in P.edges if e.faces != (0, 1))
    report = validate(PolyhedronCombinatorics("HOLE", 4, edges, P.cusps))

    assert report.status_of("cusp_edges") is CheckStatus.FAIL
    assert report.status_of("euler") is CheckStatus.FAIL


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_antiprisms_validate(n: int):
    assert validate(antiprism(n)).verdict


########################################################################
#                         Realizability checks                         #
########################################################################


def test_catalog_realizable(catalog_model: PolyhedronCombinatorics):
    report = andreev_check(catalog_model)

    assert report.verdict, report.render()
    assert report.status_of("andreev_a") is CheckStatus.VACUOUS


def test_prism_not_realizable(arrange_assets: None):
    P = load_icp(TEST_PRISM_FILE)
    assert validate(P).verdict

    report = andreev_check(P)
    assert not report.verdict
    assert report.status_of("andreev_d") is CheckStatus.FAIL
    assert "(2, 3, 4)" in (report.get("andreev_d").detail or "")


def test_simplex_circuits_vacuous():
    report = andreev_check(catalog("P1"))

    assert report.status_of("andreev_d") is CheckStatus.VACUOUS
    assert report.status_of("andreev_f") is CheckStatus.VACUOUS
    assert "tetrahedron" in (report.get("andreev_a").detail or "")


########################################################################
#                             Isomorphism                              #
########################################################################


def test_antiprism_is_octahedron():
    assert is_isomorphic(antiprism(3), catalog("OCT"))


def test_relabeled_model_isomorphic():
    P = catalog("P3")
    Q = P.relabeled([2, 0, 3, 1], name="P3_RELABELED")

    mapping = find_isomorphism(P, Q)
    assert mapping is not None
    for edge in P.edges:
        assert Q.label(mapping[edge.face_a], mapping[edge.face_b]) == edge.label


@pytest.mark.parametrize("a, b", [("P1", "P2"), ("P2", "P3"), ("P4", "P5")])
def test_different_labels_not_isomorphic(a: str, b: str):
    assert find_isomorphism(catalog(a), catalog(b)) is None


def test_different_sizes_not_isomorphic():
    assert not is_isomorphic(antiprism(4), catalog("OCT"))


########################################################################
#                               Catalog                                #
########################################################################


def test_unknown_catalog_entry():
    with pytest.raises(UnknownCatalogEntry, match="P9"):
        catalog("P9")


def test_catalog_names(catalog_model: PolyhedronCombinatorics):
    assert catalog_model.name in CATALOG
    assert catalog_model.is_simplex == (catalog_model.face_count == 4)
