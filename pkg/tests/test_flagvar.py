from fractions import Fraction

import pytest

from dualis.exact import DomainError
from dualis.flagvar import (
    _dot,
    _perm_sums,
    _perm_sums_bruteforce,
    adjoint_discriminant_degrees,
    build_root_system,
    defect_flag,
    degree_dual_gb,
    dim_flag,
    nef_morphism_target,
    nef_value,
    maximal_parabolic_table,
)


ALL_TYPES = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 5), ("A", 8),
    ("B", 2), ("B", 4), ("B", 6),
    ("C", 2), ("C", 3), ("C", 5),
    ("D", 3), ("D", 4), ("D", 5), ("D", 7),
    ("E", 6), ("E", 7), ("E", 8),
    ("F", 4), ("G", 2),
]


def test_positive_root_counts():
    expect = {
        "A": lambda n: n * (n + 1) // 2,
        "B": lambda n: n * n,
        "C": lambda n: n * n,
        "D": lambda n: n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get,
        "F": {4: 24}.get,
        "G": {2: 6}.get,
    }
    for kind, rank in ALL_TYPES:
        rs = build_root_system(kind, rank)
        assert len(rs.positive) == expect[kind](rank), (kind, rank)


def test_fundamental_weights_dual_to_coroots():
    for kind, rank in ALL_TYPES:
        rs = build_root_system(kind, rank)
        for i, w in enumerate(rs.fundamental):
            for j, a in enumerate(rs.simple):
                v = 2 * _dot(w, a) / _dot(a, a)
                assert v == (1 if i == j else 0)


def test_positive_roots_have_integer_coordinates():
    for kind, rank in ALL_TYPES:
        rs = build_root_system(kind, rank)
        for coords in rs.pos_coords:
            assert all(isinstance(c, int) and c >= 0 for c in coords)
            assert sum(coords) >= 1


def test_two_rho_pairing():
    # the sum of all positive roots pairs to 2 with every simple coroot
    for kind, rank in ALL_TYPES:
        rs = build_root_system(kind, rank)
        total = [Fraction(0)] * len(rs.simple[0])
        for b in rs.positive:
            total = [x + y for x, y in zip(total, b)]
        for a in rs.simple:
            assert 2 * _dot(total, a) / _dot(a, a) == 2


def test_inadmissible_types():
    for kind, rank in (("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5),
                       ("E", 9), ("F", 3), ("G", 3), ("H", 2)):
        with pytest.raises(DomainError):
            build_root_system(kind, rank)


def test_dim_flag_grassmannians():
    for l in range(1, 9):
        rs = build_root_system("A", l)
        for i in range(1, l + 1):
            assert dim_flag(rs, (i,)) == i * (l + 1 - i)


def test_dim_flag_full_flag():
    rs = build_root_system("A", 3)
    assert dim_flag(rs, (1, 2, 3)) == 6  # all positive roots


def test_table_type_a():
    for l in range(1, 9):
        for i, d, tau in maximal_parabolic_table("A", l):
            assert d == i * (l + 1 - i)
            assert tau == l + 1


def test_table_type_b():
    for l in range(2, 9):
        for i, d, tau in maximal_parabolic_table("B", l):
            if i < l:
                assert d == i * (4 * l + 1 - 3 * i) // 2
                assert tau == 2 * l - i
            else:
                assert d == l * (l + 1) // 2
                assert tau == 2 * l


def test_table_type_c():
    for l in range(2, 9):
        for i, d, tau in maximal_parabolic_table("C", l):
            assert d == i * (4 * l + 1 - 3 * i) // 2
            assert tau == 2 * l - i + 1


def test_table_type_d():
    for l in range(4, 9):
        for i, d, tau in maximal_parabolic_table("D", l):
            if i <= l - 2:
                assert d == i * (4 * l - 1 - 3 * i) // 2
                assert tau == 2 * l - i - 1
            else:
                assert d == l * (l - 1) // 2
                assert tau == 2 * l - 2


def test_table_exceptional():
    assert maximal_parabolic_table("G", 2) == [(1, 5, 5), (2, 5, 3)]
    assert maximal_parabolic_table("F", 4) == [(1, 15, 8), (2, 20, 5), (3, 20, 7), (4, 15, 11)]
    assert maximal_parabolic_table("E", 6) == [
        (1, 16, 12), (2, 21, 11), (3, 25, 9), (4, 29, 7), (5, 25, 9), (6, 16, 12),
    ]
    assert maximal_parabolic_table("E", 7) == [
        (1, 33, 17), (2, 42, 14), (3, 47, 11), (4, 53, 8), (5, 50, 10),
        (6, 42, 13), (7, 27, 18),
    ]
    assert maximal_parabolic_table("E", 8) == [
        (1, 78, 23), (2, 92, 17), (3, 98, 13), (4, 106, 9), (5, 104, 11),
        (6, 97, 14), (7, 83, 19), (8, 57, 29),
    ]


def test_nef_value_examples():
    assert nef_value(build_root_system("G", 2), (2,), {2: 1}) == 3
    for l in range(2, 7):
        assert nef_value(build_root_system("C", l), (1,), {1: 1}) == 2 * l
    assert nef_value(build_root_system("F", 4), (4,), {4: 1}) == 11


def test_nef_value_scales_inversely():
    rs = build_root_system("B", 3)
    base = nef_value(rs, (2,), {2: 1})
    assert nef_value(rs, (2,), {2: 3}) == Fraction(base, 3)


def test_nef_morphism_target():
    rs2 = build_root_system("A", 2)
    # on a maximal parabolic the morphism contracts to a point
    assert nef_morphism_target(rs2, (1,), {1: 5}) == ()
    # full flag of the plane with the minimal ample weight: both roots tie
    assert nef_value(rs2, (1, 2), {1: 1, 2: 1}) == 2
    assert nef_morphism_target(rs2, (1, 2), {1: 1, 2: 1}) == ()
    # asymmetric weight on the 3-space flag: only one root attains the max
    rs3 = build_root_system("A", 3)
    assert nef_morphism_target(rs3, (1, 3), {1: 2, 3: 1}) == (1,)


def test_defect_projective_space():
    for l in range(1, 6):
        rs = build_root_system("A", l)
        assert defect_flag([(rs, (1,), {1: 1})]) == l
        assert defect_flag([(rs, (l,), {l: 1})]) == l


def test_defect_even_grassmannian():
    # planes in odd-dimensional space: defect 2 when l is even >= 4
    assert defect_flag([(build_root_system("A", 4), (2,), {2: 1})]) == 2
    assert defect_flag([(build_root_system("A", 6), (2,), {2: 1})]) == 2
    assert defect_flag([(build_root_system("A", 6), (5,), {5: 1})]) == 2
    assert defect_flag([(build_root_system("A", 5), (2,), {2: 1})]) == 0
    assert defect_flag([(build_root_system("A", 3), (2,), {2: 1})]) == 0


def test_defect_symplectic_and_spinor():
    assert defect_flag([(build_root_system("C", 3), (1,), {1: 1})]) == 5
    assert defect_flag([(build_root_system("C", 5), (1,), {1: 1})]) == 9
    assert defect_flag([(build_root_system("B", 4), (4,), {4: 1})]) == 4
    assert defect_flag([(build_root_system("D", 5), (4,), {4: 1})]) == 4
    assert defect_flag([(build_root_system("D", 5), (5,), {5: 1})]) == 4
    assert defect_flag([(build_root_system("B", 2), (2,), {2: 1})]) == 3


def test_defect_zero_cases():
    rs = build_root_system("A", 3)
    # non-maximal parabolics never have positive defect
    assert defect_flag([(rs, (1, 2), {1: 1, 2: 1})]) == 0
    # re-embedding by any higher multiple kills the defect
    for k in (2, 3, 5):
        assert defect_flag([(rs, (1,), {1: k})]) == 0
    # quadrics and most Grassmannians are not on the list
    assert defect_flag([(build_root_system("B", 3), (1,), {1: 1})]) == 0
    assert defect_flag([(build_root_system("E", 6), (1,), {1: 1})]) == 0


def test_defect_products():
    a3 = build_root_system("A", 3)
    a1 = build_root_system("A", 1)
    f1 = (a3, (1,), {1: 1})
    f2 = (a1, (1,), {1: 1})
    assert defect_flag([f1, f2]) == 2  # 3 - 1
    assert defect_flag([f2, f1]) == 2  # order-independent
    # the big factor's defect must clear the rest's dimension
    a2 = build_root_system("A", 2)
    assert defect_flag([(a2, (1,), {1: 1}), f2]) == 1  # 2 - 1
    assert defect_flag([f2, f2]) == 0  # 1 - 1
    assert defect_flag([(a2, (1,), {1: 2}), f2]) == 0  # no defective factor


def test_defect_parity_and_nef_identity():
    # every positive-defect case obeys def = 2 tau - 2 - dim and shares
    # parity with the dimension
    cases = [
        ("A", 4, 1), ("A", 4, 2), ("A", 6, 2), ("C", 3, 1), ("C", 4, 1),
        ("B", 4, 4), ("D", 5, 4), ("D", 5, 5), ("B", 2, 2), ("A", 5, 1),
    ]
    for kind, l, i in cases:
        rs = build_root_system(kind, l)
        d = defect_flag([(rs, (i,), {i: 1})])
        if d == 0:
            continue
        dim = dim_flag(rs, (i,))
        tau = nef_value(rs, (i,), {i: 1})
        assert d == 2 * tau - 2 - dim, (kind, l, i)
        assert d % 2 == dim % 2, (kind, l, i)


def test_ample_weight_validation():
    rs = build_root_system("A", 2)
    with pytest.raises(DomainError, match="non-ample"):
        nef_value(rs, (1,), {1: 0})
    with pytest.raises(DomainError, match="non-ample"):
        nef_value(rs, (1,), {2: 1})
    with pytest.raises(DomainError, match="non-ample"):
        defect_flag([(rs, (1, 2), {1: 1})])
    with pytest.raises(DomainError):
        nef_value(rs, (), {})
    with pytest.raises(DomainError):
        dim_flag(rs, (3,))


def test_adjoint_discriminant_degrees():
    assert adjoint_discriminant_degrees("A", 2) == (6, 0)
    assert adjoint_discriminant_degrees("G", 2) == (6, 6)
    assert adjoint_discriminant_degrees("B", 2) == (4, 4)
    assert adjoint_discriminant_degrees("E", 6) == (72, 0)
    assert adjoint_discriminant_degrees("C", 3) == (6, 12)
    assert adjoint_discriminant_degrees("B", 3) == (12, 6)
    assert adjoint_discriminant_degrees("F", 4) == (24, 24)


def test_adjoint_degrees_sum_to_root_count():
    for kind, rank in ALL_TYPES:
        long_, short = adjoint_discriminant_degrees(kind, rank)
        rs = build_root_system(kind, rank)
        assert long_ + short == 2 * len(rs.positive)


def test_perm_sums_against_bruteforce():
    m = [
        [Fraction(2), Fraction(1), Fraction(0)],
        [Fraction(1, 2), Fraction(3), Fraction(-1)],
        [Fraction(0), Fraction(1, 3), Fraction(1)],
    ]
    assert _perm_sums(m) == _perm_sums_bruteforce(m)
    rs = build_root_system("A", 2)
    rho = tuple(sum(b[t] for b in rs.positive) / 2 for t in range(3))
    mat = []
    for bi in rs.positive:
        cv = rs.coroot(bi)
        mat.append([_dot(cv, bj) / _dot(cv, rho) for bj in rs.positive])
    assert _perm_sums(mat) == _perm_sums_bruteforce(mat)


def test_degree_dual_gb_a2():
    out = degree_dual_gb("A", 2)
    assert out["applicable"]
    assert out["plain_sum"] == 90
    assert abs(out["alternating_sum"]) == 6
    assert out["degree"] == 6


def test_degree_dual_gb_a1_degenerate():
    out = degree_dual_gb("A", 1)
    assert not out["applicable"]
    assert out["degree"] is None
    assert out["alternating_sum"] == 0


def test_degree_dual_gb_b2_documents_both():
    out = degree_dual_gb("B", 2)
    assert out["applicable"]
    assert out["degree"] == abs(out["alternating_sum"])
    assert out["plain_sum"] != out["alternating_sum"]


def test_degree_dual_gb_rank_cap():
    with pytest.raises(DomainError, match="rank cap"):
        degree_dual_gb("A", 4)
    with pytest.raises(DomainError, match="rank cap"):
        degree_dual_gb("B", 3)
