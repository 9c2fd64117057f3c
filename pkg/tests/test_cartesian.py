"""Cartesian-decomposition bounds: couplings, block radius, disks, rectangles."""

import dataclasses
import math

import numpy as np
import pytest

from conftest import random_matrix, random_polynomial
from zerobounds import (
    BlockShapeMismatchError,
    DegreeTooSmallError,
    ExponentOutOfRangeError,
    HypothesisViolatedError,
    NegativeInputError,
    OddDegreeError,
    Polynomial,
    Rectangle,
    block_cartesian_radius,
    build_block_companion,
    cartesian_disk,
    diagonal_block_radius,
    find_roots,
    get_fixture,
    hermitian_rectangle,
    kittaneh_rectangle,
    mw_bound,
    numerical_radius_sweep,
    operator_norm,
    parse_polynomial,
    partition_disk,
    partition_rectangle,
    radius_from_norm_coupling,
    radius_from_pm_coupling,
    unit_tail_disk,
    validate_bound,
    validate_rectangle,
)
from zerobounds.cartesian import cartesian_disk_parts, partition_disk_parts


# ---------------------------------------------------------------- rectangle


def test_rectangle_rejects_inverted_extents():
    with pytest.raises(ValueError):
        Rectangle(1.0, -1.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        Rectangle(0.0, 0.0, 2.0, 1.0)


def test_rectangle_contains_points_and_rectangles():
    r = Rectangle(-1.0, 1.0, -2.0, 2.0)
    assert r.contains(0.5 - 1.5j)
    assert not r.contains(1.5)
    assert r.contains(1.0 + 1e-12j, slack=1e-9)
    assert r.contains_rectangle(Rectangle(-0.5, 0.5, -1.0, 1.0))
    assert not r.contains_rectangle(Rectangle(-0.5, 1.5, -1.0, 1.0))
    assert r.contains_rectangle(Rectangle(-1.0 - 1e-12, 1.0, 0.0, 0.0), slack=1e-9)


# ------------------------------------------------------- scalar couplings


def test_coupling_trivial_anchors():
    # pure diagonal: radius is the larger diagonal radius
    assert radius_from_norm_coupling(1.0, 1.0, 0.0, 0.0) == 1.0
    assert radius_from_pm_coupling(1.0, 1.0, 0.0, 0.0) == 1.0
    assert radius_from_norm_coupling(2.0, 0.0, 0.0, 0.0) == 2.0
    # pure off-diagonal: radius is half the coupling sum
    assert radius_from_norm_coupling(0.0, 0.0, 1.0, 1.0) == 1.0
    assert radius_from_pm_coupling(0.0, 0.0, 1.0, 1.0) == 1.0


def test_coupling_is_symmetric_and_dominates_the_diagonal():
    rng = np.random.default_rng(89)
    for _ in range(25):
        wa, wd, nb, nc = rng.uniform(0.0, 3.0, 4)
        forward = radius_from_norm_coupling(wa, wd, nb, nc)
        assert abs(forward - radius_from_norm_coupling(wd, wa, nc, nb)) < 1e-12
        assert forward >= max(wa, wd) - 1e-12
        assert radius_from_pm_coupling(wa, wd, nb, nc) >= max(wa, wd) - 1e-12


def test_coupling_rejects_negative_inputs():
    with pytest.raises(NegativeInputError):
        radius_from_norm_coupling(-0.1, 1.0, 0.0, 0.0)
    with pytest.raises(NegativeInputError):
        radius_from_pm_coupling(1.0, 1.0, -1.0, 0.0)


def test_couplings_dominate_the_numerical_radius_of_block_matrices():
    rng = np.random.default_rng(97)
    for _ in range(100):
        n = int(rng.integers(2, 5))
        a, b = random_matrix(rng, n), random_matrix(rng, n)
        c, d = random_matrix(rng, n), random_matrix(rng, n)
        t = np.block([[a, b], [c, d]])
        w_t = numerical_radius_sweep(t, samples=128)
        w_a = numerical_radius_sweep(a, samples=128)
        w_d = numerical_radius_sweep(d, samples=128)
        by_norms = radius_from_norm_coupling(w_a, w_d, operator_norm(b), operator_norm(c))
        by_pm = radius_from_pm_coupling(
            w_a,
            w_d,
            numerical_radius_sweep(b + c, samples=128),
            numerical_radius_sweep(b - c, samples=128),
        )
        assert by_norms >= w_t - 1e-6
        assert by_pm >= w_t - 1e-6


# ---------------------------------------------------- block Cartesian radius


def test_block_radius_single_hermitian_block_gives_its_norm():
    rng = np.random.default_rng(101)
    x = random_matrix(rng, 4)
    h = (x + x.conj().T) / 2
    nrm = operator_norm(h)
    assert abs(block_cartesian_radius([[h]]) - nrm) <= 1e-10 * (1 + nrm)


def test_block_radius_nilpotent_scalar_grid():
    blocks = [[np.array([[0.0]]), np.array([[1.0]])],
              [np.array([[0.0]]), np.array([[0.0]])]]
    value = block_cartesian_radius(blocks)
    assert abs(value - 1.0) < 1e-12
    assert value >= 0.5  # true numerical radius of [[0,1],[0,0]]


def test_block_radius_table1_pin():
    bc = build_block_companion(get_fixture("table1").polynomial())
    value = block_cartesian_radius([[bc.a11, bc.a12], [bc.a21, bc.a22]])
    assert abs(value - 6.626141399975017) <= 1e-9


def test_block_radius_dominates_sweep_on_companion_partitions():
    rng = np.random.default_rng(103)
    for _ in range(10):
        degree = 2 * int(rng.integers(2, 6))
        p = random_polynomial(rng, degree)
        bc = build_block_companion(p)
        value = block_cartesian_radius([[bc.a11, bc.a12], [bc.a21, bc.a22]])
        assert value >= numerical_radius_sweep(bc.companion, samples=128) - 1e-6


@pytest.mark.parametrize("s", [0.25, 0.5, 0.75])
def test_block_radius_dominates_sweep_on_generic_grids(s):
    rng = np.random.default_rng(107)
    for _ in range(6):
        m = int(rng.integers(2, 4))
        k = int(rng.integers(1, 4))
        grid = [[random_matrix(rng, k) for _ in range(m)] for _ in range(m)]
        whole = np.block(grid)
        value = block_cartesian_radius(grid, s_exponent=s)
        assert value >= numerical_radius_sweep(whole, samples=128) - 1e-6


def test_block_radius_rejects_bad_grids():
    one = np.eye(2)
    with pytest.raises(BlockShapeMismatchError):
        block_cartesian_radius([[one, one]])  # ragged 1x2 grid
    with pytest.raises(BlockShapeMismatchError):
        block_cartesian_radius([[one, one], [one, np.eye(3)]])  # size mismatch
    with pytest.raises(BlockShapeMismatchError):
        block_cartesian_radius([])


def test_block_radius_rejects_exponent_outside_open_interval():
    h = np.eye(2)
    for s in (0.0, 1.0, -0.5, 1.5):
        with pytest.raises(ExponentOutOfRangeError):
            block_cartesian_radius([[h]], s_exponent=s)


# ------------------------------------------------------------ cartesian disk


_CART_DISK_PINS = {
    "table1": 3.941508802190745,
    "table2": 5.5653005017035815,
    "table3": 2.047821577511597,
    "table4": 2.0083854045780245,
    "table5": 2.015016339355315,
    "h1": 2.005599998516139,
    "h2": 2.0162459539760245,
    "h3": 2.0136871466352813,
}


@pytest.mark.parametrize("name", sorted(_CART_DISK_PINS))
def test_cartesian_disk_values_are_stable(name):
    bc = build_block_companion(get_fixture(name).polynomial())
    r = cartesian_disk(bc)
    assert abs(r.value - _CART_DISK_PINS[name]) <= 1e-9 * _CART_DISK_PINS[name]
    # it is an actual zero bound
    assert validate_bound(get_fixture(name).polynomial(), r.value).holds


def test_cartesian_disk_parts_for_the_showcase_polynomial():
    bc = build_block_companion(get_fixture("table1").polynomial())
    w1, w2, coupling = cartesian_disk_parts(bc)
    assert abs(w1 - 3.479620596279324) <= 1e-9
    assert abs(w2 - 1.0) <= 1e-12
    assert abs(coupling - 10.774217659954417) <= 1e-9
    notes = dict(n.split("=") for n in cartesian_disk(bc).notes)
    assert float(notes["w1"]) == pytest.approx(w1, rel=1e-9)
    assert float(notes["N"]) == pytest.approx(coupling, rel=1e-9)


def test_cartesian_disk_dominates_the_companion_numerical_radius():
    rng = np.random.default_rng(109)
    for _ in range(10):
        p = random_polynomial(rng, 2 * int(rng.integers(2, 6)))
        bc = build_block_companion(p)
        assert cartesian_disk(bc).value >= numerical_radius_sweep(bc.companion) - 1e-6


def test_cartesian_disk_covers_unit_circle_roots():
    bc = build_block_companion(parse_polynomial("1, 0, 0, 0, 1"))
    assert cartesian_disk(bc).value >= 1.0


def test_cartesian_disk_collapses_without_coupling():
    bc = build_block_companion(get_fixture("table1").polynomial())
    zero = np.zeros_like(bc.p12)
    decoupled = dataclasses.replace(bc, p12=zero, q12=zero, p21=zero, q21=zero)
    w1, w2, coupling = cartesian_disk_parts(decoupled)
    assert coupling == 0.0
    assert abs(cartesian_disk(decoupled).value - math.sqrt(2 * max(w1, w2))) <= 1e-12


# ----------------------------------------------------- diagonal block radius


def test_diagonal_block_radius_anchors():
    z = np.zeros((3, 3))
    assert diagonal_block_radius(z, z) == 0.0
    rng = np.random.default_rng(113)
    x = random_matrix(rng, 3)
    h = (x + x.conj().T) / 2
    # Hermitian block: P = H, Q = 0, so the weight is ||H||^2 (squared units)
    assert abs(diagonal_block_radius(h, z) - operator_norm(h) ** 2) <= 1e-9


def test_diagonal_block_radius_consistent_with_block_radius():
    rng = np.random.default_rng(127)
    a, b = random_matrix(rng, 3), random_matrix(rng, 3)
    z = np.zeros((3, 3))
    combined = block_cartesian_radius([[a, z], [z, b]])
    assert abs(combined**2 - 2 * diagonal_block_radius(a, b)) <= 1e-9


# --------------------------------------------------------------- rectangles


def test_kittaneh_rectangle_showcase_pins():
    r = kittaneh_rectangle(get_fixture("table2").polynomial())
    assert abs(r.re_hi - 2.5434869525051) <= 1e-9
    assert abs(r.im_hi - 3.574992197292575) <= 1e-9
    assert r.re_lo == -r.re_hi and r.im_lo == -r.im_hi
    r1 = kittaneh_rectangle(get_fixture("table1").polynomial())
    assert abs(r1.re_hi - 3.808401201797733) <= 1e-9
    assert abs(r1.im_hi - 3.4411036431888933) <= 1e-9


def test_kittaneh_rectangle_needs_degree_three():
    with pytest.raises(DegreeTooSmallError):
        kittaneh_rectangle(parse_polynomial("1, 1, 1"))


def test_kittaneh_rectangle_contains_all_roots():
    rng = np.random.default_rng(131)
    for _ in range(50):
        p = random_polynomial(rng, 6)
        assert validate_rectangle(p, kittaneh_rectangle(p)).holds


def test_partition_rectangle_showcase_pins():
    r = partition_rectangle(get_fixture("table2").polynomial())
    assert abs(r.re_hi - 2.4767863346699546) <= 1e-9
    assert abs(r.im_hi - 3.53760535344055) <= 1e-9
    r1 = partition_rectangle(get_fixture("table1").polynomial())
    assert abs(r1.re_hi - 4.2712106671779555) <= 1e-9
    assert abs(r1.im_hi - 4.283558770067491) <= 1e-9


def test_partition_rectangle_is_square_for_real_symmetric_input():
    r = partition_rectangle(parse_polynomial("1, 0, 0, 0, 1"))
    assert abs(r.re_hi - r.im_hi) < 1e-12


def test_partition_rectangle_contains_all_roots():
    rng = np.random.default_rng(137)
    for _ in range(25):
        p = random_polynomial(rng, 2 * int(rng.integers(2, 6)))
        assert validate_rectangle(p, partition_rectangle(p)).holds


def test_partition_rectangle_degree_preconditions():
    with pytest.raises(OddDegreeError):
        partition_rectangle(parse_polynomial("1, 0, 0, 0, 0, 1"))
    with pytest.raises(DegreeTooSmallError):
        partition_rectangle(parse_polynomial("1, 0, 1"))


# ------------------------------------------------------------ partition disk


def test_partition_disk_showcase_parts():
    value, big_l, d1, d2 = partition_disk_parts(get_fixture("table3").polynomial())
    assert abs(value - 1.307548658992222) <= 1e-12
    assert abs(big_l - 0.8090169943749475) <= 1e-12
    assert abs(d1 - 0.0625) <= 1e-12
    assert abs(d2 - 1.0317381620988826) <= 1e-12
    r = partition_disk(get_fixture("table3").polynomial())
    assert r.notes == ("L=0.8090169944", "D1=0.0625", "D2=1.031738162")


@pytest.mark.parametrize(
    "name,pinned",
    [
        ("table1", 5.2826639809885725),
        ("table4", 1.2169435653568526),
        ("table5", 1.3214673313442582),
    ],
)
def test_partition_disk_values_are_stable(name, pinned):
    p = get_fixture(name).polynomial()
    assert abs(partition_disk(p).value - pinned) <= 1e-9 * pinned
    assert validate_bound(p, partition_disk(p).value).holds


def test_partition_disk_is_tight_for_unit_quartic():
    # z^4 + 1 has all roots on the unit circle and the bound collapses to 1
    assert abs(partition_disk(parse_polynomial("1, 0, 0, 0, 1")).value - 1.0) <= 1e-14


def test_partition_disk_dominates_roots_on_random_even_polynomials():
    rng = np.random.default_rng(139)
    for _ in range(25):
        p = random_polynomial(rng, 2 * int(rng.integers(2, 6)))
        assert validate_bound(p, partition_disk(p).value).holds


# ------------------------------------------------------------ unit tail disk


def test_unit_tail_matches_partition_disk_on_its_premise():
    for text, sign in [
        ("1, 0, 0, 0, 1", 1),
        ("1, 0, 0, 0, 0, 0, 1", 1),
        ("1, 3/10, 7/10, 1/5, 0, 0, 1", 1),
        ("1, 0, 0, 0, -1", -1),
    ]:
        q = parse_polynomial(text)
        u = unit_tail_disk(q, sign=sign)
        assert abs(u.value - partition_disk(q).value) <= 1e-14


def test_unit_tail_pins():
    assert abs(unit_tail_disk(parse_polynomial("1, 0, 0, 0, 1")).value - 1.0) <= 1e-14
    z6 = unit_tail_disk(parse_polynomial("1, 0, 0, 0, 0, 0, 1"))
    assert abs(z6.value - 1.1141641079733176) <= 1e-12
    assert "sign=+1" in z6.notes


def test_unit_tail_rejects_premise_violations():
    with pytest.raises(HypothesisViolatedError):
        unit_tail_disk(parse_polynomial("1, 0, 0, 0, 2"))  # constant is not +-1
    with pytest.raises(HypothesisViolatedError):
        unit_tail_disk(parse_polynomial("1, 0, 0, 1, 1"))  # a_2 nonzero
    with pytest.raises(HypothesisViolatedError):
        unit_tail_disk(parse_polynomial("1, 0, 0, 0, -1"))  # sign defaults to +1
    with pytest.raises(ValueError):
        unit_tail_disk(parse_polynomial("1, 0, 0, 0, 1"), sign=2)
    with pytest.raises(OddDegreeError):
        unit_tail_disk(parse_polynomial("1, 0, 0, 0, 0, 1"))


# ------------------------------------------------------------------ mw bound


_MW_PINS = {
    "table4": (0.6721175728442039, ["tail sum 0.4913888889 < 2/3"]),
    "table5": (0.7647166220604665, ["moduli not strictly increasing"]),
    "h1": (0.7685824854416045,
           ["moduli not strictly increasing", "tail sum 0.3666666667 < 2/3"]),
    "h2": (0.7337440144498567,
           ["coefficients not all real", "tail sum 0.5949422795 < 2/3"]),
    "h3": (0.8671411792017457,
           ["moduli not strictly increasing", "tail sum 0.5833333333 < 2/3"]),
}


@pytest.mark.parametrize("name", sorted(_MW_PINS))
def test_mw_values_and_guard_reasons(name):
    pinned, reasons = _MW_PINS[name]
    result, applic = mw_bound(get_fixture(name).polynomial())
    assert abs(result.value - pinned) <= 1e-9 * pinned
    assert applic.status == "heuristic"
    assert result.applicability == "conditional"
    assert list(applic.reasons) == reasons
    assert "guard=heuristic" in result.notes


def test_mw_guard_grants_guarantee_for_large_coefficients():
    result, applic = mw_bound(Polynomial((0.5, 1.5)))
    assert applic.status == "guaranteed"
    assert applic.reasons == ("|c_2| >= 1",)
    assert result.applicability == "valid"
    assert validate_bound(Polynomial((0.5, 1.5)), result.value).holds


def test_mw_guard_grants_guarantee_for_increasing_real_moduli():
    p = Polynomial((0.1, 0.2, 0.3, 0.4))
    result, applic = mw_bound(p)
    assert applic.status == "guaranteed"
    assert applic.reasons == ("real, strictly increasing moduli below 1, tail sum 0.9 >= 2/3",)
    assert validate_bound(p, result.value).holds


def test_mw_strict_mode_refuses_heuristic_cases_only():
    heuristic, applic = mw_bound(get_fixture("h1").polynomial(), strict=True)
    assert applic.status == "refused"
    assert applic.reasons[-1] == "strict mode refuses heuristic use"
    assert heuristic.applicability == "refused"
    assert heuristic.value > 0  # value still computed for context
    _, still_ok = mw_bound(Polynomial((0.5, 1.5)), strict=True)
    assert still_ok.status == "guaranteed"


def test_mw_needs_degree_two():
    with pytest.raises(DegreeTooSmallError):
        mw_bound(Polynomial((1.0,)))


def test_mw_heuristic_value_can_undershoot_the_roots():
    # the h1 polynomial's largest root modulus exceeds the heuristic value:
    # exactly why the guard refuses to call it guaranteed
    p = get_fixture("h1").polynomial()
    result, applic = mw_bound(p)
    assert applic.status == "heuristic"
    verdict = validate_bound(p, result.value)
    assert verdict.verdict == "violated"
    assert verdict.margin > 0.04


# ------------------------------------------------------- hermitian rectangle


def test_hermitian_rectangle_for_real_quadratic():
    r = hermitian_rectangle(parse_polynomial("1, 0, -1"))
    assert abs(r.re_lo + 1.0) <= 1e-12 and abs(r.re_hi - 1.0) <= 1e-12
    assert abs(r.im_lo) <= 1e-12 and abs(r.im_hi) <= 1e-12


def test_hermitian_rectangle_imaginary_part_symmetric_for_real_input():
    rng = np.random.default_rng(149)
    for _ in range(10):
        p = random_polynomial(rng, int(rng.integers(2, 8)), complex_coeffs=False)
        r = hermitian_rectangle(p)
        assert abs(r.im_lo + r.im_hi) <= 1e-10


def test_hermitian_rectangle_is_the_tightest_of_the_three():
    p = get_fixture("table2").polynomial()
    h = hermitian_rectangle(p)
    assert partition_rectangle(p).contains_rectangle(h, slack=1e-9)
    assert kittaneh_rectangle(p).contains_rectangle(h, slack=1e-9)
    assert abs(h.re_lo + 2.1290837604154724) <= 1e-9
    assert abs(h.im_hi - 1.4478092226711765) <= 1e-9


def test_hermitian_rectangle_contains_all_roots():
    rng = np.random.default_rng(151)
    for _ in range(25):
        p = random_polynomial(rng, int(rng.integers(2, 9)))
        assert validate_rectangle(p, hermitian_rectangle(p)).holds
