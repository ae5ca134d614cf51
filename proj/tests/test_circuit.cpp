#include <cmath>

#include <doctest.h>

#include "simply/circuit.hpp"

using namespace simply;

namespace {
const DeviceParams cal = DeviceParams::calibrated();
const DeviceInstance nom = cal.nominal_instance();
const std::pair insts{nom, nom};
const OperatingPoint anchor{};
}  // namespace

TEST_CASE("read solution satisfies Kirchhoff's current law") {
    for (auto combo : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
        const NodeSolution sol = solve_read(cal, combo, anchor, insts);
        CHECK(sol.residual < 1e-8);
        CHECK(sol.v_g == doctest::Approx(sol.total_current() * anchor.r_g).epsilon(1e-8));
        CHECK(sol.v_g > 0.0);
        CHECK(sol.v_g < anchor.v_read);
    }
}

TEST_CASE("divider matches the linear closed form when TMR is bias independent") {
    DeviceParams linear = cal;
    linear.half_tmr_bias = 1e9;  // freezes TMR at its zero-bias value
    const auto inst = linear.nominal_instance();

    const double r_l = resistance(linear, 1, 0.0, 300.0, inst);
    const double r_h = resistance(linear, 0, 0.0, 300.0, inst);

    auto expect_vg = [&](double pair_resistance) {
        return anchor.v_read * anchor.r_g / (anchor.r_g + pair_resistance);
    };
    const double vg00 = solve_read(linear, {0, 0}, anchor, {inst, inst}).v_g;
    CHECK(vg00 == doctest::Approx(expect_vg(r_h / 2.0)).epsilon(1e-9));
    const double vg11 = solve_read(linear, {1, 1}, anchor, {inst, inst}).v_g;
    CHECK(vg11 == doctest::Approx(expect_vg(r_l / 2.0)).epsilon(1e-9));
    const double vg01 = solve_read(linear, {0, 1}, anchor, {inst, inst}).v_g;
    CHECK(vg01 == doctest::Approx(expect_vg(r_l * r_h / (r_l + r_h))).epsilon(1e-9));
}

TEST_CASE("sense-node ordering and frozen anchor voltages") {
    const double vg00 = solve_read(cal, {0, 0}, anchor, insts).v_g;
    const double vg01 = solve_read(cal, {0, 1}, anchor, insts).v_g;
    const double vg10 = solve_read(cal, {1, 0}, anchor, insts).v_g;
    const double vg11 = solve_read(cal, {1, 1}, anchor, insts).v_g;
    CHECK(vg00 < vg01);
    CHECK(vg01 < vg11);
    CHECK(vg01 == doctest::Approx(vg10).epsilon(1e-12));
    CHECK(vg00 == doctest::Approx(0.1345030681).epsilon(1e-6));
    CHECK(vg01 == doctest::Approx(0.1758047141).epsilon(1e-6));
    CHECK(vg11 == doctest::Approx(0.2049954091).epsilon(1e-6));
    // nominal read margin ~41 mV
    CHECK(vg01 - vg00 == doctest::Approx(41e-3).epsilon(0.10));
}

TEST_CASE("single-driver solve agrees with a two-resistor divider") {
    const NodeSolution sol = solve_single(cal, 0, anchor.v_set, anchor, nom);
    CHECK(sol.branch_count == 1);
    CHECK(sol.residual < 1e-8);
    const double r_at_bias = sol.branches[0].resistance;
    CHECK(sol.v_g ==
          doctest::Approx(anchor.v_set * anchor.r_g / (anchor.r_g + r_at_bias)).epsilon(1e-8));
    CHECK(sol.branches[0].v_mtj == doctest::Approx(anchor.v_set - sol.v_g).epsilon(1e-12));
}

TEST_CASE("read disturb: immune states and anchor magnitude") {
    CHECK(gate_rdr(cal, {1, 1}, anchor, insts) == 0.0);
    const double rdr00 = gate_rdr(cal, {0, 0}, anchor, insts);
    const double rdr01 = gate_rdr(cal, {0, 1}, anchor, insts);
    CHECK(rdr00 > rdr01);  // two exposed devices, and a larger voltage share each
    CHECK(rdr00 > 8.9e-10 / 3.0);
    CHECK(rdr00 < 8.9e-10 * 3.0);
}

TEST_CASE("write failure at the anchor SET point reproduces its target") {
    const double wer = set_wer(cal, anchor, nom);
    CHECK(std::abs(std::log10(wer) - std::log10(1e-7)) < 0.05);
}

TEST_CASE("read energy identity") {
    const NodeSolution sol = solve_read(cal, {1, 1}, anchor, insts);
    CHECK(energy_read(sol, anchor) ==
          doctest::Approx(anchor.v_read * sol.total_current() * anchor.t_read).epsilon(1e-12));
    // calibration closes the (1,1) row at 113.9 fJ by construction
    CHECK(energy_read(sol, anchor) + cal.e_comp ==
          doctest::Approx(113.9e-15).epsilon(1e-6));
}

TEST_CASE("two-phase SET energy sits between its single-phase bounds") {
    const double e = energy_set(cal, anchor, nom);
    CHECK(e == doctest::Approx(2.345425086e-13).epsilon(1e-6));  // frozen
    const double i_pre = solve_single(cal, 0, anchor.v_set, anchor, nom).branches[0].current;
    const double i_post = solve_single(cal, 1, anchor.v_set, anchor, nom).branches[0].current;
    CHECK(i_post > i_pre);  // resistance drops after the AP->P switch
    CHECK(e > anchor.v_set * i_pre * anchor.t_set);
    CHECK(e < anchor.v_set * i_post * anchor.t_set);
}

TEST_CASE("FALSE energy of an already-reset device is single phase") {
    const NodeSolution sol = solve_single(cal, 0, anchor.v_reset, anchor, nom);
    const double expected = std::abs(anchor.v_reset * sol.branches[0].current) * anchor.t_reset;
    CHECK(energy_false(cal, 0, anchor, nom) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(energy_false(cal, 1, anchor, nom) > 0.0);
}

TEST_CASE("operating point validation") {
    OperatingPoint bad = anchor;
    bad.v_reset = 0.1;
    CHECK_THROWS_AS(bad.validate(), model_error);
    bad = anchor;
    bad.r_g = 0.0;
    CHECK_THROWS_AS(bad.validate(), model_error);
}
