#include <cmath>
#include <numbers>

#include "doctest.h"
#include "eigenfunctions.hpp"
#include "errors.hpp"
#include "support.hpp"

using namespace qst;
using qst::test::naive_pow;
using qst::test::rel_err;
using qst::test::Rng;

namespace {

// Natural units, lambda = 1, with the given k*lambda and omega*tau.
QstParams dimless(double kl, double wt) { return QstParams::from_dimensionless(1.0, 1.0, 1.0, kl, wt); }

} // namespace

TEST_CASE("time_factor") {
    const auto p = dimless(1.0, 1.0);
    CHECK(time_factor(p, {2.0, -3.0}, 0) == Complex(2.0, -3.0));
    CHECK(time_factor(p, 1.0, 1) == Complex(1.0, -1.0));
    CHECK(time_factor(p, 1.0, 2) == Complex(0.0, -2.0));
    CHECK(rel_err(time_factor(p, 1.0, -1), Complex(0.5, 0.5)) <= 1e-15);
}

TEST_CASE("space_factor") {
    const auto p = dimless(1.0, 1.0);
    CHECK(space_factor(p, {{0.5, 1.0}, {2.0, 0.0}, 1.0}, 0) == Complex(2.5, 1.0));
    CHECK(space_factor(p, {1.0, 0.0, 1.0}, 2) == Complex(0.0, 2.0));
    CHECK(space_factor(p, {0.0, 1.0, 1.0}, 1) == Complex(1.0, -1.0));
}

TEST_CASE("qst_plane_wave") {
    const QstWave w(dimless(1.0, 1.0), {});
    CHECK(qst_plane_wave(w, {0, 0}) == Complex(1.0));
    CHECK(qst_plane_wave(w, {1, 1}) == Complex(2.0));
    CHECK(qst_plane_wave(w, {2, 1}) == Complex(2.0, 2.0));
    CHECK_THROWS_AS(QstWave(dimless(1, 1), {{}, {}, 1.0}), ValidationError);
}

TEST_CASE("continuum_plane_wave") {
    const auto p = QstParams::natural_from_k(1.0, 1.0);
    CHECK(p.omega() == 0.5);
    const Complex a(0.3, -0.4);
    CHECK(continuum_plane_wave(p, a, 0.0, 0.0) == a);
    const Complex v = continuum_plane_wave(p, 1.0, std::numbers::pi, 0.0);
    CHECK(std::abs(v - Complex(-1.0)) <= 1e-15);
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        const double x = rng.uniform(-100, 100);
        const double t = rng.uniform(-100, 100);
        CHECK(std::abs(continuum_plane_wave(p, a, x, t)) == doctest::Approx(std::abs(a)).epsilon(1e-14));
    }
    // the general form reduces to the right mover
    CHECK(std::abs(continuum_wave(p, {a, 0.0, 1.0}, 0.7, 0.2) - continuum_plane_wave(p, a, 0.7, 0.2)) <= 1e-15);
}

TEST_CASE("time recursion") {
    const auto p = dimless(1.0, 1.0);
    CHECK(step_time_recursion(p, 1.0) == Complex(1.0, -1.0));

    Complex t = 1.0;
    for (int i = 0; i < 5; ++i) {
        t = step_time_recursion(p, t);
    }
    CHECK(rel_err(t, time_factor(p, 1.0, 5)) <= 1e-13);

    // omega tau -> 0 leaves the value fixed; the smallest representable
    // product stands in for zero, which make_params rejects.
    const auto q = dimless(1.0, 1e-300);
    CHECK(step_time_recursion(q, {0.3, 0.7}) == Complex(0.3, 0.7));
}

TEST_CASE("space recursion") {
    SUBCASE("one step for k lambda = 1") {
        const auto p = dimless(1.0, 1.0);
        CHECK(step_space_recursion(p, 1.0, {1.0, 1.0}) == Complex(0.0, 2.0));
    }
    SUBCASE("k lambda -> 0 degenerates to the linear recurrence") {
        const auto p = dimless(1e-100, 1.0); // k^2 lambda^2 vanishes against 1
        Complex a = 1.0, b = 1.0;
        for (int i = 0; i < 20; ++i) {
            const Complex c = step_space_recursion(p, a, b);
            a = b;
            b = c;
            CHECK(b == Complex(1.0));
        }
    }
    SUBCASE("fifty steps reproduce the closed form") {
        Rng rng(21);
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = dimless(rng.open_closed(0.0, 1.0), 0.5);
            const WaveSpec s{rng.complex(), rng.complex(), 1.0};
            Complex prev = space_factor(p, s, 0);
            Complex curr = space_factor(p, s, 1);
            for (Index j = 2; j <= 51; ++j) {
                const Complex next = step_space_recursion(p, prev, curr);
                const Complex want = space_factor(p, s, j);
                const double scale = (std::abs(s.a_amp) + std::abs(s.b_amp)) * std::pow(std::abs(right_root(p)), double(j));
                CHECK(std::abs(next - want) / scale <= 1e-10);
                prev = curr;
                curr = next;
            }
        }
    }
}

TEST_CASE("closed forms satisfy the difference equations on both signs of j") {
    Rng rng(31);
    double worst_t = 0.0, worst_u = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = dimless(rng.open_closed(0.0, 2.0), rng.open_closed(0.0, 2.0));
        const WaveSpec s{rng.complex(), rng.complex(), rng.complex()};
        const double kl2 = p.k_lambda() * p.k_lambda();
        const double rho = std::abs(right_root(p));
        for (Index j = -50; j <= 50; ++j) {
            const Complex t0 = time_factor(p, s.t0, j);
            const Complex t1 = time_factor(p, s.t0, j + 1);
            worst_t = std::max(worst_t, std::abs(t1 - Complex(1.0, -p.omega_tau()) * t0) / std::abs(t1));

            const Complex u0 = space_factor(p, s, j);
            const Complex u1 = space_factor(p, s, j + 1);
            const Complex u2 = space_factor(p, s, j + 2);
            const double scale = (std::abs(s.a_amp) + std::abs(s.b_amp)) * std::pow(rho, double(j + 2));
            worst_u = std::max(worst_u, std::abs(u2 - 2.0 * u1 + (1.0 + kl2) * u0) / scale);
        }
    }
    CHECK(worst_t <= 1e-12);
    CHECK(worst_u <= 1e-12);
}

TEST_CASE("1 +- i k lambda are the characteristic roots") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const auto p = dimless(rng.open_closed(0.0, 2.0), 1.0);
        const double kl2 = p.k_lambda() * p.k_lambda();
        CHECK(std::abs(space_characteristic_polynomial(p, right_root(p))) <= 1e-14 * (1.0 + kl2));
        CHECK(std::abs(space_characteristic_polynomial(p, left_root(p))) <= 1e-14 * (1.0 + kl2));
        CHECK(right_root(p) == Complex(1.0, p.k_lambda()));
        CHECK(left_root(p) == std::conj(right_root(p)));
    }
}

TEST_CASE("|T|^2 = |t0|^2 (1 + omega^2 tau^2)^j") {
    Rng rng(51);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto p = dimless(1.0, rng.open_closed(0.0, 2.0));
        const Complex t0 = rng.complex();
        const Index j = rng.integer(-60, 60);
        const double want = std::norm(t0) * naive_pow(1.0 + p.omega_tau() * p.omega_tau(), j);
        worst = std::max(worst, rel_err(std::norm(time_factor(p, t0, j)), want));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("integer powers") {
    const Complex r(0.9, 0.3);
    for (Index n = -64; n <= 64; ++n) {
        CHECK(rel_err(ipow(r, n), naive_pow(r, n)) <= 1e-13);
    }
    // log-polar route beyond the rectangular limit
    for (Index n : {65, 100, 500, -65, -300}) {
        CHECK(rel_err(ipow(r, n), naive_pow(r, n)) <= 1e-12);
    }
    CHECK(ipow(Complex{}, 3) == Complex{});
    CHECK_THROWS_AS(ipow(Complex{}, -1), DomainError);
    CHECK_THROWS_AS(ipow(Complex(2.0, 0.0), 2000), OverflowError);
    CHECK(ipow(Complex(2.0, 0.0), -2000) == Complex{});
}

TEST_CASE("log-polar variants agree with the rectangular ones") {
    const auto p = dimless(0.3, 0.2);
    const QstWave w(p, {{0.2, 0.5}, {0.0, 0.0}, {1.5, -0.5}});
    for (Index jx : {-70, -10, 0, 3, 64, 65, 200}) {
        for (Index jt : {-80, -1, 0, 7, 90}) {
            const Complex rect = qst_plane_wave(w, {jx, jt});
            const auto lp = qst_plane_wave_log(w, {jx, jt});
            CHECK(std::abs(lp.log_mag - std::log(std::abs(rect))) <= 1e-12 * std::max(1.0, std::abs(lp.log_mag)));
            CHECK(rel_err(from_log_polar(lp), rect) <= 1e-12);
        }
    }
    // two movers in log form
    const WaveSpec both{{0.2, 0.5}, {-0.3, 0.1}, 1.0};
    for (Index jx : {-20, 0, 5, 40}) {
        CHECK(rel_err(from_log_polar(space_factor_log(p, both, jx)), space_factor(p, both, jx)) <= 1e-12);
    }
}

TEST_CASE("large indices overflow rectangular evaluation but not the log form") {
    const QstWave w(dimless(1.0, 1.0), {});
    CHECK_THROWS_AS(qst_plane_wave(w, {1'000'000, 0}), OverflowError);
    CHECK_THROWS_AS(time_factor(w.params(), 1.0, 5000), OverflowError);
    const auto lp = qst_plane_wave_log(w, {1'000'000, 0});
    CHECK(lp.log_mag == doctest::Approx(0.5e6 * std::log(2.0)).epsilon(1e-14));
    CHECK(lp.phase > -std::numbers::pi);
    CHECK(lp.phase <= std::numbers::pi);
    // the phase is (10^6 * pi / 4) mod 2 pi = 0
    CHECK(std::abs(lp.phase) <= 1e-8);
}
