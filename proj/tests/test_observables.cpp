#include <cmath>

#include "doctest.h"
#include "errors.hpp"
#include "observables.hpp"
#include "support.hpp"

using namespace qst;
using qst::test::naive_pow;
using qst::test::rel_err;
using qst::test::Rng;

namespace {

QstParams dimless(double kl, double wt, double hbar = 1.0, double mass = 1.0, double lambda = 1.0) {
    return QstParams::from_dimensionless(hbar, mass, lambda, kl, wt);
}

} // namespace

TEST_CASE("continuum density and flux") {
    CHECK(density_continuum(1.0) == 1.0);
    CHECK(density_continuum({3.0, 4.0}) == 25.0);
    CHECK(density_continuum(0.0) == 0.0);

    CHECK(flux_continuum(QstParams::natural_from_k(1.0, 1.0), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(flux_continuum(QstParams::natural_from_k(1.0, 1.0), 0.0) == 0.0);
    // hbar = 1, m = 2, k = 3: (3/2) * |1+i|^2 = 3
    const auto p = dimless(3.0, 1.0, 1.0, 2.0, 1.0);
    CHECK(p.k() == 3.0);
    CHECK(flux_continuum(p, {1.0, 1.0}) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("density_qst") {
    const QstWave w(dimless(1.0, 1.0), {});
    CHECK(density_qst(w, {0, 0}) == 1.0);
    CHECK(density_qst(w, {2, 1}) == 8.0);
    CHECK(density_qst(w, {-1, 0}) == 0.5);
    CHECK(log_density_qst(w, {2, 1}) == doctest::Approx(std::log(8.0)).epsilon(1e-15));

    const QstWave two_movers(dimless(1.0, 1.0), {1.0, 1.0, 1.0});
    CHECK_THROWS_AS(density_qst(two_movers, {0, 0}), UnsupportedSpecError);
    CHECK_THROWS_AS(flux_qst_closed(two_movers, {0, 0}), UnsupportedSpecError);
    CHECK_THROWS_AS(flux_qst_from_definition(two_movers, {0, 0}), UnsupportedSpecError);
    CHECK_THROWS_AS(continuity_residual(two_movers, {0, 0}), UnsupportedSpecError);

    const QstWave huge(dimless(1.0, 1.0), {});
    CHECK_THROWS_AS(density_qst(huge, {2000, 0}), OverflowError);
}

TEST_CASE("flux_qst_closed") {
    const QstWave w(dimless(1.0, 1.0), {});
    CHECK(flux_qst_closed(w, {0, 0}) == 1.0);
    CHECK(flux_qst_closed(w, {1, 1}) == 4.0);

    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto p = dimless(rng.open_closed(0, 2), rng.open_closed(0, 2), rng.uniform(0.5, 2), rng.uniform(0.5, 2));
        const QstWave v(p, {rng.complex(), 0.0, rng.complex()});
        const LatticePoint pt{rng.integer(-30, 30), rng.integer(-30, 30)};
        CHECK(rel_err(flux_qst_closed(v, pt), p.velocity() * density_qst(v, pt)) <= 1e-15);
        const auto lf = flux_qst_closed_log(v, pt);
        CHECK(lf.sign == 1);
        CHECK(std::abs(lf.log_abs - std::log(flux_qst_closed(v, pt))) <= 1e-12);
    }
}

TEST_CASE("density matches |psi|^2 and the log form matches 2 log|psi|") {
    Rng rng(3);
    double worst_rect = 0.0, worst_log = 0.0, worst_wide = 0.0;
    for (int i = 0; i < 500; ++i) {
        const auto p = dimless(rng.open_closed(0, 2), rng.open_closed(0, 2));
        const QstWave w(p, {rng.complex(), 0.0, rng.complex()});
        const LatticePoint pt{rng.integer(-60, 60), rng.integer(-60, 60)};
        worst_rect = std::max(worst_rect, rel_err(density_qst(w, pt), std::norm(qst_plane_wave(w, pt))));
        // both indices near 1e6: the logs reach ~3e6 where an ulp is ~5e-10
        const LatticePoint far{rng.integer(-1'000'000, 1'000'000), rng.integer(-1'000'000, 1'000'000)};
        worst_wide = std::max(worst_wide, rel_err(log_density_qst(w, far), 2.0 * qst_plane_wave_log(w, far).log_mag));

        const auto q = dimless(rng.open_closed(0, 1), rng.open_closed(0, 1));
        const QstWave v(q, {rng.complex(), 0.0, rng.complex()});
        const LatticePoint edge{rng.integer(-1'000'000, 1'000'000), rng.integer(-1'000'000, 1'000'000)};
        worst_log = std::max(worst_log, std::abs(log_density_qst(v, edge) - 2.0 * qst_plane_wave_log(v, edge).log_mag));
    }
    CHECK(worst_rect <= 1e-12);
    CHECK(worst_log <= 1e-10);
    CHECK(worst_wide <= 1e-15);
}

TEST_CASE("density grows strictly in both indices") {
    Rng rng(4);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto p = dimless(rng.open_closed(0, 2), rng.open_closed(0, 2));
        const QstWave w(p, {rng.complex(), 0.0, 1.0});
        const LatticePoint pt{rng.integer(-300, 300), rng.integer(-300, 300)};
        const double here = log_density_qst(w, pt);
        if (!(log_density_qst(w, {pt.j_x + 1, pt.j_t}) > here)) ++violations;
        if (!(log_density_qst(w, {pt.j_x, pt.j_t + 1}) > here)) ++violations;
        if (std::abs(pt.j_x) < 60 && std::abs(pt.j_t) < 60) {
            const double d = density_qst(w, pt);
            if (!(density_qst(w, {pt.j_x + 1, pt.j_t}) > d)) ++violations;
            if (!(density_qst(w, {pt.j_x, pt.j_t + 1}) > d)) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("flux from the difference definition equals the closed form") {
    Rng rng(6);
    double worst = 0.0, worst_imag = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto p = dimless(rng.open_closed(0, 2), rng.open_closed(0, 2), rng.uniform(0.5, 2),
                               rng.uniform(0.5, 2), rng.uniform(0.1, 3));
        const QstWave w(p, {rng.complex(), 0.0, rng.complex()});
        const LatticePoint pt{rng.integer(-40, 40), rng.integer(-40, 40)};
        const Complex v = flux_definition_value(w, pt);
        const double closed = flux_qst_closed(w, pt);
        worst = std::max(worst, rel_err(v.real(), closed));
        worst_imag = std::max(worst_imag, std::abs(v.imag()) / closed);
    }
    CHECK(worst <= 1e-12);
    CHECK(worst_imag <= 1e-13);

    // k -> 0: spatially constant psi carries no current
    const QstWave flat(QstParams::make({1, 1, 1}, 1.0, 1e-300), {});
    CHECK(std::abs(flux_qst_from_definition(flat, {3, 2})) <= 1e-149);
}

TEST_CASE("continuity residual") {
    SUBCASE("matches its closed-form prediction") {
        Rng rng(8);
        for (int i = 0; i < 200; ++i) {
            const auto p = dimless(rng.open_closed(0, 2), rng.open_closed(0, 2), rng.uniform(0.5, 2),
                                   rng.uniform(0.5, 2), rng.uniform(0.1, 3));
            const QstWave w(p, {rng.complex(), 0.0, 1.0});
            const LatticePoint pt{rng.integer(-30, 30), rng.integer(-30, 30)};
            const double k = p.k(), om = p.omega();
            const double a2 = std::norm(w.spec().a_amp);
            const double P = a2 * naive_pow(1 + p.k_lambda() * p.k_lambda(), pt.j_x) *
                             naive_pow(1 + p.omega_tau() * p.omega_tau(), pt.j_t);
            const double predicted = P * (om * om * p.tau() + p.hbar() * k * k * k * p.lambda() / p.mass());
            CHECK(rel_err(continuity_residual(w, pt), predicted) <= 1e-10);
            CHECK(rel_err(continuity_residual_predicted(w, pt), predicted) <= 1e-12);
        }
    }
    SUBCASE("vanishes linearly as lambda shrinks at fixed (x, t)") {
        const double x = 1.0, t = 0.5;
        double prev = 0.0;
        for (int level = 0; level < 6; ++level) {
            const Index n = 10 << level;
            const auto p = QstParams::make({1, 1, 1}, x / double(n), 0.5);
            const QstWave w(p, {});
            const Index jt = std::llround(t / p.tau());
            const double r = continuity_residual(w, {n, jt});
            if (level > 0) {
                CHECK(prev / r == doctest::Approx(2.0).epsilon(0.05));
            }
            prev = r;
        }
    }
    SUBCASE("k, omega -> 0 gives no residual") {
        const QstWave w(QstParams::make({1, 1, 1}, 1.0, 1e-300), {});
        CHECK(std::abs(continuity_residual(w, {1, 1})) <= 1e-200);
    }
}

TEST_CASE("sample_observables") {
    const QstWave w(dimless(1.0, 1.0), {});
    const auto s = sample_observables(w, {2, 1}, false);
    CHECK(s.density == 8.0);
    CHECK(s.flux == 8.0);
    CHECK(s.density >= 0.0);
    CHECK(s.log_flux.sign == 1);

    const auto big = sample_observables(w, {1'000'000, 3}, true);
    CHECK(big.log_domain);
    CHECK(big.log_density == doctest::Approx(1'000'003 * std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(sample_observables(w, {1'000'000, 3}, false), OverflowError);
}
