#include "observables.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace qst {

namespace {

void require_right_mover(const QstWave& wave, const char* op) {
    if (!wave.spec().right_mover()) {
        throw UnsupportedSpecError(std::string(op) +
                                   " is defined for right movers only (b_amp must be 0)");
    }
}

double checked(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw OverflowError(std::string(what) +
                            " overflows the rectangular form; use the log-domain variant");
    }
    return v;
}

} // namespace

double density_continuum(Complex a_amp) noexcept { return std::norm(a_amp); }

double flux_continuum(const QstParams& params, Complex a_amp) noexcept {
    return params.velocity() * std::norm(a_amp);
}

double density_qst(const QstWave& wave, LatticePoint p) {
    require_right_mover(wave, "density_qst");
    const auto& prm = wave.params();
    const double kl = prm.k_lambda();
    const double wt = prm.omega_tau();
    const double a2 = std::norm(wave.spec().a_amp * wave.spec().t0);
    if (std::llabs(p.j_x) > kRectPowerLimit || std::llabs(p.j_t) > kRectPowerLimit) {
        return checked(std::exp(log_density_qst(wave, p)), "density");
    }
    const double sx = std::pow(1.0 + kl * kl, static_cast<double>(p.j_x));
    const double st = std::pow(1.0 + wt * wt, static_cast<double>(p.j_t));
    return checked(a2 * sx * st, "density");
}

double log_density_qst(const QstWave& wave, LatticePoint p) {
    require_right_mover(wave, "log_density_qst");
    const auto& prm = wave.params();
    const double kl = prm.k_lambda();
    const double wt = prm.omega_tau();
    const double a2 = std::norm(wave.spec().a_amp * wave.spec().t0);
    if (a2 == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return compensated_sum({std::log(a2), static_cast<double>(p.j_x) * std::log1p(kl * kl),
                            static_cast<double>(p.j_t) * std::log1p(wt * wt)});
}

double flux_qst_closed(const QstWave& wave, LatticePoint p) {
    return checked(wave.params().velocity() * density_qst(wave, p), "flux");
}

SignedLog flux_qst_closed_log(const QstWave& wave, LatticePoint p) {
    const double ld = log_density_qst(wave, p);
    if (std::isinf(ld) && ld < 0.0) {
        return {ld, 0};
    }
    return {std::log(wave.params().velocity()) + ld, 1};
}

Complex flux_definition_value(const QstWave& wave, LatticePoint p) {
    require_right_mover(wave, "flux_qst_from_definition");
    const auto& prm = wave.params();
    const Complex psi = qst_plane_wave(wave, p);
    const Complex psi_next = qst_plane_wave(wave, {p.j_x + 1, p.j_t});
    const Complex dpsi = (psi_next - psi) / prm.lambda();
    const Complex bracket = std::conj(psi) * dpsi - std::conj(dpsi) * psi;
    return prm.hbar() / (Complex(0.0, 2.0) * prm.mass()) * bracket;
}

double flux_qst_from_definition(const QstWave& wave, LatticePoint p) {
    return flux_definition_value(wave, p).real();
}

double continuity_residual(const QstWave& wave, LatticePoint p) {
    const auto& prm = wave.params();
    const double dp = density_qst(wave, {p.j_x, p.j_t + 1}) - density_qst(wave, p);
    const double dj = flux_qst_closed(wave, {p.j_x + 1, p.j_t}) - flux_qst_closed(wave, p);
    return dp / prm.tau() + dj / prm.lambda();
}

double continuity_residual_predicted(const QstWave& wave, LatticePoint p) {
    const auto& prm = wave.params();
    const double k = prm.k();
    const double w = prm.omega();
    return density_qst(wave, p) *
           (w * w * prm.tau() + prm.hbar() * k * k * k * prm.lambda() / prm.mass());
}

ObservableSample sample_observables(const QstWave& wave, LatticePoint p, bool log_domain) {
    ObservableSample s;
    s.point = p;
    s.log_domain = log_domain;
    s.log_density = log_density_qst(wave, p);
    s.log_flux = flux_qst_closed_log(wave, p);
    if (!log_domain) {
        s.density = density_qst(wave, p);
        s.flux = flux_qst_closed(wave, p);
    }
    return s;
}

} // namespace qst
