#pragma once

#include "eigenfunctions.hpp"
#include "model_core.hpp"

namespace qst {

// log|v| with the sign of v kept separately; sign is 0 for v == 0.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 0;
};

struct ObservableSample {
    LatticePoint point;
    bool log_domain = false;
    // Rectangular values; only meaningful when !log_domain.
    double density = 0.0;
    double flux = 0.0;
    double log_density = 0.0;
    SignedLog log_flux;
};

// Continuum plane wave: both are constant in x and t.
double density_continuum(Complex a_amp) noexcept;
double flux_continuum(const QstParams& params, Complex a_amp) noexcept;

// |A T(0)|^2 (1 + k^2 lambda^2)^j_x (1 + omega^2 tau^2)^j_t for a right mover.
// Left movers (B != 0) throw UnsupportedSpecError; values outside the
// double range throw OverflowError.
double density_qst(const QstWave& wave, LatticePoint p);
double log_density_qst(const QstWave& wave, LatticePoint p);

// (hbar k / m) times density_qst.
double flux_qst_closed(const QstWave& wave, LatticePoint p);
SignedLog flux_qst_closed_log(const QstWave& wave, LatticePoint p);

// (hbar / 2im) [psi* (Δψ/λ) - (Δψ*/λ) psi] with the forward difference taken
// in j_x at fixed j_t. Returned as a complex number so callers can check
// the imaginary part vanishes.
Complex flux_definition_value(const QstWave& wave, LatticePoint p);
double flux_qst_from_definition(const QstWave& wave, LatticePoint p);

// [P(j_x, j_t+1) - P(j_x, j_t)] / tau + [J(j_x+1, j_t) - J(j_x, j_t)] / lambda.
// Nonzero at finite lambda; reported as a diagnostic.
double continuity_residual(const QstWave& wave, LatticePoint p);
// The closed form of the residual, P (omega^2 tau + hbar k^3 lambda / m).
double continuity_residual_predicted(const QstWave& wave, LatticePoint p);

ObservableSample sample_observables(const QstWave& wave, LatticePoint p, bool log_domain);

} // namespace qst
