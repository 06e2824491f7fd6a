#pragma once

#include <utility>

#include "model_core.hpp"

namespace qst {

// Integer powers switch from rectangular squaring to log-polar form above
// this |exponent|; phase accuracy degrades with long multiplication chains.
inline constexpr Index kRectPowerLimit = 64;

/// A separable lattice eigenstate psi(j_x, j_t) = T(j_t) U(j_x).
class QstWave {
public:
    // Throws ValidationError when both movers have zero amplitude.
    QstWave(const QstParams& params, const WaveSpec& spec);

    const QstParams& params() const noexcept { return params_; }
    const WaveSpec& spec() const noexcept { return spec_; }

private:
    QstParams params_;
    WaveSpec spec_;
};

// base^n for any integer n. Negative n uses the reciprocal. Throws
// DomainError for 0^n with n < 0 and OverflowError when the result leaves
// the double range.
Complex ipow(Complex base, Index n);
LogPolarAmplitude ipow_log(const LogPolarAmplitude& base, Index n);

// Characteristic roots of the lattice equations: 1 + i k lambda (right
// mover), 1 - i k lambda (left mover), 1 - i omega tau (time step).
Complex right_root(const QstParams& params) noexcept;
Complex left_root(const QstParams& params) noexcept;
Complex time_root(const QstParams& params) noexcept;
// Same roots with log|.| taken through log1p for small k lambda.
LogPolarAmplitude right_root_log(const QstParams& params) noexcept;
LogPolarAmplitude left_root_log(const QstParams& params) noexcept;
LogPolarAmplitude time_root_log(const QstParams& params) noexcept;

// r^2 - 2r + (1 + k^2 lambda^2); vanishes at right_root and left_root.
Complex space_characteristic_polynomial(const QstParams& params, Complex r) noexcept;

// T(j_t) = t0 (1 - i omega tau)^j_t
Complex time_factor(const QstParams& params, Complex t0, Index j_t);
LogPolarAmplitude time_factor_log(const QstParams& params, Complex t0, Index j_t);

// U(j_x) = A (1 + i k lambda)^j_x + B (1 - i k lambda)^j_x
Complex space_factor(const QstParams& params, const WaveSpec& spec, Index j_x);
LogPolarAmplitude space_factor_log(const QstParams& params, const WaveSpec& spec, Index j_x);

Complex qst_plane_wave(const QstWave& wave, LatticePoint p);
LogPolarAmplitude qst_plane_wave_log(const QstWave& wave, LatticePoint p);

// A exp(i (k x - omega t))
Complex continuum_plane_wave(const QstParams& params, Complex a_amp, double x, double t);
// t0 (A e^{ikx} + B e^{-ikx}) e^{-i omega t}, the continuum counterpart of
// a full WaveSpec.
Complex continuum_wave(const QstParams& params, const WaveSpec& spec, double x, double t);

// One step of T((j+1) tau) = (1 - i omega tau) T(j tau).
Complex step_time_recursion(const QstParams& params, Complex t_current) noexcept;

// U(j+2) = 2 U(j+1) - (1 + k^2 lambda^2) U(j).
Complex step_space_recursion(const QstParams& params, Complex u_prev, Complex u_curr) noexcept;

} // namespace qst
