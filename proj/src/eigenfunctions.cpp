#include "eigenfunctions.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace qst {

namespace {

Complex rect_or_throw(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw OverflowError(std::string(what) + " overflows the rectangular form; use the log-domain variant");
    }
    return z;
}

Index abs_index(Index n) { return n < 0 ? -n : n; }

} // namespace

QstWave::QstWave(const QstParams& params, const WaveSpec& spec) : params_(params), spec_(spec) {
    if (!spec.nontrivial()) {
        throw ValidationError("spec", "a_amp and b_amp are both zero");
    }
}

Complex ipow(Complex base, Index n) {
    if (n == 0) {
        return {1.0, 0.0};
    }
    if (base == Complex{}) {
        if (n < 0) {
            throw DomainError("zero raised to a negative power");
        }
        return {};
    }
    if (abs_index(n) > kRectPowerLimit) {
        return from_log_polar(ipow_log(to_log_polar(base), n));
    }
    Complex b = n < 0 ? Complex(1.0, 0.0) / base : base;
    auto e = static_cast<std::uint64_t>(abs_index(n));
    Complex result(1.0, 0.0);
    while (e != 0) {
        if (e & 1u) {
            result *= b;
        }
        e >>= 1u;
        if (e != 0) {
            b *= b;
        }
    }
    return rect_or_throw(result, "integer power");
}

LogPolarAmplitude ipow_log(const LogPolarAmplitude& base, Index n) {
    if (n == 0) {
        return {0.0, 0.0};
    }
    if (base.is_zero()) {
        if (n < 0) {
            throw DomainError("zero raised to a negative power");
        }
        return base;
    }
    const auto dn = static_cast<double>(n);
    return {dn * base.log_mag, wrap_phase(dn * base.phase)};
}

Complex right_root(const QstParams& params) noexcept { return {1.0, params.k_lambda()}; }
Complex left_root(const QstParams& params) noexcept { return {1.0, -params.k_lambda()}; }
Complex time_root(const QstParams& params) noexcept { return {1.0, -params.omega_tau()}; }

LogPolarAmplitude right_root_log(const QstParams& params) noexcept {
    const double x = params.k_lambda();
    return {0.5 * std::log1p(x * x), std::atan(x)};
}

LogPolarAmplitude left_root_log(const QstParams& params) noexcept {
    const double x = params.k_lambda();
    return {0.5 * std::log1p(x * x), -std::atan(x)};
}

LogPolarAmplitude time_root_log(const QstParams& params) noexcept {
    const double x = params.omega_tau();
    return {0.5 * std::log1p(x * x), -std::atan(x)};
}

Complex space_characteristic_polynomial(const QstParams& params, Complex r) noexcept {
    const double kl = params.k_lambda();
    return r * r - 2.0 * r + (1.0 + kl * kl);
}

Complex time_factor(const QstParams& params, Complex t0, Index j_t) {
    if (abs_index(j_t) > kRectPowerLimit) {
        return from_log_polar(time_factor_log(params, t0, j_t));
    }
    return rect_or_throw(t0 * ipow(time_root(params), j_t), "time factor");
}

LogPolarAmplitude time_factor_log(const QstParams& params, Complex t0, Index j_t) {
    return to_log_polar(t0) * ipow_log(time_root_log(params), j_t);
}

Complex space_factor(const QstParams& params, const WaveSpec& spec, Index j_x) {
    if (abs_index(j_x) > kRectPowerLimit) {
        return from_log_polar(space_factor_log(params, spec, j_x));
    }
    Complex u{};
    if (spec.a_amp != Complex{}) {
        u += spec.a_amp * ipow(right_root(params), j_x);
    }
    if (spec.b_amp != Complex{}) {
        u += spec.b_amp * ipow(left_root(params), j_x);
    }
    return rect_or_throw(u, "space factor");
}

namespace {

// A e^{i j theta} + B e^{-i j theta}, the part of U left after rho^j.
LogPolarAmplitude mover_mix_log(const QstParams& params, const WaveSpec& spec, Index j_x) {
    const double phase = wrap_phase(static_cast<double>(j_x) * right_root_log(params).phase);
    return to_log_polar(spec.a_amp * std::polar(1.0, phase) + spec.b_amp * std::polar(1.0, -phase));
}

} // namespace

LogPolarAmplitude space_factor_log(const QstParams& params, const WaveSpec& spec, Index j_x) {
    // Both roots share the modulus sqrt(1 + k^2 lambda^2), so
    // U = rho^j (A e^{i j theta} + B e^{-i j theta}).
    const auto rho_j = ipow_log({right_root_log(params).log_mag, 0.0}, j_x);
    return rho_j * mover_mix_log(params, spec, j_x);
}

Complex qst_plane_wave(const QstWave& wave, LatticePoint p) {
    const auto& prm = wave.params();
    if (abs_index(p.j_x) > kRectPowerLimit || abs_index(p.j_t) > kRectPowerLimit) {
        return from_log_polar(qst_plane_wave_log(wave, p));
    }
    const Complex t = time_factor(prm, wave.spec().t0, p.j_t);
    const Complex u = space_factor(prm, wave.spec(), p.j_x);
    return rect_or_throw(t * u, "plane wave");
}

LogPolarAmplitude qst_plane_wave_log(const QstWave& wave, LatticePoint p) {
    const auto& prm = wave.params();
    auto psi = time_factor_log(prm, wave.spec().t0, p.j_t) * space_factor_log(prm, wave.spec(), p.j_x);
    if (psi.is_zero()) {
        return psi;
    }
    // Modulus regrouped into one compensated sum; the phase is the product's.
    psi.log_mag = compensated_sum({to_log_polar(wave.spec().t0).log_mag,
                                   static_cast<double>(p.j_t) * time_root_log(prm).log_mag,
                                   static_cast<double>(p.j_x) * right_root_log(prm).log_mag,
                                   mover_mix_log(prm, wave.spec(), p.j_x).log_mag});
    return psi;
}

Complex continuum_plane_wave(const QstParams& params, Complex a_amp, double x, double t) {
    return a_amp * std::exp(Complex(0.0, params.k() * x - params.omega() * t));
}

Complex continuum_wave(const QstParams& params, const WaveSpec& spec, double x, double t) {
    const double kx = params.k() * x;
    const Complex u = spec.a_amp * std::polar(1.0, kx) + spec.b_amp * std::polar(1.0, -kx);
    return spec.t0 * u * std::polar(1.0, -params.omega() * t);
}

Complex step_time_recursion(const QstParams& params, Complex t_current) noexcept {
    return time_root(params) * t_current;
}

Complex step_space_recursion(const QstParams& params, Complex u_prev, Complex u_curr) noexcept {
    const double kl = params.k_lambda();
    return 2.0 * u_curr - (1.0 + kl * kl) * u_prev;
}

} // namespace qst
