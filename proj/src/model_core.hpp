#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace qst {

using Complex = std::complex<double>;
using Index = std::int64_t;

// Planck length in metres. Documentation only; nothing computes with it.
inline constexpr double kPlanckLength = 1.6e-35;

struct PhysicalConstants {
    double hbar = 1.0;
    double mass = 1.0;
    double light_speed = 1.0;

    // Throws ValidationError naming the first non-positive or non-finite field.
    void validate() const;
};

/**
 * Physical constants, lattice scales and the dispersion quantities of a
 * single energy eigenstate.
 *
 * Energy is the primary input: k = sqrt(2 m E) / hbar and omega = E / hbar
 * are derived, so hbar*omega == hbar^2 k^2 / (2m) up to rounding. The time
 * step is slaved to the space step through tau = lambda / c.
 */
class QstParams {
public:
    static QstParams make(const PhysicalConstants& constants, double lambda, double energy);

    // Builds parameters from the dimensionless products k*lambda and
    // omega*tau. hbar, mass and lambda are kept; the light speed is derived
    // so that tau = lambda / c reproduces the requested omega*tau.
    static QstParams from_dimensionless(double hbar, double mass, double lambda,
                                        double k_lambda, double omega_tau);

    // Natural units (hbar = m = c = 1) with the energy that yields wavenumber k.
    static QstParams natural_from_k(double k, double lambda);

    const PhysicalConstants& constants() const noexcept { return constants_; }
    double hbar() const noexcept { return constants_.hbar; }
    double mass() const noexcept { return constants_.mass; }
    double light_speed() const noexcept { return constants_.light_speed; }
    double lambda() const noexcept { return lambda_; }
    double tau() const noexcept { return tau_; }
    double energy() const noexcept { return energy_; }
    double k() const noexcept { return k_; }
    double omega() const noexcept { return omega_; }

    double k_lambda() const noexcept { return k_lambda_; }
    double omega_tau() const noexcept { return omega_tau_; }
    // hbar k / m, the group velocity that scales the flux.
    double velocity() const noexcept { return constants_.hbar * k_ / constants_.mass; }

private:
    QstParams(const PhysicalConstants& c, double lambda, double energy);

    PhysicalConstants constants_;
    double lambda_;
    double tau_;
    double energy_;
    double k_;
    double omega_;
    double k_lambda_;
    double omega_tau_;
};

struct LatticePoint {
    Index j_x = 0;
    Index j_t = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/**
 * Complex number stored as (ln|z|, arg z). Used for anything raised to a
 * lattice-index power, where |z| easily leaves the double range.
 * Zero is log_mag = -inf with phase 0.
 */
struct LogPolarAmplitude {
    double log_mag = 0.0;
    double phase = 0.0;

    bool is_zero() const noexcept;
    // False when exp(log_mag) would overflow a double.
    bool representable() const noexcept;

    LogPolarAmplitude operator*(const LogPolarAmplitude& rhs) const noexcept;
};

// Phase reduced to (-pi, pi].
double wrap_phase(double phase) noexcept;

LogPolarAmplitude to_log_polar(Complex z) noexcept;
// Throws OverflowError when the magnitude is not representable.
Complex from_log_polar(const LogPolarAmplitude& a);

// Largest log-magnitude that from_log_polar accepts.
double max_representable_log_mag() noexcept;

// Neumaier sum, so log-magnitudes assembled in different groupings round
// the same way.
double compensated_sum(std::initializer_list<double> terms) noexcept;

/**
 * Complex amplitudes on the contiguous index window
 * [origin, origin + size - 1]. Reads outside the window throw DomainError.
 */
class LatticeFunction {
public:
    LatticeFunction() = default;
    LatticeFunction(Index origin, std::vector<Complex> values);

    template <typename F>
    static LatticeFunction generate(Index first, Index last, F&& f) {
        std::vector<Complex> v;
        v.reserve(static_cast<std::size_t>(last - first + 1));
        for (Index j = first; j <= last; ++j) {
            v.push_back(Complex(f(j)));
        }
        return LatticeFunction(first, std::move(v));
    }

    Index origin() const noexcept { return origin_; }
    Index first() const noexcept { return origin_; }
    Index last() const noexcept { return origin_ + static_cast<Index>(values_.size()) - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    bool contains(Index j) const noexcept { return j >= first() && j <= last() && !empty(); }

    Complex at(Index j) const;
    const std::vector<Complex>& values() const noexcept { return values_; }

    // Largest |f(j)| on the window; 0 for an empty window.
    double max_abs() const noexcept;

    // Copy restricted to [lo, hi], which must lie inside the window.
    LatticeFunction restrict_to(Index lo, Index hi) const;

private:
    Index origin_ = 0;
    std::vector<Complex> values_;
};

struct WaveSpec {
    Complex a_amp{1.0, 0.0};
    Complex b_amp{0.0, 0.0};
    Complex t0{1.0, 0.0};

    bool nontrivial() const noexcept { return a_amp != Complex{} || b_amp != Complex{}; }
    bool right_mover() const noexcept { return b_amp == Complex{}; }
};

} // namespace qst
