#include "model_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace qst {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::UnsupportedSpec: return "unsupported_spec";
    case ErrorKind::DegenerateFit: return "degenerate_fit";
    }
    return "unknown";
}

namespace {

void require_positive(std::string_view field, double v) {
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(field), "must be finite, got " + std::to_string(v));
    }
    if (!(v > 0.0)) {
        throw ValidationError(std::string(field), "must be > 0, got " + std::to_string(v));
    }
}

} // namespace

void PhysicalConstants::validate() const {
    require_positive("hbar", hbar);
    require_positive("mass", mass);
    require_positive("light_speed", light_speed);
}

QstParams::QstParams(const PhysicalConstants& c, double lambda, double energy)
    : constants_(c), lambda_(lambda), tau_(lambda / c.light_speed), energy_(energy),
      k_(std::sqrt(2.0 * c.mass * energy) / c.hbar), omega_(energy / c.hbar),
      k_lambda_(k_ * lambda_), omega_tau_(omega_ * tau_) {}

QstParams QstParams::make(const PhysicalConstants& constants, double lambda, double energy) {
    constants.validate();
    require_positive("lambda", lambda);
    require_positive("energy", energy);
    return QstParams(constants, lambda, energy);
}

QstParams QstParams::from_dimensionless(double hbar, double mass, double lambda,
                                        double k_lambda, double omega_tau) {
    require_positive("hbar", hbar);
    require_positive("mass", mass);
    require_positive("lambda", lambda);
    require_positive("k_lambda", k_lambda);
    require_positive("omega_tau", omega_tau);

    const double k = k_lambda / lambda;
    const double energy = hbar * hbar * k * k / (2.0 * mass);
    const double omega = energy / hbar;
    const double tau = omega_tau / omega;
    const double c = lambda / tau;
    require_positive("energy", energy);
    require_positive("light_speed", c);

    QstParams p({hbar, mass, c}, lambda, energy);
    p.k_ = k;
    p.omega_ = omega;
    p.tau_ = tau;
    p.k_lambda_ = k_lambda;
    p.omega_tau_ = omega_tau;
    return p;
}

QstParams QstParams::natural_from_k(double k, double lambda) {
    require_positive("k", k);
    return make(PhysicalConstants{}, lambda, 0.5 * k * k);
}

bool LogPolarAmplitude::is_zero() const noexcept {
    return std::isinf(log_mag) && log_mag < 0.0;
}

bool LogPolarAmplitude::representable() const noexcept {
    return log_mag <= max_representable_log_mag();
}

LogPolarAmplitude LogPolarAmplitude::operator*(const LogPolarAmplitude& rhs) const noexcept {
    if (is_zero() || rhs.is_zero()) {
        return {-std::numeric_limits<double>::infinity(), 0.0};
    }
    return {log_mag + rhs.log_mag, wrap_phase(phase + rhs.phase)};
}

double wrap_phase(double phase) noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(phase, two_pi); // [-pi, pi]
    if (r <= -std::numbers::pi) {
        r += two_pi;
    }
    return r;
}

double max_representable_log_mag() noexcept {
    static const double limit = std::log(std::numeric_limits<double>::max());
    return limit;
}

double compensated_sum(std::initializer_list<double> terms) noexcept {
    double sum = 0.0;
    double carry = 0.0;
    for (double x : terms) {
        const double t = sum + x;
        carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + carry;
}

LogPolarAmplitude to_log_polar(Complex z) noexcept {
    const double mag = std::abs(z);
    if (mag == 0.0) {
        return {-std::numeric_limits<double>::infinity(), 0.0};
    }
    double phase = std::arg(z);
    if (phase <= -std::numbers::pi) {
        phase = std::numbers::pi;
    }
    if (phase == 0.0) {
        phase = 0.0; // drop the sign of -0
    }
    return {std::log(mag), phase};
}

Complex from_log_polar(const LogPolarAmplitude& a) {
    if (a.is_zero()) {
        return {};
    }
    if (std::isnan(a.log_mag) || std::isnan(a.phase)) {
        throw DomainError("log-polar amplitude is NaN");
    }
    if (!a.representable()) {
        throw OverflowError("magnitude exp(" + std::to_string(a.log_mag) +
                            ") exceeds the double range; use the log-domain result");
    }
    return std::polar(std::exp(a.log_mag), a.phase);
}

LatticeFunction::LatticeFunction(Index origin, std::vector<Complex> values)
    : origin_(origin), values_(std::move(values)) {}

Complex LatticeFunction::at(Index j) const {
    if (!contains(j)) {
        throw DomainError("index " + std::to_string(j) + " outside window [" +
                          std::to_string(first()) + ", " + std::to_string(last()) + "]");
    }
    return values_[static_cast<std::size_t>(j - origin_)];
}

double LatticeFunction::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

LatticeFunction LatticeFunction::restrict_to(Index lo, Index hi) const {
    if (lo > hi || !contains(lo) || !contains(hi)) {
        throw DomainError("restriction [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] not inside window");
    }
    const auto b = values_.begin() + (lo - origin_);
    return LatticeFunction(lo, std::vector<Complex>(b, b + (hi - lo + 1)));
}

} // namespace qst
