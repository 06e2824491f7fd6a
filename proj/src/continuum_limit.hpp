#pragma once

#include <optional>
#include <vector>

#include "model_core.hpp"

namespace qst {

/**
 * Refinement schedule approaching a fixed physical point (x, t).
 *
 * For each n: lambda_n = x / n with j_x = n, so j_x * lambda_n == x.
 * tau_n = lambda_n / c is slaved to lambda, hence j_t = round(t / tau_n)
 * and the time point is only hit to within tau_n / 2. At x == 0 the space
 * index is pinned to 0 and lambda_n = 1 / n (unit length).
 */
struct LimitSchedule {
    double x_target = 1.0;
    double t_target = 0.0;
    std::vector<Index> steps;

    void validate() const;
};

// Energy and amplitudes are fixed; only the lattice spacing varies.
struct WaveFamily {
    PhysicalConstants constants;
    double energy = 0.5;
    WaveSpec spec;
};

struct LimitPoint {
    Index n = 0;
    double lambda = 0.0;
    double tau = 0.0;
    Index j_x = 0;
    Index j_t = 0;
    // j_t tau - t_target
    double time_residual = 0.0;
    double abs_error = 0.0;
};

struct LimitRun {
    std::vector<LimitPoint> points;
    // Smallest n from which the errors decrease strictly to the end of the
    // schedule, or nullopt when even the last pair increases.
    std::optional<Index> monotone_from;
};

// |psi_q(j_x lambda_n, j_t tau_n) - psi(x, t)| along the schedule.
LimitRun limit_error(const WaveFamily& family, const LimitSchedule& schedule);

// Least-squares slope of log(error) against log(1/n). Needs >= 3 points and
// strictly positive errors (DegenerateFitError otherwise).
double convergence_order(const std::vector<LimitPoint>& points);
double convergence_order(const std::vector<Index>& n, const std::vector<double>& errors);

struct ObservableLimitPoint {
    Index n = 0;
    double density = 0.0;
    double flux = 0.0;
    double density_error = 0.0;
    double flux_error = 0.0;
};

struct ObservableLimitReport {
    std::vector<ObservableLimitPoint> points;
    double density_target = 0.0;
    double flux_target = 0.0;
    double final_density_error = 0.0;
    double final_flux_error = 0.0;
    // Absent when some error is exactly zero (e.g. at the origin).
    std::optional<double> density_order;
    std::optional<double> flux_order;
    // max_n |flux / density - hbar k / m| / (hbar k / m)
    double max_ratio_deviation = 0.0;
};

// Density and flux along the schedule against |A|^2 and (hbar k / m)|A|^2.
// Right movers only.
ObservableLimitReport observable_limit_check(const WaveFamily& family,
                                             const LimitSchedule& schedule);

} // namespace qst
