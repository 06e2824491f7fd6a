#include "continuum_limit.hpp"

#include <algorithm>
#include <cmath>

#include "eigenfunctions.hpp"
#include "errors.hpp"
#include "observables.hpp"

namespace qst {

namespace {

struct Refinement {
    QstParams params;
    LatticePoint point;
    double time_residual;
};

Refinement refine(const WaveFamily& family, const LimitSchedule& s, Index n) {
    const double dn = static_cast<double>(n);
    const double lambda = s.x_target > 0.0 ? s.x_target / dn : 1.0 / dn;
    const QstParams params = QstParams::make(family.constants, lambda, family.energy);
    const Index j_x = s.x_target > 0.0 ? n : 0;
    const auto j_t = static_cast<Index>(std::llround(s.t_target / params.tau()));
    return {params, {j_x, j_t}, static_cast<double>(j_t) * params.tau() - s.t_target};
}

bool all_positive(const std::vector<double>& v) {
    for (double e : v) {
        if (!(e > 0.0)) {
            return false;
        }
    }
    return true;
}

} // namespace

void LimitSchedule::validate() const {
    if (!std::isfinite(x_target) || x_target < 0.0) {
        throw ValidationError("x_target", "must be finite and >= 0");
    }
    if (!std::isfinite(t_target)) {
        throw ValidationError("t_target", "must be finite");
    }
    if (steps.empty()) {
        throw ValidationError("steps", "schedule is empty");
    }
    for (Index n : steps) {
        if (n <= 0) {
            throw ValidationError("steps", "every n must be a positive integer, got " + std::to_string(n));
        }
    }
}

LimitRun limit_error(const WaveFamily& family, const LimitSchedule& schedule) {
    schedule.validate();
    LimitRun run;
    run.points.reserve(schedule.steps.size());
    for (Index n : schedule.steps) {
        const Refinement r = refine(family, schedule, n);
        const QstWave wave(r.params, family.spec);
        const Complex exact = continuum_wave(r.params, family.spec, schedule.x_target, schedule.t_target);
        const Complex lattice = qst_plane_wave(wave, r.point);
        run.points.push_back({n, r.params.lambda(), r.params.tau(), r.point.j_x, r.point.j_t,
                              r.time_residual, std::abs(lattice - exact)});
    }

    const auto& pts = run.points;
    std::size_t start = pts.size() - 1;
    while (start > 0 && pts[start].abs_error < pts[start - 1].abs_error) {
        --start;
    }
    if (pts.size() == 1 || start < pts.size() - 1) {
        run.monotone_from = pts[start].n;
    }
    return run;
}

double convergence_order(const std::vector<Index>& n, const std::vector<double>& errors) {
    if (n.size() != errors.size()) {
        throw ValidationError("errors", "n and error sequences differ in length");
    }
    if (n.size() < 3) {
        throw ValidationError("errors", "convergence fit needs at least 3 points");
    }
    if (!all_positive(errors)) {
        throw DegenerateFitError("zero or negative error in fit; drop exact points before fitting");
    }
    // slope of log(err) vs log(1/n)
    const double m = static_cast<double>(n.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        sx += -std::log(static_cast<double>(n[i]));
        sy += std::log(errors[i]);
    }
    const double mx = sx / m;
    const double my = sy / m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const double dx = -std::log(static_cast<double>(n[i])) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(errors[i]) - my);
    }
    if (sxx == 0.0) {
        throw DegenerateFitError("all n are equal; slope undefined");
    }
    return sxy / sxx;
}

double convergence_order(const std::vector<LimitPoint>& points) {
    std::vector<Index> n;
    std::vector<double> e;
    for (const auto& p : points) {
        n.push_back(p.n);
        e.push_back(p.abs_error);
    }
    return convergence_order(n, e);
}

ObservableLimitReport observable_limit_check(const WaveFamily& family,
                                             const LimitSchedule& schedule) {
    schedule.validate();
    if (!family.spec.right_mover()) {
        throw UnsupportedSpecError("observable limit is defined for right movers only (b_amp must be 0)");
    }
    ObservableLimitReport rep;
    // psi = T U carries |T(0)|^2 into both observables.
    const Complex amp = family.spec.a_amp * family.spec.t0;
    rep.density_target = density_continuum(amp);

    std::vector<Index> ns;
    std::vector<double> de, fe;
    for (Index n : schedule.steps) {
        const Refinement r = refine(family, schedule, n);
        const QstWave wave(r.params, family.spec);
        rep.flux_target = flux_continuum(r.params, amp);

        ObservableLimitPoint p;
        p.n = n;
        p.density = density_qst(wave, r.point);
        p.flux = flux_qst_closed(wave, r.point);
        p.density_error = std::abs(p.density - rep.density_target);
        p.flux_error = std::abs(p.flux - rep.flux_target);
        const double v = r.params.velocity();
        if (p.density > 0.0) {
            rep.max_ratio_deviation = std::max(rep.max_ratio_deviation, std::abs(p.flux / p.density - v) / v);
        }
        rep.points.push_back(p);
        ns.push_back(n);
        de.push_back(p.density_error);
        fe.push_back(p.flux_error);
    }
    rep.final_density_error = de.back();
    rep.final_flux_error = fe.back();
    if (ns.size() >= 3 && all_positive(de)) {
        rep.density_order = convergence_order(ns, de);
    }
    if (ns.size() >= 3 && all_positive(fe)) {
        rep.flux_order = convergence_order(ns, fe);
    }
    return rep;
}

} // namespace qst
