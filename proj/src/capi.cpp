#include "qst/qst.h"

#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "continuum_limit.hpp"
#include "discrete_calculus.hpp"
#include "eigenfunctions.hpp"
#include "errors.hpp"
#include "model_core.hpp"
#include "observables.hpp"
#include "operator_algebra.hpp"

struct qst_params {
    qst::QstParams value;
};

struct qst_wave {
    qst::QstWave value;
};

struct qst_lattice_fn {
    qst::LatticeFunction value;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_field;

qst_status status_of(qst::ErrorKind kind) {
    switch (kind) {
    case qst::ErrorKind::Validation: return QST_ERR_VALIDATION;
    case qst::ErrorKind::Domain: return QST_ERR_DOMAIN;
    case qst::ErrorKind::Overflow: return QST_ERR_OVERFLOW;
    case qst::ErrorKind::UnsupportedSpec: return QST_ERR_UNSUPPORTED_SPEC;
    case qst::ErrorKind::DegenerateFit: return QST_ERR_DEGENERATE_FIT;
    }
    return QST_ERR_INTERNAL;
}

qst_status fail(qst_status s, std::string msg, std::string field = {}) {
    g_last_error = std::move(msg);
    g_last_field = std::move(field);
    return s;
}

// Runs body, translating exceptions into status codes.
template <typename F>
qst_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        g_last_field.clear();
        return QST_OK;
    } catch (const qst::ValidationError& e) {
        return fail(QST_ERR_VALIDATION, e.what(), e.field());
    } catch (const qst::Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::exception& e) {
        return fail(QST_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QST_ERR_INTERNAL, "unknown exception");
    }
}

#define QST_REQUIRE(ptr)                                                            \
    do {                                                                            \
        if ((ptr) == nullptr) {                                                     \
            return fail(QST_ERR_NULL_ARGUMENT, "null argument: " #ptr);             \
        }                                                                           \
    } while (0)

qst::Complex to_cpp(qst_complex z) { return {z.re, z.im}; }
qst_complex to_c(qst::Complex z) { return {z.real(), z.imag()}; }

qst::PhysicalConstants to_cpp(const qst_constants& c) {
    return {c.hbar, c.mass, c.light_speed};
}

template <typename Op>
qst_status make_fn(const qst_lattice_fn* fn, qst_lattice_fn** out, Op&& op) {
    QST_REQUIRE(fn);
    QST_REQUIRE(out);
    return guarded([&] { *out = new qst_lattice_fn{op(fn->value)}; });
}

} // namespace

extern "C" {

const char* qst_version(void) { return "1.0.0"; }

const char* qst_status_name(qst_status status) {
    switch (status) {
    case QST_OK: return "ok";
    case QST_ERR_VALIDATION: return "validation";
    case QST_ERR_DOMAIN: return "domain";
    case QST_ERR_OVERFLOW: return "overflow";
    case QST_ERR_UNSUPPORTED_SPEC: return "unsupported_spec";
    case QST_ERR_DEGENERATE_FIT: return "degenerate_fit";
    case QST_ERR_NULL_ARGUMENT: return "null_argument";
    case QST_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* qst_last_error(void) { return g_last_error.c_str(); }
const char* qst_last_error_field(void) { return g_last_field.c_str(); }

qst_constants qst_natural_units(void) { return {1.0, 1.0, 1.0}; }

qst_status qst_params_create(const qst_constants* constants, double lambda, double energy,
                             qst_params** out) {
    QST_REQUIRE(constants);
    QST_REQUIRE(out);
    return guarded([&] {
        *out = new qst_params{qst::QstParams::make(to_cpp(*constants), lambda, energy)};
    });
}

qst_status qst_params_create_dimensionless(double hbar, double mass, double lambda, double k_lambda,
                                           double omega_tau, qst_params** out) {
    QST_REQUIRE(out);
    return guarded([&] {
        *out = new qst_params{
            qst::QstParams::from_dimensionless(hbar, mass, lambda, k_lambda, omega_tau)};
    });
}

void qst_params_destroy(qst_params* params) { delete params; }

qst_status qst_params_get(const qst_params* params, qst_params_info* out) {
    QST_REQUIRE(params);
    QST_REQUIRE(out);
    const auto& p = params->value;
    *out = {p.hbar(), p.mass(),  p.light_speed(), p.lambda(),   p.tau(),
            p.energy(), p.k(),   p.omega(),       p.k_lambda(), p.omega_tau()};
    return QST_OK;
}

qst_log_polar qst_to_log_polar(qst_complex z) {
    const auto a = qst::to_log_polar(to_cpp(z));
    return {a.log_mag, a.phase};
}

qst_status qst_from_log_polar(qst_log_polar a, qst_complex* out) {
    QST_REQUIRE(out);
    return guarded([&] { *out = to_c(qst::from_log_polar({a.log_mag, a.phase})); });
}

qst_status qst_wave_create(const qst_params* params, qst_complex a_amp, qst_complex b_amp,
                           qst_complex t0, qst_wave** out) {
    QST_REQUIRE(params);
    QST_REQUIRE(out);
    return guarded([&] {
        *out = new qst_wave{qst::QstWave(params->value, {to_cpp(a_amp), to_cpp(b_amp), to_cpp(t0)})};
    });
}

void qst_wave_destroy(qst_wave* wave) { delete wave; }

qst_status qst_wave_eval(const qst_wave* wave, int64_t j_x, int64_t j_t, qst_complex* out) {
    QST_REQUIRE(wave);
    QST_REQUIRE(out);
    return guarded([&] { *out = to_c(qst::qst_plane_wave(wave->value, {j_x, j_t})); });
}

qst_status qst_wave_eval_log(const qst_wave* wave, int64_t j_x, int64_t j_t, qst_log_polar* out) {
    QST_REQUIRE(wave);
    QST_REQUIRE(out);
    return guarded([&] {
        const auto a = qst::qst_plane_wave_log(wave->value, {j_x, j_t});
        *out = {a.log_mag, a.phase};
    });
}

qst_status qst_wave_eval_continuum(const qst_wave* wave, double x, double t, qst_complex* out) {
    QST_REQUIRE(wave);
    QST_REQUIRE(out);
    return guarded([&] {
        *out = to_c(qst::continuum_wave(wave->value.params(), wave->value.spec(), x, t));
    });
}

qst_status qst_time_factor(const qst_params* params, qst_complex t0, int64_t j_t, qst_complex* out) {
    QST_REQUIRE(params);
    QST_REQUIRE(out);
    return guarded([&] { *out = to_c(qst::time_factor(params->value, to_cpp(t0), j_t)); });
}

qst_status qst_space_factor(const qst_wave* wave, int64_t j_x, qst_complex* out) {
    QST_REQUIRE(wave);
    QST_REQUIRE(out);
    return guarded([&] {
        *out = to_c(qst::space_factor(wave->value.params(), wave->value.spec(), j_x));
    });
}

qst_status qst_step_time(const qst_params* params, qst_complex t_current, qst_complex* out) {
    QST_REQUIRE(params);
    QST_REQUIRE(out);
    *out = to_c(qst::step_time_recursion(params->value, to_cpp(t_current)));
    return QST_OK;
}

qst_status qst_step_space(const qst_params* params, qst_complex u_prev, qst_complex u_curr,
                          qst_complex* out) {
    QST_REQUIRE(params);
    QST_REQUIRE(out);
    *out = to_c(qst::step_space_recursion(params->value, to_cpp(u_prev), to_cpp(u_curr)));
    return QST_OK;
}

double qst_density_continuum(qst_complex a_amp) { return qst::density_continuum(to_cpp(a_amp)); }

qst_status qst_flux_continuum(const qst_params* params, qst_complex a_amp, double* out) {
    QST_REQUIRE(params);
    QST_REQUIRE(out);
    *out = qst::flux_continuum(params->value, to_cpp(a_amp));
    return QST_OK;
}

qst_status qst_density(const qst_wave* wave, int64_t j_x, int64_t j_t, double* out) {
    QST_REQUIRE(wave);
    QST_REQUIRE(out);
    return guarded([&] { *out = qst::density_qst(wave->value, {j_x, j_t}); });
}

qst_status qst_log_density(const qst_wave* wave, int64_t j_x, int64_t j_t, double* out) {
    QST_REQUIRE(wave);
    QST_REQUIRE(out);
    return guarded([&] { *out = qst::log_density_qst(wave->value, {j_x, j_t}); });
}

qst_status qst_flux_closed(const qst_wave* wave, int64_t j_x, int64_t j_t, double* out) {
    QST_REQUIRE(wave);
    QST_REQUIRE(out);
    return guarded([&] { *out = qst::flux_qst_closed(wave->value, {j_x, j_t}); });
}

qst_status qst_flux_closed_log(const qst_wave* wave, int64_t j_x, int64_t j_t, double* log_abs,
                               int* sign) {
    QST_REQUIRE(wave);
    QST_REQUIRE(log_abs);
    QST_REQUIRE(sign);
    return guarded([&] {
        const auto f = qst::flux_qst_closed_log(wave->value, {j_x, j_t});
        *log_abs = f.log_abs;
        *sign = f.sign;
    });
}

qst_status qst_flux_definition(const qst_wave* wave, int64_t j_x, int64_t j_t, qst_complex* out) {
    QST_REQUIRE(wave);
    QST_REQUIRE(out);
    return guarded([&] { *out = to_c(qst::flux_definition_value(wave->value, {j_x, j_t})); });
}

qst_status qst_continuity_residual(const qst_wave* wave, int64_t j_x, int64_t j_t, double* residual,
                                   double* predicted) {
    QST_REQUIRE(wave);
    QST_REQUIRE(residual);
    QST_REQUIRE(predicted);
    return guarded([&] {
        const double r = qst::continuity_residual(wave->value, {j_x, j_t});
        const double p = qst::continuity_residual_predicted(wave->value, {j_x, j_t});
        *residual = r;
        *predicted = p;
    });
}

qst_status qst_lattice_fn_create(int64_t origin, const qst_complex* values, size_t count,
                                 qst_lattice_fn** out) {
    QST_REQUIRE(out);
    if (count > 0) {
        QST_REQUIRE(values);
    }
    return guarded([&] {
        std::vector<qst::Complex> v;
        v.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            v.push_back(to_cpp(values[i]));
        }
        *out = new qst_lattice_fn{qst::LatticeFunction(origin, std::move(v))};
    });
}

void qst_lattice_fn_destroy(qst_lattice_fn* fn) { delete fn; }

size_t qst_lattice_fn_size(const qst_lattice_fn* fn) { return fn ? fn->value.size() : 0; }

int64_t qst_lattice_fn_origin(const qst_lattice_fn* fn) { return fn ? fn->value.origin() : 0; }

qst_status qst_lattice_fn_at(const qst_lattice_fn* fn, int64_t j, qst_complex* out) {
    QST_REQUIRE(fn);
    QST_REQUIRE(out);
    return guarded([&] { *out = to_c(fn->value.at(j)); });
}

qst_status qst_forward_difference(const qst_lattice_fn* fn, qst_lattice_fn** out) {
    return make_fn(fn, out, [](const qst::LatticeFunction& f) { return qst::forward_difference(f); });
}

qst_status qst_second_difference(const qst_lattice_fn* fn, qst_lattice_fn** out) {
    return make_fn(fn, out, [](const qst::LatticeFunction& f) { return qst::second_difference(f); });
}

qst_status qst_shift(const qst_lattice_fn* fn, qst_lattice_fn** out) {
    return make_fn(fn, out, [](const qst::LatticeFunction& f) { return qst::shift(f); });
}

qst_status qst_momentum_apply(const qst_params* params, const qst_lattice_fn* fn,
                              qst_lattice_fn** out) {
    QST_REQUIRE(params);
    return make_fn(fn, out, [&](const qst::LatticeFunction& f) {
        return qst::momentum_apply(params->value, f);
    });
}

qst_status qst_position_apply(const qst_params* params, const qst_lattice_fn* fn,
                              qst_lattice_fn** out) {
    QST_REQUIRE(params);
    return make_fn(fn, out, [&](const qst::LatticeFunction& f) {
        return qst::position_apply(params->value, f);
    });
}

qst_status qst_commutator_apply(const qst_params* params, const qst_lattice_fn* fn,
                                qst_lattice_fn** out) {
    QST_REQUIRE(params);
    return make_fn(fn, out, [&](const qst::LatticeFunction& f) {
        return qst::commutator_qst_apply(params->value, f);
    });
}

qst_status qst_commutator_continuum(const qst_params* params, qst_complex a_amp, double x, double t,
                                    qst_complex* out) {
    QST_REQUIRE(params);
    QST_REQUIRE(out);
    return guarded([&] {
        *out = to_c(qst::commutator_continuum_on_plane_wave(params->value, to_cpp(a_amp), x, t));
    });
}

qst_status qst_shift_identity_check(const qst_params* params, const qst_lattice_fn* fn,
                                    double rel_tol, qst_shift_report* out) {
    QST_REQUIRE(params);
    QST_REQUIRE(fn);
    QST_REQUIRE(out);
    return guarded([&] {
        const auto r = qst::shift_identity_check(params->value, fn->value, rel_tol);
        *out = {r.max_deviation, r.max_abs_f, r.tolerance, r.passed ? 1 : 0};
    });
}

qst_status qst_momentum_form_check(const qst_wave* wave, int64_t first, int64_t last, int64_t j_t,
                                   double rel_tol, qst_momentum_report* out) {
    QST_REQUIRE(wave);
    QST_REQUIRE(out);
    return guarded([&] {
        const auto r = qst::momentum_form_identity_check(wave->value, first, last, j_t, rel_tol);
        *out = {to_c(r.expected), to_c(r.mean_ratio), r.max_rel_error, r.tolerance,
                r.passed ? 1 : 0};
    });
}

qst_status qst_limit_run(const qst_constants* constants, double energy, qst_complex a_amp,
                         qst_complex b_amp, qst_complex t0, double x, double t,
                         const int64_t* steps, size_t count, qst_limit_point* out_points,
                         qst_limit_summary* out_summary) {
    QST_REQUIRE(constants);
    QST_REQUIRE(steps);
    QST_REQUIRE(out_points);
    QST_REQUIRE(out_summary);
    return guarded([&] {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        qst::WaveFamily family{to_cpp(*constants), energy,
                               {to_cpp(a_amp), to_cpp(b_amp), to_cpp(t0)}};
        family.constants.validate();
        qst::QstParams::make(family.constants, 1.0, energy); // validates energy
        qst::LimitSchedule schedule{x, t, std::vector<qst::Index>(steps, steps + count)};

        const auto run = qst::limit_error(family, schedule);
        std::optional<qst::ObservableLimitReport> obs;
        if (family.spec.right_mover()) {
            obs = qst::observable_limit_check(family, schedule);
        }

        std::vector<double> psi_errors;
        for (std::size_t i = 0; i < run.points.size(); ++i) {
            const auto& p = run.points[i];
            qst_limit_point q{p.n, p.lambda, p.tau, p.j_x, p.j_t, p.time_residual, p.abs_error,
                              nan, nan, nan, nan};
            if (obs) {
                const auto& o = obs->points[i];
                q.density = o.density;
                q.flux = o.flux;
                q.density_error = o.density_error;
                q.flux_error = o.flux_error;
            }
            out_points[i] = q;
            psi_errors.push_back(p.abs_error);
        }

        qst_limit_summary s{nan, nan, nan, -1, nan, nan, nan};
        bool psi_fit = run.points.size() >= 3;
        for (double e : psi_errors) {
            psi_fit = psi_fit && e > 0.0;
        }
        if (psi_fit) {
            s.psi_order = qst::convergence_order(run.points);
        }
        if (run.monotone_from) {
            s.monotone_from = *run.monotone_from;
        }
        if (obs) {
            s.density_order = obs->density_order.value_or(nan);
            s.flux_order = obs->flux_order.value_or(nan);
            s.density_target = obs->density_target;
            s.flux_target = obs->flux_target;
            s.max_ratio_deviation = obs->max_ratio_deviation;
        }
        *out_summary = s;
    });
}

qst_status qst_convergence_order(const int64_t* n, const double* errors, size_t count, double* out) {
    QST_REQUIRE(n);
    QST_REQUIRE(errors);
    QST_REQUIRE(out);
    return guarded([&] {
        *out = qst::convergence_order(std::vector<qst::Index>(n, n + count),
                                      std::vector<double>(errors, errors + count));
    });
}

} // extern "C"
