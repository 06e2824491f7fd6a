/*
 * C interface to the quantized space-time free-particle library.
 *
 * Objects are opaque handles created by *_create and released by the
 * matching *_destroy. Every fallible call returns a qst_status; on failure
 * qst_last_error() holds a one-line message for the calling thread and
 * output arguments are left untouched.
 */
#ifndef QST_QST_H
#define QST_QST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QST_BUILDING_LIBRARY)
#    define QST_API __declspec(dllexport)
#  else
#    define QST_API __declspec(dllimport)
#  endif
#else
#  define QST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qst_status {
    QST_OK = 0,
    QST_ERR_VALIDATION = 1,
    QST_ERR_DOMAIN = 2,
    QST_ERR_OVERFLOW = 3,
    QST_ERR_UNSUPPORTED_SPEC = 4,
    QST_ERR_DEGENERATE_FIT = 5,
    QST_ERR_NULL_ARGUMENT = 6,
    QST_ERR_INTERNAL = 7
} qst_status;

typedef struct qst_params qst_params;
typedef struct qst_wave qst_wave;
typedef struct qst_lattice_fn qst_lattice_fn;

typedef struct qst_complex {
    double re;
    double im;
} qst_complex;

/* ln|z| and arg z in (-pi, pi]; zero is log_mag = -inf, phase 0. */
typedef struct qst_log_polar {
    double log_mag;
    double phase;
} qst_log_polar;

typedef struct qst_constants {
    double hbar;
    double mass;
    double light_speed;
} qst_constants;

typedef struct qst_params_info {
    double hbar;
    double mass;
    double light_speed;
    double lambda;
    double tau;
    double energy;
    double k;
    double omega;
    double k_lambda;
    double omega_tau;
} qst_params_info;

typedef struct qst_shift_report {
    double max_deviation;
    double max_abs_f;
    double tolerance;
    int passed;
} qst_shift_report;

typedef struct qst_momentum_report {
    qst_complex expected;
    qst_complex mean_ratio;
    double max_rel_error;
    double tolerance;
    int passed;
} qst_momentum_report;

typedef struct qst_limit_point {
    int64_t n;
    double lambda;
    double tau;
    int64_t j_x;
    int64_t j_t;
    double time_residual;
    double psi_error;
    double density;
    double flux;
    double density_error;
    double flux_error;
} qst_limit_point;

/* Orders are NaN when a fit is undefined (fewer than 3 points or an exact
 * zero error). monotone_from is -1 when errors do not decrease at the end. */
typedef struct qst_limit_summary {
    double psi_order;
    double density_order;
    double flux_order;
    int64_t monotone_from;
    double density_target;
    double flux_target;
    double max_ratio_deviation;
} qst_limit_summary;

QST_API const char* qst_version(void);
QST_API const char* qst_status_name(qst_status status);
QST_API const char* qst_last_error(void);
/* Field named by the last validation error, or "" for other errors. */
QST_API const char* qst_last_error_field(void);

/* Natural units: hbar = mass = light_speed = 1. */
QST_API qst_constants qst_natural_units(void);

/* ---- parameters ---------------------------------------------------- */

QST_API qst_status qst_params_create(const qst_constants* constants, double lambda, double energy,
                                     qst_params** out);
/* lambda fixed, light speed derived so that omega*tau matches. */
QST_API qst_status qst_params_create_dimensionless(double hbar, double mass, double lambda,
                                                   double k_lambda, double omega_tau,
                                                   qst_params** out);
QST_API void qst_params_destroy(qst_params* params);
QST_API qst_status qst_params_get(const qst_params* params, qst_params_info* out);

/* ---- log-polar conversion ------------------------------------------ */

QST_API qst_log_polar qst_to_log_polar(qst_complex z);
QST_API qst_status qst_from_log_polar(qst_log_polar a, qst_complex* out);

/* ---- eigenfunctions ------------------------------------------------ */

QST_API qst_status qst_wave_create(const qst_params* params, qst_complex a_amp, qst_complex b_amp,
                                   qst_complex t0, qst_wave** out);
QST_API void qst_wave_destroy(qst_wave* wave);

QST_API qst_status qst_wave_eval(const qst_wave* wave, int64_t j_x, int64_t j_t, qst_complex* out);
QST_API qst_status qst_wave_eval_log(const qst_wave* wave, int64_t j_x, int64_t j_t,
                                     qst_log_polar* out);
/* Continuum counterpart of the wave at physical (x, t). */
QST_API qst_status qst_wave_eval_continuum(const qst_wave* wave, double x, double t,
                                           qst_complex* out);
QST_API qst_status qst_time_factor(const qst_params* params, qst_complex t0, int64_t j_t,
                                   qst_complex* out);
QST_API qst_status qst_space_factor(const qst_wave* wave, int64_t j_x, qst_complex* out);
QST_API qst_status qst_step_time(const qst_params* params, qst_complex t_current, qst_complex* out);
QST_API qst_status qst_step_space(const qst_params* params, qst_complex u_prev, qst_complex u_curr,
                                  qst_complex* out);

/* ---- observables --------------------------------------------------- */

QST_API double qst_density_continuum(qst_complex a_amp);
QST_API qst_status qst_flux_continuum(const qst_params* params, qst_complex a_amp, double* out);
QST_API qst_status qst_density(const qst_wave* wave, int64_t j_x, int64_t j_t, double* out);
QST_API qst_status qst_log_density(const qst_wave* wave, int64_t j_x, int64_t j_t, double* out);
QST_API qst_status qst_flux_closed(const qst_wave* wave, int64_t j_x, int64_t j_t, double* out);
QST_API qst_status qst_flux_closed_log(const qst_wave* wave, int64_t j_x, int64_t j_t,
                                       double* log_abs, int* sign);
QST_API qst_status qst_flux_definition(const qst_wave* wave, int64_t j_x, int64_t j_t,
                                       qst_complex* out);
QST_API qst_status qst_continuity_residual(const qst_wave* wave, int64_t j_x, int64_t j_t,
                                           double* residual, double* predicted);

/* ---- lattice functions and operators ------------------------------- */

QST_API qst_status qst_lattice_fn_create(int64_t origin, const qst_complex* values, size_t count,
                                         qst_lattice_fn** out);
QST_API void qst_lattice_fn_destroy(qst_lattice_fn* fn);
QST_API size_t qst_lattice_fn_size(const qst_lattice_fn* fn);
QST_API int64_t qst_lattice_fn_origin(const qst_lattice_fn* fn);
QST_API qst_status qst_lattice_fn_at(const qst_lattice_fn* fn, int64_t j, qst_complex* out);

QST_API qst_status qst_forward_difference(const qst_lattice_fn* fn, qst_lattice_fn** out);
QST_API qst_status qst_second_difference(const qst_lattice_fn* fn, qst_lattice_fn** out);
QST_API qst_status qst_shift(const qst_lattice_fn* fn, qst_lattice_fn** out);
QST_API qst_status qst_momentum_apply(const qst_params* params, const qst_lattice_fn* fn,
                                      qst_lattice_fn** out);
QST_API qst_status qst_position_apply(const qst_params* params, const qst_lattice_fn* fn,
                                      qst_lattice_fn** out);
QST_API qst_status qst_commutator_apply(const qst_params* params, const qst_lattice_fn* fn,
                                        qst_lattice_fn** out);

/* ---- commutator identities ----------------------------------------- */

QST_API qst_status qst_commutator_continuum(const qst_params* params, qst_complex a_amp, double x,
                                            double t, qst_complex* out);
QST_API qst_status qst_shift_identity_check(const qst_params* params, const qst_lattice_fn* fn,
                                            double rel_tol, qst_shift_report* out);
QST_API qst_status qst_momentum_form_check(const qst_wave* wave, int64_t first, int64_t last,
                                           int64_t j_t, double rel_tol, qst_momentum_report* out);

/* ---- continuum limit ----------------------------------------------- */

/* Runs the schedule lambda_n = x / n for every n in steps; out_points must
 * hold count entries. Density and flux columns need b_amp == 0; for left
 * movers they are NaN. */
QST_API qst_status qst_limit_run(const qst_constants* constants, double energy, qst_complex a_amp,
                                 qst_complex b_amp, qst_complex t0, double x, double t,
                                 const int64_t* steps, size_t count, qst_limit_point* out_points,
                                 qst_limit_summary* out_summary);
QST_API qst_status qst_convergence_order(const int64_t* n, const double* errors, size_t count,
                                         double* out);

#ifdef __cplusplus
}
#endif

#endif /* QST_QST_H */
