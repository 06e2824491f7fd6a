// qst: command-line front end over the libqst C API.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qst/qst.h"
#include "report.hpp"

namespace {

using qst::cli::Cell;
using qst::cli::Report;

constexpr std::int64_t kMaxIndex = 10'000'000;
constexpr std::int64_t kMaxPoints = 10'000'000;

struct CliError {
    std::string status;
    std::string field;
    std::string message;
    int exit_code = 2;
};

void check(qst_status s) {
    if (s != QST_OK) {
        const int code = s == QST_ERR_VALIDATION || s == QST_ERR_UNSUPPORTED_SPEC ? 2 : 1;
        std::string msg = qst_last_error();
        if (s == QST_ERR_OVERFLOW) {
            msg += " (rerun with --log-domain)";
        }
        throw CliError{qst_status_name(s), qst_last_error_field(), msg, code};
    }
}

[[noreturn]] void invalid(const std::string& field, const std::string& message) {
    throw CliError{"validation", field, message, 2};
}

struct ParamsDeleter {
    void operator()(qst_params* p) const { qst_params_destroy(p); }
};
struct WaveDeleter {
    void operator()(qst_wave* w) const { qst_wave_destroy(w); }
};
struct FnDeleter {
    void operator()(qst_lattice_fn* f) const { qst_lattice_fn_destroy(f); }
};
using ParamsPtr = std::unique_ptr<qst_params, ParamsDeleter>;
using WavePtr = std::unique_ptr<qst_wave, WaveDeleter>;
using FnPtr = std::unique_ptr<qst_lattice_fn, FnDeleter>;

struct IndexRange {
    std::int64_t first = 0;
    std::int64_t last = 0;

    std::int64_t count() const { return last - first + 1; }
};

IndexRange parse_range(const std::string& field, const std::string& text) {
    IndexRange r;
    try {
        const auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            r.first = r.last = std::stoll(text, &used);
            if (used != text.size()) {
                invalid(field, "expected N or A..B, got '" + text + "'");
            }
        } else {
            const std::string a = text.substr(0, dots);
            const std::string b = text.substr(dots + 2);
            r.first = std::stoll(a, &used);
            if (used != a.size()) {
                invalid(field, "expected N or A..B, got '" + text + "'");
            }
            r.last = std::stoll(b, &used);
            if (used != b.size()) {
                invalid(field, "expected N or A..B, got '" + text + "'");
            }
        }
    } catch (const std::logic_error&) {
        invalid(field, "expected N or A..B, got '" + text + "'");
    }
    if (r.first > r.last) {
        invalid(field, "empty range " + text);
    }
    if (std::llabs(r.first) > kMaxIndex || std::llabs(r.last) > kMaxIndex) {
        invalid(field, "indices beyond +-10^7 are rejected");
    }
    return r;
}

qst_complex parse_complex(const std::string& field, const std::string& text) {
    try {
        std::size_t used = 0;
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used == text.size()) {
                return {re, 0.0};
            }
        } else {
            const std::string a = text.substr(0, comma);
            const std::string b = text.substr(comma + 1);
            const double re = std::stod(a, &used);
            if (used == a.size()) {
                const double im = std::stod(b, &used);
                if (used == b.size()) {
                    return {re, im};
                }
            }
        }
    } catch (const std::logic_error&) {
    }
    invalid(field, "expected RE or RE,IM, got '" + text + "'");
}

std::vector<std::int64_t> parse_steps(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const auto n = std::stoll(item, &used);
            if (used != item.size()) {
                invalid("steps", "not an integer: '" + item + "'");
            }
            out.push_back(n);
        } catch (const std::logic_error&) {
            invalid("steps", "not an integer: '" + item + "'");
        }
    }
    if (out.empty()) {
        invalid("steps", "schedule is empty");
    }
    return out;
}

std::string complex_text(qst_complex z) {
    return qst::cli::format_real(z.re) + "," + qst::cli::format_real(z.im);
}

struct Options {
    std::optional<double> hbar, mass, light_speed, lambda, energy, k, k_lambda, omega_tau;
    std::string amp_a = "1";
    std::string amp_b = "0";
    std::string t0 = "1";
    std::string jx = "0";
    std::string jt = "0";
    std::string format = "csv";
    std::string out;
    bool log_domain = false;
    bool strict = false;
    std::uint64_t seed = 1;

    double x = 1.0;
    double t = 0.0;
    std::string steps = "10,20,40,80,160";

    std::string check = "all";
    std::string window = "-5..5";
    int trials = 100;
};

class Runner {
public:
    explicit Runner(const Options& o) : o_(o) {}

    Report run(const std::string& sub) {
        if (sub == "converge") {
            return converge();
        }
        resolve_params();
        if (sub == "eval") return eval();
        if (sub == "density") return density();
        if (sub == "flux") return flux();
        if (sub == "continuity") return continuity();
        if (sub == "commutator") return commutator();
        invalid("subcommand", "unknown subcommand " + sub);
    }

private:
    qst_constants constants() const {
        return {o_.hbar.value_or(1.0), o_.mass.value_or(1.0), o_.light_speed.value_or(1.0)};
    }

    double energy_from_inputs(const qst_constants& c) const {
        if (o_.energy && o_.k) {
            invalid("energy", "--energy and --k are mutually exclusive");
        }
        if (o_.k) {
            return c.hbar * c.hbar * *o_.k * *o_.k / (2.0 * c.mass);
        }
        return o_.energy.value_or(0.5);
    }

    void resolve_params() {
        qst_params* raw = nullptr;
        if (o_.k_lambda || o_.omega_tau) {
            if (!o_.k_lambda || !o_.omega_tau) {
                invalid(o_.k_lambda ? "omega_tau" : "k_lambda",
                        "--k-lambda and --omega-tau must be given together");
            }
            if (o_.energy || o_.k || o_.light_speed) {
                invalid("k_lambda", "dimensionless inputs exclude --energy, --k and --c");
            }
            check(qst_params_create_dimensionless(o_.hbar.value_or(1.0), o_.mass.value_or(1.0),
                                                  o_.lambda.value_or(1.0), *o_.k_lambda,
                                                  *o_.omega_tau, &raw));
        } else {
            const qst_constants c = constants();
            check(qst_params_create(&c, o_.lambda.value_or(1.0), energy_from_inputs(c), &raw));
        }
        params_.reset(raw);
        check(qst_params_get(params_.get(), &info_));
        a_ = parse_complex("amp_a", o_.amp_a);
        b_ = parse_complex("amp_b", o_.amp_b);
        t0_ = parse_complex("t0", o_.t0);
        qst_wave* w = nullptr;
        check(qst_wave_create(params_.get(), a_, b_, t0_, &w));
        wave_.reset(w);
    }

    void record_config(Report& r, const std::string& sub) const {
        r.set_config("subcommand", sub);
        r.set_config("hbar", info_.hbar);
        r.set_config("mass", info_.mass);
        r.set_config("light_speed", info_.light_speed);
        r.set_config("lambda", info_.lambda);
        r.set_config("tau", info_.tau);
        r.set_config("energy", info_.energy);
        r.set_config("k", info_.k);
        r.set_config("omega", info_.omega);
        r.set_config("k_lambda", info_.k_lambda);
        r.set_config("omega_tau", info_.omega_tau);
        r.set_config("amp_a", complex_text(a_));
        r.set_config("amp_b", complex_text(b_));
        r.set_config("t0", complex_text(t0_));
        r.set_config("log_domain", o_.log_domain);
        r.set_config("strict", o_.strict);
        r.set_config("format", o_.format);
    }

    std::pair<IndexRange, IndexRange> grid(Report& r) const {
        const auto jx = parse_range("jx", o_.jx);
        const auto jt = parse_range("jt", o_.jt);
        if (jx.count() > kMaxPoints / jt.count()) {
            invalid("jx", "grid exceeds 10^7 lattice points");
        }
        r.set_config("jx", std::to_string(jx.first) + ".." + std::to_string(jx.last));
        r.set_config("jt", std::to_string(jt.first) + ".." + std::to_string(jt.last));
        return {jx, jt};
    }

    // Runs a rectangular evaluation. Returns false on overflow in fallback
    // mode; rethrows in strict mode.
    bool rect(qst_status s) const {
        if (s == QST_ERR_OVERFLOW && !o_.strict) {
            return false;
        }
        check(s);
        return true;
    }

    template <typename F>
    void for_each_point(const IndexRange& jx, const IndexRange& jt, F&& f) const {
        // j_t-major, j_x ascending
        for (auto t = jt.first; t <= jt.last; ++t) {
            for (auto x = jx.first; x <= jx.last; ++x) {
                f(x, t);
            }
        }
    }

    Report eval() {
        Report r({"j_x", "j_t", "x", "t", "re_psi", "im_psi", "log_abs_psi", "arg_psi",
                  "re_psi_continuum", "im_psi_continuum", "warning"});
        record_config(r, "eval");
        const auto [jx, jt] = grid(r);
        std::int64_t fallbacks = 0;
        for_each_point(jx, jt, [&](std::int64_t x, std::int64_t t) {
            const double px = static_cast<double>(x) * info_.lambda;
            const double pt = static_cast<double>(t) * info_.tau;
            qst_log_polar lp{};
            check(qst_wave_eval_log(wave_.get(), x, t, &lp));
            qst_complex cont{};
            check(qst_wave_eval_continuum(wave_.get(), px, pt, &cont));
            Cell re, im, warn = std::string();
            if (!o_.log_domain) {
                qst_complex psi{};
                if (rect(qst_wave_eval(wave_.get(), x, t, &psi))) {
                    re = psi.re;
                    im = psi.im;
                } else {
                    warn = std::string("rect_overflow");
                    ++fallbacks;
                }
            }
            r.add_row({x, t, px, pt, re, im, lp.log_mag, lp.phase, cont.re, cont.im, warn});
        });
        r.set_summary("points", static_cast<std::int64_t>(r.rows().size()));
        r.set_summary("log_domain_fallbacks", fallbacks);
        return r;
    }

    Report density() {
        Report r({"j_x", "j_t", "density", "log_density", "warning"});
        record_config(r, "density");
        const auto [jx, jt] = grid(r);
        std::int64_t fallbacks = 0;
        double continuum = qst_density_continuum({a_.re * t0_.re - a_.im * t0_.im,
                                                  a_.re * t0_.im + a_.im * t0_.re});
        for_each_point(jx, jt, [&](std::int64_t x, std::int64_t t) {
            double ld = 0.0;
            check(qst_log_density(wave_.get(), x, t, &ld));
            Cell d, warn = std::string();
            if (!o_.log_domain) {
                double v = 0.0;
                if (rect(qst_density(wave_.get(), x, t, &v))) {
                    d = v;
                } else {
                    warn = std::string("rect_overflow");
                    ++fallbacks;
                }
            }
            r.add_row({x, t, d, ld, warn});
        });
        r.set_summary("density_continuum", continuum);
        r.set_summary("log_domain_fallbacks", fallbacks);
        return r;
    }

    Report flux() {
        Report r({"j_x", "j_t", "flux_closed", "flux_definition", "flux_definition_imag",
                  "rel_diff", "log_abs_flux", "flux_sign", "warning"});
        record_config(r, "flux");
        const auto [jx, jt] = grid(r);
        std::int64_t fallbacks = 0;
        double max_rel = 0.0;
        double continuum = 0.0;
        const qst_complex at0{a_.re * t0_.re - a_.im * t0_.im, a_.re * t0_.im + a_.im * t0_.re};
        check(qst_flux_continuum(params_.get(), at0, &continuum));
        for_each_point(jx, jt, [&](std::int64_t x, std::int64_t t) {
            double la = 0.0;
            int sign = 0;
            check(qst_flux_closed_log(wave_.get(), x, t, &la, &sign));
            Cell closed, def, def_im, rel, warn = std::string();
            if (!o_.log_domain) {
                double c = 0.0;
                qst_complex d{};
                if (rect(qst_flux_closed(wave_.get(), x, t, &c)) &&
                    rect(qst_flux_definition(wave_.get(), x, t, &d))) {
                    closed = c;
                    def = d.re;
                    def_im = d.im;
                    const double rd = c != 0.0 ? std::abs(d.re - c) / std::abs(c) : std::abs(d.re);
                    rel = rd;
                    max_rel = std::max(max_rel, rd);
                } else {
                    warn = std::string("rect_overflow");
                    ++fallbacks;
                }
            }
            r.add_row({x, t, closed, def, def_im, rel, la, static_cast<std::int64_t>(sign), warn});
        });
        r.set_summary("flux_continuum", continuum);
        r.set_summary("max_rel_diff", max_rel);
        r.set_summary("log_domain_fallbacks", fallbacks);
        return r;
    }

    Report continuity() {
        Report r({"j_x", "j_t", "residual", "predicted", "rel_diff", "log_predicted", "warning"});
        record_config(r, "continuity");
        const auto [jx, jt] = grid(r);
        std::int64_t fallbacks = 0;
        double max_rel = 0.0;
        const double k = info_.k;
        const double coeff = info_.omega * info_.omega * info_.tau +
                             info_.hbar * k * k * k * info_.lambda / info_.mass;
        for_each_point(jx, jt, [&](std::int64_t x, std::int64_t t) {
            double ld = 0.0;
            check(qst_log_density(wave_.get(), x, t, &ld));
            Cell res, pred, rel, warn = std::string();
            if (!o_.log_domain) {
                double a = 0.0, b = 0.0;
                if (rect(qst_continuity_residual(wave_.get(), x, t, &a, &b))) {
                    res = a;
                    pred = b;
                    const double rd = b != 0.0 ? std::abs(a - b) / std::abs(b) : std::abs(a);
                    rel = rd;
                    max_rel = std::max(max_rel, rd);
                } else {
                    warn = std::string("rect_overflow");
                    ++fallbacks;
                }
            }
            r.add_row({x, t, res, pred, rel, ld + std::log(coeff), warn});
        });
        r.set_summary("max_rel_diff", max_rel);
        r.set_summary("log_domain_fallbacks", fallbacks);
        return r;
    }

    Report converge() {
        if (o_.k_lambda || o_.omega_tau || o_.lambda) {
            invalid("lambda", "converge varies lambda itself; --lambda, --k-lambda and --omega-tau are not accepted");
        }
        Report r({"n", "lambda", "tau", "j_x", "j_t", "time_residual", "psi_error", "density",
                  "flux", "density_error", "flux_error"});
        const qst_constants c = constants();
        const double energy = energy_from_inputs(c);
        a_ = parse_complex("amp_a", o_.amp_a);
        b_ = parse_complex("amp_b", o_.amp_b);
        t0_ = parse_complex("t0", o_.t0);
        const auto steps = parse_steps(o_.steps);

        std::vector<qst_limit_point> pts(steps.size());
        qst_limit_summary s{};
        check(qst_limit_run(&c, energy, a_, b_, t0_, o_.x, o_.t, steps.data(), steps.size(),
                            pts.data(), &s));

        r.set_config("subcommand", std::string("converge"));
        r.set_config("hbar", c.hbar);
        r.set_config("mass", c.mass);
        r.set_config("light_speed", c.light_speed);
        r.set_config("energy", energy);
        r.set_config("x", o_.x);
        r.set_config("t", o_.t);
        r.set_config("steps", o_.steps);
        r.set_config("amp_a", complex_text(a_));
        r.set_config("amp_b", complex_text(b_));
        r.set_config("t0", complex_text(t0_));
        r.set_config("format", o_.format);

        auto opt = [](double v) -> Cell { return std::isnan(v) ? Cell{} : Cell{v}; };
        for (const auto& p : pts) {
            r.add_row({p.n, p.lambda, p.tau, p.j_x, p.j_t, p.time_residual, p.psi_error,
                       opt(p.density), opt(p.flux), opt(p.density_error), opt(p.flux_error)});
        }
        r.set_summary("psi_order", opt(s.psi_order));
        r.set_summary("density_order", opt(s.density_order));
        r.set_summary("flux_order", opt(s.flux_order));
        r.set_summary("monotone_from", s.monotone_from >= 0 ? Cell{s.monotone_from} : Cell{});
        r.set_summary("density_target", opt(s.density_target));
        r.set_summary("flux_target", opt(s.flux_target));
        r.set_summary("max_ratio_deviation", opt(s.max_ratio_deviation));
        return r;
    }

    FnPtr make_fn(std::int64_t origin, const std::vector<qst_complex>& v) const {
        qst_lattice_fn* raw = nullptr;
        check(qst_lattice_fn_create(origin, v.data(), v.size(), &raw));
        return FnPtr(raw);
    }

    Report commutator() {
        Report r({"trial", "check", "case", "max_deviation", "tolerance", "passed"});
        record_config(r, "commutator");
        const auto window = parse_range("window", o_.window);
        if (window.count() < 2) {
            invalid("window", "commutator needs at least two sites");
        }
        if (window.count() > kMaxPoints) {
            invalid("window", "window exceeds 10^7 sites");
        }
        if (o_.trials < 0) {
            invalid("trials", "must be >= 0");
        }
        const bool all = o_.check == "all";
        if (!all && o_.check != "shift" && o_.check != "momentum" && o_.check != "continuum") {
            invalid("check", "expected shift, momentum, continuum or all");
        }
        r.set_config("check", o_.check);
        r.set_config("window", o_.window);
        r.set_config("trials", static_cast<std::int64_t>(o_.trials));
        r.set_config("seed", static_cast<std::int64_t>(o_.seed));

        std::mt19937_64 rng(o_.seed);
        // 53-bit uniform in [-1, 1), independent of the standard library's distributions
        auto uniform = [&rng] { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; };
        bool all_passed = true;
        std::int64_t trial = 0;

        if (all || o_.check == "shift") {
            double max_dev = 0.0, max_tol = 0.0;
            bool passed = true;
            auto run_case = [&](const std::string& name, const std::vector<qst_complex>& v) {
                const FnPtr f = make_fn(window.first, v);
                qst_shift_report rep{};
                check(qst_shift_identity_check(params_.get(), f.get(), 1e-13, &rep));
                r.add_row({trial++, std::string("shift"), name, rep.max_deviation, rep.tolerance,
                           rep.passed != 0});
                max_dev = std::max(max_dev, rep.max_deviation);
                max_tol = std::max(max_tol, rep.tolerance);
                passed = passed && rep.passed != 0;
            };
            const auto n = static_cast<std::size_t>(window.count());
            for (int i = 0; i < o_.trials; ++i) {
                std::vector<qst_complex> v(n);
                for (auto& z : v) {
                    z.re = uniform();
                    z.im = uniform();
                }
                run_case("random", v);
            }
            std::vector<qst_complex> delta(n), constant(n, {1.0, 0.0}), linear(n), geometric(n);
            const std::int64_t j0 = window.first <= 0 && window.last >= 0 ? 0 : window.first;
            delta[static_cast<std::size_t>(j0 - window.first)] = {1.0, 0.0};
            for (std::size_t i = 0; i < n; ++i) {
                const auto j = window.first + static_cast<std::int64_t>(i);
                linear[i] = {static_cast<double>(j), 0.0};
                const auto g = std::pow(std::complex<double>(1.0, 1.0), static_cast<int>(j));
                geometric[i] = {g.real(), g.imag()};
            }
            run_case("delta", delta);
            run_case("constant", constant);
            run_case("linear", linear);
            run_case("geometric", geometric);
            r.set_summary("shift_max_deviation", max_dev);
            r.set_summary("shift_tolerance", max_tol);
            r.set_summary("shift_passed", passed);
            all_passed = all_passed && passed;
        }

        if (all || o_.check == "momentum") {
            const auto jt = parse_range("jt", o_.jt);
            qst_momentum_report rep{};
            check(qst_momentum_form_check(wave_.get(), window.first, window.last, jt.first, 1e-12, &rep));
            r.add_row({trial++, std::string("momentum"), std::string("right_mover"),
                       rep.max_rel_error, rep.tolerance, rep.passed != 0});
            r.set_summary("momentum_expected", complex_text(rep.expected));
            r.set_summary("momentum_mean_ratio", complex_text(rep.mean_ratio));
            r.set_summary("momentum_max_rel_error", rep.max_rel_error);
            r.set_summary("momentum_passed", rep.passed != 0);
            all_passed = all_passed && rep.passed != 0;
        }

        if (all || o_.check == "continuum") {
            const double tol = 1e-12 * info_.hbar * std::hypot(a_.re, a_.im);
            double max_dev = 0.0;
            qst_wave* raw = nullptr;
            check(qst_wave_create(params_.get(), a_, {0.0, 0.0}, {1.0, 0.0}, &raw));
            const WavePtr plane(raw);
            const int n = std::max(o_.trials, 1);
            for (int i = 0; i < n; ++i) {
                const double x = 10.0 * uniform();
                const double t = 10.0 * uniform();
                qst_complex c{}, psi{};
                check(qst_commutator_continuum(params_.get(), a_, x, t, &c));
                check(qst_wave_eval_continuum(plane.get(), x, t, &psi));
                // expected -i hbar psi
                const double dre = c.re - info_.hbar * psi.im;
                const double dim = c.im + info_.hbar * psi.re;
                max_dev = std::max(max_dev, std::hypot(dre, dim));
            }
            const bool passed = max_dev <= tol;
            r.add_row({trial++, std::string("continuum"), std::string("plane_wave"), max_dev, tol, passed});
            r.set_summary("continuum_max_deviation", max_dev);
            r.set_summary("continuum_passed", passed);
            all_passed = all_passed && passed;
        }

        r.set_summary("all_passed", all_passed);
        return r;
    }

    const Options& o_;
    ParamsPtr params_;
    WavePtr wave_;
    qst_params_info info_{};
    qst_complex a_{1.0, 0.0};
    qst_complex b_{0.0, 0.0};
    qst_complex t0_{1.0, 0.0};
};

void add_physics_options(CLI::App* sub, Options& o) {
    sub->add_option("--hbar", o.hbar, "Reduced Planck constant (default 1)");
    sub->add_option("--mass", o.mass, "Particle mass (default 1)");
    sub->add_option("--c", o.light_speed, "Light speed; tau = lambda / c (default 1)");
    sub->add_option("--lambda", o.lambda, "Lattice spacing (default 1)");
    sub->add_option("--energy", o.energy, "Energy (default 0.5)");
    sub->add_option("--k", o.k, "Wavenumber; sets energy = hbar^2 k^2 / 2m");
    sub->add_option("--k-lambda", o.k_lambda, "Dimensionless k*lambda (with --omega-tau)");
    sub->add_option("--omega-tau", o.omega_tau, "Dimensionless omega*tau (with --k-lambda)");
    sub->add_option("--amp-a", o.amp_a, "Right-mover amplitude A as RE or RE,IM (default 1)");
    sub->add_option("--amp-b", o.amp_b, "Left-mover amplitude B as RE or RE,IM (default 0)");
    sub->add_option("--t0", o.t0, "Time normalization T(0) as RE or RE,IM (default 1)");
}

void add_output_options(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Output path (default stdout)");
    sub->add_flag("--log-domain", o.log_domain, "Report log-domain values only");
    sub->add_flag("--strict", o.strict, "Fail on rectangular overflow instead of falling back");
    sub->add_option("--seed", o.seed, "Seed for randomized checks (default 1)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free-particle eigenfunctions on a quantized space-time lattice"};
    app.require_subcommand(1);
    Options o;

    struct SubInfo {
        const char* name;
        const char* help;
    };
    const SubInfo subs[] = {
        {"eval", "Lattice and continuum plane wave over a (j_x, j_t) grid"},
        {"density", "Probability density over a (j_x, j_t) grid"},
        {"flux", "Probability current, closed form against the difference definition"},
        {"converge", "Continuum-limit error and fitted convergence order"},
        {"commutator", "Commutator identity checks"},
        {"continuity", "Discrete continuity residual over a grid"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        add_physics_options(sub, o);
        add_output_options(sub, o);
        const std::string name = s.name;
        if (name == "converge") {
            sub->add_option("--x", o.x, "Target position (default 1)");
            sub->add_option("--t", o.t, "Target time (default 0)");
            sub->add_option("--steps", o.steps, "Comma-separated refinement levels n");
        } else if (name == "commutator") {
            sub->add_option("--check", o.check, "shift, momentum, continuum or all");
            sub->add_option("--window", o.window, "Index window A..B (default -5..5)");
            sub->add_option("--trials", o.trials, "Random lattice functions (default 100)");
            sub->add_option("--jt", o.jt, "Time index for the momentum check (default 0)");
        } else {
            sub->add_option("--jx", o.jx, "Space index range A..B");
            sub->add_option("--jt", o.jt, "Time index range A..B");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        for (auto& ch : msg) {
            if (ch == '\n') ch = ' ';
        }
        std::cerr << "error: status=usage field= message=" << msg << '\n';
        return 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        Runner runner(o);
        const Report report = runner.run(sub);
        std::ostringstream buf;
        if (o.format == "json") {
            report.write_json(buf);
        } else {
            report.write_csv(buf);
        }
        if (o.out.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(o.out, std::ios::binary);
            if (!f) {
                throw CliError{"io", "out", "cannot open " + o.out, 1};
            }
            f << buf.str();
        }
        if (const Cell* passed = report.summary("all_passed");
            passed != nullptr && *passed == Cell{false}) {
            return 3;
        }
        return 0;
    } catch (const CliError& e) {
        std::cerr << "error: status=" << e.status << " field=" << e.field << " message=" << e.message
                  << '\n';
        return e.exit_code;
    }
}
