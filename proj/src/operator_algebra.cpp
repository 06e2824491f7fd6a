#include "operator_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "discrete_calculus.hpp"
#include "errors.hpp"

namespace qst {

Complex commutator_continuum_on_plane_wave(const QstParams& params, Complex a_amp, double x,
                                           double t) {
    const Complex ik(0.0, params.k());
    const Complex psi = continuum_plane_wave(params, a_amp, x, t);
    const Complex dpsi = ik * psi;
    // d/dx (x psi) by the product rule
    const Complex d_xpsi = psi + x * dpsi;
    const Complex minus_i_hbar(0.0, -params.hbar());
    return minus_i_hbar * (d_xpsi - x * dpsi);
}

LatticeFunction commutator_qst_apply(const QstParams& params, const LatticeFunction& f) {
    if (f.size() < 2) {
        throw DomainError("commutator needs a window of length >= 2");
    }
    const LatticeFunction px = momentum_apply(params, position_apply(params, f));
    const LatticeFunction xp = position_apply(params, momentum_apply(params, f));
    std::vector<Complex> out(px.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = px.values()[i] - xp.values()[i];
    }
    return LatticeFunction(px.origin(), std::move(out));
}

ShiftIdentityReport shift_identity_check(const QstParams& params, const LatticeFunction& f,
                                         double rel_tol) {
    const LatticeFunction lhs = commutator_qst_apply(params, f);
    const LatticeFunction sf = shift(f);
    const Complex minus_i_hbar(0.0, -params.hbar());

    ShiftIdentityReport r;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        r.max_deviation = std::max(r.max_deviation, std::abs(lhs.values()[i] - minus_i_hbar * sf.values()[i]));
    }
    r.max_abs_f = f.max_abs();
    r.tolerance = rel_tol * params.hbar() * r.max_abs_f;
    r.passed = r.max_deviation <= r.tolerance;
    return r;
}

MomentumFormReport momentum_form_identity_check(const QstWave& wave, Index first, Index last,
                                                Index j_t, double rel_tol) {
    if (!wave.spec().right_mover()) {
        throw UnsupportedSpecError("momentum-form identity holds on right movers only (b_amp must be 0)");
    }
    if (last <= first) {
        throw DomainError("momentum-form check needs a window of length >= 2");
    }
    const auto& prm = wave.params();
    const LatticeFunction psi =
        LatticeFunction::generate(first, last, [&](Index j) { return qst_plane_wave(wave, {j, j_t}); });
    const LatticeFunction lhs = commutator_qst_apply(prm, psi);

    MomentumFormReport r;
    r.expected = Complex(0.0, -prm.hbar()) * Complex(1.0, prm.k_lambda());
    Complex sum{};
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const Complex rhs = r.expected * psi.values()[i];
        const Complex ratio = lhs.values()[i] / psi.values()[i];
        sum += ratio;
        r.max_rel_error = std::max(r.max_rel_error, std::abs(lhs.values()[i] - rhs) / std::abs(rhs));
    }
    r.mean_ratio = sum / static_cast<double>(lhs.size());
    r.tolerance = rel_tol;
    r.passed = r.max_rel_error <= rel_tol;
    return r;
}

} // namespace qst
