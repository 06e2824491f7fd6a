#pragma once

#include "eigenfunctions.hpp"
#include "model_core.hpp"

namespace qst {

// (p x - x p) psi for the continuum plane wave with the derivatives taken
// analytically. Equals -i hbar psi.
Complex commutator_continuum_on_plane_wave(const QstParams& params, Complex a_amp, double x,
                                           double t);

// (p x - x p) f with p = (-i hbar / lambda) Δ and x = multiplication by
// j lambda, evaluated by literal stencil application. The result lives on
// the input window shortened by one on the right.
LatticeFunction commutator_qst_apply(const QstParams& params, const LatticeFunction& f);

struct ShiftIdentityReport {
    double max_deviation = 0.0;
    double max_abs_f = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// Compares commutator_qst_apply(f) against -i hbar σf on the common window.
// Passes when max_deviation <= rel_tol * hbar * max|f|.
ShiftIdentityReport shift_identity_check(const QstParams& params, const LatticeFunction& f,
                                         double rel_tol = 1e-13);

struct MomentumFormReport {
    // -i hbar (1 + i k lambda), the eigenvalue form of the commutator.
    Complex expected;
    // Mean of the componentwise ratio [p,x] psi / psi.
    Complex mean_ratio;
    double max_rel_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// Checks [p,x] psi = -i hbar (1 + i k lambda) psi on psi(j, j_t) for
// j in [first, last]. Right movers only; the identity is stated for
// momentum eigenfunctions where p acts as hbar k.
MomentumFormReport momentum_form_identity_check(const QstWave& wave, Index first, Index last,
                                                Index j_t = 0, double rel_tol = 1e-12);

} // namespace qst
