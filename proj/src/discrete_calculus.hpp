#pragma once

#include <vector>

#include "model_core.hpp"

namespace qst {

// Forward-stencil operators on finite windows. Every operator shrinks the
// window on the right by (stencil width - 1); nothing is padded.

// (Δf)(j) = f(j+1) - f(j). Needs a window of length >= 2.
LatticeFunction forward_difference(const LatticeFunction& f);

// (Δ²f)(j) = f(j+2) - 2 f(j+1) + f(j). Needs a window of length >= 3.
LatticeFunction second_difference(const LatticeFunction& f);

// (σf)(j) = f(j+1). Needs a window of length >= 2.
LatticeFunction shift(const LatticeFunction& f);

// p f = (-i hbar / lambda) Δf
LatticeFunction momentum_apply(const QstParams& params, const LatticeFunction& f);

// (x f)(j) = (j lambda) f(j). Same window; must be nonempty.
LatticeFunction position_apply(const QstParams& params, const LatticeFunction& f);

/// A concrete lattice operator. Composition applies parts right to left, so
/// composed({A, B}) acts as A(B(f)).
class LatticeOperator {
public:
    enum class Kind {
        ForwardDifference,
        SecondDifference,
        Shift,
        PositionMultiply,
        Momentum,
        Composed,
    };

    static LatticeOperator forward_difference();
    static LatticeOperator second_difference();
    static LatticeOperator shift();
    static LatticeOperator position(double lambda);
    static LatticeOperator momentum(double hbar, double lambda);
    static LatticeOperator composed(std::vector<LatticeOperator> parts);

    Kind kind() const noexcept { return kind_; }
    // Divisor (lambda or tau) where the kind carries one, else 1.
    double scale() const noexcept { return scale_; }
    const std::vector<LatticeOperator>& parts() const noexcept { return parts_; }

    // Number of lattice sites the stencil reads per output site.
    int stencil_width() const noexcept;

    LatticeFunction apply(const LatticeFunction& f) const;

private:
    LatticeOperator(Kind kind, double scale, double hbar = 1.0,
                    std::vector<LatticeOperator> parts = {})
        : kind_(kind), scale_(scale), hbar_(hbar), parts_(std::move(parts)) {}

    Kind kind_;
    double scale_;
    double hbar_;
    std::vector<LatticeOperator> parts_;
};

} // namespace qst
