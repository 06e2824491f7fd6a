#include "discrete_calculus.hpp"

#include <string>

#include "errors.hpp"

namespace qst {

namespace {

void require_length(const LatticeFunction& f, std::size_t n, const char* op) {
    if (f.size() < n) {
        throw DomainError(std::string(op) + " needs a window of length >= " + std::to_string(n) +
                          ", got " + std::to_string(f.size()));
    }
}

} // namespace

LatticeFunction forward_difference(const LatticeFunction& f) {
    require_length(f, 2, "forward_difference");
    const auto& v = f.values();
    std::vector<Complex> out(v.size() - 1);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        out[i] = v[i + 1] - v[i];
    }
    return LatticeFunction(f.origin(), std::move(out));
}

LatticeFunction second_difference(const LatticeFunction& f) {
    require_length(f, 3, "second_difference");
    const auto& v = f.values();
    std::vector<Complex> out(v.size() - 2);
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        out[i] = v[i + 2] - 2.0 * v[i + 1] + v[i];
    }
    return LatticeFunction(f.origin(), std::move(out));
}

LatticeFunction shift(const LatticeFunction& f) {
    require_length(f, 2, "shift");
    const auto& v = f.values();
    return LatticeFunction(f.origin(), std::vector<Complex>(v.begin() + 1, v.end()));
}

LatticeFunction momentum_apply(const QstParams& params, const LatticeFunction& f) {
    return LatticeOperator::momentum(params.hbar(), params.lambda()).apply(f);
}

LatticeFunction position_apply(const QstParams& params, const LatticeFunction& f) {
    return LatticeOperator::position(params.lambda()).apply(f);
}

LatticeOperator LatticeOperator::forward_difference() {
    return LatticeOperator(Kind::ForwardDifference, 1.0);
}

LatticeOperator LatticeOperator::second_difference() {
    return LatticeOperator(Kind::SecondDifference, 1.0);
}

LatticeOperator LatticeOperator::shift() { return LatticeOperator(Kind::Shift, 1.0); }

LatticeOperator LatticeOperator::position(double lambda) {
    return LatticeOperator(Kind::PositionMultiply, lambda);
}

LatticeOperator LatticeOperator::momentum(double hbar, double lambda) {
    return LatticeOperator(Kind::Momentum, lambda, hbar);
}

LatticeOperator LatticeOperator::composed(std::vector<LatticeOperator> parts) {
    if (parts.empty()) {
        throw ValidationError("parts", "composition needs at least one operator");
    }
    return LatticeOperator(Kind::Composed, 1.0, 1.0, std::move(parts));
}

int LatticeOperator::stencil_width() const noexcept {
    switch (kind_) {
    case Kind::ForwardDifference:
    case Kind::Shift:
    case Kind::Momentum:
        return 2;
    case Kind::SecondDifference:
        return 3;
    case Kind::PositionMultiply:
        return 1;
    case Kind::Composed: {
        int w = 1;
        for (const auto& p : parts_) {
            w += p.stencil_width() - 1;
        }
        return w;
    }
    }
    return 1;
}

LatticeFunction LatticeOperator::apply(const LatticeFunction& f) const {
    switch (kind_) {
    case Kind::ForwardDifference:
        return qst::forward_difference(f);
    case Kind::SecondDifference:
        return qst::second_difference(f);
    case Kind::Shift:
        return qst::shift(f);
    case Kind::Momentum: {
        auto d = qst::forward_difference(f);
        const Complex coeff(0.0, -hbar_ / scale_);
        std::vector<Complex> out(d.values());
        for (auto& v : out) {
            v = coeff * v;
        }
        return LatticeFunction(d.origin(), std::move(out));
    }
    case Kind::PositionMultiply: {
        if (f.empty()) {
            throw DomainError("position operator needs a nonempty window");
        }
        std::vector<Complex> out(f.values());
        Index j = f.origin();
        for (auto& v : out) {
            v = (static_cast<double>(j) * scale_) * v;
            ++j;
        }
        return LatticeFunction(f.origin(), std::move(out));
    }
    case Kind::Composed: {
        LatticeFunction g = f;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
            g = it->apply(g);
        }
        return g;
    }
    }
    return f;
}

} // namespace qst
