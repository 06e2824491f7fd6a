#pragma once

// Test-only helpers. The oracles here use the most direct arithmetic
// available (repeated multiplication, explicit loops) and deliberately do
// not call into the library's evaluation paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace qst::test {

using C = std::complex<double>;

inline double rel_err(C got, C want) {
    const double scale = std::abs(want);
    return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

inline double rel_err(double got, double want) {
    const double scale = std::abs(want);
    return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

// base^n by |n| repeated multiplications.
inline C naive_pow(C base, std::int64_t n) {
    C b = n < 0 ? C(1.0) / base : base;
    C r(1.0, 0.0);
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) {
        r *= b;
    }
    return r;
}

inline double naive_pow(double base, std::int64_t n) {
    double b = n < 0 ? 1.0 / base : base;
    double r = 1.0;
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) {
        r *= b;
    }
    return r;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    // (lo, hi]: never returns lo
    double open_closed(double lo, double hi) {
        double v;
        do {
            v = uniform(lo, hi);
        } while (v == lo);
        return v;
    }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
    }
    C complex(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }

    std::vector<C> complex_vector(std::size_t n, double scale = 1.0) {
        std::vector<C> v(n);
        for (auto& z : v) {
            z = complex(scale);
        }
        return v;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace qst::test
