#pragma once

#include "series.hpp"

#include <cstdint>
#include <random>

namespace dsh {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    // Nonzero p/q with |p| <= range and 1 <= q <= range.
    Rational small_rational(int range = 3);
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

// Random rational combination of Lyndon basis elements of degrees in
// [min_degree, max_degree].
XSeries random_lie(const GroupPtr& group, int cap, Rng& rng, int terms, int min_degree = 1, int max_degree = -1);
// exp of random_lie: grouplike by construction.
XSeries random_grouplike(const GroupPtr& group, int cap, Rng& rng, int terms, int min_degree = 1, int max_degree = -1);
// Arbitrary words with random coefficients.
XSeries random_series(const GroupPtr& group, int cap, Rng& rng, int terms);
YSeries random_y_series(const GroupPtr& group, int cap, Rng& rng, int terms);

} // namespace dsh
