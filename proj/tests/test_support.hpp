#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "wkit/vector.hpp"

namespace wkit::testing {

inline bool rel_close(double a, double b, double rel, double floor = 1.0) {
    return std::abs(a - b) <= rel * std::max({floor, std::abs(a), std::abs(b)});
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t dim, double scale = 10.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> c(dim);
    for (auto& x : c) x = dist(rng);
    return Vector(std::move(c));
}

inline std::size_t random_dim(std::mt19937_64& rng) {
    return std::uniform_int_distribution<std::size_t>(2, 8)(rng);
}

} // namespace wkit::testing
