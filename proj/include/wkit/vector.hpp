#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "wkit/error.hpp"
#include "wkit/exact_field.hpp"

namespace wkit {

/// Euclidean vector of dimension >= 2 over a scalar backend (double for
/// general use, Rational for the planar exact path).
template <class T>
class Vec {
public:
    using value_type = T;

    explicit Vec(std::vector<T> coords) : coords_(std::move(coords)) { validate(); }
    Vec(std::initializer_list<T> coords) : coords_(coords) { validate(); }

    static Vec zero(std::size_t dim) { return Vec(std::vector<T>(dim, T(0))); }

    std::size_t dim() const noexcept { return coords_.size(); }
    const T& operator[](std::size_t i) const { return coords_[i]; }
    std::span<const T> coords() const noexcept { return coords_; }

    Vec& operator+=(const Vec& o) {
        require_same_dim(*this, o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        require_same_dim(*this, o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    Vec& operator*=(const T& k) {
        for (auto& c : coords_) c *= k;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const T& k, Vec a) { return a *= k; }
    friend Vec operator*(Vec a, const T& k) { return a *= k; }
    friend Vec operator-(Vec a) { return a *= T(-1); }

    friend bool operator==(const Vec&, const Vec&) = default;

    friend void require_same_dim(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) throw InputError("dimension mismatch");
    }

private:
    void validate() const {
        if (coords_.size() < 2) throw InputError("vector dimension must be at least 2");
        if constexpr (std::is_floating_point_v<T>) {
            for (const auto& c : coords_)
                if (!std::isfinite(c)) throw InputError("vector coordinate is not finite");
        }
    }

    std::vector<T> coords_;
};

using Vector = Vec<double>;
using RationalVector = Vec<Rational>;

template <class T>
T inner(const Vec<T>& u, const Vec<T>& v) {
    require_same_dim(u, v);
    T sum(0);
    for (std::size_t i = 0; i < u.dim(); ++i) sum += u[i] * v[i];
    return sum;
}

template <class T>
T norm_sq(const Vec<T>& u) {
    return inner(u, u);
}

inline double norm(const Vector& u) { return std::sqrt(norm_sq(u)); }

} // namespace wkit
