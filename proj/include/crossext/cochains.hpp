#pragma once

#include "algebra.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace crossext {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Index set of a cochain space in a fixed lexicographic order.
///
/// CE cochains are indexed by strictly increasing tuples (a basis of the
/// exterior power); Leibniz cochains by all tuples (a basis of the tensor power).
class TupleBasis {
public:
    TupleBasis(Flavor flavor, std::size_t algebra_dim, std::size_t degree)
        : flavor_(flavor), dim_(algebra_dim), degree_(degree) {
        std::vector<std::size_t> t(degree);
        if (flavor == Flavor::Lie) {
            if (degree > algebra_dim) return;
            for (std::size_t i = 0; i < degree; ++i) t[i] = i;
            while (true) {
                tuples_.push_back(t);
                std::size_t i = degree;
                while (i > 0 && t[i - 1] == algebra_dim - degree + (i - 1)) --i;
                if (i == 0) break;
                ++t[i - 1];
                for (std::size_t j = i; j < degree; ++j) t[j] = t[j - 1] + 1;
            }
        } else {
            std::size_t count = power(algebra_dim, degree);
            tuples_.reserve(count);
            for (std::size_t idx = 0; idx < count; ++idx) {
                std::size_t rest = idx;
                for (std::size_t i = degree; i > 0; --i) {
                    t[i - 1] = rest % algebra_dim;
                    rest /= algebra_dim;
                }
                tuples_.push_back(t);
            }
        }
    }

    [[nodiscard]] Flavor flavor() const { return flavor_; }
    [[nodiscard]] std::size_t algebra_dim() const { return dim_; }
    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] std::size_t size() const { return tuples_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& tuple(std::size_t t) const { return tuples_.at(t); }

    /// Position of a basis tuple (strictly increasing for CE).
    [[nodiscard]] std::size_t index_of(std::span<const std::size_t> t) const {
        if (t.size() != degree_) throw std::invalid_argument("tuple has the wrong length");
        if (flavor_ == Flavor::Leibniz) {
            std::size_t idx = 0;
            for (auto x : t) idx = idx * dim_ + x;
            return idx;
        }
        std::size_t rank = 0;
        std::size_t prev = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::size_t start = i == 0 ? 0 : prev + 1;
            for (std::size_t v = start; v < t[i]; ++v) rank += binomial(dim_ - 1 - v, degree_ - 1 - i);
            prev = t[i];
        }
        return rank;
    }

    /// For CE: sorts an arbitrary tuple, returning (sign of the sorting
    /// permutation, index), or nullopt when an index repeats.
    [[nodiscard]] std::optional<std::pair<int, std::size_t>> normalize(std::vector<std::size_t> t) const {
        if (flavor_ == Flavor::Leibniz) return std::make_pair(1, index_of(t));
        int sign = 1;
        for (std::size_t i = 1; i < t.size(); ++i) {
            for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
                if (t[j - 1] == t[j]) return std::nullopt;
                std::swap(t[j - 1], t[j]);
                sign = -sign;
            }
        }
        return std::make_pair(sign, index_of(t));
    }

private:
    Flavor flavor_;
    std::size_t dim_;
    std::size_t degree_;
    std::vector<std::vector<std::size_t>> tuples_;
};

/// Degree-n cochain with values in a module. Entry (t, m) of `values` is the
/// m-th coordinate of the value on the t-th basis tuple.
template <Flavor F>
struct Cochain {
    std::size_t degree = 0;
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    Vector values;

    static Cochain zero(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim) {
        return {degree, algebra_dim, module_dim, Vector(space_dim(degree, algebra_dim, module_dim))};
    }

    static std::size_t tuple_count(std::size_t degree, std::size_t algebra_dim) {
        return F == Flavor::Lie ? binomial(algebra_dim, degree) : power(algebra_dim, degree);
    }
    static std::size_t space_dim(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim) {
        return tuple_count(degree, algebra_dim) * module_dim;
    }

    [[nodiscard]] TupleBasis basis() const { return {F, algebra_dim, degree}; }

    [[nodiscard]] Vector value_at(std::size_t t) const {
        auto first = values.begin() + static_cast<std::ptrdiff_t>(t * module_dim);
        return {first, first + static_cast<std::ptrdiff_t>(module_dim)};
    }

    void set_value_at(std::size_t t, const Vector& v) {
        if (v.size() != module_dim) throw std::invalid_argument("cochain value has the wrong length");
        std::copy(v.begin(), v.end(), values.begin() + static_cast<std::ptrdiff_t>(t * module_dim));
    }

    /// Value on an arbitrary tuple of basis indices; CE cochains are extended
    /// alternately (zero on repeated indices).
    [[nodiscard]] Vector value(const std::vector<std::size_t>& tuple) const {
        auto norm = basis().normalize(tuple);
        if (!norm) return Vector(module_dim);
        Vector v = value_at(norm->second);
        return norm->first == 1 ? v : -v;
    }

    [[nodiscard]] bool is_zero() const { return crossext::is_zero(values); }

    friend Cochain operator+(const Cochain& a, const Cochain& b) {
        check_compatible(a, b);
        return {a.degree, a.algebra_dim, a.module_dim, a.values + b.values};
    }
    friend Cochain operator-(const Cochain& a, const Cochain& b) {
        check_compatible(a, b);
        return {a.degree, a.algebra_dim, a.module_dim, a.values - b.values};
    }
    friend Cochain operator*(const Scalar& c, const Cochain& a) { return {a.degree, a.algebra_dim, a.module_dim, c * a.values}; }
    Cochain operator-() const { return {degree, algebra_dim, module_dim, -values}; }
    friend bool operator==(const Cochain&, const Cochain&) = default;

    /// Composes every value with a module map (target_dim x module_dim).
    [[nodiscard]] Cochain push(const Matrix& f) const {
        if (f.cols() != module_dim) throw std::invalid_argument("cochain push: map has the wrong shape");
        Cochain out = zero(degree, algebra_dim, f.rows());
        const std::size_t n = tuple_count(degree, algebra_dim);
        for (std::size_t t = 0; t < n; ++t) out.set_value_at(t, f.apply(value_at(t)));
        return out;
    }

private:
    static void check_compatible(const Cochain& a, const Cochain& b) {
        if (a.degree != b.degree || a.algebra_dim != b.algebra_dim || a.module_dim != b.module_dim) {
            throw std::invalid_argument("incompatible cochains");
        }
    }
};

using CECochain = Cochain<Flavor::Lie>;
using LeibnizCochain = Cochain<Flavor::Leibniz>;

}  // namespace crossext
