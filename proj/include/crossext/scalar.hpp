#pragma once

#include "rational.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crossext {

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e != 0) {
            if (e & 1U) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1U;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Which ground field a computation runs over. `modulus == 0` means the rationals.
struct FieldSpec {
    std::uint64_t modulus = 0;

    [[nodiscard]] bool is_rational() const { return modulus == 0; }
    [[nodiscard]] std::string to_string() const { return is_rational() ? "q" : "p:" + std::to_string(modulus); }

    /// Accepts "q" or "p:<prime>".
    static FieldSpec parse(std::string_view text) {
        if (text == "q" || text == "Q") return {};
        if (text.size() > 2 && text.substr(0, 2) == "p:") {
            std::uint64_t p = std::stoull(std::string(text.substr(2)));
            if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
            return FieldSpec{p};
        }
        throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or p:<prime>)");
    }
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of Q or of F_p.
///
/// A scalar is either a rational or a residue in [0, p). Rationals act as
/// literals: combining a rational with a residue mod p first maps the rational
/// into F_p (its denominator must be a unit mod p). Combining residues with
/// different moduli is an error.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational q) : q_(std::move(q)) {}  // NOLINT(google-explicit-constructor)

    static Scalar mod(std::int64_t v, std::uint64_t p) {
        if (p == 0) return Scalar(v);
        Scalar s;
        s.modulus_ = p;
        auto m = static_cast<__int128>(v) % static_cast<__int128>(p);
        if (m < 0) m += p;
        s.residue_ = static_cast<std::uint64_t>(m);
        return s;
    }

    /// Maps this value into the given field.
    [[nodiscard]] Scalar in_field(const FieldSpec& f) const {
        if (f.is_rational()) {
            if (modulus_ != 0) throw std::invalid_argument("cannot lift a residue mod p to Q");
            return *this;
        }
        if (modulus_ == f.modulus) return *this;
        if (modulus_ != 0) throw std::invalid_argument("mixing residues with different moduli");
        return reduce(q_, f.modulus);
    }

    /// Parses "p/q", "p", or "r mod p".
    static Scalar parse(std::string_view text) {
        auto pos = text.find(" mod ");
        if (pos == std::string_view::npos) return Scalar(Rational::parse(text));
        std::uint64_t p = std::stoull(std::string(text.substr(pos + 5)));
        if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        return Scalar(Rational::parse(text.substr(0, pos))).in_field(FieldSpec{p});
    }

    [[nodiscard]] std::string to_string() const {
        if (modulus_ == 0) return q_.to_string();
        return std::to_string(residue_) + " mod " + std::to_string(modulus_);
    }

    [[nodiscard]] bool is_zero() const { return modulus_ == 0 ? q_.is_zero() : residue_ == 0; }
    [[nodiscard]] bool is_one() const { return modulus_ == 0 ? q_.is_one() : residue_ == 1; }
    [[nodiscard]] std::uint64_t modulus() const { return modulus_; }
    [[nodiscard]] std::uint64_t residue() const { return residue_; }
    [[nodiscard]] const Rational& rational() const { return q_; }
    [[nodiscard]] FieldSpec field() const { return FieldSpec{modulus_}; }

    [[nodiscard]] Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (modulus_ == 0) return Scalar(Rational(1) / q_);
        return from_residue(powmod(residue_, modulus_ - 2, modulus_), modulus_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if ((a.modulus_ | b.modulus_) == 0) return Scalar(a.q_ + b.q_);
        auto [x, y, p] = unify(a, b);
        std::uint64_t s = x + y;
        if (s >= p || s < x) s -= p;
        return from_residue(s, p);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if ((a.modulus_ | b.modulus_) == 0) return Scalar(a.q_ - b.q_);
        auto [x, y, p] = unify(a, b);
        return from_residue(x >= y ? x - y : p - (y - x), p);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if ((a.modulus_ | b.modulus_) == 0) return Scalar(a.q_ * b.q_);
        auto [x, y, p] = unify(a, b);
        return from_residue(mulmod(x, y, p), p);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar operator-() const {
        if (modulus_ == 0) return Scalar(-q_);
        return from_residue(residue_ == 0 ? 0 : modulus_ - residue_, modulus_);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if ((a.modulus_ | b.modulus_) == 0) return a.q_ == b.q_;
        auto [x, y, p] = unify(a, b);
        return x == y;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    struct Unified {
        std::uint64_t x, y, p;
    };

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    static std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
        std::uint64_t r = 1;
        while (e != 0) {
            if (e & 1U) r = mulmod(r, b, p);
            b = mulmod(b, b, p);
            e >>= 1U;
        }
        return r;
    }
    static Scalar from_residue(std::uint64_t r, std::uint64_t p) {
        Scalar s;
        s.modulus_ = p;
        s.residue_ = r;
        return s;
    }
    static Scalar reduce(const Rational& q, std::uint64_t p) {
        mpz_class pz;
        pz = std::to_string(p);
        mpz_class n = q.numerator() % pz;
        if (n < 0) n += pz;
        mpz_class d = q.denominator() % pz;
        if (d == 0) throw std::domain_error("denominator of " + q.to_string() + " vanishes mod " + std::to_string(p));
        mpz_class dinv;
        mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
        mpz_class r = (n * dinv) % pz;
        return from_residue(std::stoull(r.get_str()), p);
    }
    static Unified unify(const Scalar& a, const Scalar& b) {
        if (a.modulus_ != 0 && b.modulus_ != 0) {
            if (a.modulus_ != b.modulus_) throw std::invalid_argument("mixing residues with different moduli");
            return {a.residue_, b.residue_, a.modulus_};
        }
        if (a.modulus_ != 0) return {a.residue_, reduce(b.q_, a.modulus_).residue_, a.modulus_};
        return {reduce(a.q_, b.modulus_).residue_, b.residue_, b.modulus_};
    }

    Rational q_;
    std::uint64_t modulus_ = 0;
    std::uint64_t residue_ = 0;
};

}  // namespace crossext
