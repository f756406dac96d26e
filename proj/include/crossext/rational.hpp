#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crossext {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline and
/// combined with 128-bit intermediates; anything larger moves to a GMP
/// rational. The representation is canonical: gcd(|num|, den) = 1, den > 0,
/// and a value is stored inline whenever it fits, so equality of two inline
/// values is a field comparison.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }
    explicit Rational(const mpq_class& q) { assign_big(q); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    [[nodiscard]] int sign() const {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    [[nodiscard]] mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q;
        q.get_num() = mpz_from(num_);
        q.get_den() = mpz_from(den_);
        return q;
    }
    [[nodiscard]] mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from(num_); }
    [[nodiscard]] mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from(den_); }

    [[nodiscard]] std::string to_string() const {
        if (big_) return big_->get_str(10);
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) return from_wide(I128(a.num_) + b.num_, 1);
            return from_wide(I128(a.num_) * b.den_ + I128(b.num_) * a.den_, I128(a.den_) * b.den_);
        }
        return Rational(a.to_mpq() + b.to_mpq());
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) return from_wide(I128(a.num_) - b.num_, 1);
            return from_wide(I128(a.num_) * b.den_ - I128(b.num_) * a.den_, I128(a.den_) * b.den_);
        }
        return Rational(a.to_mpq() - b.to_mpq());
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.num_ == 0 || b.num_ == 0) return {};
            return from_wide(I128(a.num_) * b.num_, I128(a.den_) * b.den_);
        }
        return Rational(a.to_mpq() * b.to_mpq());
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        if (!a.big_ && !b.big_) return from_wide(I128(a.num_) * b.den_, I128(a.den_) * b.num_);
        return Rational(a.to_mpq() / b.to_mpq());
    }
    Rational operator-() const {
        if (!big_) return from_wide(-I128(num_), den_);
        return Rational(mpq_class(-*big_));
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    using I128 = __int128;
    using U128 = unsigned __int128;

    static mpz_class mpz_from(std::int64_t v) {
        mpz_class z;
        if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
            z = static_cast<long>(v);
        } else {
            z = std::to_string(v);
        }
        return z;
    }

    static U128 gcd128(U128 a, U128 b) {
        while (b != 0) {
            U128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static bool fits(I128 v) {
        return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
    }

    static std::string wide_to_string(I128 v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        U128 u = neg ? U128(-(v + 1)) + 1 : U128(v);
        std::string s;
        while (u != 0) {
            s.insert(s.begin(), char('0' + int(u % 10)));
            u /= 10;
        }
        return neg ? "-" + s : s;
    }

    static Rational from_wide(I128 n, I128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return {};
        U128 g = gcd128(n < 0 ? U128(-n) : U128(n), U128(d));
        if (g > 1) {
            n /= I128(g);
            d /= I128(g);
        }
        Rational r;
        if (fits(n) && fits(d)) {
            r.num_ = static_cast<std::int64_t>(n);
            r.den_ = static_cast<std::int64_t>(d);
            return r;
        }
        mpq_class q;
        q.get_num() = wide_to_string(n);
        q.get_den() = wide_to_string(d);
        r.big_ = std::make_unique<mpq_class>(q);
        r.num_ = 0;
        r.den_ = 1;
        return r;
    }

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        *this = from_wide(n, d);
    }

    void assign_big(const mpq_class& q) {
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
        } else {
            big_ = std::make_unique<mpq_class>(q);
            num_ = 0;
            den_ = 1;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace crossext
