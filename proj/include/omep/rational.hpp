#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace omep {

/// Exact rational number backed by arbitrary-precision integers.
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_(mpz_class(std::to_string(n))) {}

    Rational(long num, long den) : v_(mpq_class(num, den)) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) : v_(mpq_class(num, den)) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p" or "p/q" with optional leading minus sign.
    static Rational parse(std::string_view s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p" when integral, otherwise "p/q".
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) {
            s += '/';
            s += v_.get_den().get_str();
        }
        return s;
    }

    /// Rough size measure (digit count) used for pivot selection heuristics.
    std::size_t digit_size() const {
        return mpz_sizeinbase(v_.get_num().get_mpz_t(), 10) +
               mpz_sizeinbase(v_.get_den().get_mpz_t(), 10);
    }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s)) throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        return Rational(mpz_class(std::string(s)), mpz_class(1));
    }
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    const mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
    return Rational(mpz_class(std::string(num)), d);
}

}  // namespace omep
