// Exact rational scalar, the base field for everything else in the library.
// Backed by GMP; values are kept canonical (positive denominator, lowest
// terms) at all times, so equality is plain value equality.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace equicat {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}

    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    explicit Rational(mpq_class v) : v_(std::move(v)) {
        if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    /// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) {
            s += '/';
            s += v_.get_den().get_str();
        }
        return s;
    }

    /// Parses "p" or "p/q" with an optional leading minus sign. Both the
    /// ASCII '-' and the U+2212 minus found in mathematical text are
    /// accepted; output always uses ASCII. Throws std::invalid_argument
    /// on malformed text or a zero denominator.
    static Rational parse(std::string_view text) {
        std::string_view body = text;
        bool negative = false;
        if (body.starts_with("\xe2\x88\x92")) {  // U+2212
            negative = true;
            body.remove_prefix(3);
        } else if (body.starts_with('-')) {
            negative = true;
            body.remove_prefix(1);
        }

        auto digits_only = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };

        std::string_view num = body, den = "1";
        if (auto slash = body.find('/'); slash != std::string_view::npos) {
            num = body.substr(0, slash);
            den = body.substr(slash + 1);
        }
        if (!digits_only(num) || !digits_only(den))
            throw std::invalid_argument("cannot parse rational '" + std::string(text) + "'");

        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0)
            throw std::invalid_argument("zero denominator in rational '" + std::string(text) + "'");
        if (negative) n = -n;
        return Rational(mpq_class(n, d));
    }

    static std::optional<Rational> try_parse(std::string_view text) {
        try {
            return parse(text);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }

private:
    mpq_class v_;
};

}  // namespace equicat
