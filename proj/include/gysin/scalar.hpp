#pragma once

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace gysin {

/// Exact rational number with arbitrary-precision numerator and positive
/// denominator, kept in lowest terms after every operation.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long num) : v_(num) {}
    Scalar(long num, long den) : v_(num, den) { v_.canonicalize(); }

    static Scalar from_strings(const std::string& num, const std::string& den) {
        Scalar s;
        s.v_ = mpq_class(mpz_class(num), mpz_class(den));
        s.v_.canonicalize();
        return s;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }

    // Rendering for diagnostics: "3" or "3/4".
    std::string str() const {
        return is_integer() ? num_string() : v_.get_str();
    }

    Scalar operator-() const { return Scalar(-v_); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) { v_ /= o.v_; return *this; }

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    /// Exact integer power; e may be negative (requires nonzero base).
    Scalar pow(long e) const;

private:
    explicit Scalar(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Scalar Scalar::pow(long e) const {
    mpq_class base = v_;
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpq_class r(1);
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    if (invert) r = 1 / r;
    return Scalar(std::move(r));
}

} // namespace gysin
