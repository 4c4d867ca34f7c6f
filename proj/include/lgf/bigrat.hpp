#pragma once

#include <compare>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace lgf {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes, and
/// the arithmetic operators of mpq_class preserve canonical form, so the
/// invariant holds after every operation.
class BigRat {
public:
    BigRat() = default;
    BigRat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRat(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    BigRat(const BigInt& num, const BigInt& den);

    /// Parses "p" or "p/q" in base 10. Throws InputError on malformed text or q = 0.
    static BigRat parse(const std::string& text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }

    /// Numerator when is_integer(); throws InputError otherwise.
    BigInt to_integer() const;

    std::string to_string() const { return q_.get_str(); }

    // True when the stored form is reduced with positive denominator.
    bool is_canonical() const;

    BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
    BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
    BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
    friend BigRat operator-(const BigRat& a) { BigRat r; r.q_ = -a.q_; return r; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.q_; }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

/// Decimal rendering without locale or float conversion.
inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

/// Parses a base-10 integer with optional sign. Throws InputError otherwise.
BigInt parse_bigint(const std::string& text);

}  // namespace lgf
