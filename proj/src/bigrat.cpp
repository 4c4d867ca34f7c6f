#include "lgf/bigrat.hpp"

#include <cctype>

#include "lgf/errors.hpp"

namespace lgf {

namespace {

bool is_integer_text(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

BigInt parse_bigint(const std::string& text) {
    if (!is_integer_text(text)) {
        throw InputError("not an integer: '" + text + "'");
    }
    // GMP rejects a leading '+'
    return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

BigRat::BigRat(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw InputError("zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRat BigRat::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return BigRat(parse_bigint(text));
    }
    return BigRat(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

BigInt BigRat::to_integer() const {
    if (!is_integer()) {
        throw InputError("not an integer: " + to_string());
    }
    return q_.get_num();
}

bool BigRat::is_canonical() const {
    if (sgn(q_.get_den()) <= 0) {
        return false;
    }
    BigInt g;
    BigInt num_abs = abs(q_.get_num());
    mpz_gcd(g.get_mpz_t(), num_abs.get_mpz_t(), q_.get_den_mpz_t());
    return g == 1;
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) {
        throw InputError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

}  // namespace lgf
