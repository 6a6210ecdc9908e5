#include "charpoly/rational.hpp"

#include <stdexcept>

namespace charpoly {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0)
        v_ = boost::multiprecision::cpp_rational(-num, -den);
    else
        v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    auto parse_int = [](std::string_view t) -> BigInt {
        if (t.empty()) throw std::invalid_argument("Rational: empty integer");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("Rational: sign without digits");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("Rational: bad digit in '" + std::string(t) + "'");
        return BigInt(std::string(t));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(const BigInt& n, int k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (int i = 0; i < k; ++i) num *= (n - i);
    return num / factorial(k);
}

}  // namespace charpoly
