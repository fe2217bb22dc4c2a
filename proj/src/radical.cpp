#include "swgraph/radical.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace swgraph {

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const long long g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
    num = numerator / (g == 0 ? 1 : g);
    den = denominator / (g == 0 ? 1 : g);
    if (num == 0) den = 1;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Radical::Radical(int sign, long long p, long long q) {
    if (sign < -1 || sign > 1) throw std::invalid_argument("Radical: sign must be -1, 0 or +1");
    if (q <= 0 || p < 0) throw std::invalid_argument("Radical: requires p >= 0 and q > 0");
    if (sign == 0 || p == 0) {
        sign_ = 0;
        p_ = 0;
        q_ = 1;
        return;
    }
    const long long g = std::gcd(p, q);
    sign_ = sign;
    p_ = p / g;
    q_ = q / g;
}

Radical Radical::sqrt_of(long long num, long long den) {
    return Radical(num == 0 ? 0 : 1, num, den);
}

Radical Radical::from_rational(const Rational& r) {
    if (r.num == 0) return Radical();
    const long long a = r.num < 0 ? -r.num : r.num;
    return Radical(r.num < 0 ? -1 : 1, a * a, r.den * r.den);
}

double Radical::value() const {
    return sign_ * std::sqrt(static_cast<double>(p_) / static_cast<double>(q_));
}

Radical Radical::operator*(const Radical& o) const {
    if (sign_ == 0 || o.sign_ == 0) return Radical();
    return Radical(sign_ * o.sign_, p_ * o.p_, q_ * o.q_);
}

Radical Radical::operator-() const {
    return Radical(-sign_, p_, q_);
}

std::string Radical::str() const {
    if (sign_ == 0) return "0";
    // sqrt(p/q) = sqrt(p*q)/q; pull the largest square a^2 out of p*q.
    const long long m = p_ * q_;
    long long a = 1, b = m;
    for (long long i = 2; i * i <= b;) {
        if (b % (i * i) == 0) {
            a *= i;
            b /= i * i;
        } else {
            ++i;
        }
    }
    long long den = q_;
    const long long g = std::gcd(a, den);
    a /= g;
    den /= g;

    std::string s = sign_ < 0 ? "-" : "";
    if (b == 1) {
        s += std::to_string(a);
    } else {
        if (a != 1) s += std::to_string(a);
        s += "√" + std::to_string(b);
    }
    if (den != 1) s += "/" + std::to_string(den);
    return s;
}

}  // namespace swgraph
