#pragma once

#include <cstdint>
#include <string>

namespace swgraph {

/// Reduced fraction num/den with den > 0. Exact arithmetic for the small
/// closed-form values this library produces (concurrences, squared norms).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long numerator, long long denominator);

    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;  // "2/5", "1", "0"
};

/// Exact value sign * sqrt(p/q) with p/q in lowest terms and sign in {-1,0,+1}.
/// Zero is canonically (0, 0, 1). Every one-magnon amplitude has this form,
/// so states can be stored and compared without floating error.
class Radical {
  public:
    Radical() = default;  // zero
    Radical(int sign, long long p, long long q);

    /// +sqrt(num/den); num = 0 gives zero.
    static Radical sqrt_of(long long num, long long den);
    /// Embeds an exact rational r as sign(r) * sqrt(r^2).
    static Radical from_rational(const Rational& r);

    int sign() const { return sign_; }
    long long p() const { return p_; }
    long long q() const { return q_; }

    bool is_zero() const { return sign_ == 0; }
    double value() const;
    Rational squared() const { return Rational(p_, q_); }

    Radical operator*(const Radical& o) const;
    Radical operator-() const;
    bool operator==(const Radical& o) const = default;

    /// Simplified radical string in the usual typography: "√3/2", "-√3/6",
    /// "2√5/5", "1/2", "0". The square part of p*q is pulled out front.
    std::string str() const;

  private:
    int sign_ = 0;
    long long p_ = 0;
    long long q_ = 1;
};

}  // namespace swgraph
