#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace racg {

// Small exact rational for parameters like rho and A; keeps neighborhood
// cutoffs and bound checks integer-exact.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("rational: denominator must be positive");
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  explicit Rational(long long n) : num(n), den(1) {}

  long long mul_floor(long long x) const { return (num * x) / den; }
  long long mul_ceil(long long x) const { return (num * x + den - 1) / den; }

  double value() const { return double(num) / double(den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

  // accepts "1", "1/2", "0.5", "0.25"
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      long long n = std::stoll(s.substr(0, slash));
      long long d = std::stoll(s.substr(slash + 1));
      return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string frac = s.substr(dot + 1);
      if (frac.size() > 9) throw std::invalid_argument("rational: too many decimals");
      long long scale = 1;
      for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
      long long whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
      long long f = frac.empty() ? 0 : std::stoll(frac);
      return Rational(whole * scale + f, scale);
    }
    return Rational(std::stoll(s));
  }
};

}  // namespace racg
