#include "cesaro/rational.hpp"

#include <numeric>

#include "cesaro/errors.hpp"

namespace cesaro {

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorKind::Parse, "empty rational");
  auto ok_digits = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!ok_digits(num) || !ok_digits(den))
    fail(ErrorKind::Parse, "bad rational '" + text + "'");
  mpz_class num_z(num), den_z(den);
  if (den_z == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
  Rational q{num_z, den_z};
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

unsigned long long lcm_u64(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return a | b;
  unsigned long long g = std::gcd(a, b);
  return (a / g) * b;
}

}  // namespace cesaro
