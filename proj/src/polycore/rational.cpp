#include "tvx/rational.hpp"

#include <cctype>
#include <mutex>
#include <vector>

namespace tvx {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\n");
  auto end = text.find_last_not_of(" \t\n");
  if (begin == std::string_view::npos) throw Error("malformed rational: empty");
  std::string s(text.substr(begin, end - begin + 1));
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) throw Error("malformed rational: " + s);
  Integer n(num), d(den);
  if (d == 0) throw Error("malformed rational: zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer factorial(long n) {
  if (n < 0) throw Error("factorial of negative argument");
  // Immutable after growth; guarded so concurrent callers stay safe.
  static std::mutex guard;
  static std::vector<Integer> cache{Integer(1)};
  std::lock_guard<std::mutex> lock(guard);
  while (static_cast<long>(cache.size()) <= n)
    cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
  return cache[static_cast<std::size_t>(n)];
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

}  // namespace tvx
