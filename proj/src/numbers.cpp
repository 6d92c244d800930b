#include "fpd/numbers.hpp"

#include <cctype>
#include <cstdlib>

#include "fpd/errors.hpp"

namespace fpd {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational parse_fixed_point(const std::string& text) {
  // [sign] digits [. digits]
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  auto dot = s.find('.');
  std::string int_part = dot == std::string::npos ? s : s.substr(0, dot);
  std::string frac_part = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw ParameterError("invalid rational: '" + text + "'");
  for (char c : int_part + frac_part)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParameterError("invalid rational: '" + text + "'");
  BigInt num(int_part.empty() ? "0" : int_part);
  BigInt den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParameterError("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw ParameterError("invalid rational: '" + text + "'");
    BigInt d(den);
    if (d == 0) throw ParameterError("zero denominator: '" + text + "'");
    Rational r(BigInt(num), d);
    r.canonicalize();
    return r;
  }
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    std::string mantissa = text.substr(0, epos);
    std::string exp_str = text.substr(epos + 1);
    if (!is_integer_token(exp_str))
      throw ParameterError("invalid rational: '" + text + "'");
    long ex = std::strtol(exp_str.c_str(), nullptr, 10);
    Rational r = parse_fixed_point(mantissa);
    BigInt scale = 1;
    for (long i = 0; i < (ex < 0 ? -ex : ex); ++i) scale *= 10;
    if (ex >= 0)
      r *= Rational(scale);
    else
      r /= Rational(scale);
    r.canonicalize();
    return r;
  }
  return parse_fixed_point(text);
}

std::string format_rational_decimal(const Rational& value, int digits) {
  if (digits < 0) throw ParameterError("negative precision");
  BigInt num = value.get_num();
  BigInt den = value.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  // round half away from zero: floor((2*num*10^d + den) / (2*den))
  BigInt scaled = (2 * num * pow10 + den) / (2 * den);
  BigInt int_part = scaled / pow10;
  BigInt frac_part = scaled % pow10;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += int_part.get_str();
  if (digits > 0) {
    std::string frac = frac_part.get_str();
    out += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace fpd
