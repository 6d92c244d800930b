#include "fpd/poly.hpp"

#include <algorithm>
#include <utility>

#include "fpd/errors.hpp"

namespace fpd {

Poly::Poly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly Poly::from_coeffs(std::vector<BigInt> coeffs) {
  Poly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Poly Poly::monomial(BigInt c, int power) {
  if (power < 0) throw ParameterError("negative monomial power");
  Poly p;
  if (c != 0) {
    p.coeffs_.assign(power + 1, BigInt(0));
    p.coeffs_[power] = std::move(c);
  }
  return p;
}

BigInt Poly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[power];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::eval(const Rational& q) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

double Poly::eval_double(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * q + it->get_d();
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::scale(const BigInt& k) {
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= k;
  return *this;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) {
      if (a != 1) out += "*";
      out += "q";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly pow_poly(const Poly& base, int exponent) {
  if (exponent < 0) throw ParameterError("negative polynomial exponent");
  Poly result(BigInt(1));
  Poly b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

Poly poly_from_bernstein(const std::vector<BernsteinTerm>& terms) {
  Poly total;
  for (const auto& t : terms) {
    if (t.q_pow < 0 || t.one_minus_q_pow < 0)
      throw ParameterError("negative exponent in Bernstein term");
    if (t.c == 0) continue;
    // c * q^a * (1-q)^b expanded by the binomial theorem
    std::vector<BigInt> coeffs(t.q_pow + t.one_minus_q_pow + 1, BigInt(0));
    BigInt sign = 1;
    for (int j = 0; j <= t.one_minus_q_pow; ++j) {
      coeffs[t.q_pow + j] = sign * t.c * binomial(t.one_minus_q_pow, j);
      sign = -sign;
    }
    total += Poly::from_coeffs(std::move(coeffs));
  }
  return total;
}

namespace {

int sign_of(const Rational& v) { return mpq_sgn(v.get_mpq_t()); }

Rational bisect_to_width(const Poly& diff, Rational a, Rational b, int sign_a,
                         const Rational& tol) {
  while (b - a > tol) {
    Rational mid = (a + b) / 2;
    mid.canonicalize();
    int sm = sign_of(diff.eval(mid));
    if (sm == 0) return mid;
    if (sm == sign_a)
      a = mid;
    else
      b = mid;
  }
  Rational mid = (a + b) / 2;
  mid.canonicalize();
  return mid;
}

// Sign just inside an endpoint where diff itself vanishes. diff has at
// most deg roots, so one of deg+1 distinct probes must be nonzero.
int probe_sign(const Poly& diff, const Rational& endpoint, const Rational& reach,
               bool forward) {
  int tries = diff.degree() + 1;
  for (int k = 1; k <= tries; ++k) {
    Rational x = forward ? Rational(endpoint + reach * k / (tries + 1))
                         : Rational(endpoint - reach * k / (tries + 1));
    x.canonicalize();
    int s = sign_of(diff.eval(x));
    if (s != 0) return s;
  }
  return 0;
}

}  // namespace

std::vector<Rational> sign_crossings(const Poly& p, const Poly& r,
                                     const Rational& lo, const Rational& hi,
                                     const Rational& tol, int max_grid) {
  if (!(lo < hi)) throw ParameterError("sign_crossings requires lo < hi");
  if (!(tol > 0)) throw ParameterError("sign_crossings requires tol > 0");
  Poly diff = p - r;
  std::vector<Rational> found;
  if (diff.is_zero()) return found;

  Rational width = hi - lo;
  Rational cells_r = width / tol;
  long cells = max_grid;
  if (cells_r < max_grid) {
    BigInt c = cells_r.get_num() / cells_r.get_den();
    cells = c.get_si() + 1;
  }
  if (cells < 2) cells = 2;

  Rational step = width / cells;
  std::vector<Rational> xs(cells + 1);
  std::vector<int> signs(cells + 1);
  for (long i = 0; i <= cells; ++i) {
    xs[i] = lo + step * i;
    xs[i].canonicalize();
    signs[i] = sign_of(diff.eval(xs[i]));
  }
  // A root exactly on an endpoint is not a crossing of (lo,hi); use the
  // sign just inside so adjacent interior crossings are still seen.
  Rational reach = tol < step ? tol : step;
  if (signs[0] == 0) signs[0] = probe_sign(diff, lo, reach, true);
  if (signs[cells] == 0) signs[cells] = probe_sign(diff, hi, reach, false);

  long i = 0;
  while (i < cells) {
    if (signs[i + 1] == 0) {
      // run of exact roots on interior grid points
      long j = i + 1;
      while (j <= cells && signs[j] == 0) ++j;
      if (j <= cells && signs[i] * signs[j] < 0)
        for (long z = i + 1; z < j; ++z) found.push_back(xs[z]);
      i = j;
      continue;
    }
    if (signs[i] != 0 && signs[i] * signs[i + 1] < 0)
      found.push_back(bisect_to_width(diff, xs[i], xs[i + 1], signs[i], tol));
    ++i;
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace fpd
