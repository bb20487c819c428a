#include "fhyper/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace fhyper {

namespace {

std::mutex phi_mutex;
std::map<std::int64_t, std::vector<Int>> phi_cache;

std::vector<Int> compute_cyclotomic(std::int64_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<Int> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (auto d : divisors(n)) {
    if (d == n) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<Int> quotient(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const Int c = poly[i];
      quotient[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
    }
    poly = std::move(quotient);
  }
  return poly;
}

void check_orders(const CycloNum& a, const CycloNum& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch, "orders " + std::to_string(a.order()) + " and " +
                                              std::to_string(b.order()));
  }
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(std::int64_t n) {
  {
    std::lock_guard lock(phi_mutex);
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(n);
  std::lock_guard lock(phi_mutex);
  return phi_cache.emplace(n, std::move(poly)).first->second;
}

CycloNum::CycloNum(std::int64_t order) : num_(order, 0) {
  if (order < 1) throw Error(ErrorKind::BadParameter, "root-of-unity order must be positive");
}

CycloNum CycloNum::root_of_unity(std::int64_t order, std::int64_t k) {
  CycloNum out(order);
  out.num_[mod(k, order)] = 1;
  return out;
}

CycloNum CycloNum::constant(std::int64_t order, const Rat& value) {
  CycloNum out(order);
  out.num_[0] = value.get_num();
  out.den_ = value.get_den();
  return out;
}

Rat CycloNum::coeff(std::int64_t k) const {
  Rat out(num_[k], den_);
  out.canonicalize();
  return out;
}

void CycloNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  Int g = den_;
  for (const auto& c : num_) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  bool all_zero = true;
  for (const auto& c : num_) all_zero = all_zero && c == 0;
  if (all_zero) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycloNum& CycloNum::operator+=(const CycloNum& other) {
  check_orders(*this, other);
  if (den_ == other.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += other.num_[k];
  } else {
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= other.den_;
      mpz_addmul(num_[k].get_mpz_t(), other.num_[k].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& other) { return *this += -other; }

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  check_orders(a, b);
  const std::int64_t n = a.order();
  CycloNum out(n);
  std::vector<std::int64_t> support_b;
  for (std::int64_t j = 0; j < n; ++j) {
    if (b.num_[j] != 0) support_b.push_back(j);
  }
  for (std::int64_t i = 0; i < n; ++i) {
    if (a.num_[i] == 0) continue;
    for (auto j : support_b) {
      std::int64_t k = i + j;
      if (k >= n) k -= n;
      mpz_addmul(out.num_[k].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& other) {
  *this = *this * other;
  return *this;
}

CycloNum& CycloNum::operator*=(const Rat& scalar) {
  for (auto& c : num_) c *= scalar.get_num();
  den_ *= scalar.get_den();
  normalize();
  return *this;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  check_orders(a, b);
  return (a - b).is_zero();
}

CycloNum CycloNum::rotated(std::int64_t k) const {
  const std::int64_t n = order();
  CycloNum out(n);
  const std::int64_t shift = mod(k, n);
  for (std::int64_t i = 0; i < n; ++i) {
    if (num_[i] != 0) out.num_[(i + shift) % n] = num_[i];
  }
  out.den_ = den_;
  return out;
}

void CycloNum::add_rotated(const CycloNum& other, std::int64_t shift, const Rat& scale) {
  check_orders(*this, other);
  const std::int64_t n = order();
  const std::int64_t s = mod(shift, n);
  // bring both to the common denominator den_ * other.den_ * scale.den / g
  const Int other_den = other.den_ * scale.get_den();
  Int common;
  mpz_lcm(common.get_mpz_t(), den_.get_mpz_t(), other_den.get_mpz_t());
  if (common != den_) {
    const Int factor = common / den_;
    for (auto& c : num_) c *= factor;
    den_ = common;
  }
  const Int other_factor = (common / other_den) * scale.get_num();
  for (std::int64_t i = 0; i < n; ++i) {
    if (other.num_[i] == 0) continue;
    std::int64_t k = i + s;
    if (k >= n) k -= n;
    mpz_addmul(num_[k].get_mpz_t(), other.num_[i].get_mpz_t(), other_factor.get_mpz_t());
  }
}

CycloNum CycloNum::reduced() const {
  const std::int64_t n = order();
  const auto& phi = cyclotomic_polynomial(n);
  const std::int64_t deg = static_cast<std::int64_t>(phi.size()) - 1;
  CycloNum out = *this;
  auto& a = out.num_;
  for (std::int64_t i = n - 1; i >= deg; --i) {
    if (a[i] == 0) continue;
    const Int c = a[i];
    for (std::int64_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) mpz_submul(a[i - deg + j].get_mpz_t(), c.get_mpz_t(), phi[j].get_mpz_t());
    }
  }
  out.normalize();
  return out;
}

bool CycloNum::is_zero() const {
  const auto r = reduced();
  for (const auto& c : r.num_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<Rat> CycloNum::as_rational() const {
  const auto r = reduced();
  for (std::size_t k = 1; k < r.num_.size(); ++k) {
    if (r.num_[k] != 0) return std::nullopt;
  }
  return r.coeff(0);
}

bool CycloNum::has_integral_coefficients() const { return reduced().den_ == 1; }

CycloNum CycloNum::galois(std::int64_t k) const {
  const std::int64_t n = order();
  CycloNum out(n);
  for (std::int64_t i = 0; i < n; ++i) {
    if (num_[i] != 0) out.num_[mod(i * k, n)] += num_[i];
  }
  out.den_ = den_;
  return out;
}

CycloNum CycloNum::embedded(std::int64_t factor) const {
  CycloNum out(order() * factor);
  for (std::int64_t i = 0; i < order(); ++i) out.num_[i * factor] = num_[i];
  out.den_ = den_;
  return out;
}

std::complex<double> CycloNum::evaluate() const {
  std::complex<double> acc = 0;
  const double n = static_cast<double>(order());
  for (std::int64_t k = 0; k < order(); ++k) {
    if (num_[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    acc += num_[k].get_d() * std::polar(1.0, angle);
  }
  return acc / den_.get_d();
}

nlohmann::json CycloNum::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::int64_t k = 0; k < order(); ++k) {
    const Rat c = coeff(k);
    coeffs.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  }
  return {{"N", order()}, {"coeffs", coeffs}};
}

CycloNum CycloNum::from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("N").get<std::int64_t>();
    const auto& coeffs = j.at("coeffs");
    if (static_cast<std::int64_t>(coeffs.size()) != n) {
      throw Error(ErrorKind::ParseError, "coefficient count does not match N");
    }
    CycloNum out(n);
    for (std::int64_t k = 0; k < n; ++k) {
      Rat c(coeffs[k].get<std::string>());
      c.canonicalize();
      out.add_rotated(CycloNum::constant(n, c), k);
    }
    out.normalize();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

NotRationalError::NotRationalError(CycloNum residual)
    : Error(ErrorKind::NotRational, "value is not rational, residual " +
                                        residual.to_json().dump().substr(0, 400)),
      residual_(std::move(residual)) {}

CycloNum root_of_unity(std::int64_t order, std::int64_t k) {
  return CycloNum::root_of_unity(order, k);
}

CycloNum mul(const CycloNum& a, const CycloNum& b) { return a * b; }

Rat reduce_to_rational(const CycloNum& a) {
  auto r = a.reduced();
  if (auto value = r.as_rational()) return *value;
  r -= CycloNum::constant(r.order(), r.coeff(0));
  throw NotRationalError(std::move(r));
}

}  // namespace fhyper
