#include "fhyper/hyper.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fhyper {

Frac Frac::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  if (num == 0) return {0, 1};
  return {num / g, den / g};
}

Frac Frac::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return make(n, 1);
    }
    const auto n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    const auto rest = text.substr(slash + 1);
    const auto d = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return make(n, d);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad fraction '" + text + "'");
  }
}

std::string Frac::to_string() const {
  if (num == 0) return "1";
  return std::to_string(num) + "/" + std::to_string(den);
}

HGParams HGParams::make(std::vector<Frac> alpha, std::vector<Frac> beta) {
  if (alpha.empty() || alpha.size() != beta.size()) {
    throw Error(ErrorKind::BadParameter, "alpha and beta need the same positive size");
  }
  for (const auto& a : alpha) {
    for (const auto& b : beta) {
      if (a == b) {
        throw Error(ErrorKind::BadParameter,
                    "alpha and beta share the class " + a.to_string() + " mod Z");
      }
    }
  }
  std::sort(alpha.begin(), alpha.end());
  std::sort(beta.begin(), beta.end());
  HGParams out;
  out.alpha_ = std::move(alpha);
  out.beta_ = std::move(beta);
  std::vector<std::int64_t> dens;
  for (const auto& a : out.alpha_) dens.push_back(a.den);
  for (const auto& b : out.beta_) dens.push_back(b.den);
  out.common_den_ = lcm_of(dens);
  return out;
}

std::int64_t HGParams::beta_weight(std::int64_t qm1) const {
  std::int64_t w = 0;
  for (const auto& b : beta_) w += b.times(qm1);
  return w;
}

std::string HGParams::to_string() const {
  std::ostringstream out;
  out << "alpha=";
  for (std::size_t i = 0; i < alpha_.size(); ++i) out << (i ? "," : "") << alpha_[i].to_string();
  out << " beta=";
  for (std::size_t i = 0; i < beta_.size(); ++i) out << (i ? "," : "") << beta_[i].to_string();
  return out.str();
}

std::vector<std::int64_t> CyclotomicData::all_parameters() const {
  auto out = p_list;
  out.insert(out.end(), q_list.begin(), q_list.end());
  return out;
}

std::string CyclotomicData::to_string() const {
  std::ostringstream out;
  out << "p=";
  for (std::size_t i = 0; i < p_list.size(); ++i) out << (i ? "," : "") << p_list[i];
  out << " q=";
  for (std::size_t i = 0; i < q_list.size(); ++i) out << (i ? "," : "") << q_list[i];
  return out.str();
}

namespace {

std::vector<Frac> roots_of_phi(std::int64_t e) {
  std::vector<Frac> out;
  for (std::int64_t a = 0; a < e; ++a) {
    if (std::gcd(a, e) == 1) out.push_back(Frac::make(a, e));
  }
  return out;
}

}  // namespace

CyclotomicData params_from_cyclotomic(std::vector<std::int64_t> p_list,
                                      std::vector<std::int64_t> q_list) {
  if (p_list.empty() || q_list.empty()) {
    throw Error(ErrorKind::BadParameter, "p and q lists must be nonempty");
  }
  for (auto v : p_list) {
    if (v < 1) throw Error(ErrorKind::BadParameter, "parameters must be positive");
  }
  for (auto v : q_list) {
    if (v < 1) throw Error(ErrorKind::BadParameter, "parameters must be positive");
  }
  const auto sum_p = std::accumulate(p_list.begin(), p_list.end(), std::int64_t{0});
  const auto sum_q = std::accumulate(q_list.begin(), q_list.end(), std::int64_t{0});
  if (sum_p != sum_q) {
    throw Error(ErrorKind::UnbalancedDegrees,
                "sum p = " + std::to_string(sum_p) + ", sum q = " + std::to_string(sum_q));
  }
  std::map<std::int64_t, int> num_mult, den_mult;
  for (auto v : p_list) {
    for (auto e : divisors(v)) ++num_mult[e];
  }
  for (auto v : q_list) {
    for (auto e : divisors(v)) ++den_mult[e];
  }
  CyclotomicData data;
  std::vector<Frac> alpha, beta;
  std::set_union(num_mult.begin(), num_mult.end(), den_mult.begin(), den_mult.end(),
                 std::inserter(data.d_mult, data.d_mult.end()),
                 [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [e, mult] : data.d_mult) {
    const int a = num_mult.count(e) ? num_mult[e] : 0;
    const int b = den_mult.count(e) ? den_mult[e] : 0;
    mult = std::min(a, b);
    for (int k = 0; k < a - mult; ++k) {
      for (const auto& f : roots_of_phi(e)) alpha.push_back(f);
    }
    for (int k = 0; k < b - mult; ++k) {
      for (const auto& f : roots_of_phi(e)) beta.push_back(f);
    }
  }
  std::erase_if(data.d_mult, [](const auto& kv) { return kv.second == 0; });
  if (alpha.empty() || beta.empty()) {
    throw Error(ErrorKind::DegenerateCancellation, "the quotient cancels completely");
  }

  auto all = p_list;
  all.insert(all.end(), q_list.begin(), q_list.end());
  if (gcd_of(all) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd of all parameters is " + std::to_string(gcd_of(all)));
  }

  Rat m = 1;
  for (auto v : p_list) m *= Rat(ipow(Int(static_cast<long>(v)), v));
  for (auto v : q_list) m /= Rat(ipow(Int(static_cast<long>(v)), v));
  m.canonicalize();
  data.M = m;
  data.epsilon = (sum_q % 2 == 0) ? 1 : -1;
  data.p_list = std::move(p_list);
  data.q_list = std::move(q_list);
  data.params = HGParams::make(std::move(alpha), std::move(beta));
  return data;
}

bool is_galois_stable(const std::vector<Frac>& values) {
  std::map<std::int64_t, std::map<std::int64_t, int>> by_den;
  for (const auto& v : values) ++by_den[v.den][v.num];
  for (const auto& [e, counts] : by_den) {
    if (static_cast<std::int64_t>(counts.size()) != euler_phi(e)) return false;
    const int first = counts.begin()->second;
    for (const auto& [num, c] : counts) {
      if (c != first) return false;
    }
  }
  return true;
}

CyclotomicData cyclotomic_from_params(const HGParams& params) {
  if (!is_galois_stable(params.alpha()) || !is_galois_stable(params.beta())) {
    throw Error(ErrorKind::NotDefinedOverQ, params.to_string() + " is not Galois stable");
  }
  // net exponent of Phi_e in the quotient
  std::map<std::int64_t, std::int64_t> net;
  for (const auto& a : params.alpha()) net[a.den] += 1;
  for (const auto& b : params.beta()) net[b.den] -= 1;
  for (auto& [e, n] : net) n /= euler_phi(e);

  std::vector<std::int64_t> p_list, q_list;
  while (true) {
    std::erase_if(net, [](const auto& kv) { return kv.second == 0; });
    if (net.empty()) break;
    const auto [e, n] = *net.rbegin();
    const int sign = n > 0 ? 1 : -1;
    (sign > 0 ? p_list : q_list).push_back(e);
    for (auto d : divisors(e)) net[d] -= sign;
  }
  auto data = params_from_cyclotomic(std::move(p_list), std::move(q_list));
  if (!(data.params == params)) {
    throw Error(ErrorKind::NotDefinedOverQ, "round trip through cyclotomic data failed");
  }
  return data;
}

int s_multiplicity(const CyclotomicData& data, std::int64_t m, std::int64_t q) {
  const std::int64_t qm1 = q - 1;
  int in_i = 0, in_j = 0;
  for (auto v : data.p_list) in_i += mod(v * m, qm1) == 0;
  for (auto v : data.q_list) in_j += mod(v * m, qm1) == 0;
  return std::min(in_i, in_j);
}

namespace {

Rat landau_function(const std::vector<Rat>& alpha, const std::vector<Rat>& beta, const Rat& x) {
  Rat total = 0;
  for (const auto& a : alpha) total += frac(x + a) - frac(a);
  for (const auto& b : beta) total += frac(-x - b) - frac(-b);
  return total;
}

}  // namespace

Rat landau_bound(const HGParams& params) {
  const std::int64_t n = params.common_denominator();
  std::optional<Rat> lowest;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    std::vector<Rat> alpha, beta;
    for (const auto& a : params.alpha()) alpha.push_back(a.scaled(k).value());
    for (const auto& b : params.beta()) beta.push_back(b.scaled(k).value());
    for (std::int64_t j = 0; j <= 2 * n; ++j) {
      // breakpoints j/n (even j) and midpoints (odd j)
      Rat x(static_cast<long>(j), static_cast<long>(2 * n));
      x.canonicalize();
      const Rat value = landau_function(alpha, beta, x);
      if (!lowest || value < *lowest) lowest = value;
    }
  }
  return -*lowest;
}

Rat landau_bound(const CyclotomicData& data) {
  const std::int64_t l = lcm_of(data.all_parameters());
  std::optional<Rat> lowest;
  for (std::int64_t j = 0; j < l; ++j) {
    Rat x(static_cast<long>(2 * j + 1), static_cast<long>(2 * l));
    x.canonicalize();
    Rat value = 0;
    for (auto v : data.p_list) value += frac(x * Rat(static_cast<long>(v)));
    for (auto v : data.q_list) value += frac(-x * Rat(static_cast<long>(v)));
    if (!lowest || value < *lowest) lowest = value;
  }
  return *lowest;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::GeneralDefinition:
      return "GeneralDefinition";
    case Provenance::OverQFormula:
      return "OverQFormula";
    case Provenance::PointCount:
      return "PointCount";
  }
  return "?";
}

namespace {

void require_fit(const GaussTable& table, const HGParams& params) {
  if (!params.fits_field(table.qm1())) {
    throw Error(ErrorKind::BadFieldForParams,
                "(q-1) * parameters not integral for q = " + std::to_string(table.q()) + ", " +
                    params.to_string());
  }
}

void require_nonzero(Elem t) {
  if (t == 0) throw Error(ErrorKind::ZeroArgument, "t must be nonzero");
}

}  // namespace

CycloNum hyp_exponential_sum(const GaussTable& table, const HGParams& params, Elem t) {
  require_fit(table, params);
  require_nonzero(t);
  const auto& field = table.field();
  const std::int64_t qm1 = table.qm1();
  const std::int64_t n_order = table.order();
  const int d = params.d();
  std::vector<std::int64_t> a, b;
  for (const auto& x : params.alpha()) a.push_back(x.times(qm1));
  for (const auto& y : params.beta()) b.push_back(y.times(qm1));

  // enumerate log x_1..x_d, log y_1..y_{d-1}; y_d is fixed by the torus equation
  const int free_vars = 2 * d - 1;
  std::vector<std::int64_t> counts(n_order, 0);
  std::vector<std::int64_t> logs(free_vars, 0);
  const std::int64_t log_t = field.log(t);
  while (true) {
    std::int64_t char_exp = 0, trace_sum = 0;
    std::int64_t log_yd = log_t;
    for (int i = 0; i < d; ++i) {
      const Elem x = field.exp(logs[i]);
      char_exp += a[i] * logs[i];
      trace_sum += table.psi_exponent(x);
      log_yd += logs[i];
    }
    for (int j = 0; j < d - 1; ++j) {
      const Elem y = field.exp(logs[d + j]);
      char_exp -= b[j] * logs[d + j];
      trace_sum -= table.psi_exponent(y);
      log_yd -= logs[d + j];
    }
    log_yd = mod(log_yd, qm1);
    char_exp -= b[d - 1] * log_yd;
    trace_sum -= table.psi_exponent(field.exp(log_yd));
    const std::int64_t e = mod(table.p() * mod(char_exp, qm1) + trace_sum, n_order);
    ++counts[e];

    int pos = 0;
    while (pos < free_vars && ++logs[pos] == qm1) logs[pos++] = 0;
    if (pos == free_vars) break;
  }
  CycloNum out(n_order);
  for (std::int64_t e = 0; e < n_order; ++e) {
    if (counts[e] != 0) out.add_to_numerator(e, Int(static_cast<long>(counts[e])));
  }
  return out;
}

GeneralSum::GeneralSum(const GaussTable& table, const HGParams& params)
    : table_(table), params_(params), normalizer_(table.one()) {
  require_fit(table, params);
  const std::int64_t qm1 = table.qm1();
  for (const auto& a : params.alpha()) normalizer_ *= table.gauss_inverse(a.times(qm1));
  for (const auto& b : params.beta()) normalizer_ *= table.gauss_inverse(-b.times(qm1));
  normalizer_ = normalizer_.reduced();
  terms_.reserve(qm1);
  for (std::int64_t m = 0; m < qm1; ++m) {
    CycloNum term = table.one();
    for (const auto& a : params.alpha()) term *= table.gauss_sum(m + a.times(qm1));
    for (const auto& b : params.beta()) term *= table.gauss_sum(-m - b.times(qm1));
    terms_.push_back(term.reduced());
  }
}

CycloNum GeneralSum::scaled_s(Elem t) const {
  require_nonzero(t);
  const auto& field = table_.field();
  const Elem arg = params_.d() % 2 == 0 ? t : field.neg(t);
  CycloNum acc = table_.zero();
  for (std::int64_t m = 0; m < table_.qm1(); ++m) {
    acc.add_rotated(terms_[m], table_.omega_exponent(arg, m));
  }
  return acc.reduced();
}

CycloNum GeneralSum::s(Elem t) const {
  return scaled_s(t) * Rat(1, static_cast<long>(table_.qm1()));
}

CycloNum GeneralSum::h(Elem t) const {
  // H = -prod 1/(g(a) g(-b)) * S
  auto out = scaled_s(t) * normalizer_;
  out *= Rat(-1, static_cast<long>(table_.qm1()));
  return out.reduced();
}

CycloNum s_sum(const GaussTable& table, const HGParams& params, Elem t) {
  require_nonzero(t);
  return GeneralSum(table, params).s(t);
}

CycloNum h_general(const GaussTable& table, const HGParams& params, Elem t) {
  require_nonzero(t);
  return GeneralSum(table, params).h(t);
}

CycloNum greene_factor(const GaussTable& table, const HGParams& params) {
  require_fit(table, params);
  const std::int64_t qm1 = table.qm1();
  CycloNum factor = table.one();
  for (int i = 0; i < params.d(); ++i) {
    const std::int64_t a = params.alpha()[i].times(qm1);
    const std::int64_t b = params.beta()[i].times(qm1);
    factor *= table.gauss_sum(a);
    factor *= table.gauss_sum(-b);
    factor *= table.gauss_inverse(a - b);
    factor = factor.reduced();
  }
  const Rat scale = Rat(table.omega_minus_one_sign(params.beta_weight(qm1))) /
                    Rat(ipow(Int(static_cast<long>(table.q())), params.d()));
  return (factor * scale).reduced();
}

CycloNum greene_value(const GaussTable& table, const HGParams& params, Elem t) {
  return (greene_factor(table, params) * h_general(table, params, t)).reduced();
}

std::vector<CycloNum> gauss_product_series(const GaussTable& table,
                                           const std::vector<std::int64_t>& p_list,
                                           const std::vector<std::int64_t>& q_list) {
  std::vector<CycloNum> out;
  out.reserve(table.qm1());
  for (std::int64_t m = 0; m < table.qm1(); ++m) {
    CycloNum term = table.one();
    for (auto v : p_list) term *= table.gauss_sum(v * m);
    for (auto v : q_list) term *= table.gauss_sum(-v * m);
    out.push_back(term.reduced());
  }
  return out;
}

void require_coprime_characteristic(const CyclotomicData& data, std::int64_t p) {
  for (auto v : data.all_parameters()) {
    if (v % p == 0) {
      throw Error(ErrorKind::CharacteristicClash,
                  "characteristic " + std::to_string(p) + " divides parameter " +
                      std::to_string(v));
    }
  }
}

Elem scaling_element(const FieldTable& field, const CyclotomicData& data, bool invert) {
  const unsigned long p = static_cast<unsigned long>(field.p());
  const Elem num = field.from_int(
      static_cast<std::int64_t>(mpz_fdiv_ui(data.M.get_num_mpz_t(), p)));
  const Elem den = field.from_int(
      static_cast<std::int64_t>(mpz_fdiv_ui(data.M.get_den_mpz_t(), p)));
  if (num == 0 || den == 0) {
    throw Error(ErrorKind::CharacteristicClash, "M is not a unit in characteristic " +
                                                    std::to_string(field.p()));
  }
  Elem value = invert ? field.div(den, num) : field.div(num, den);
  if (invert && data.epsilon < 0) value = field.neg(value);
  return value;
}

OverQSum::OverQSum(const GaussTable& table, const CyclotomicData& data)
    : table_(table), data_(data) {
  require_coprime_characteristic(data_, table.p());
  eps_m_inv_ = scaling_element(table.field(), data_, true);
  s0_ = s_multiplicity(data_, 0, table.q());
  auto series = gauss_product_series(table, data_.p_list, data_.q_list);
  const Int q(static_cast<long>(table.q()));
  for (std::int64_t m = 0; m < table.qm1(); ++m) {
    const int sm = s_multiplicity(data_, m, table.q());
    series[m] *= Rat(ipow(q, sm));
  }
  terms_ = std::move(series);
}

HValue OverQSum::at(Elem t) const {
  require_nonzero(t);
  const auto& field = table_.field();
  const Elem arg = field.mul(eps_m_inv_, t);
  CycloNum acc = table_.zero();
  for (std::int64_t m = 0; m < table_.qm1(); ++m) {
    acc.add_rotated(terms_[m], table_.omega_exponent(arg, m));
  }
  const Int q(static_cast<long>(table_.q()));
  const int sign = (data_.r() + data_.s()) % 2 == 0 ? 1 : -1;
  acc *= Rat(Int(sign), (Int(1) - q) * ipow(q, s0_));
  HValue out;
  out.value = reduce_to_rational(acc);
  out.q = table_.q();
  out.provenance = Provenance::OverQFormula;
  out.p_valuation = p_valuation(out.value, table_.p());
  return out;
}

ProductFourier::ProductFourier(const GaussTable& table, const CyclotomicData& data)
    : table_(table), data_(data) {
  require_coprime_characteristic(data_, table.p());
  eps_ = data_.epsilon < 0 ? table.field().minus_one() : 1;
  terms_ = gauss_product_series(table, data_.p_list, data_.q_list);
}

Rat ProductFourier::restricted_sum(Elem lam, std::int64_t a) const {
  require_nonzero(lam);
  const std::int64_t n = table_.qm1();
  const std::int64_t g = std::gcd(mod(a, n), n);
  const auto key = std::make_pair(lam, g);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  // a m = 0 mod n exactly when m is a multiple of n / g
  const std::int64_t step = n / g;
  const Elem arg = table_.field().mul(eps_, lam);
  CycloNum acc = table_.zero();
  for (std::int64_t m = 0; m < n; m += step) {
    acc.add_rotated(terms_[m], table_.omega_exponent(arg, m));
  }
  Rat value = reduce_to_rational(acc);
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

HValue h_over_q(const GaussTable& table, const CyclotomicData& data, Elem t) {
  require_nonzero(t);
  return OverQSum(table, data).at(t);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty list");
  return out;
}

std::vector<Frac> parse_frac_list(const std::string& text) {
  std::vector<Frac> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Frac::parse(item));
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty list");
  return out;
}

ParamSpec parse_param_spec(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::stringstream in(text);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected key=value");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  if (fields.count("p") && fields.count("q") && fields.size() == 2) {
    auto data = params_from_cyclotomic(parse_int_list(fields["p"]), parse_int_list(fields["q"]));
    return {data.params, data};
  }
  if (fields.count("alpha") && fields.count("beta") && fields.size() == 2) {
    auto params = HGParams::make(parse_frac_list(fields["alpha"]), parse_frac_list(fields["beta"]));
    std::optional<CyclotomicData> over_q;
    try {
      over_q = cyclotomic_from_params(params);
    } catch (const Error&) {
      // not defined over Q (or not realizable with gcd 1)
    }
    return {params, over_q};
  }
  throw Error(ErrorKind::ParseError, "expected 'alpha=.. beta=..' or 'p=.. q=..'");
}

}  // namespace fhyper
