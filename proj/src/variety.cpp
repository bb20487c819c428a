#include "fhyper/variety.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include "fhyper/errors.hpp"

namespace fhyper {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_nonzero_lambda(Elem lam) {
  if (lam == 0) throw Error(ErrorKind::ZeroArgument, "lambda must be nonzero");
}

}  // namespace

std::vector<std::int64_t> torus_histogram(const FieldTable& field,
                                          const std::vector<TorusVar>& vars, std::size_t fixed) {
  const std::int64_t n = field.order();
  std::vector<std::int64_t> hist(n, 0);
  if (vars.size() < 2) return hist;
  if (fixed >= vars.size()) throw Error(ErrorKind::IndexOutOfRange, "fixed coordinate");
  const std::size_t solve = fixed == 0 ? 1 : 0;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i != fixed && i != solve) free.push_back(i);
  }
  std::vector<std::int64_t> exps(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) exps[i] = mod(vars[i].exponent, n);
  std::vector<Elem> elems(n);
  for (std::int64_t k = 0; k < n; ++k) elems[k] = field.exp(k);

  // s_solve x_solve + lin = 0 at the leaf
  std::function<void(std::size_t, Elem, std::int64_t)> walk = [&](std::size_t d, Elem lin,
                                                                  std::int64_t lg) {
    if (d == free.size()) {
      const Elem v = vars[solve].sign > 0 ? field.neg(lin) : lin;
      if (v == 0) return;
      ++hist[(lg + exps[solve] * field.log(v)) % n];
      return;
    }
    const auto& var = vars[free[d]];
    const std::int64_t e = exps[free[d]];
    for (std::int64_t k = 0; k < n; ++k) {
      const Elem term = var.sign > 0 ? elems[k] : field.neg(elems[k]);
      walk(d + 1, field.add(lin, term), (lg + e * k) % n);
    }
  };
  const Elem base = vars[fixed].sign > 0 ? Elem(1) : field.minus_one();
  walk(0, base, 0);
  return hist;
}

std::vector<std::int64_t> power_fiber_sizes(const FieldTable& field, std::int64_t a) {
  const std::int64_t n = field.order();
  std::vector<std::int64_t> out(n, 0);
  const std::int64_t am = mod(a, n);
  for (std::int64_t k = 0; k < n; ++k) ++out[(am * k) % n];
  return out;
}

VarietyCounter::VarietyCounter(const GaussTable& table, const CyclotomicData& data)
    : table_(table),
      data_(data),
      cells_(enumerate_cells(data.r(), data.s())),
      fourier_(table, data),
      over_q_(table, data),
      m_elem_(scaling_element(table.field(), data, false)) {}

bool VarietyCounter::singular(Elem lam) const { return table_.field().mul(m_elem_, lam) == 1; }

const std::vector<std::int64_t>& VarietyCounter::histogram(const Cell& cell) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = histograms_.find(cell.pairs); it != histograms_.end()) return *it->second;
  }
  std::vector<TorusVar> vars;
  for (int i = 1; i <= data_.r(); ++i) {
    if (!std::binary_search(cell.support_x.begin(), cell.support_x.end(), i)) {
      vars.push_back({1, data_.p_list[i - 1]});
    }
  }
  for (int j = 1; j <= data_.s(); ++j) {
    if (!std::binary_search(cell.support_y.begin(), cell.support_y.end(), j)) {
      vars.push_back({-1, -data_.q_list[j - 1]});
    }
  }
  // torus: dehomogenize at the last coordinate; components: at the first
  // surviving one, an x whenever possible
  const std::size_t fixed = cell.empty() ? vars.size() - 1 : 0;
  auto hist = std::make_shared<std::vector<std::int64_t>>(
      vars.empty() ? std::vector<std::int64_t>(table_.qm1(), 0)
                   : torus_histogram(table_.field(), vars, fixed));
  std::lock_guard<std::mutex> lock(mutex_);
  return *histograms_.emplace(cell.pairs, std::move(hist)).first->second;
}

Int VarietyCounter::torus_brute(Elem lam) const {
  require_nonzero_lambda(lam);
  const auto& hist = histogram(Cell::make(data_.r(), data_.s(), {}));
  const std::int64_t n = table_.qm1();
  return Int(static_cast<long>(hist[mod(-table_.field().log(lam), n)]));
}

Rat VarietyCounter::torus_formula(Elem lam) const {
  const Int q(static_cast<long>(table_.q()));
  Rat out = rpow(Rat(q - 1), data_.r() + data_.s() - 2) / Rat(q);
  out += fourier_.restricted_sum(lam, 0) / Rat(q * (q - 1));
  out.canonicalize();
  return out;
}

CountReport VarietyCounter::torus_count(Elem lam) const {
  const auto start = Clock::now();
  Int brute = torus_brute(lam);
  Rat formula = torus_formula(lam);
  return CountReport::make("torus " + data_.to_string(), table_.q(), lam, Rat(brute), formula,
                           ms_since(start));
}

Int VarietyCounter::component_brute(const Cell& cell, Elem lam) const {
  require_nonzero_lambda(lam);
  if (cell.r != data_.r() || cell.s != data_.s()) {
    throw Error(ErrorKind::IndexOutOfRange, "cell does not belong to T_rs of the datum");
  }
  if (cell.maximal()) {
    throw Error(ErrorKind::MaximalCellHasNoComponent, cell.to_string());
  }
  if (cell.empty()) return torus_brute(lam);
  const std::int64_t a = cell_gcd(data_, cell);
  std::shared_ptr<std::vector<std::int64_t>> fib;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = fibers_[a];
    if (!slot) slot = std::make_shared<std::vector<std::int64_t>>(power_fiber_sizes(table_.field(), a));
    fib = slot;
  }
  const auto& hist = histogram(cell);
  const std::int64_t n = table_.qm1();
  const std::int64_t target = mod(-table_.field().log(lam), n);
  std::int64_t count = 0;
  for (std::int64_t t = 0; t < n; ++t) {
    if (hist[t]) count += hist[t] * (*fib)[mod(target - t, n)];
  }
  const Int q1(static_cast<long>(n));
  return Int(static_cast<long>(count)) * ipow(q1, cell.support_size() - cell.length() - 1);
}

CountReport VarietyCounter::component_count(const Cell& cell, Elem lam) const {
  const auto start = Clock::now();
  Int brute = component_brute(cell, lam);
  Rat formula = counting_number(fourier_, cell, lam);
  return CountReport::make("component " + cell.to_string() + " " + data_.to_string(),
                           table_.q(), lam, Rat(brute), formula, ms_since(start));
}

Rat VarietyCounter::completed_formula(Elem lam) const {
  if (singular(lam)) {
    throw Error(ErrorKind::SingularFiber, "M lambda = 1 for lambda code " + std::to_string(lam));
  }
  const int r = data_.r();
  const int s = data_.s();
  const Int q(static_cast<long>(table_.q()));
  const HValue h = over_q_.at(table_.field().mul(m_elem_, lam));
  Rat out = Rat(p_rs(r, s, q));
  Rat tail = Rat(ipow(q, std::min(r, s) - 1)) * h.value;
  if ((r + s - 1) % 2) tail = -tail;
  out += tail;
  out.canonicalize();
  return out;
}

Rat VarietyCounter::counting_number_total(Elem lam) const {
  Rat total = 0;
  for (const auto& cell : cells_) {
    if (!cell.maximal()) total += counting_number(fourier_, cell, lam);
  }
  total.canonicalize();
  return total;
}

CountReport VarietyCounter::completed_count(Elem lam) const {
  const auto start = Clock::now();
  Int brute = torus_brute(lam);
  for (const auto& cell : cells_) {
    if (!cell.empty() && !cell.maximal()) brute += component_brute(cell, lam);
  }
  std::optional<Rat> formula;
  if (!singular(lam)) formula = completed_formula(lam);
  return CountReport::make("completed " + data_.to_string(), table_.q(), lam, Rat(brute),
                           formula, ms_since(start));
}

CountReport VarietyCounter::main_theorem_check(Elem lam) const {
  if (singular(lam)) {
    throw Error(ErrorKind::SingularFiber, "M lambda = 1 for lambda code " + std::to_string(lam));
  }
  auto report = completed_count(lam);
  report.label = "main " + data_.to_string();
  return report;
}

CountReport torus_count(const GaussTable& table, const CyclotomicData& data, Elem lam) {
  return VarietyCounter(table, data).torus_count(lam);
}

CountReport component_count(const GaussTable& table, const CyclotomicData& data,
                            const Cell& cell, Elem lam) {
  return VarietyCounter(table, data).component_count(cell, lam);
}

CountReport completed_count(const GaussTable& table, const CyclotomicData& data, Elem lam) {
  return VarietyCounter(table, data).completed_count(lam);
}

CountReport main_theorem_check(const GaussTable& table, const CyclotomicData& data, Elem lam) {
  return VarietyCounter(table, data).main_theorem_check(lam);
}

AltVarietySpec AltVarietySpec::make(std::vector<std::int64_t> a_list,
                                    std::vector<std::vector<int>> blocks) {
  const int k = static_cast<int>(a_list.size());
  if (k == 0 || blocks.empty()) throw Error(ErrorKind::BadPartition, "empty exponent list");
  std::vector<int> seen(k, 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw Error(ErrorKind::BadPartition, "empty block");
    std::int64_t sum = 0;
    std::int64_t g = 0;
    for (int i : block) {
      if (i < 1 || i > k) throw Error(ErrorKind::BadPartition, "block index out of range");
      if (seen[i - 1]++) throw Error(ErrorKind::BadPartition, "blocks overlap");
      sum += a_list[i - 1];
      g = std::gcd(g, a_list[i - 1]);
    }
    if (sum != 0) throw Error(ErrorKind::BadPartition, "block sum is not zero");
    if (g != 1) throw Error(ErrorKind::BadPartition, "block entries are not coprime");
  }
  if (std::count(seen.begin(), seen.end(), 0)) {
    throw Error(ErrorKind::BadPartition, "blocks do not cover every index");
  }
  return AltVarietySpec{std::move(a_list), std::move(blocks)};
}

AltVarietySpec AltVarietySpec::ono() { return make({2, -1, -1, 2, -1, -1}, {{1, 2, 3}, {4, 5, 6}}); }

int AltVarietySpec::epsilon() const {
  std::int64_t neg = 0;
  for (auto a : a_list) {
    if (a < 0) neg -= a;
  }
  return neg % 2 == 0 ? 1 : -1;
}

std::string AltVarietySpec::to_string() const {
  std::ostringstream out;
  out << "a=(";
  for (std::size_t i = 0; i < a_list.size(); ++i) out << (i ? "," : "") << a_list[i];
  out << ") blocks=";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out << (b ? "," : "") << "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) out << (i ? "," : "") << blocks[b][i];
    out << "}";
  }
  return out.str();
}

Rat q_polynomial(int r, const Rat& x) {
  if (r < 1) throw Error(ErrorKind::BadParameter, "Q_r needs r >= 1");
  Rat out = rpow(x - 1, r - 1) + Rat(r % 2 == 0 ? 1 : -1);
  out /= x;
  out.canonicalize();
  return out;
}

AltVarietyCounter::AltVarietyCounter(const GaussTable& table, const AltVarietySpec& spec)
    : table_(table), spec_(AltVarietySpec::make(spec.a_list, spec.blocks)) {
  const auto& field = table.field();
  const std::int64_t n = table.qm1();
  histogram_.assign(n, 0);
  histogram_[0] = 1;
  // blocks are independent, so the joint histogram is a convolution
  for (const auto& block : spec_.blocks) {
    std::vector<TorusVar> vars;
    for (int i : block) vars.push_back({1, spec_.a_list[i - 1]});
    const auto h = torus_histogram(field, vars, vars.size() - 1);
    std::vector<std::int64_t> next(n, 0);
    for (std::int64_t u = 0; u < n; ++u) {
      if (!histogram_[u]) continue;
      for (std::int64_t v = 0; v < n; ++v) next[(u + v) % n] += histogram_[u] * h[v];
    }
    histogram_ = std::move(next);
  }
  terms_ = gauss_product_series(table, spec_.a_list, {});
}

Int AltVarietyCounter::brute(Elem lam) const {
  require_nonzero_lambda(lam);
  const auto& field = table_.field();
  const Elem eps = spec_.epsilon() < 0 ? field.minus_one() : Elem(1);
  const std::int64_t n = table_.qm1();
  // lam x^a = eps
  const std::int64_t target = mod(field.log(eps) - field.log(lam), n);
  return Int(static_cast<long>(histogram_[target]));
}

Rat AltVarietyCounter::formula(Elem lam) const {
  require_nonzero_lambda(lam);
  const auto& field = table_.field();
  const Int q(static_cast<long>(table_.q()));
  Rat prod = 1;
  for (const auto& block : spec_.blocks) {
    prod *= q_polynomial(static_cast<int>(block.size()), Rat(q));
  }
  const Elem arg = field.mul(spec_.epsilon() < 0 ? field.minus_one() : Elem(1), lam);
  CycloNum acc = table_.zero();
  for (std::int64_t m = 1; m < table_.qm1(); ++m) {
    acc.add_rotated(terms_[m], table_.omega_exponent(arg, m));
  }
  const auto l = static_cast<std::int64_t>(spec_.blocks.size());
  Rat out = prod / Rat(q - 1) + reduce_to_rational(acc) / Rat(ipow(q, l) * (q - 1));
  out.canonicalize();
  return out;
}

CountReport AltVarietyCounter::count(Elem lam) const {
  const auto start = Clock::now();
  Int b = brute(lam);
  Rat f = formula(lam);
  return CountReport::make("alt " + spec_.to_string(), table_.q(), lam, Rat(b), f,
                           ms_since(start));
}

CountReport alt_variety_count(const GaussTable& table, const AltVarietySpec& spec, Elem lam) {
  return AltVarietyCounter(table, spec).count(lam);
}

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::CubicRoots: return "cubic_roots";
    case CurveKind::KatzCurve: return "katz_curve";
    case CurveKind::Legendre: return "legendre";
  }
  return "?";
}

CurveKind curve_kind_from_string(const std::string& name) {
  if (name == "cubic_roots") return CurveKind::CubicRoots;
  if (name == "katz_curve") return CurveKind::KatzCurve;
  if (name == "legendre") return CurveKind::Legendre;
  throw Error(ErrorKind::ParseError, "unknown curve family '" + name + "'");
}

CyclotomicData curve_datum(CurveKind kind) {
  switch (kind) {
    case CurveKind::CubicRoots: return params_from_cyclotomic({3}, {1, 2});
    case CurveKind::KatzCurve: return params_from_cyclotomic({3}, {1, 1, 1});
    case CurveKind::Legendre: return params_from_cyclotomic({2, 2}, {1, 1, 1, 1});
  }
  throw Error(ErrorKind::BadParameter, "unknown curve family");
}

namespace {

void check_curve_characteristic(const GaussTable& table, CurveKind kind) {
  const std::int64_t p = table.p();
  const bool clash = kind == CurveKind::Legendre ? p == 2 : (p == 2 || p == 3);
  if (clash) {
    throw Error(ErrorKind::CharacteristicClash, std::string(to_string(kind)) +
                                                    " is excluded in characteristic " +
                                                    std::to_string(p));
  }
}

}  // namespace

CurveCounter::CurveCounter(const GaussTable& table, CurveKind kind)
    : table_(table), kind_(kind), over_q_((check_curve_characteristic(table, kind), table),
                                          curve_datum(kind)) {}

bool CurveCounter::admissible(Elem param) const {
  const auto& field = table_.field();
  if (param == 0) return false;
  switch (kind_) {
    case CurveKind::CubicRoots:
    case CurveKind::Legendre:
      return param != 1;
    case CurveKind::KatzCurve:
      return field.mul(field.from_int(27), param) != 1;
  }
  return false;
}

Int CurveCounter::brute(Elem param) const {
  const auto& field = table_.field();
  const auto q = static_cast<Elem>(table_.q());
  std::int64_t count = 0;
  switch (kind_) {
    case CurveKind::CubicRoots: {
      // x^3 + 3x^2 - 4t
      const Elem three = field.from_int(3);
      const Elem c = field.neg(field.mul(field.from_int(4), param));
      for (Elem x = 0; x < q; ++x) {
        const Elem x2 = field.mul(x, x);
        if (field.add(field.add(field.mul(x2, x), field.mul(three, x2)), c) == 0) ++count;
      }
      break;
    }
    case CurveKind::KatzCurve:
      // y^2 + xy + y = lam x^3, plus one point at infinity
      for (Elem x = 0; x < q; ++x) {
        const Elem rhs = field.mul(param, field.mul(x, field.mul(x, x)));
        for (Elem y = 0; y < q; ++y) {
          if (field.add(field.mul(y, field.add(y, x)), y) == rhs) ++count;
        }
      }
      ++count;
      break;
    case CurveKind::Legendre: {
      // y^2 = x(x-1)(x-lam), plus one point at infinity
      std::vector<std::int64_t> squares(q, 0);
      for (Elem y = 0; y < q; ++y) ++squares[field.mul(y, y)];
      for (Elem x = 0; x < q; ++x) {
        count += squares[field.mul(x, field.mul(field.sub(x, 1), field.sub(x, param)))];
      }
      ++count;
      break;
    }
  }
  return Int(static_cast<long>(count));
}

Rat CurveCounter::formula(Elem param) const {
  const auto& field = table_.field();
  const Rat q(static_cast<long>(table_.q()));
  switch (kind_) {
    case CurveKind::CubicRoots:
      return 1 + over_q_.at(param).value;
    case CurveKind::KatzCurve:
      return q + 1 - over_q_.at(field.mul(field.from_int(27), param)).value;
    case CurveKind::Legendre: {
      Rat h = over_q_.at(param).value;
      if ((table_.q() - 1) / 2 % 2) h = -h;
      return q + 1 - h;
    }
  }
  return 0;
}

CountReport CurveCounter::count(Elem param) const {
  if (!admissible(param)) {
    throw Error(ErrorKind::BadParameter, "parameter code " + std::to_string(param) +
                                             " is excluded for " +
                                             std::string(to_string(kind_)));
  }
  const auto start = Clock::now();
  Int b = brute(param);
  Rat f = formula(param);
  return CountReport::make(std::string(to_string(kind_)), table_.q(), param, Rat(b), f,
                           ms_since(start));
}

CountReport curve_counts(const GaussTable& table, CurveKind kind, Elem param) {
  return CurveCounter(table, kind).count(param);
}

CyclotomicData surface_datum() { return params_from_cyclotomic({30, 1}, {15, 10, 6}); }

CountReport surface_count(const GaussTable& table, Elem lam) {
  auto report = VarietyCounter(table, surface_datum()).main_theorem_check(lam);
  report.label = "surface " + surface_datum().to_string();
  return report;
}

}  // namespace fhyper
