#include "fhyper/toric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "fhyper/errors.hpp"

namespace fhyper {

Cell Cell::make(int r, int s, std::vector<std::pair<int, int>> pairs) {
  if (r < 1 || s < 1) throw Error(ErrorKind::IndexOutOfRange, "r and s must be positive");
  Cell c;
  c.r = r;
  c.s = s;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    if (i < 1 || i > r || j < 1 || j > s) {
      throw Error(ErrorKind::IndexOutOfRange, "pair (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") outside " +
                                                  std::to_string(r) + "x" + std::to_string(s));
    }
    if (k > 0) {
      const auto [pi, pj] = pairs[k - 1];
      if (i < pi || j < pj || (i == pi && j == pj)) {
        throw Error(ErrorKind::BadParameter, "pairs do not form a staircase chain");
      }
    }
    c.support_x.push_back(i);
    c.support_y.push_back(j);
  }
  auto dedupe = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(c.support_x);
  dedupe(c.support_y);
  c.pairs = std::move(pairs);
  return c;
}

std::string Cell::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) out << ",";
    out << "(" << pairs[k].first << "," << pairs[k].second << ")";
  }
  out << "]";
  return out.str();
}

nlohmann::json Cell::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [i, j] : pairs) arr.push_back({i, j});
  return arr;
}

namespace {

void extend(int r, int s, std::vector<std::pair<int, int>>& chain, std::vector<Cell>& out) {
  out.push_back(Cell::make(r, s, chain));
  const int i0 = chain.empty() ? 1 : chain.back().first;
  const int j0 = chain.empty() ? 1 : chain.back().second;
  for (int i = i0; i <= r; ++i) {
    for (int j = j0; j <= s; ++j) {
      if (!chain.empty() && i == i0 && j == j0) continue;
      chain.emplace_back(i, j);
      extend(r, s, chain, out);
      chain.pop_back();
    }
  }
}

}  // namespace

std::vector<Cell> enumerate_cells(int r, int s) {
  if (r < 1 || s < 1) throw Error(ErrorKind::IndexOutOfRange, "r and s must be positive");
  std::vector<Cell> out;
  std::vector<std::pair<int, int>> chain;
  extend(r, s, chain, out);
  return out;
}

std::vector<Cell> maximal_simplices(int r, int s) {
  std::vector<Cell> out;
  for (auto& c : enumerate_cells(r, s)) {
    if (c.length() == r + s - 1) out.push_back(std::move(c));
  }
  return out;
}

namespace {

void check_cell_fits(const CyclotomicData& data, const Cell& cell) {
  if (cell.r != data.r() || cell.s != data.s()) {
    throw Error(ErrorKind::IndexOutOfRange, "cell of T_" + std::to_string(cell.r) + "," +
                                                std::to_string(cell.s) + " used with data " +
                                                data.to_string());
  }
}

}  // namespace

std::int64_t cell_gcd(const CyclotomicData& data, const Cell& cell) {
  check_cell_fits(data, cell);
  std::int64_t g = 0;
  for (int i : cell.support_x) g = std::gcd(g, data.p_list[i - 1]);
  for (int j : cell.support_y) g = std::gcd(g, data.q_list[j - 1]);
  return g;
}

std::int64_t complementary_gcd(const CyclotomicData& data, const Cell& cell) {
  check_cell_fits(data, cell);
  std::int64_t g = 0;
  for (int i = 1; i <= data.r(); ++i) {
    if (!std::binary_search(cell.support_x.begin(), cell.support_x.end(), i)) {
      g = std::gcd(g, data.p_list[i - 1]);
    }
  }
  for (int j = 1; j <= data.s(); ++j) {
    if (!std::binary_search(cell.support_y.begin(), cell.support_y.end(), j)) {
      g = std::gcd(g, data.q_list[j - 1]);
    }
  }
  return g;
}

std::vector<Int> p_rs(int r, int s) {
  if (r < 1 || s < 1) throw Error(ErrorKind::BadParameter, "r and s must be positive");
  std::vector<Int> coeffs(std::max(r + s - 2, 1), Int(0));
  for (int m = 0; m <= std::min(r - 1, s - 1); ++m) {
    const Int c = binomial(r - 1, m) * binomial(s - 1, m);
    // (q^{r+s-m-2} - q^m) / (q - 1) = q^m + ... + q^{r+s-m-3}
    for (int k = m; k < r + s - m - 2; ++k) coeffs[k] += c;
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

Int evaluate_polynomial(const std::vector<Int>& coeffs, const Int& x) {
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int p_rs(int r, int s, const Int& q) { return evaluate_polynomial(p_rs(r, s), q); }

std::string_view to_string(CellIdentity which) {
  switch (which) {
    case CellIdentity::Term: return "term";
    case CellIdentity::Main: return "main";
    case CellIdentity::Maximal: return "maximal";
  }
  return "?";
}

CellIdentity cell_identity_from_string(const std::string& name) {
  if (name == "term") return CellIdentity::Term;
  if (name == "main") return CellIdentity::Main;
  if (name == "maximal") return CellIdentity::Maximal;
  throw Error(ErrorKind::ParseError, "unknown cell identity '" + name + "'");
}

namespace {

// Number of cells of T_rs per (length, support size, maximal).
using CellTally = std::map<std::tuple<int, int, bool>, std::int64_t>;

const CellTally& cell_tally(int r, int s) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, CellTally> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find({r, s}); it != cache.end()) return it->second;
  }
  CellTally tally;
  for (const auto& c : enumerate_cells(r, s)) {
    ++tally[{c.length(), c.support_size(), c.maximal()}];
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(r, s), std::move(tally)).first->second;
}

}  // namespace

CountReport cell_sum_identity(int r, int s, std::int64_t q, CellIdentity which) {
  if (q < 2) throw Error(ErrorKind::BadParameter, "q must be at least 2");
  const Int Q(static_cast<long>(q));
  const Int Q1 = Q - 1;
  Int lhs = 0;
  for (const auto& [key, count] : cell_tally(r, s)) {
    const auto [l, sz, maximal] = key;
    const Int n(static_cast<long>(count));
    switch (which) {
      case CellIdentity::Term:
        lhs += (sz % 2 == 0 ? 1 : -1) * n * ipow(Q1, sz - l);
        break;
      case CellIdentity::Main:
        lhs += n * ipow(Q1, r + s - l - 1);
        break;
      case CellIdentity::Maximal:
        if (maximal) lhs += n * ipow(Q1, r + s - l - 1);
        break;
    }
  }
  Int rhs = 0;
  switch (which) {
    case CellIdentity::Term:
      rhs = ipow(Q, std::min(r, s));
      break;
    case CellIdentity::Main:
      for (int m = 0; m <= std::min(r - 1, s - 1); ++m) {
        rhs += binomial(r - 1, m) * binomial(s - 1, m) * ipow(Q, r + s - m - 1);
      }
      break;
    case CellIdentity::Maximal:
      for (int m = 0; m <= std::min(r - 1, s - 1); ++m) {
        rhs += binomial(r - 1, m) * binomial(s - 1, m) * ipow(Q, m);
      }
      break;
  }
  std::string label = "cells-" + std::string(to_string(which)) + "(" + std::to_string(r) +
                      "," + std::to_string(s) + ")";
  return CountReport::make(std::move(label), q, -1, Rat(lhs), Rat(rhs));
}

Rat counting_number(const ProductFourier& fourier, const Cell& cell, Elem lam) {
  const auto& data = fourier.data();
  const std::int64_t a = cell_gcd(data, cell);
  const Int Q(static_cast<long>(fourier.table().q()));
  const int l = cell.length();
  const int sz = cell.support_size();
  const int rs = data.r() + data.s();
  Rat out = rpow(Rat(Q - 1), rs - l - 2) / Rat(Q);
  Rat tail = rpow(Rat(Q - 1), sz - l - 1) / Rat(Q) * fourier.restricted_sum(lam, a);
  if (sz % 2) tail = -tail;
  out += tail;
  out.canonicalize();
  return out;
}

Rat counting_number(const GaussTable& table, const CyclotomicData& data, const Cell& cell,
                    Elem lam) {
  return counting_number(ProductFourier(table, data), cell, lam);
}

}  // namespace fhyper
