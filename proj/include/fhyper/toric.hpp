#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fhyper/hyper.hpp"
#include "fhyper/report.hpp"

namespace fhyper {

// A cell of the staircase triangulation of the product of simplices
// Delta^{r-1} x Delta^{s-1}: a chain of index pairs (1-based), weakly
// increasing in both coordinates.
struct Cell {
  int r = 0;
  int s = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> support_x;  // sorted distinct i
  std::vector<int> support_y;  // sorted distinct j

  // Validates the chain condition and index ranges (IndexOutOfRange).
  static Cell make(int r, int s, std::vector<std::pair<int, int>> pairs);

  int length() const { return static_cast<int>(pairs.size()); }
  int support_size() const { return static_cast<int>(support_x.size() + support_y.size()); }
  bool empty() const { return pairs.empty(); }
  bool maximal() const { return support_size() == r + s; }

  // "[(1,1),(2,1)]"
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.r == b.r && a.s == b.s && a.pairs == b.pairs;
  }
};

// All cells of T_rs including the empty one, in lexicographic order of pairs.
std::vector<Cell> enumerate_cells(int r, int s);
std::vector<Cell> maximal_simplices(int r, int s);

// gcd of the parameters in the cell's support; 0 for the empty cell.
std::int64_t cell_gcd(const CyclotomicData& data, const Cell& cell);
// gcd of the parameters outside the support.
std::int64_t complementary_gcd(const CyclotomicData& data, const Cell& cell);

// Coefficients c_0, c_1, ... of P_rs(q) = sum_m C(r-1,m) C(s-1,m) (q^{r+s-m-2} - q^m)/(q-1).
std::vector<Int> p_rs(int r, int s);
Int p_rs(int r, int s, const Int& q);
Int evaluate_polynomial(const std::vector<Int>& coeffs, const Int& x);

enum class CellIdentity { Term, Main, Maximal };
std::string_view to_string(CellIdentity which);
CellIdentity cell_identity_from_string(const std::string& name);

// Left side by enumeration of cells, right side by closed form.
CountReport cell_sum_identity(int r, int s, std::int64_t q, CellIdentity which);

// N(C) for one cell.
Rat counting_number(const ProductFourier& fourier, const Cell& cell, Elem lam);
Rat counting_number(const GaussTable& table, const CyclotomicData& data, const Cell& cell,
                    Elem lam);

}  // namespace fhyper
