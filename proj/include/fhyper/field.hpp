#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace fhyper {

// Element of F_q encoded as the integer whose base-p digits are the
// coefficients (low degree first) of its residue polynomial. Code 0 is zero,
// code 1 is one.
using Elem = std::uint32_t;

inline constexpr std::int64_t kDefaultFieldCap = 1'000'000;

// Returns (p, f) with q = p^f, or nullopt when q < 2 or q is not a prime power.
std::optional<std::pair<std::int64_t, int>> prime_power_decomposition(std::int64_t q);

// A fully tabulated finite field F_q with a fixed generator of F_q^x.
//
// The defining modulus is the lexicographically smallest (low-degree
// coefficient first) monic irreducible polynomial of degree f over F_p and
// the default generator is the smallest code of multiplicative order q-1.
// Tables are immutable after construction.
class FieldTable {
 public:
  static FieldTable build(std::int64_t q, std::int64_t q_cap = kDefaultFieldCap);

  // Same field and modulus, tables rebuilt around another primitive element.
  FieldTable with_generator(Elem g) const;

  std::int64_t q() const { return q_; }
  std::int64_t p() const { return p_; }
  int f() const { return f_; }
  // q - 1, the order of the multiplicative group.
  std::int64_t order() const { return q_ - 1; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return exp_[q_ > 2 ? 1 : 0]; }

  Elem exp(std::int64_t k) const;
  std::int64_t log(Elem x) const;
  // Tr_{F_q/F_p}(x) as a residue in [0, p).
  std::uint32_t trace(Elem x) const { return trace_[x]; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  // Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t n) const;
  // Code of -1 (equal to 1 in characteristic 2).
  Elem minus_one() const { return neg_[1]; }

  bool is_primitive(Elem g) const;

  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }
  const std::vector<std::uint32_t>& trace_table() const { return trace_; }

  // Binary cache: magic "HQFT1", then q, p, f, the f+1 modulus digits and the
  // exp (q-1 entries), log (q entries, entry 0 = 0xffffffff) and trace
  // (q entries) arrays, all as little-endian 32-bit integers.
  void save(const std::filesystem::path& path) const;
  static FieldTable load(const std::filesystem::path& path);
  static std::filesystem::path cache_file(const std::filesystem::path& dir, std::int64_t q);
  // Loads from dir when a valid file exists, otherwise builds and writes it.
  static FieldTable cached(const std::filesystem::path& dir, std::int64_t q,
                           std::int64_t q_cap = kDefaultFieldCap);

  friend bool operator==(const FieldTable& a, const FieldTable& b) {
    return a.q_ == b.q_ && a.modulus_ == b.modulus_ && a.exp_ == b.exp_ && a.log_ == b.log_ &&
           a.trace_ == b.trace_;
  }

 private:
  FieldTable() = default;
  void fill_tables(Elem g);
  void fill_arithmetic();
  Elem poly_mul(Elem a, Elem b) const;

  std::int64_t q_ = 0;
  std::int64_t p_ = 0;
  int f_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> trace_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_;  // q*q table, only for small q
};

// Realizes omega(x) = zeta_{q-1}^{log x}.
inline std::int64_t omega_log(const FieldTable& field, Elem x) { return field.log(x); }
inline std::uint32_t trace_exponent(const FieldTable& field, Elem x) { return field.trace(x); }
inline FieldTable build_field(std::int64_t q) { return FieldTable::build(q); }

}  // namespace fhyper
