#include "fhyper/field.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <numeric>
#include <string>

#include "fhyper/errors.hpp"
#include "fhyper/numtheory.hpp"

namespace fhyper {

namespace {

constexpr std::int64_t kAddTableLimit = 256;
constexpr std::uint32_t kNoLog = 0xffffffffu;
constexpr char kCacheMagic[5] = {'H', 'Q', 'F', 'T', '1'};

using Poly = std::vector<std::int64_t>;

// Remainder of a modulo the monic polynomial m over F_p (both low degree first).
Poly poly_rem(Poly a, const Poly& m, std::int64_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::int64_t c = a.back() % p;
    if (c != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const Poly& m, std::int64_t p) {
  const int f = static_cast<int>(m.size()) - 1;
  for (int d = 1; d <= f / 2; ++d) {
    // every monic divisor candidate of degree d
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1);
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        divisor[i] = c % p;
        c /= p;
      }
      divisor[d] = 1;
      Poly r = poly_rem(m, divisor, p);
      bool zero = true;
      for (auto v : r) zero = zero && (v % p == 0);
      if (zero) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree f, comparing coefficients from the
// constant term upwards.
Poly smallest_irreducible(std::int64_t p, int f) {
  if (f == 1) return {0, 1};
  std::int64_t count = 1;
  for (int i = 0; i < f; ++i) count *= p;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    // idx enumerates (c_0, ..., c_{f-1}) with c_0 most significant
    Poly m(f + 1);
    std::int64_t c = idx;
    for (int i = f - 1; i >= 0; --i) {
      m[i] = c % p;
      c /= p;
    }
    m[f] = 1;
    if (m[0] == 0) continue;
    if (is_irreducible(m, p)) return m;
  }
  throw Error(ErrorKind::NotPrimePower, "no irreducible polynomial found");
}

}  // namespace

std::optional<std::pair<std::int64_t, int>> prime_power_decomposition(std::int64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  const std::int64_t p = factors.front();
  int f = 0;
  for (std::int64_t x = q; x > 1; x /= p) ++f;
  return std::make_pair(p, f);
}

Elem FieldTable::poly_mul(Elem a, Elem b) const {
  Poly da(f_), db(f_);
  for (int i = 0; i < f_; ++i) {
    da[i] = a % p_;
    a /= static_cast<Elem>(p_);
    db[i] = b % p_;
    b /= static_cast<Elem>(p_);
  }
  Poly prod(2 * f_ - 1, 0);
  for (int i = 0; i < f_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  Poly m(modulus_.begin(), modulus_.end());
  prod = poly_rem(std::move(prod), m, p_);
  std::int64_t code = 0;
  for (int i = static_cast<int>(prod.size()) - 1; i >= 0; --i) code = code * p_ + prod[i];
  return static_cast<Elem>(code);
}

FieldTable FieldTable::build(std::int64_t q, std::int64_t q_cap) {
  auto pf = prime_power_decomposition(q);
  if (!pf) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > q_cap) {
    throw Error(ErrorKind::FieldTooLarge,
                "q = " + std::to_string(q) + " exceeds the cap " + std::to_string(q_cap));
  }
  FieldTable field;
  field.q_ = q;
  field.p_ = pf->first;
  field.f_ = pf->second;
  for (auto c : smallest_irreducible(field.p_, field.f_)) {
    field.modulus_.push_back(static_cast<std::uint32_t>(c));
  }
  field.fill_arithmetic();

  const auto order_factors = prime_factors(q - 1);
  auto slow_pow = [&field](Elem base, std::int64_t e) {
    Elem result = 1;
    while (e > 0) {
      if (e & 1) result = field.poly_mul(result, base);
      base = field.poly_mul(base, base);
      e >>= 1;
    }
    return result;
  };
  Elem generator = 0;
  for (Elem g = 1; g < static_cast<Elem>(q); ++g) {
    bool primitive = true;
    for (auto l : order_factors) {
      if (slow_pow(g, (q - 1) / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }
  field.fill_tables(generator);

  // trace is F_p-linear: tabulate it on the basis 1, t, ..., t^{f-1}
  std::vector<std::int64_t> basis_trace(field.f_);
  std::int64_t basis_code = 1;
  for (int i = 0; i < field.f_; ++i) {
    const auto e = static_cast<Elem>(basis_code);
    Elem acc = 0;
    Elem power = e;
    for (int k = 0; k < field.f_; ++k) {
      acc = field.add(acc, power);
      power = field.pow(power, field.p_);
    }
    basis_trace[i] = acc;  // lies in the prime field, so code < p
    basis_code *= field.p_;
  }
  field.trace_.assign(q, 0);
  for (std::int64_t code = 0; code < q; ++code) {
    std::int64_t c = code, t = 0;
    for (int i = 0; i < field.f_; ++i) {
      t += (c % field.p_) * basis_trace[i];
      c /= field.p_;
    }
    field.trace_[code] = static_cast<std::uint32_t>(t % field.p_);
  }
  return field;
}

void FieldTable::fill_arithmetic() {
  neg_.assign(q_, 0);
  for (std::int64_t code = 0; code < q_; ++code) {
    std::int64_t c = code, out = 0, scale = 1;
    for (int i = 0; i < f_; ++i) {
      out += ((p_ - c % p_) % p_) * scale;
      c /= p_;
      scale *= p_;
    }
    neg_[code] = static_cast<std::uint32_t>(out);
  }
  add_.clear();
  if (f_ > 1 && q_ <= kAddTableLimit) {
    add_.resize(q_ * q_);
    for (std::int64_t a = 0; a < q_; ++a) {
      for (std::int64_t b = 0; b < q_; ++b) {
        std::int64_t x = a, y = b, out = 0, scale = 1;
        for (int i = 0; i < f_; ++i) {
          out += ((x % p_ + y % p_) % p_) * scale;
          x /= p_;
          y /= p_;
          scale *= p_;
        }
        add_[a * q_ + b] = static_cast<std::uint32_t>(out);
      }
    }
  }
}

void FieldTable::fill_tables(Elem g) {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, kNoLog);
  Elem x = 1;
  for (std::int64_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    log_[x] = static_cast<std::uint32_t>(k);
    x = poly_mul(x, g);
  }
}

FieldTable FieldTable::with_generator(Elem g) const {
  if (!is_primitive(g)) {
    throw Error(ErrorKind::BadParameter, "element " + std::to_string(g) + " is not primitive");
  }
  FieldTable copy = *this;
  copy.fill_tables(g);
  return copy;
}

bool FieldTable::is_primitive(Elem g) const {
  if (g == 0 || g >= static_cast<Elem>(q_)) return false;
  const std::int64_t k = log_[g];
  return std::gcd(k, q_ - 1) == 1;
}

Elem FieldTable::exp(std::int64_t k) const {
  const std::int64_t n = q_ - 1;
  return exp_[((k % n) + n) % n];
}

std::int64_t FieldTable::log(Elem x) const {
  if (x == 0) throw Error(ErrorKind::ZeroHasNoLog, "log of 0");
  return log_[x];
}

Elem FieldTable::add(Elem a, Elem b) const {
  if (f_ == 1) return static_cast<Elem>((a + b) % p_);
  if (!add_.empty()) return add_[a * q_ + b];
  std::int64_t x = a, y = b, out = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

Elem FieldTable::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::int64_t k = static_cast<std::int64_t>(log_[a]) + log_[b];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

Elem FieldTable::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::ZeroHasNoLog, "inverse of 0");
  return exp(-static_cast<std::int64_t>(log_[a]));
}

Elem FieldTable::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorKind::ZeroHasNoLog, "negative power of 0");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t k = static_cast<std::int64_t>(
      (static_cast<__int128>(log_[a]) * (((e % n) + n) % n)) % n);
  return exp_[k];
}

Elem FieldTable::from_int(std::int64_t n) const {
  return static_cast<Elem>(((n % p_) + p_) % p_);
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<unsigned char, 4> bytes{static_cast<unsigned char>(v & 0xff),
                                     static_cast<unsigned char>((v >> 8) & 0xff),
                                     static_cast<unsigned char>((v >> 16) & 0xff),
                                     static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(bytes.data()), 4);
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), 4);
  if (!in) throw Error(ErrorKind::CacheFormat, "truncated field cache");
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) |
         (static_cast<std::uint32_t>(bytes[3]) << 24);
}

}  // namespace

void FieldTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::CacheFormat, "cannot write " + path.string());
  out.write(kCacheMagic, sizeof kCacheMagic);
  put_u32(out, static_cast<std::uint32_t>(q_));
  put_u32(out, static_cast<std::uint32_t>(p_));
  put_u32(out, static_cast<std::uint32_t>(f_));
  for (auto c : modulus_) put_u32(out, c);
  for (auto v : exp_) put_u32(out, v);
  for (auto v : log_) put_u32(out, v);
  for (auto v : trace_) put_u32(out, v);
}

FieldTable FieldTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::CacheFormat, "cannot read " + path.string());
  char magic[sizeof kCacheMagic];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kCacheMagic, sizeof magic) != 0) {
    throw Error(ErrorKind::CacheFormat, "bad magic in " + path.string());
  }
  FieldTable field;
  field.q_ = get_u32(in);
  field.p_ = get_u32(in);
  field.f_ = static_cast<int>(get_u32(in));
  auto pf = prime_power_decomposition(field.q_);
  if (!pf || pf->first != field.p_ || pf->second != field.f_) {
    throw Error(ErrorKind::CacheFormat, "inconsistent header in " + path.string());
  }
  field.modulus_.resize(field.f_ + 1);
  for (auto& c : field.modulus_) c = get_u32(in);
  field.exp_.resize(field.q_ - 1);
  for (auto& v : field.exp_) v = get_u32(in);
  field.log_.resize(field.q_);
  for (auto& v : field.log_) v = get_u32(in);
  field.trace_.resize(field.q_);
  for (auto& v : field.trace_) v = get_u32(in);
  for (std::int64_t k = 0; k < field.q_ - 1; ++k) {
    if (field.exp_[k] >= field.q_ || field.log_[field.exp_[k]] != k) {
      throw Error(ErrorKind::CacheFormat, "exp/log tables disagree in " + path.string());
    }
  }
  field.fill_arithmetic();
  return field;
}

std::filesystem::path FieldTable::cache_file(const std::filesystem::path& dir, std::int64_t q) {
  return dir / ("field_" + std::to_string(q) + ".hqft");
}

FieldTable FieldTable::cached(const std::filesystem::path& dir, std::int64_t q,
                              std::int64_t q_cap) {
  const auto file = cache_file(dir, q);
  if (std::filesystem::exists(file)) {
    try {
      auto field = load(file);
      if (field.q() == q) return field;
    } catch (const Error&) {
      // stale or corrupt entry: rebuild below
    }
  }
  auto field = build(q, q_cap);
  std::filesystem::create_directories(dir);
  field.save(file);
  return field;
}

}  // namespace fhyper
