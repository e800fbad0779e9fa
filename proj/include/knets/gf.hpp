#pragma once

/**
 * @file gf.hpp
 * @brief Exact arithmetic in prime fields GF(p).
 *
 * Field configurations are interned: `Field::of(p)` always returns a handle
 * to the same immutable FieldConfig, so a Scalar can carry a plain pointer to
 * its field for the lifetime of the process. Mixing scalars of different
 * fields throws `FieldMismatch`.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knets {

using i64 = std::int64_t;

struct FieldMismatch : std::logic_error {
  FieldMismatch() : std::logic_error("scalars belong to different fields") {}
};

namespace detail {

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline i64 pow_mod(i64 base, i64 e, i64 p) {
  i64 r = 1 % p;
  base = mod(base, p);
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Immutable description of GF(p): modulus, a cached primitive root and the
/// prime factors of p - 1.
struct FieldConfig {
  i64 p;
  i64 generator;
  std::vector<i64> order_factors;
};

class Field;

class Scalar {
 public:
  /// Unbound zero. Any arithmetic with a bound scalar throws FieldMismatch.
  Scalar() = default;

  [[nodiscard]] i64 value() const { return v_; }
  [[nodiscard]] const FieldConfig* config() const { return f_; }
  [[nodiscard]] i64 p() const { return f_ ? f_->p : 0; }
  [[nodiscard]] bool is_zero() const { return v_ == 0; }
  [[nodiscard]] Field field() const;

  Scalar operator+(Scalar o) const { return {f_, add(o)}; }
  Scalar operator-(Scalar o) const {
    check(o);
    return {f_, v_ >= o.v_ ? v_ - o.v_ : v_ - o.v_ + f_->p};
  }
  Scalar operator-() const { return {f_, v_ == 0 ? 0 : f_->p - v_}; }
  Scalar operator*(Scalar o) const {
    check(o);
    return {f_, v_ * o.v_ % f_->p};
  }
  Scalar operator/(Scalar o) const { return *this * o.inv(); }
  Scalar& operator+=(Scalar o) { return *this = *this + o; }
  Scalar& operator-=(Scalar o) { return *this = *this - o; }
  Scalar& operator*=(Scalar o) { return *this = *this * o; }
  Scalar& operator/=(Scalar o) { return *this = *this / o; }

  /// Integer shortcuts: s * 3, s + 1, ...
  Scalar operator+(i64 k) const { return *this + lift(k); }
  Scalar operator-(i64 k) const { return *this - lift(k); }
  Scalar operator*(i64 k) const { return *this * lift(k); }
  friend Scalar operator*(i64 k, Scalar s) { return s * k; }
  friend Scalar operator+(i64 k, Scalar s) { return s + k; }
  friend Scalar operator-(i64 k, Scalar s) { return s.lift(k) - s; }

  [[nodiscard]] Scalar inv() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    return {f_, detail::pow_mod(v_, f_->p - 2, f_->p)};
  }
  [[nodiscard]] Scalar pow(i64 e) const {
    if (e < 0) return inv().pow(-e);
    return {f_, detail::pow_mod(v_, e, f_->p)};
  }

  /// Multiplicative order; 0 for the zero element.
  [[nodiscard]] i64 order() const {
    if (v_ == 0) return 0;
    i64 n = f_->p - 1;
    for (i64 q : f_->order_factors)
      while (n % q == 0 && detail::pow_mod(v_, n / q, f_->p) == 1) n /= q;
    return n;
  }

  [[nodiscard]] bool is_square() const {
    return v_ == 0 || detail::pow_mod(v_, (f_->p - 1) / 2, f_->p) == 1;
  }

  bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator==(i64 k) const { return v_ == detail::mod(k, p()); }
  std::strong_ordering operator<=>(const Scalar& o) const {
    if (f_ != o.f_) throw FieldMismatch{};
    return v_ <=> o.v_;
  }

  /// Signed representative in (-p/2, p/2], handy for printing -1 as "-1".
  [[nodiscard]] i64 signed_value() const { return 2 * v_ > p() ? v_ - p() : v_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.v_; }

 private:
  friend class Field;
  Scalar(const FieldConfig* f, i64 v) : f_(f), v_(v) {}

  void check(const Scalar& o) const {
    if (f_ != o.f_ || f_ == nullptr) throw FieldMismatch{};
  }
  i64 add(const Scalar& o) const {
    check(o);
    i64 s = v_ + o.v_;
    return s >= f_->p ? s - f_->p : s;
  }
  [[nodiscard]] Scalar lift(i64 k) const {
    if (!f_) throw FieldMismatch{};
    return {f_, detail::mod(k, f_->p)};
  }

  const FieldConfig* f_ = nullptr;
  i64 v_ = 0;
};

/// Lightweight handle to an interned FieldConfig.
class Field {
 public:
  /// GF(p) for a prime p >= 5 (characteristic 2 and 3 are excluded).
  static Field of(i64 p) {
    if (p < 5 || p > (i64{1} << 31) || !detail::is_prime(p))
      throw std::invalid_argument("GF(p) needs a prime 5 <= p < 2^31, got " + std::to_string(p));
    static std::mutex mu;
    static std::map<i64, std::unique_ptr<const FieldConfig>> registry;
    std::lock_guard lock(mu);
    auto& slot = registry[p];
    if (!slot) {
      auto factors = detail::prime_factors(p - 1);
      i64 g = 2;
      for (;; ++g) {
        bool primitive = true;
        for (i64 q : factors)
          if (detail::pow_mod(g, (p - 1) / q, p) == 1) {
            primitive = false;
            break;
          }
        if (primitive) break;
      }
      slot = std::make_unique<const FieldConfig>(FieldConfig{p, g, std::move(factors)});
    }
    return Field(slot.get());
  }

  explicit Field(const FieldConfig* cfg) : cfg_(cfg) {}

  [[nodiscard]] i64 p() const { return cfg_->p; }
  [[nodiscard]] const FieldConfig* config() const { return cfg_; }
  [[nodiscard]] Scalar operator()(i64 v) const { return {cfg_, detail::mod(v, cfg_->p)}; }
  [[nodiscard]] Scalar zero() const { return (*this)(0); }
  [[nodiscard]] Scalar one() const { return (*this)(1); }
  [[nodiscard]] Scalar generator() const { return (*this)(cfg_->generator); }

  /// Every element in increasing residue order.
  [[nodiscard]] std::vector<Scalar> elements() const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(p()));
    for (i64 v = 0; v < p(); ++v) out.push_back((*this)(v));
    return out;
  }

  bool operator==(const Field& o) const { return cfg_ == o.cfg_; }

 private:
  const FieldConfig* cfg_;
};

inline Field Scalar::field() const {
  if (!f_) throw FieldMismatch{};
  return Field(f_);
}

/// Both square roots of `a`, smaller residue first; nullopt for non-residues.
/// Tonelli-Shanks.
inline std::optional<std::pair<Scalar, Scalar>> sqrt(Scalar a) {
  const i64 p = a.p();
  Field F = a.field();
  if (a.is_zero()) return std::pair{a, a};
  if (!a.is_square()) return std::nullopt;

  i64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Scalar z = F(2);
  while (z.is_square()) z = z + 1;

  Scalar c = z.pow(q);
  Scalar r = a.pow((q + 1) / 2);
  Scalar t = a.pow(q);
  i64 m = s;
  while (!(t == 1)) {
    i64 i = 0;
    Scalar t2 = t;
    while (!(t2 == 1)) {
      t2 = t2 * t2;
      ++i;
    }
    Scalar b = c;
    for (i64 k = 0; k < m - i - 1; ++k) b = b * b;
    r = r * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  Scalar r2 = -r;
  if (r2 < r) std::swap(r, r2);
  return std::pair{r, r2};
}

/// The smallest residue of multiplicative order exactly n.
inline Scalar nth_root_of_unity(Field F, i64 n) {
  const i64 p = F.p();
  if (n <= 0 || (p - 1) % n != 0)
    throw std::invalid_argument("no primitive " + std::to_string(n) + "-th root of unity in GF(" +
                                std::to_string(p) + "): n does not divide p - 1");
  Scalar base = F.generator().pow((p - 1) / n);
  Scalar best = base;
  Scalar cur = F.one();
  for (i64 k = 1; k <= n; ++k) {
    cur = cur * base;
    if (std::gcd(k, n) == 1 && cur < best) best = cur;
  }
  return best;
}

/// Smallest prime p > n with p = 1 (mod n), and p = 1 (mod 3) when
/// `require_cubic` is set. Never returns 2 or 3.
inline i64 find_prime(i64 n, bool require_cubic, i64 max_steps = 10'000'000) {
  if (n < 3) throw std::invalid_argument("find_prime needs n >= 3");
  i64 p = n + 1;
  for (i64 step = 0; step < max_steps; ++step, ++p) {
    if (p < 5 || (p - 1) % n != 0) continue;
    if (require_cubic && (p - 1) % 3 != 0) continue;
    if (detail::is_prime(p)) return p;
  }
  throw std::runtime_error("find_prime: search exhausted for n = " + std::to_string(n));
}

}  // namespace knets
