#pragma once

/**
 * @file poly.hpp
 * @brief Univariate polynomials and homogeneous ternary forms over GF(p).
 */

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "plane.hpp"

namespace knets {

/// Dense univariate polynomial, coefficients from degree 0 upwards.
class UniPoly {
 public:
  explicit UniPoly(Field F) : F_(F) {}
  UniPoly(Field F, std::vector<Scalar> c) : F_(F), c_(std::move(c)) { trim(); }

  static UniPoly constant(Scalar s) { return {s.field(), {s}}; }
  /// a + b*t
  static UniPoly linear(Scalar a, Scalar b) { return {a.field(), {a, b}}; }

  [[nodiscard]] Field field() const { return F_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F_.zero(); }
  /// Coefficients padded with zeros to `n` entries.
  [[nodiscard]] std::vector<Scalar> coeffs(std::size_t n) const {
    std::vector<Scalar> out(n, F_.zero());
    for (std::size_t i = 0; i < c_.size() && i < n; ++i) out[i] = c_[i];
    return out;
  }

  [[nodiscard]] Scalar operator()(Scalar t) const {
    Scalar r = F_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<Scalar> r = coeffs(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return {F_, r};
  }
  UniPoly operator-(const UniPoly& o) const { return *this + o * F_(-1); }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(F_);
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, F_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return {F_, r};
  }
  UniPoly operator*(Scalar s) const {
    std::vector<Scalar> r = c_;
    for (auto& x : r) x *= s;
    return {F_, r};
  }
  UniPoly operator*(i64 k) const { return *this * F_(k); }

  [[nodiscard]] UniPoly derivative() const {
    std::vector<Scalar> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<i64>(i));
    return {F_, r};
  }

  /// Multiplicity of r as a root (0 if not a root); throws on the zero polynomial.
  [[nodiscard]] int root_multiplicity(Scalar r) const {
    if (is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
    int m = 0;
    std::vector<Scalar> q = c_;
    while (q.size() > 1) {
      // synthetic division by (t - r)
      std::vector<Scalar> quot(q.size() - 1, F_.zero());
      Scalar acc = F_.zero();
      for (std::size_t i = q.size(); i-- > 0;) {
        acc = acc * r + q[i];
        if (i > 0) quot[i - 1] = acc;
      }
      if (!acc.is_zero()) break;
      ++m;
      q = std::move(quot);
    }
    return m;
  }

  bool operator==(const UniPoly& o) const { return F_ == o.F_ && c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Field F_;
  std::vector<Scalar> c_;
};

using Exponent = std::array<int, 3>;

/// Homogeneous polynomial in X, Y, Z. Zero coefficients are never stored.
class HomPoly {
 public:
  HomPoly(Field F, int degree) : F_(F), d_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
  }

  static HomPoly monomial(Scalar c, Exponent e) {
    HomPoly r(c.field(), e[0] + e[1] + e[2]);
    r.add_term(e, c);
    return r;
  }
  static HomPoly linear(const Triple& coeffs) {
    HomPoly r(coeffs[0].field(), 1);
    r.add_term({1, 0, 0}, coeffs[0]);
    r.add_term({0, 1, 0}, coeffs[1]);
    r.add_term({0, 0, 1}, coeffs[2]);
    return r;
  }
  static HomPoly linear(const ProjLine& l) { return linear(l.coords()); }
  static HomPoly constant(Scalar c) { return monomial(c, {0, 0, 0}); }
  static HomPoly X(Field F) { return monomial(F.one(), {1, 0, 0}); }
  static HomPoly Y(Field F) { return monomial(F.one(), {0, 1, 0}); }
  static HomPoly Z(Field F) { return monomial(F.one(), {0, 0, 1}); }

  [[nodiscard]] Field field() const { return F_; }
  [[nodiscard]] int degree() const { return d_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Exponent, Scalar>& terms() const { return terms_; }
  [[nodiscard]] Scalar coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F_.zero() : it->second;
  }

  void add_term(Exponent e, Scalar c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != d_)
      throw std::invalid_argument("exponent does not match the degree of the form");
    Scalar& slot = terms_.try_emplace(e, F_.zero()).first->second;
    slot += c;
    if (slot.is_zero()) terms_.erase(e);
  }

  [[nodiscard]] Scalar operator()(const Triple& x) const {
    Scalar r = F_.zero();
    for (const auto& [e, c] : terms_) r += c * x[0].pow(e[0]) * x[1].pow(e[1]) * x[2].pow(e[2]);
    return r;
  }
  [[nodiscard]] Scalar operator()(const ProjPoint& P) const { return (*this)(P.coords()); }

  HomPoly operator+(const HomPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (o.d_ != d_) throw std::invalid_argument("adding forms of different degree");
    HomPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  HomPoly operator-(const HomPoly& o) const { return *this + o * F_(-1); }
  HomPoly operator*(const HomPoly& o) const {
    HomPoly r(F_, d_ + o.d_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
  }
  HomPoly operator*(Scalar s) const {
    HomPoly r(F_, d_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  HomPoly operator*(i64 k) const { return *this * F_(k); }
  [[nodiscard]] HomPoly pow(int k) const {
    HomPoly r = constant(F_.one());
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Formal partial derivative with respect to variable i (0 = X, 1 = Y, 2 = Z).
  [[nodiscard]] HomPoly partial(std::size_t i) const {
    HomPoly r(F_, d_ > 0 ? d_ - 1 : 0);
    for (const auto& [e0, c] : terms_) {
      Exponent e = e0;
      if (e[i] == 0) continue;
      Scalar k = c * static_cast<i64>(e[i]);
      --e[i];
      r.add_term(e, k);
    }
    return r;
  }

  [[nodiscard]] Triple gradient(const Triple& x) const { return {partial(0)(x), partial(1)(x), partial(2)(x)}; }
  [[nodiscard]] Triple gradient(const ProjPoint& P) const { return gradient(P.coords()); }

  /// F(M x): substitute the rows of M as linear forms.
  [[nodiscard]] HomPoly compose(const Matrix3& M) const {
    std::array<HomPoly, 3> lin{linear(M[0]), linear(M[1]), linear(M[2])};
    HomPoly r(F_, d_);
    for (const auto& [e, c] : terms_) r = r + lin[0].pow(e[0]) * lin[1].pow(e[1]) * lin[2].pow(e[2]) * c;
    return r;
  }

  /// Coefficients of F(P + t Q) in t, padded to degree + 1 entries. Read as a
  /// binary form they are the coefficients of s^(d-i) t^i in F(s P + t Q).
  [[nodiscard]] std::vector<Scalar> restrict_to(const Triple& P, const Triple& Q) const {
    std::array<UniPoly, 3> lin{UniPoly::linear(P[0], Q[0]), UniPoly::linear(P[1], Q[1]), UniPoly::linear(P[2], Q[2])};
    UniPoly r(F_);
    for (const auto& [e, c] : terms_) {
      UniPoly m = UniPoly::constant(c);
      for (std::size_t k = 0; k < 3; ++k)
        for (int j = 0; j < e[k]; ++j) m = m * lin[k];
      r = r + m;
    }
    return r.coeffs(static_cast<std::size_t>(d_) + 1);
  }

  /// True iff the form is a nonzero multiple of `o`.
  [[nodiscard]] bool proportional_to(const HomPoly& o) const {
    if (is_zero() || o.is_zero() || d_ != o.d_ || terms_.size() != o.terms_.size()) return false;
    const auto& [e0, c0] = *terms_.begin();
    Scalar ratio = o.coeff(e0) / c0;
    if (ratio.is_zero()) return false;
    return (*this * ratio) == o;
  }

  bool operator==(const HomPoly& o) const { return F_ == o.F_ && (terms_ == o.terms_) && (d_ == o.d_ || is_zero()); }

 private:
  Field F_;
  int d_;
  std::map<Exponent, Scalar> terms_;
};

}  // namespace knets
