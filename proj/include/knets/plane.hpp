#pragma once

/**
 * @file plane.hpp
 * @brief Points, lines, projectivities and cross-ratios in PG(2, GF(p)).
 *
 * Homogeneous triples are normalized so that the first nonzero coordinate is
 * 1, which makes equality and ordering coordinate-wise.
 *
 * Cross-ratio convention: for parameters t1..t4 on a line
 *
 *     k(t1, t2, t3, t4) = (t3 - t1)(t2 - t4) / ((t2 - t3)(t4 - t1)),
 *
 * so (0, inf, t, -t) is harmonic (-1) and (0, s, e*s, e^2*s) with
 * e^2 + e + 1 = 0 gives -e. Every downstream kappa uses this order.
 */

#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gf.hpp"

namespace knets {

using Triple = std::array<Scalar, 3>;

inline Scalar dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero(const Triple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

inline Triple scaled(const Triple& t, Scalar s) { return {t[0] * s, t[1] * s, t[2] * s}; }

inline Triple added(const Triple& a, const Triple& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

template <class Tag>
class Homogeneous {
 public:
  explicit Homogeneous(const Triple& c) : c_(c) {
    int lead = 0;
    while (lead < 3 && c_[lead].is_zero()) ++lead;
    if (lead == 3) throw std::invalid_argument("homogeneous triple (0,0,0) is not a projective element");
    Scalar s = c_[lead].inv();
    for (auto& x : c_) x = x * s;
  }

  Homogeneous(Field F, i64 x, i64 y, i64 z) : Homogeneous(Triple{F(x), F(y), F(z)}) {}

  [[nodiscard]] const Triple& coords() const { return c_; }
  Scalar operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] Field field() const { return c_[0].field(); }

  bool operator==(const Homogeneous& o) const { return c_ == o.c_; }
  auto operator<=>(const Homogeneous& o) const {
    for (std::size_t i = 0; i < 3; ++i)
      if (auto c = c_[i].value() <=> o.c_[i].value(); c != 0) return c;
    return std::strong_ordering::equal;
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << '(' << c_[0] << ',' << c_[1] << ',' << c_[2] << ')';
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Homogeneous& h) { return os << h.str(); }

 private:
  Triple c_;
};

struct PointTag {};
struct LineTag {};
using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

inline bool incident(const ProjPoint& P, const ProjLine& l) { return dot(P.coords(), l.coords()).is_zero(); }

inline ProjLine join(const ProjPoint& P, const ProjPoint& Q) {
  if (P == Q) throw std::invalid_argument("join: points coincide " + P.str());
  return ProjLine(cross(P.coords(), Q.coords()));
}

inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw std::invalid_argument("meet: lines coincide " + l.str());
  return ProjPoint(cross(l.coords(), m.coords()));
}

inline bool collinear(const ProjPoint& P, const ProjPoint& Q, const ProjPoint& R) {
  return dot(cross(P.coords(), Q.coords()), R.coords()).is_zero();
}

/// All p^2 + p + 1 points of PG(2, p) in increasing normalized order.
inline std::vector<ProjPoint> all_points(Field F) {
  std::vector<ProjPoint> out;
  const i64 p = F.p();
  out.reserve(static_cast<std::size_t>(p * p + p + 1));
  out.emplace_back(F, 0, 0, 1);
  for (i64 z = 0; z < p; ++z) out.emplace_back(F, 0, 1, z);
  for (i64 y = 0; y < p; ++y)
    for (i64 z = 0; z < p; ++z) out.emplace_back(F, 1, y, z);
  return out;
}

/// All lines of PG(2, p); same enumeration as points, read as coefficients.
inline std::vector<ProjLine> all_lines(Field F) {
  std::vector<ProjLine> out;
  for (const auto& P : all_points(F)) out.emplace_back(P.coords());
  return out;
}

/// Points of a line: p + 1 of them, in a deterministic order.
inline std::vector<ProjPoint> points_on(const ProjLine& l) {
  Field F = l.field();
  std::vector<Triple> basis;
  for (const Triple& e : {Triple{F(1), F(0), F(0)}, Triple{F(0), F(1), F(0)}, Triple{F(0), F(0), F(1)}}) {
    Triple c = cross(l.coords(), e);
    if (!is_zero(c)) basis.push_back(c);
  }
  // two independent points of l
  Triple a = basis[0];
  Triple b = basis[1];
  if (is_zero(cross(a, b)) && basis.size() > 2) b = basis[2];
  std::vector<ProjPoint> out;
  out.emplace_back(b);
  for (const auto& t : F.elements()) out.emplace_back(added(a, scaled(b, t)));
  return out;
}

// ---------------------------------------------------------------------------
// Values on the projective line GF(p) u {inf}

class PValue {
 public:
  PValue(Scalar num, Scalar den) : n_(num), d_(den) {
    if (n_.is_zero() && d_.is_zero()) throw std::domain_error("indeterminate projective value 0/0");
    if (!d_.is_zero()) {
      n_ = n_ / d_;
      d_ = d_.field().one();
    } else {
      n_ = n_.field().one();
    }
  }
  explicit PValue(Scalar v) : PValue(v, v.field().one()) {}
  static PValue infinity(Field F) { return {F.one(), F.zero()}; }

  [[nodiscard]] Scalar num() const { return n_; }
  [[nodiscard]] Scalar den() const { return d_; }
  [[nodiscard]] bool is_infinite() const { return d_.is_zero(); }
  [[nodiscard]] Field field() const { return n_.field(); }
  /// The finite value; throws for infinity.
  [[nodiscard]] Scalar value() const {
    if (is_infinite()) throw std::domain_error("projective value is infinite");
    return n_;
  }

  bool operator==(const PValue& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator==(i64 k) const { return !is_infinite() && n_ == k; }
  auto operator<=>(const PValue& o) const {
    if (auto c = d_.value() <=> o.d_.value(); c != 0) return c;
    return n_.value() <=> o.n_.value();
  }

  /// "num/den" with the normalized residues, e.g. "12/1" or "1/0".
  [[nodiscard]] std::string str() const {
    return std::to_string(n_.value()) + "/" + std::to_string(d_.value());
  }
  /// Signed representative for finite values ("-1"), "inf" otherwise.
  [[nodiscard]] std::string signed_str() const {
    return is_infinite() ? std::string("inf") : std::to_string(n_.signed_value());
  }
  friend std::ostream& operator<<(std::ostream& os, const PValue& v) { return os << v.str(); }

 private:
  Scalar n_, d_;
};

namespace detail {

/// Homogeneous parameter (a : b) of X on the line through base points B1, B2,
/// i.e. X ~ b*B1 + a*B2, so the affine parameter is a/b and B2 sits at inf.
inline std::pair<Scalar, Scalar> line_parameter(const Triple& B1, const Triple& B2, const Triple& X) {
  Triple w = cross(B1, B2);
  std::size_t i = 0;
  while (w[i].is_zero()) ++i;
  Scalar s = cross(X, B2)[i] / w[i];
  Scalar t = -(cross(X, B1)[i] / w[i]);
  return {t, s};
}

inline Scalar bracket(const std::pair<Scalar, Scalar>& x, const std::pair<Scalar, Scalar>& y) {
  return x.first * y.second - y.first * x.second;
}

}  // namespace detail

/// Cross-ratio of parameters given as homogeneous pairs (a : b) ~ a/b.
inline PValue cross_ratio_params(const std::array<std::pair<Scalar, Scalar>, 4>& t) {
  using detail::bracket;
  return PValue(bracket(t[2], t[0]) * bracket(t[1], t[3]), bracket(t[1], t[2]) * bracket(t[3], t[0]));
}

/// Cross-ratio of four collinear points, with at least three distinct.
/// Exactly two coincident points give the degenerate value 0, 1 or inf.
inline PValue cross_ratio(const ProjPoint& A, const ProjPoint& B, const ProjPoint& C, const ProjPoint& D) {
  const std::array<const ProjPoint*, 4> pts{&A, &B, &C, &D};
  const ProjPoint* b1 = pts[0];
  const ProjPoint* b2 = nullptr;
  for (auto* q : pts)
    if (!(*q == *b1)) {
      b2 = q;
      break;
    }
  if (!b2) throw std::invalid_argument("cross_ratio: all four points coincide");
  ProjLine l = join(*b1, *b2);
  for (auto* q : pts)
    if (!incident(*q, l)) throw std::invalid_argument("cross_ratio: points are not collinear");
  std::array<std::pair<Scalar, Scalar>, 4> t;
  for (std::size_t i = 0; i < 4; ++i) t[i] = detail::line_parameter(b1->coords(), b2->coords(), pts[i]->coords());
  try {
    return cross_ratio_params(t);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("cross_ratio: fewer than three distinct points");
  }
}

/// Cross-ratio of four concurrent lines in the pencil convention: for linear
/// forms l3 = a*l1 + b*l2 and l4 = a'*l1 + b'*l2 the value is a*b'/(a'*b).
/// This is the reciprocal of the point cross-ratio of any section of the
/// pencil by a line missing its vertex.
inline PValue cross_ratio_lines(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3, const ProjLine& l4) {
  const std::array<const ProjLine*, 4> ls{&l1, &l2, &l3, &l4};
  const ProjLine* other = nullptr;
  for (auto* m : ls)
    if (!(*m == l1)) {
      other = m;
      break;
    }
  if (!other) throw std::invalid_argument("cross_ratio_lines: all four lines coincide");
  ProjPoint vertex = meet(l1, *other);
  for (auto* m : ls)
    if (!incident(vertex, *m)) throw std::invalid_argument("cross_ratio_lines: lines are not concurrent");
  Field F = l1.field();
  for (const ProjLine& aux : {ProjLine(F, 1, 0, 0), ProjLine(F, 0, 1, 0), ProjLine(F, 0, 0, 1), ProjLine(F, 1, 1, 1)}) {
    if (incident(vertex, aux)) continue;
    PValue k = cross_ratio(meet(l1, aux), meet(l2, aux), meet(l3, aux), meet(l4, aux));
    return {k.den(), k.num()};
  }
  throw std::logic_error("cross_ratio_lines: no auxiliary line found");  // unreachable
}

/// Same as cross_ratio_lines but sectioned by a caller-chosen line.
inline PValue cross_ratio_lines_via(const ProjLine& aux, const ProjLine& l1, const ProjLine& l2, const ProjLine& l3,
                                    const ProjLine& l4) {
  PValue k = cross_ratio(meet(l1, aux), meet(l2, aux), meet(l3, aux), meet(l4, aux));
  return {k.den(), k.num()};
}

/// {k, 1/k, 1-k, 1/(1-k), k/(k-1), 1-1/k}, deduplicated.
inline std::set<PValue> anharmonic_orbit(const PValue& k) {
  Scalar n = k.num(), d = k.den();
  return {PValue(n, d),     PValue(d, n),     PValue(d - n, d),
          PValue(d, d - n), PValue(n, n - d), PValue(n - d, n)};
}

/// u(k) = (k^2-k+1)^3 / ((k+1)^2 (k-2)^2 (2k-1)^2), evaluated projectively.
inline PValue u_invariant(const PValue& k) {
  Scalar n = k.num(), d = k.den();
  Scalar q = n * n - n * d + d * d;
  Scalar r = (n + d) * (n - d * 2) * (n * 2 - d);
  return {q * q * q, r * r};
}

/// The same invariant from the coefficients a0 + a1 t + ... + a4 t^4 of a
/// quartic whose roots are the four parameters.
inline PValue u_from_quartic(const std::array<Scalar, 5>& a) {
  Scalar I = a[0] * a[4] * 12 - a[1] * a[3] * 3 + a[2] * a[2];
  Scalar J = a[0] * a[2] * a[4] * 72 - a[0] * a[3] * a[3] * 27 - a[1] * a[1] * a[4] * 27 -
             a[2] * a[2] * a[2] * 2 + a[1] * a[2] * a[3] * 9;
  return {I * I * I, J * J};
}

// ---------------------------------------------------------------------------
// Projectivities

using Matrix3 = std::array<Triple, 3>;

inline Scalar det(const Matrix3& m) { return dot(m[0], cross(m[1], m[2])); }

class Projectivity {
 public:
  explicit Projectivity(Matrix3 m) : m_(m) {
    if (det(m_).is_zero()) throw std::invalid_argument("projectivity matrix is singular");
    std::optional<Scalar> lead;
    for (auto& row : m_)
      for (auto& x : row)
        if (!lead && !x.is_zero()) lead = x.inv();
    for (auto& row : m_)
      for (auto& x : row) x = x * *lead;
  }

  static Projectivity identity(Field F) {
    return Projectivity(Matrix3{Triple{F(1), F(0), F(0)}, Triple{F(0), F(1), F(0)}, Triple{F(0), F(0), F(1)}});
  }

  [[nodiscard]] const Matrix3& matrix() const { return m_; }

  [[nodiscard]] Triple apply(const Triple& x) const { return {dot(m_[0], x), dot(m_[1], x), dot(m_[2], x)}; }
  ProjPoint operator()(const ProjPoint& P) const { return ProjPoint(apply(P.coords())); }
  /// Image of a line: coefficients transform by the inverse transpose.
  ProjLine operator()(const ProjLine& l) const {
    const Matrix3& a = inverse().m_;
    const Triple& c = l.coords();
    return ProjLine(Triple{a[0][0] * c[0] + a[1][0] * c[1] + a[2][0] * c[2],
                           a[0][1] * c[0] + a[1][1] * c[1] + a[2][1] * c[2],
                           a[0][2] * c[0] + a[1][2] * c[1] + a[2][2] * c[2]});
  }

  /// (this * o)(x) = this(o(x))
  Projectivity operator*(const Projectivity& o) const {
    Matrix3 r = m_;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r[i][j] = m_[i][0] * o.m_[0][j] + m_[i][1] * o.m_[1][j] + m_[i][2] * o.m_[2][j];
    return Projectivity(r);
  }

  [[nodiscard]] Projectivity inverse() const {
    // adjugate; rows of the inverse are cross products of columns
    Triple c0{m_[0][0], m_[1][0], m_[2][0]}, c1{m_[0][1], m_[1][1], m_[2][1]}, c2{m_[0][2], m_[1][2], m_[2][2]};
    return Projectivity(Matrix3{cross(c1, c2), cross(c2, c0), cross(c0, c1)});
  }

  bool operator==(const Projectivity& o) const { return m_ == o.m_; }

 private:
  Matrix3 m_;
};

/// The homology with center T and axis `axis` for which every P off the axis
/// satisfies cross_ratio(T, A, P, P') = kappa, where P' is the image of P and
/// A = TP meet axis. With a net of constant cross-ratio kappa whose first
/// component lies on the axis this is the map taking the second component to
/// the third. In the frame T = (0,0,1), axis Z = 0 it is (x,y) -> (x,y)/kappa.
inline Projectivity perspectivity(const ProjPoint& T, const ProjLine& axis, Scalar kappa) {
  if (incident(T, axis)) throw std::invalid_argument("perspectivity: center lies on the axis");
  if (kappa.is_zero() || kappa == 1) throw std::invalid_argument("perspectivity: kappa must avoid 0 and 1");
  const Triple& t = T.coords();
  const Triple& l = axis.coords();
  Scalar f = (kappa - 1) / dot(l, t);
  Field F = kappa.field();
  Matrix3 m{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = (i == j ? F.one() : F.zero()) + f * t[i] * l[j];
  return Projectivity(m);
}

}  // namespace knets
