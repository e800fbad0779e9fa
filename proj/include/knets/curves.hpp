#pragma once

/**
 * @file curves.hpp
 * @brief Plane curves given by homogeneous forms: tangents, Hessian,
 * singular points, Legendre cubics and their j-invariant, the tangent
 * cross-ratio in a pencil of curves, and the polynomial identities behind the
 * "constant cross-ratio forces j = 0" argument.
 */

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace knets {

inline Scalar eval(const HomPoly& F, const ProjPoint& P) { return F(P); }
inline Triple gradient(const HomPoly& F, const ProjPoint& P) { return F.gradient(P); }

inline ProjLine tangent_line(const HomPoly& F, const ProjPoint& P) {
  if (!F(P).is_zero()) throw std::domain_error("tangent_line: point not on curve " + P.str());
  Triple g = F.gradient(P);
  if (is_zero(g)) throw std::domain_error("tangent_line: singular point " + P.str());
  return ProjLine(g);
}

/// det of the matrix of second partials; degree 3(d - 2).
inline HomPoly hessian(const HomPoly& F) {
  if (F.degree() < 2) throw std::invalid_argument("hessian needs degree >= 2");
  std::array<std::array<HomPoly, 3>, 3> h{{{F.partial(0).partial(0), F.partial(0).partial(1), F.partial(0).partial(2)},
                                           {F.partial(1).partial(0), F.partial(1).partial(1), F.partial(1).partial(2)},
                                           {F.partial(2).partial(0), F.partial(2).partial(1), F.partial(2).partial(2)}}};
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

/// Matrix of second partials evaluated at P.
inline Matrix hessian_matrix(const HomPoly& F, const ProjPoint& P) {
  Matrix m(3, Row(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = F.partial(i).partial(j)(P);
  return m;
}

/// Every point of PG(2, p) where F and its gradient vanish.
inline std::vector<ProjPoint> singular_points(const HomPoly& F) {
  std::array<HomPoly, 3> d{F.partial(0), F.partial(1), F.partial(2)};
  std::vector<ProjPoint> out;
  for (const auto& P : all_points(F.field()))
    if (F(P).is_zero() && d[0](P).is_zero() && d[1](P).is_zero() && d[2](P).is_zero()) out.push_back(P);
  return out;
}

inline std::vector<ProjPoint> common_points(const HomPoly& F, const HomPoly& G) {
  std::vector<ProjPoint> out;
  for (const auto& P : all_points(F.field()))
    if (F(P).is_zero() && G(P).is_zero()) out.push_back(P);
  return out;
}

/// Rational points of the curve F = 0.
inline std::vector<ProjPoint> curve_points(const HomPoly& F) {
  std::vector<ProjPoint> out;
  for (const auto& P : all_points(F.field()))
    if (F(P).is_zero()) out.push_back(P);
  return out;
}

/// True iff the line l is a component of F = 0.
inline bool contains_line(const HomPoly& F, const ProjLine& l) {
  auto pts = points_on(l);
  auto c = F.restrict_to(pts[0].coords(), pts[1].coords());
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// Rational lines contained in F = 0.
inline std::vector<ProjLine> lines_on(const HomPoly& F) {
  std::vector<ProjLine> out;
  for (const auto& l : all_lines(F.field()))
    if (contains_line(F, l)) out.push_back(l);
  return out;
}

/// Intersection multiplicity of F with the line through P and Q at P, from the
/// restricted univariate polynomial.
inline int intersection_multiplicity(const HomPoly& F, const ProjPoint& P, const ProjPoint& Q) {
  auto c = F.restrict_to(P.coords(), Q.coords());
  UniPoly r(F.field(), c);
  if (r.is_zero()) return F.degree() + 1;  // line is a component
  return r.root_multiplicity(F.field().zero());
}

// ---------------------------------------------------------------------------
// Cubics

/// Homogenized Legendre cubic Y^2 Z - X (X - Z)(X - c Z).
inline HomPoly legendre_cubic(Scalar c) {
  Field F = c.field();
  HomPoly X = HomPoly::X(F), Y = HomPoly::Y(F), Z = HomPoly::Z(F);
  return Y * Y * Z - X * (X - Z) * (X - Z * c);
}

/// Fermat cubic X^3 + Y^3 - Z^3.
inline HomPoly fermat_cubic(Field F) {
  HomPoly X = HomPoly::X(F), Y = HomPoly::Y(F), Z = HomPoly::Z(F);
  return X.pow(3) + Y.pow(3) - Z.pow(3);
}

/// j = 2^8 (c^2 - c + 1)^3 / (c^2 (c - 1)^2); infinite exactly when c(c-1) = 0.
inline PValue j_invariant(Scalar c) {
  Scalar q = c * c - c + 1;
  Scalar d = c * (c - 1);
  return {q * q * q * 256, d * d};
}

/// j from the u-invariant of four cross-ratio parameters: j = 6912 u / (4u - 1).
inline PValue j_from_u(const PValue& u) { return {u.num() * 6912, u.num() * 4 - u.den()}; }

/**
 * j-invariant of a nonsingular plane cubic, computed from the four tangents
 * that can be drawn from a rational point Q of the curve.
 *
 * Lines through Q are parametrized by D(t) = A + tB on an auxiliary line. The
 * residual quadratic of F(l Q + m D) / m is g1 l^2 + g2 l m + g3 m^2 with
 * g1 = grad F(Q).D, g2 = grad F(D).Q, g3 = F(D); its discriminant is a quartic
 * in t whose roots are the tangent directions. Their u-invariant gives j.
 */
inline PValue j_invariant_of_cubic(const HomPoly& F, const ProjPoint& Q) {
  if (F.degree() != 3) throw std::invalid_argument("j_invariant_of_cubic needs a cubic");
  if (!F(Q).is_zero()) throw std::domain_error("j_invariant_of_cubic: base point not on curve");
  Field K = F.field();
  std::optional<ProjLine> aux;
  for (const ProjLine& l : {ProjLine(K, 1, 0, 0), ProjLine(K, 0, 1, 0), ProjLine(K, 0, 0, 1), ProjLine(K, 1, 1, 1)})
    if (!incident(Q, l)) {
      aux = l;
      break;
    }
  auto pts = points_on(*aux);
  const Triple& A = pts[0].coords();
  const Triple& B = pts[1].coords();

  Triple gq = F.gradient(Q);
  UniPoly g1 = UniPoly::linear(dot(gq, A), dot(gq, B));
  UniPoly g2(K);
  for (std::size_t i = 0; i < 3; ++i) g2 = g2 + UniPoly(K, F.partial(i).restrict_to(A, B)) * Q[i];
  UniPoly g3(K, F.restrict_to(A, B));
  UniPoly disc = g2 * g2 - g1 * g3 * 4;
  auto c = disc.coeffs(5);
  return j_from_u(u_from_quartic({c[0], c[1], c[2], c[3], c[4]}));
}

enum class Singularity { nonsingular, node, cusp, other };

inline const char* to_string(Singularity s) {
  switch (s) {
    case Singularity::nonsingular: return "nonsingular";
    case Singularity::node: return "node";
    case Singularity::cusp: return "cusp";
    case Singularity::other: return "other";
  }
  return "?";
}

/// Rational singularities only; a node or cusp of a cubic over GF(p) is
/// always rational since it is unique.
inline Singularity cubic_singularity(const HomPoly& F) {
  auto sing = singular_points(F);
  if (sing.empty()) return Singularity::nonsingular;
  if (sing.size() > 1) return Singularity::other;
  switch (rank(hessian_matrix(F, sing.front()))) {
    case 2: return Singularity::node;
    case 1: return Singularity::cusp;
    default: return Singularity::other;
  }
}

struct Corners {
  std::array<ProjPoint, 3> points;
  /// (1 - 2c)/3, the square whose roots give the two horizontal lines.
  Scalar radicand;
};

/**
 * Corners of the Legendre cubic with c^2 - c + 1 = 0: the pairwise
 * intersections of the three lines of its Hessian,
 *
 *     (X - (c+1)/3 Z) (Y^2 - (1-2c)/3 Z^2) = 0,
 *
 * namely ((c+1)/3, +-sqrt((1-2c)/3)) and (1, 0, 0).
 */
inline Corners corners_legendre(Scalar c) {
  if (!(c * c - c + 1).is_zero()) throw std::invalid_argument("corners_legendre: c^2 - c + 1 != 0");
  Field F = c.field();
  Scalar third = F(3).inv();
  Scalar a = (c + 1) * third;
  Scalar rad = (1 - c * 2) * third;
  auto r = sqrt(rad);
  if (!r) throw std::domain_error("corners_legendre: (1-2c)/3 is not a square in GF(" + std::to_string(F.p()) + ")");
  std::array<ProjPoint, 3> pts{ProjPoint(Triple{a, r->first, F.one()}), ProjPoint(Triple{a, r->second, F.one()}),
                               ProjPoint(F, 1, 0, 0)};
  std::sort(pts.begin(), pts.end());
  return {pts, rad};
}

// ---------------------------------------------------------------------------
// Tangent cross-ratio in a pencil

struct PencilReport {
  std::vector<ProjPoint> points;
  std::vector<PValue> values;
  PValue expected;
  bool pass;
};

/// For every common point of F and G, the four tangents to F, G, aF + bG and
/// a'F + b'G have cross-ratio a b' / (a' b).
inline PencilReport pencil_crossratio_check(const HomPoly& F, const HomPoly& G, Scalar alpha, Scalar beta,
                                            Scalar alpha2, Scalar beta2) {
  if (F.degree() != G.degree()) throw std::invalid_argument("pencil: F and G differ in degree");
  if (alpha.is_zero() || beta.is_zero() || alpha2.is_zero() || beta2.is_zero())
    throw std::invalid_argument("pencil: scalars must be nonzero");
  if ((alpha * beta2 - alpha2 * beta).is_zero())
    throw std::invalid_argument("pencil: (alpha, beta) and (alpha', beta') define the same curve");
  const int n = F.degree();
  auto base = common_points(F, G);
  if (static_cast<int>(base.size()) != n * n)
    throw std::invalid_argument("pencil: curves meet in " + std::to_string(base.size()) + " points, expected " +
                                std::to_string(n * n));
  HomPoly H = F * alpha + G * beta;
  HomPoly H2 = F * alpha2 + G * beta2;
  PencilReport rep{base, {}, PValue(alpha * beta2, alpha2 * beta), true};
  for (const auto& P : base) {
    PValue k = cross_ratio_lines(tangent_line(F, P), tangent_line(G, P), tangent_line(H, P), tangent_line(H2, P));
    rep.pass = rep.pass && k == rep.expected;
    rep.values.push_back(k);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Identities for a point T = (a, b) and the Legendre cubic with parameter c

struct J0Identities {
  std::array<Scalar, 5> alpha;  // quartic coefficients at the given slope m
  std::array<Scalar, 4> beta;
  std::array<Scalar, 4> gamma;
  Scalar lhs1, rhs1;  // 3 f'g - 2 f g'  vs  54 (b^2 - a(a-1)(a-c))^2 sum beta_i m^i
  Scalar lhs2, rhs2;  // sum beta_i gamma_i  vs  18 c^2 (c-1)^2 (c^2-c+1)
  bool identity1;
  bool identity2;
  bool betas_vanish;
};

/**
 * Lines through T = (a, b) with slope m meet the Legendre cubic in the roots
 * of h(t) = (a+t)(a+t-1)(a+t-c) - (b+mt)^2. The quartic t*h(t) has
 * coefficients alpha_0..alpha_4 (alpha_0 = 0), and u = f^3 / g^2 with
 *
 *     f = 12 a0 a4 - 3 a1 a3 + a2^2,
 *     g = 2 a2^3 - 9 a1 a2 a3 + 27 a1^2 a4 + 27 a0 a3^2 - 72 a0 a2 a4.
 *
 * g is the negated denominator core of u_from_quartic; it only enters u
 * squared, and with this sign the identity 3 f'g - 2 f g' = 54 (...)^2 (...)
 * holds as stated. Both sides of each identity are evaluated independently.
 */
inline J0Identities cubic_j0_identities(Scalar a, Scalar b, Scalar c, Scalar m) {
  Field F = a.field();
  Scalar onT = a * (a - 1) * (a - c);  // a(a-1)(a-c)
  UniPoly A0 = UniPoly::constant(F.zero());
  UniPoly A1 = UniPoly::constant(a * a * a - a * a * c - a * a + a * c - b * b);
  UniPoly A2 = UniPoly::linear(a * a * 3 - a * 2 - a * c * 2 + c, b * -2);
  UniPoly A3 = UniPoly(F, {a * 3 - 1 - c, F.zero(), F(-1)});
  UniPoly A4 = UniPoly::constant(F.one());

  UniPoly f = A0 * A4 * 12 - A1 * A3 * 3 + A2 * A2;
  UniPoly g = A2 * A2 * A2 * 2 - A1 * A2 * A3 * 9 + A1 * A1 * A4 * 27 + A0 * A3 * A3 * 27 - A0 * A2 * A4 * 72;

  J0Identities r{};
  r.alpha = {A0(m), A1(m), A2(m), A3(m), A4(m)};
  Scalar q = c * c - c + 1;
  r.beta = {b * 2 * q, a * c * 2 - a * c * c * 2 - a * 2 + b * b * 3 + c * c + c, b * -2 * (a * 3 - 1 - c),
            a * a * 3 - a * c * 2 + c - a * 2};
  r.gamma = {b * -3 * (c - 2) * (c * 2 - 1) * (c + 1),
             q * -2 * (a * 6 - 4 + c * 3 + a * c * c * 6 + c * c * 3 - c * c * c * 4 - a * c * 6), b * -6 * q * q,
             q * q * q * -8};

  r.lhs1 = (f.derivative() * g * 3 - f * g.derivative() * 2)(m);
  Scalar off = b * b - onT;
  Scalar bpoly = r.beta[0] + r.beta[1] * m + r.beta[2] * m * m + r.beta[3] * m * m * m;
  r.rhs1 = off * off * 54 * bpoly;
  r.lhs2 = r.beta[0] * r.gamma[0] + r.beta[1] * r.gamma[1] + r.beta[2] * r.gamma[2] + r.beta[3] * r.gamma[3];
  r.rhs2 = c * c * (c - 1) * (c - 1) * q * 18;
  r.identity1 = r.lhs1 == r.rhs1;
  r.identity2 = r.lhs2 == r.rhs2;
  r.betas_vanish = std::all_of(r.beta.begin(), r.beta.end(), [](const Scalar& s) { return s.is_zero(); });
  return r;
}

}  // namespace knets
