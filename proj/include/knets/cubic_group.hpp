#pragma once

/**
 * @file cubic_group.hpp
 * @brief Chord-tangent group on the Fermat cubic X^3 + Y^3 = Z^3 over GF(p),
 * p = 1 (mod 3), with neutral element the inflection point O = (1, -1, 0),
 * the order-3 automorphism u(x, y, z) = (e x, e y, z) and the coset
 * construction of dual 3-nets H + P, H + u(P), H + u^2(P).
 */

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "curves.hpp"

namespace knets {

/// A point known to lie on the Fermat cubic. Only CurveGroup creates them.
class CubicPoint {
 public:
  [[nodiscard]] const ProjPoint& point() const { return P_; }
  [[nodiscard]] std::string str() const { return P_.str(); }
  bool operator==(const CubicPoint& o) const { return P_ == o.P_; }
  auto operator<=>(const CubicPoint& o) const { return P_ <=> o.P_; }
  friend std::ostream& operator<<(std::ostream& os, const CubicPoint& c) { return os << c.P_; }

 private:
  friend class CurveGroup;
  explicit CubicPoint(ProjPoint P) : P_(std::move(P)) {}
  ProjPoint P_;
};

struct InvariantSubgroup {
  CubicPoint generator;
  std::vector<CubicPoint> elements;  // sorted
};

/// The three cosets Lambda_1 = H + P, Lambda_2 = H + u(P), Lambda_3 = H + u^2(P).
struct CosetNet {
  std::array<std::vector<ProjPoint>, 3> components;
};

class CurveGroup {
 public:
  explicit CurveGroup(Field F)
      : F_(F), curve_(fermat_cubic(F)), O_(ProjPoint(F, 1, -1, 0)), eps_(F.one()) {
    if ((F.p() - 1) % 3 != 0)
      throw std::invalid_argument("Fermat cubic group needs p = 1 (mod 3), got p = " + std::to_string(F.p()));
    eps_ = nth_root_of_unity(F, 3);
    for (const auto& P : curve_points(curve_)) points_.push_back(CubicPoint(P));
  }

  [[nodiscard]] Field field() const { return F_; }
  [[nodiscard]] const HomPoly& curve() const { return curve_; }
  [[nodiscard]] Scalar epsilon() const { return eps_; }
  [[nodiscard]] CubicPoint identity() const { return CubicPoint(O_); }
  /// All rational points, sorted.
  [[nodiscard]] const std::vector<CubicPoint>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }

  [[nodiscard]] bool contains(const ProjPoint& P) const { return curve_(P).is_zero(); }
  [[nodiscard]] CubicPoint point(const ProjPoint& P) const {
    if (!contains(P)) throw std::domain_error("point " + P.str() + " is not on the Fermat cubic");
    return CubicPoint(P);
  }

  /// Third point of the curve on the line PQ, or on the tangent at P if P = Q.
  ///
  /// On F(sA + tB) = c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3 the two known roots
  /// are divided out and the remaining linear factor is read off.
  [[nodiscard]] CubicPoint third_intersection(const CubicPoint& P, const CubicPoint& Q) const {
    const Triple& a = P.point().coords();
    if (!(P == Q)) {
      const Triple& b = Q.point().coords();
      auto c = curve_.restrict_to(a, b);
      // c0 = c3 = 0; remaining factor c1 s + c2 t
      return CubicPoint(ProjPoint(added(scaled(a, c[2]), scaled(b, -c[1]))));
    }
    ProjLine tan = tangent_line(curve_, P.point());
    Triple b{};
    for (const auto& R : points_on(tan))
      if (!(R == P.point())) {
        b = R.coords();
        break;
      }
    auto c = curve_.restrict_to(a, b);
    // c0 = c1 = 0; remaining factor c2 s + c3 t
    return CubicPoint(ProjPoint(added(scaled(a, c[3]), scaled(b, -c[2]))));
  }

  [[nodiscard]] CubicPoint add(const CubicPoint& P, const CubicPoint& Q) const {
    return third_intersection(identity(), third_intersection(P, Q));
  }
  [[nodiscard]] CubicPoint neg(const CubicPoint& P) const { return third_intersection(P, identity()); }
  [[nodiscard]] CubicPoint sub(const CubicPoint& P, const CubicPoint& Q) const { return add(P, neg(Q)); }

  [[nodiscard]] CubicPoint scalar_mul(i64 k, const CubicPoint& P) const {
    CubicPoint base = k < 0 ? neg(P) : P;
    if (k < 0) k = -k;
    CubicPoint acc = identity();
    while (k > 0) {
      if (k & 1) acc = add(acc, base);
      base = add(base, base);
      k >>= 1;
    }
    return acc;
  }

  [[nodiscard]] std::size_t order(const CubicPoint& P) const {
    std::size_t n = 1;
    for (CubicPoint Q = P; !(Q == identity()); Q = add(Q, P)) ++n;
    return n;
  }

  /// u(x, y, z) = (e x, e y, z), e the smallest primitive cube root of unity.
  [[nodiscard]] CubicPoint u_auto(const CubicPoint& P) const {
    const Triple& c = P.point().coords();
    return CubicPoint(ProjPoint(Triple{c[0] * eps_, c[1] * eps_, c[2]}));
  }

  /// Cyclic subgroup <g> as a sorted list.
  [[nodiscard]] std::vector<CubicPoint> cyclic_subgroup(const CubicPoint& g) const {
    std::vector<CubicPoint> out{identity()};
    for (CubicPoint Q = g; !(Q == identity()); Q = add(Q, g)) out.push_back(Q);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// First cyclic subgroup of order n (scanning generators in point order)
  /// that u maps onto itself.
  [[nodiscard]] std::optional<InvariantSubgroup> find_invariant_subgroup(std::size_t n) const {
    if (n == 0 || size() % n != 0) return std::nullopt;
    for (const auto& g : points_) {
      if (order(g) != n) continue;
      auto H = cyclic_subgroup(g);
      if (std::binary_search(H.begin(), H.end(), u_auto(g))) return InvariantSubgroup{g, H};
    }
    return std::nullopt;
  }

  /// True iff P - u(P) does not lie in H (the cosets are then pairwise disjoint).
  [[nodiscard]] bool admissible_base_point(const std::vector<CubicPoint>& H, const CubicPoint& P) const {
    return !std::binary_search(H.begin(), H.end(), sub(P, u_auto(P)));
  }

  [[nodiscard]] CosetNet coset_net(const std::vector<CubicPoint>& H, const CubicPoint& P) const {
    if (!admissible_base_point(H, P))
      throw std::invalid_argument("coset collision: P - u(P) lies in H for P = " + P.str());
    CubicPoint P1 = u_auto(P), P2 = u_auto(P1);
    CosetNet net;
    for (const auto& h : H) {
      net.components[0].push_back(add(h, P).point());
      net.components[1].push_back(add(h, P1).point());
      net.components[2].push_back(add(h, P2).point());
    }
    std::map<ProjPoint, int> seen;
    for (auto& comp : net.components) {
      std::sort(comp.begin(), comp.end());
      for (const auto& X : comp)
        if (++seen[X] > 1) throw std::invalid_argument("coset collision at " + X.str());
    }
    return net;
  }

  /// Smallest admissible base point for H, if any.
  [[nodiscard]] std::optional<CubicPoint> find_base_point(const std::vector<CubicPoint>& H) const {
    for (const auto& P : points_)
      if (admissible_base_point(H, P)) return P;
    return std::nullopt;
  }

 private:
  Field F_;
  HomPoly curve_;
  ProjPoint O_;
  Scalar eps_;
  std::vector<CubicPoint> points_;
};

}  // namespace knets
