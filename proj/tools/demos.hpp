#pragma once

// Walk-throughs for `knets demo <name>`: each prints one PASS/FAIL line per
// checked claim and returns true iff every claim held.

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include "knets/knets.hpp"

namespace knets::demo {

class Transcript {
 public:
  explicit Transcript(std::ostream& os) : os_(os) {}
  void check(bool ok, const std::string& claim) {
    os_ << (ok ? "PASS  " : "FAIL  ") << claim << "\n";
    all_ &= ok;
  }
  void info(const std::string& s) { os_ << "      " << s << "\n"; }
  [[nodiscard]] bool all() const { return all_; }

 private:
  std::ostream& os_;
  bool all_ = true;
};

inline bool contains(const Component& c, const ProjPoint& P) { return std::binary_search(c.begin(), c.end(), P); }

inline void pencil_crossratio(Transcript& t) {
  Field F = Field::of(13);
  HomPoly X = HomPoly::X(F), Y = HomPoly::Y(F), Z = HomPoly::Z(F);
  HomPoly f = X.pow(3) + Y.pow(3) + Z.pow(3), g = X * Y * Z;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<i64> d(1, 12);
  for (int trial = 0; trial < 10; ++trial) {
    Scalar a = F(d(rng)), b = F(d(rng)), a2 = F(d(rng)), b2 = F(d(rng));
    if ((a * b2 - a2 * b).is_zero()) {
      --trial;
      continue;
    }
    auto rep = pencil_crossratio_check(f, g, a, b, a2, b2);
    t.check(rep.pass && rep.points.size() == 9, "GF(13), (a,b,a',b') = (" + std::to_string(a.value()) + "," +
                                                     std::to_string(b.value()) + "," + std::to_string(a2.value()) +
                                                     "," + std::to_string(b2.value()) + "): 9 base points, tangent "
                                                     "cross-ratio " + rep.expected.str() + " at each");
  }
}

inline void conic_line_demo(Transcript& t) {
  for (auto [n, p, c] : {std::tuple{5, 11, 1}, std::tuple{7, 29, 2}, std::tuple{9, 19, 1}}) {
    std::string tag = "(n,p,c) = (" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(c) + "): ";
    DualNet net = conic_line(n, p, c);
    Field F = net.field();
    t.check(true, tag + "net verified with " + std::to_string(net_lines(net).size()) + " lines");
    ProjPoint T(F, 0, 0, 1);
    t.check(is_perspective_center(net, T), tag + "(0,0,1) is a center");
    PValue k = constant_cross_ratio(net, T);
    t.check(k == -1, tag + "constant cross-ratio " + k.signed_str());
    Projectivity u = perspectivity(T, ProjLine(F, 0, 0, 1), k.value());
    bool maps = true;
    for (const auto& P : net.component(1)) maps = maps && contains(net.component(2), u(P));
    t.check(maps, tag + "the perspectivity with axis Z = 0 and ratio kappa maps the second component onto the third");
    t.check(transversal_search(from_net(net)).has_value(), tag + "latin square has a transversal");
  }
}

inline void fermat_demo(Transcript& t) {
  for (std::size_t n : {3u, 7u}) {
    auto p = find_fermat_prime(n);
    if (!p) {
      t.check(false, "no prime found for order " + std::to_string(n));
      continue;
    }
    std::string tag = "n = " + std::to_string(n) + ", p = " + std::to_string(*p) + ": ";
    FermatNet fn = algebraic_fermat(n, *p);
    Field F = fn.net.field();
    CurveGroup G(F);
    t.check(true, tag + "coset net verified (P = " + fn.base_point.str() + ")");
    t.check(is_perspective_center(fn.net, fn.center), tag + "(0,0,1) is a center");
    auto centers = find_centers(fn.net);
    std::set<ProjPoint> corners{ProjPoint(F, 1, 0, 0), ProjPoint(F, 0, 1, 0), ProjPoint(F, 0, 0, 1)};
    bool inside = std::all_of(centers.begin(), centers.end(), [&](const ProjPoint& c) { return corners.count(c) > 0; });
    t.check(inside && centers.size() <= 3, tag + std::to_string(centers.size()) + " centers, all coordinate vertices");
    for (const auto& c : centers) {
      PValue k = constant_cross_ratio(fn.net, c);
      Scalar v = k.value();
      t.check((v * v - v + 1).is_zero(), tag + "kappa = " + k.str() + " at " + c.str() + " satisfies k^2 - k + 1 = 0");
    }
    NetClass cls = classify(fn.net);
    t.check(cls.type == NetType::proper_algebraic && cls.cubic && cls.cubic->j && *cls.cubic->j == 0,
            tag + "classified proper-algebraic with j = 0");
    // the net line through A1 + P and A2 + u(P) meets -A1 - A2 + u^2(P)
    bool law = true;
    CubicPoint P = fn.base_point, P1 = G.u_auto(P), P2 = G.u_auto(P1);
    for (const auto& a1 : fn.subgroup)
      for (const auto& a2 : fn.subgroup) {
        CubicPoint X = G.add(a1, P), Y = G.add(a2, P1);
        CubicPoint W = G.add(G.neg(G.add(a1, a2)), P2);
        law = law && collinear(X.point(), Y.point(), W.point());
      }
    t.check(law, tag + "join of A1 + P and A2 + u(P) passes through -A1 - A2 + u^2(P)");
    t.check(transversal_search(from_net(fn.net)).has_value(), tag + "latin square has a transversal");
  }
}

inline void j0_identities(Transcript& t) {
  Field F = Field::of(101);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> d(0, 100);
  int ok1 = 0, ok2 = 0;
  for (int i = 0; i < 50; ++i) {
    auto r = cubic_j0_identities(F(d(rng)), F(d(rng)), F(d(rng)), F(d(rng)));
    ok1 += r.identity1;
    ok2 += r.identity2;
  }
  t.check(ok1 == 50, "identity 3f'g - 2fg' = 54 (b^2 - a(a-1)(a-c))^2 sum beta_i m^i at " + std::to_string(ok1) + "/50 samples");
  t.check(ok2 == 50, "identity sum beta_i gamma_i = 18 c^2 (c-1)^2 (c^2-c+1) at " + std::to_string(ok2) + "/50 samples");
  Field K = Field::of(7);
  Scalar c = K(5);
  Corners cr = corners_legendre(c);
  // the affine corners; the third one is at infinity
  for (const auto& P : cr.points) {
    if (P[2].is_zero()) continue;
    auto r = cubic_j0_identities(P[0] / P[2], P[1] / P[2], c, K(3));
    t.check(r.betas_vanish, "GF(7), c = 5: beta_0..beta_3 vanish at the corner " + P.str());
  }
}

inline void negative_demo(Transcript& t) {
  for (auto [n, p] : {std::pair{5, 11}, std::pair{7, 29}}) {
    DualNet net = triangular_cyclic(n, p);
    t.check(find_centers_sweep(net).empty(),
            "triangular net of order " + std::to_string(n) + " over GF(" + std::to_string(p) + "): no center");
  }
  for (auto [m, p] : {std::pair{3, 13}, std::pair{4, 29}}) {
    DualNet net = tetrahedron(m, p);
    t.check(find_centers_sweep(net).empty(), "tetrahedron net of order " + std::to_string(2 * m) + " over GF(" +
                                                 std::to_string(p) + "): no center");
  }
  DualNet small = tetrahedron(2, 13);
  t.info("order 4 tetrahedron net over GF(13): " + std::to_string(find_centers_sweep(small).size()) +
         " centers (order 4 lies outside the n > 4 range of the argument)");
  DualNet pencil = pencil_char_p(5);
  t.check(!find_centers_sweep(pencil).empty(), "pencil net of order 5 over GF(5): " +
                                                   std::to_string(find_centers_sweep(pencil).size()) +
                                                   " centers (order equal to the characteristic)");
}

inline void hesse_demo(Transcript& t) {
  DualNet h = hesse_4net(13);
  t.check(h.k() == 4 && h.order() == 3, "Hesse 4-net over GF(13) verified");
  t.check(true, "constant cross-ratio " + crossratio_4net(h).str() + " on all 9 lines");
  for (std::size_t i = 0; i < 4; ++i) {
    DualNet d = derived_net(h, i);
    NetClass c = classify(d);
    t.check(c.type == NetType::proper_algebraic, "derived net without component " + std::to_string(i) + ": " +
                                                      to_string(c.type));
    t.check(extend_to_4net(d).has_value(), "derived net without component " + std::to_string(i) +
                                               " extends back to a 4-net through its centers");
  }
}

inline const std::map<std::string, std::function<void(Transcript&)>>& registry() {
  static const std::map<std::string, std::function<void(Transcript&)>> r{
      {"pencil-crossratio", pencil_crossratio}, {"conic-line", conic_line_demo}, {"fermat", fermat_demo},
      {"j0-identities", j0_identities},         {"negative", negative_demo},     {"hesse4", hesse_demo}};
  return r;
}

}  // namespace knets::demo
