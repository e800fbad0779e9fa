#pragma once

/**
 * @file constructors.hpp
 * @brief Builders for the families of dual nets: triangular, pencil type in
 * characteristic p, conic-line, cosets on the Fermat cubic, tetrahedron type
 * and the Hesse 4-net of order 3.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic_group.hpp"
#include "nets.hpp"

namespace knets {

/// Lambda_1 = {(1,0,x^i)}, Lambda_2 = {(0,1,c x^j)}, Lambda_3 = {(c x^k,-1,0)};
/// the points with indices i, j, k are collinear iff k = j - i (mod n).
inline DualNet triangular_cyclic(std::size_t n, i64 p, i64 c = 1) {
  Field F = Field::of(p);
  if (static_cast<i64>(n) >= p) throw std::invalid_argument("triangular: need p > n");
  Scalar cc = F(c);
  if (cc.is_zero()) throw std::invalid_argument("triangular: c must be nonzero");
  Scalar xi = nth_root_of_unity(F, static_cast<i64>(n));
  std::vector<Component> comps(3);
  Scalar x = F.one();
  for (std::size_t i = 0; i < n; ++i, x *= xi) {
    comps[0].push_back(ProjPoint(Triple{F.one(), F.zero(), x}));
    comps[1].push_back(ProjPoint(Triple{F.zero(), F.one(), cc * x}));
    comps[2].push_back(ProjPoint(Triple{cc * x, F(-1), F.zero()}));
  }
  return DualNet::verify(F, std::move(comps));
}

/// Affine points (a,0), (b,1), (c,2) for all a, b, c in GF(p); the lines of the
/// net are c = 2b - a. The order equals the characteristic, so the net carries
/// the characteristic-exception flag.
inline DualNet pencil_char_p(i64 p) {
  Field F = Field::of(p);
  std::vector<Component> comps(3);
  for (const auto& a : F.elements())
    for (std::size_t row = 0; row < 3; ++row) comps[row].push_back(ProjPoint(Triple{a, F(static_cast<i64>(row)), F.one()}));
  return DualNet::verify(F, std::move(comps), true);
}

/// Lambda_2 = {(c x^i, c^-1 x^-i, 1)} on the conic XY = Z^2, Lambda_3 = its
/// negatives, Lambda_1 = {(1, c^-2 x^i, 0)} on the line at infinity.
inline DualNet conic_line(std::size_t n, i64 p, i64 c = 1) {
  if (n % 2 == 0) throw std::invalid_argument("conic-line: n must be odd");
  Field F = Field::of(p);
  if (static_cast<i64>(n) >= p) throw std::invalid_argument("conic-line: need p > n");
  Scalar cc = F(c);
  if (cc.is_zero()) throw std::invalid_argument("conic-line: c must be nonzero");
  Scalar xi = nth_root_of_unity(F, static_cast<i64>(n));
  Scalar ci = cc.inv();
  std::vector<Component> comps(3);
  Scalar x = F.one();
  for (std::size_t i = 0; i < n; ++i, x *= xi) {
    comps[0].push_back(ProjPoint(Triple{F.one(), ci * ci * x, F.zero()}));
    comps[1].push_back(ProjPoint(Triple{cc * x, ci * x.inv(), F.one()}));
    comps[2].push_back(ProjPoint(Triple{-(cc * x), -(ci * x.inv()), F.one()}));
  }
  return DualNet::verify(F, std::move(comps));
}

struct FermatNet {
  DualNet net;
  ProjPoint center;
  std::vector<CubicPoint> subgroup;
  CubicPoint base_point;
};

/// Cosets H + P, H + u(P), H + u^2(P) of a u-invariant cyclic subgroup of
/// order n on X^3 + Y^3 = Z^3, with the smallest admissible P.
inline FermatNet algebraic_fermat(std::size_t n, i64 p) {
  Field F = Field::of(p);
  if (static_cast<i64>(n) >= p) throw std::invalid_argument("fermat: need p > n");
  if ((p - 1) % 3 != 0) throw std::invalid_argument("fermat: need p = 1 (mod 3)");
  CurveGroup G(F);
  auto H = G.find_invariant_subgroup(n);
  if (!H)
    throw std::runtime_error("fermat: no u-invariant subgroup of order " + std::to_string(n) + " over GF(" +
                             std::to_string(p) + ")");
  auto P = G.find_base_point(H->elements);
  if (!P)
    throw std::runtime_error("fermat: no base point P with P - u(P) outside H over GF(" + std::to_string(p) + ")");
  auto cosets = G.coset_net(H->elements, *P);
  std::vector<Component> comps(cosets.components.begin(), cosets.components.end());
  return {DualNet::verify(F, std::move(comps)), ProjPoint(F, 0, 0, 1), H->elements, *P};
}

/// Smallest prime p = 1 (mod 3), p > n, p <= max_p, over which algebraic_fermat(n, p) succeeds.
inline std::optional<i64> find_fermat_prime(std::size_t n, i64 max_p = 1000) {
  for (i64 p = static_cast<i64>(n) + 1; p <= max_p; ++p) {
    if (p < 7 || (p - 1) % 3 != 0 || !detail::is_prime(p)) continue;
    try {
      (void)algebraic_fermat(n, p);
      return p;
    } catch (const std::runtime_error&) {
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tetrahedron type

namespace detail {

struct Edge {
  Triple V, W;  // vertices; the edge coordinate of sV + tW is t/s
  ProjLine line;
};

}  // namespace detail

/**
 * All realizations (up to `limit`, 0 for no limit) in search order.
 *
 * Frame E1 = (1,0,0), E2 = (0,1,0), E3 = (0,0,1), E4 = (1,1,1). Component i
 * lies on the opposite edges a_i (not through E_i, E4) and b_i = E_i E4;
 * Gamma_i on a_i, Delta_i on b_i. The faces carry the triangular sub-nets
 *
 *     (Gamma_1, Gamma_2, Gamma_3), (Gamma_1, Delta_2, Delta_3),
 *     (Delta_1, Gamma_2, Delta_3), (Delta_1, Delta_2, Gamma_3).
 *
 * Gamma_1, Gamma_2 and Delta_2 range over cosets of the m-th roots of unity
 * in their edge coordinates; Gamma_3, Delta_3 and Delta_1 follow from the
 * first three faces, the fourth face is checked, then the whole net.
 */
inline std::vector<DualNet> tetrahedron_realizations(std::size_t m, i64 p, std::size_t limit = 0) {
  if (m < 2) throw std::invalid_argument("tetrahedron: need m >= 2");
  Field F = Field::of(p);
  if (static_cast<i64>(2 * m) >= p) throw std::invalid_argument("tetrahedron: need p > 2m");
  Scalar zeta = nth_root_of_unity(F, static_cast<i64>(m));
  const Scalar o = F.one(), z = F.zero();
  const Triple E1{o, z, z}, E2{z, o, z}, E3{z, z, o}, E4{o, o, o};
  auto edge = [](const Triple& V, const Triple& W) { return detail::Edge{V, W, ProjLine(cross(V, W))}; };
  const std::array<detail::Edge, 3> a{edge(E2, E3), edge(E1, E3), edge(E1, E2)};
  const std::array<detail::Edge, 3> b{edge(E1, E4), edge(E2, E4), edge(E3, E4)};
  const std::set<ProjPoint> vertices{ProjPoint(E1), ProjPoint(E2), ProjPoint(E3), ProjPoint(E4)};

  auto coset = [&](const detail::Edge& e, Scalar lambda) {
    std::vector<ProjPoint> out;
    Scalar t = lambda;
    for (std::size_t i = 0; i < m; ++i, t *= zeta) out.push_back(ProjPoint(added(e.V, scaled(e.W, t))));
    std::sort(out.begin(), out.end());
    return out;
  };
  // traces on `target` of the lines joining X and Y; nullopt unless exactly m
  // points off the vertices
  auto third_side = [&](const std::vector<ProjPoint>& X, const std::vector<ProjPoint>& Y,
                        const detail::Edge& target) -> std::optional<std::vector<ProjPoint>> {
    std::set<ProjPoint> out;
    for (const auto& x : X)
      for (const auto& y : Y) {
        ProjLine l = join(x, y);
        if (l == target.line) return std::nullopt;
        ProjPoint q = meet(l, target.line);
        if (vertices.count(q)) return std::nullopt;
        out.insert(q);
        if (out.size() > m) return std::nullopt;
      }
    if (out.size() != m) return std::nullopt;
    return std::vector<ProjPoint>(out.begin(), out.end());
  };

  const i64 cosets = (p - 1) / static_cast<i64>(m);
  Scalar g = F.generator();
  std::vector<Scalar> reps;
  for (i64 r = 0; r < cosets; ++r) reps.push_back(g.pow(r));

  std::vector<DualNet> found;
  for (const auto& r1 : reps) {
    auto G1 = coset(a[0], r1);
    for (const auto& r2 : reps) {
      auto G2 = coset(a[1], r2);
      auto G3 = third_side(G1, G2, a[2]);
      if (!G3) continue;
      for (const auto& r3 : reps) {
        auto D2 = coset(b[1], r3);
        auto D3 = third_side(G1, D2, b[2]);
        if (!D3) continue;
        auto D1 = third_side(G2, *D3, b[0]);
        if (!D1) continue;
        auto G3b = third_side(*D1, D2, a[2]);
        if (!G3b || *G3b != *G3) continue;
        std::vector<Component> comps(3);
        comps[0] = G1;
        comps[0].insert(comps[0].end(), D1->begin(), D1->end());
        comps[1] = G2;
        comps[1].insert(comps[1].end(), D2.begin(), D2.end());
        comps[2] = *G3;
        comps[2].insert(comps[2].end(), D3->begin(), D3->end());
        if (!check_net(F, comps).ok) continue;
        found.push_back(DualNet::verify(F, std::move(comps)));
        if (found.size() == limit) return found;
      }
    }
  }
  return found;
}

/// First realization in search order.
inline DualNet tetrahedron(std::size_t m, i64 p) {
  auto found = tetrahedron_realizations(m, p, 1);
  if (!found.empty()) return found.front();
  throw std::runtime_error("tetrahedron: no realization found for m = " + std::to_string(m) + " over GF(" +
                           std::to_string(p) + ")");
}

// ---------------------------------------------------------------------------
// Hesse 4-net

/**
 * The singular members of the pencil l (X^3 + Y^3 + Z^3) + mu XYZ are XYZ = 0
 * and X^3 + Y^3 + Z^3 + t XYZ with t^3 = -27. Each splits into three lines;
 * the dual points of the lines of one member form one component.
 */
inline DualNet hesse_4net(i64 p) {
  Field F = Field::of(p);
  if ((p - 1) % 3 != 0) throw std::invalid_argument("hesse4: need p = 1 (mod 3)");
  HomPoly X = HomPoly::X(F), Y = HomPoly::Y(F), Z = HomPoly::Z(F);
  HomPoly cubic = X.pow(3) + Y.pow(3) + Z.pow(3);
  HomPoly xyz = X * Y * Z;
  std::vector<HomPoly> members{xyz};
  for (const auto& t : F.elements())
    if (t.pow(3) == -27) members.push_back(cubic + xyz * t);
  if (members.size() != 4) throw std::logic_error("hesse4: expected three roots of t^3 = -27");
  std::vector<Component> comps;
  for (const auto& f : members) {
    auto lines = lines_on(f);
    if (lines.size() != 3) throw std::logic_error("hesse4: singular member does not split into three lines");
    HomPoly prod = HomPoly::linear(lines[0]) * HomPoly::linear(lines[1]) * HomPoly::linear(lines[2]);
    if (!prod.proportional_to(f)) throw std::logic_error("hesse4: line factors do not reproduce the member");
    Component c;
    for (const auto& l : lines) c.push_back(ProjPoint(l.coords()));
    comps.push_back(std::move(c));
  }
  return DualNet::verify(F, std::move(comps));
}

}  // namespace knets
