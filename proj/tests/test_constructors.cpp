#include <gtest/gtest.h>

#include "knets/constructors.hpp"
#include "knets/latin.hpp"

using namespace knets;

namespace {

std::set<ProjPoint> as_set(const Component& c) { return {c.begin(), c.end()}; }

Component affine(Field F, std::initializer_list<std::pair<i64, i64>> xy) {
  Component out;
  for (auto [x, y] : xy) out.push_back(ProjPoint(F, x, y, 1));
  return out;
}

bool on(const ProjLine& l, const Component& c) {
  return std::all_of(c.begin(), c.end(), [&](const ProjPoint& P) { return incident(P, l); });
}

}  // namespace

TEST(Triangular, CarriersFormATriangle) {
  for (auto [n, p, c] : {std::tuple<std::size_t, i64, i64>{5, 11, 1}, {7, 29, 3}, {4, 13, 2}, {6, 7, 1}}) {
    DualNet net = triangular_cyclic(n, p, c);
    Field F = net.field();
    EXPECT_EQ(net.order(), n);
    EXPECT_TRUE(on(ProjLine(F, 0, 1, 0), net.component(0)));
    EXPECT_TRUE(on(ProjLine(F, 1, 0, 0), net.component(1)));
    EXPECT_TRUE(on(ProjLine(F, 0, 0, 1), net.component(2)));
    EXPECT_TRUE(find_centers(net).empty());
  }
}

TEST(Triangular, CollinearityLaw) {
  Field F = Field::of(11);
  DualNet net = triangular_cyclic(5, 11, 2);
  Scalar xi = nth_root_of_unity(F, 5), c = F(2);
  for (i64 i = 0; i < 5; ++i)
    for (i64 j = 0; j < 5; ++j) {
      i64 k = ((j - i) % 5 + 5) % 5;
      ProjPoint A(Triple{F(1), F(0), xi.pow(i)}), B(Triple{F(0), F(1), c * xi.pow(j)}), C(Triple{c * xi.pow(k), F(-1), F(0)});
      EXPECT_TRUE(collinear(A, B, C));
    }
}

TEST(Triangular, Errors) {
  EXPECT_THROW(triangular_cyclic(5, 13), std::invalid_argument);
  EXPECT_THROW(triangular_cyclic(11, 11), std::invalid_argument);
  EXPECT_THROW(triangular_cyclic(5, 11, 0), std::invalid_argument);
}

TEST(Pencil, ConcurrentCarriers) {
  for (i64 p : {5, 7, 11}) {
    DualNet net = pencil_char_p(p);
    Field F = net.field();
    EXPECT_TRUE(net.char_exception());
    EXPECT_EQ(net.order(), static_cast<std::size_t>(p));
    for (i64 row = 0; row < 3; ++row) {
      ProjLine l(F, 0, 1, -row);
      EXPECT_TRUE(on(l, net.component(row)));
      EXPECT_TRUE(incident(ProjPoint(F, 1, 0, 0), l));
    }
    // net lines: c = 2b - a
    for (const auto& a : F.elements())
      for (const auto& b : F.elements())
        EXPECT_TRUE(collinear(ProjPoint(Triple{a, F(0), F(1)}), ProjPoint(Triple{b, F(1), F(1)}),
                              ProjPoint(Triple{b * 2 - a, F(2), F(1)})));
  }
  EXPECT_FALSE(find_centers(pencil_char_p(5)).empty());
}

TEST(ConicLine, GF11Coordinates) {
  Field F = Field::of(11);
  DualNet net = conic_line(5, 11);
  EXPECT_EQ(as_set(net.component(1)), as_set(affine(F, {{1, 1}, {3, 4}, {9, 5}, {5, 9}, {4, 3}})));
  EXPECT_EQ(as_set(net.component(2)), as_set(affine(F, {{-1, -1}, {-3, -4}, {-9, -5}, {-5, -9}, {-4, -3}})));
  Component slopes;
  for (i64 m : {1, 3, 9, 5, 4}) slopes.push_back(ProjPoint(F, 1, m, 0));
  EXPECT_EQ(as_set(net.component(0)), as_set(slopes));
}

TEST(ConicLine, OnConicAndLine) {
  for (auto [n, p, c] : {std::tuple<std::size_t, i64, i64>{5, 11, 1}, {7, 29, 2}, {9, 19, 1}, {3, 7, 3}}) {
    DualNet net = conic_line(n, p, c);
    Field F = net.field();
    EXPECT_TRUE(on(ProjLine(F, 0, 0, 1), net.component(0)));
    for (std::size_t i : {1u, 2u})
      for (const auto& P : net.component(i)) EXPECT_EQ(P[0] * P[1], P[2] * P[2]);
    ProjPoint T(F, 0, 0, 1);
    EXPECT_TRUE(is_perspective_center(net, T));
    EXPECT_EQ(constant_cross_ratio(net, T), -1);
  }
}

TEST(ConicLine, Errors) {
  EXPECT_THROW(conic_line(4, 13), std::invalid_argument);
  EXPECT_THROW(conic_line(5, 13), std::invalid_argument);
  EXPECT_THROW(conic_line(5, 11, 0), std::invalid_argument);
}

TEST(Fermat, OrderThree) {
  FermatNet fn = algebraic_fermat(3, 19);
  Field F = fn.net.field();
  EXPECT_EQ(fn.net.order(), 3u);
  EXPECT_EQ(fn.center, ProjPoint(F, 0, 0, 1));
  EXPECT_TRUE(is_perspective_center(fn.net, fn.center));
  HomPoly cubic = fermat_cubic(F);
  for (const auto& P : fn.net.all_net_points()) EXPECT_TRUE(eval(cubic, P).is_zero());
  std::set<ProjPoint> corners{ProjPoint(F, 1, 0, 0), ProjPoint(F, 0, 1, 0), ProjPoint(F, 0, 0, 1)};
  for (const auto& T : find_centers(fn.net)) {
    EXPECT_TRUE(corners.count(T)) << T;
    Scalar k = constant_cross_ratio(fn.net, T).value();
    EXPECT_TRUE((k * k - k + 1).is_zero());
  }
  // P is the smallest admissible point
  CurveGroup G(F);
  for (const auto& Q : G.points()) {
    if (Q == fn.base_point) break;
    EXPECT_FALSE(G.admissible_base_point(fn.subgroup, Q));
  }
}

TEST(Fermat, OrderSeven) {
  FermatNet fn = algebraic_fermat(7, 61);
  Field F = fn.net.field();
  EXPECT_EQ(fn.net.order(), 7u);
  for (const auto& P : fn.net.all_net_points()) EXPECT_TRUE(eval(fermat_cubic(F), P).is_zero());
  auto centers = find_centers(fn.net);
  EXPECT_FALSE(centers.empty());
  for (const auto& T : centers) {
    Scalar k = constant_cross_ratio(fn.net, T).value();
    EXPECT_TRUE((k * k - k + 1).is_zero());
  }
  auto cls = classify(fn.net);
  EXPECT_EQ(cls.type, NetType::proper_algebraic);
  ASSERT_TRUE(cls.cubic && cls.cubic->j);
  EXPECT_EQ(*cls.cubic->j, 0);
}

TEST(Fermat, Errors) {
  EXPECT_THROW(algebraic_fermat(3, 11), std::invalid_argument);
  EXPECT_THROW(algebraic_fermat(3, 13), std::runtime_error);
  EXPECT_THROW(algebraic_fermat(4, 13), std::runtime_error);
}

TEST(Tetrahedron, FacesAreTriangularSubnets) {
  for (auto [m, p] : {std::pair<std::size_t, i64>{2, 13}, {3, 13}, {4, 29}}) {
    DualNet net = tetrahedron(m, p);
    Field F = net.field();
    EXPECT_EQ(net.order(), 2 * m);
    const std::array<ProjLine, 3> a{ProjLine(F, 1, 0, 0), ProjLine(F, 0, 1, 0), ProjLine(F, 0, 0, 1)};
    const std::array<ProjLine, 3> b{ProjLine(F, 0, 1, -1), ProjLine(F, 1, 0, -1), ProjLine(F, 1, -1, 0)};
    // a diagonal point (meet of a_i and b_i) may sit on both carriers; try
    // every way of completing the split
    std::array<Component, 3> gamma, delta, both;
    for (std::size_t i = 0; i < 3; ++i)
      for (const auto& P : net.component(i)) {
        bool ga = incident(P, a[i]), db = incident(P, b[i]);
        ASSERT_TRUE(ga || db) << P;
        (ga && db ? both[i] : ga ? gamma[i] : delta[i]).push_back(P);
      }
    bool some_split = false;
    for (unsigned mask = 0; mask < (1u << 3) && !some_split; ++mask) {
      std::array<Component, 3> g = gamma, d = delta;
      bool sizes = true;
      for (std::size_t i = 0; i < 3; ++i) {
        for (const auto& P : both[i]) ((mask >> i) & 1 ? g[i] : d[i]).push_back(P);
        sizes = sizes && g[i].size() == m && d[i].size() == m;
      }
      if (!sizes) continue;
      const std::vector<std::array<Component, 3>> faces{
          {g[0], g[1], g[2]}, {g[0], d[1], d[2]}, {d[0], g[1], d[2]}, {d[0], d[1], g[2]}};
      bool all = true;
      for (const auto& f : faces) {
        std::vector<Component> comps{f[0], f[1], f[2]};
        if (!check_net(F, comps).ok) {
          all = false;
          break;
        }
        all = classify(DualNet::verify(F, comps)).type == NetType::triangular;
        if (!all) break;
      }
      some_split = all;
    }
    EXPECT_TRUE(some_split) << "m = " << m << ", p = " << p;
  }
}

TEST(Tetrahedron, DihedralCoordinates) {
  auto H2 = is_group_coordinatizable(from_net(tetrahedron(2, 13)));
  ASSERT_TRUE(H2);
  EXPECT_TRUE(isomorphic(*H2, direct_product(cyclic_group(2), cyclic_group(2))));
  auto H3 = is_group_coordinatizable(from_net(tetrahedron(3, 13)));
  ASSERT_TRUE(H3);
  EXPECT_TRUE(isomorphic(*H3, dihedral_group(3)));
  auto H4 = is_group_coordinatizable(from_net(tetrahedron(4, 29)));
  ASSERT_TRUE(H4);
  EXPECT_TRUE(isomorphic(*H4, dihedral_group(4)));
}

TEST(Tetrahedron, NoCentersAboveOrderFour) {
  EXPECT_TRUE(find_centers(tetrahedron(3, 13)).empty());
  EXPECT_TRUE(find_centers(tetrahedron(4, 29)).empty());
}

TEST(Tetrahedron, Errors) {
  EXPECT_THROW(tetrahedron(1, 13), std::invalid_argument);
  EXPECT_THROW(tetrahedron(3, 5), std::invalid_argument);
  EXPECT_THROW(tetrahedron(3, 7), std::runtime_error);
}

TEST(Hesse, FourNet) {
  for (i64 p : {7, 13, 19, 31}) {
    DualNet h = hesse_4net(p);
    Field F = h.field();
    EXPECT_EQ(h.k(), 4u);
    EXPECT_EQ(h.order(), 3u);
    // the first member is XYZ: its lines dualize to the coordinate vertices
    std::set<ProjPoint> vertices{ProjPoint(F, 1, 0, 0), ProjPoint(F, 0, 1, 0), ProjPoint(F, 0, 0, 1)};
    bool found = false;
    for (const auto& c : h.components()) found = found || as_set(c) == vertices;
    EXPECT_TRUE(found);
    PValue k = crossratio_4net(h);
    EXPECT_TRUE((k.value() * k.value() - k.value() + 1).is_zero());
    for (std::size_t d = 0; d < 4; ++d) EXPECT_EQ(classify(derived_net(h, d)).type, NetType::proper_algebraic);
  }
  EXPECT_THROW(hesse_4net(11), std::invalid_argument);
}
