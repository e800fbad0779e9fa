#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "knets/constructors.hpp"
#include "knets/latin.hpp"

using namespace knets;

namespace {

using Cells = std::vector<std::vector<int>>;

// Transversal count over all column permutations.
std::size_t count_by_permutations(const LatinSquare& L) {
  const int n = static_cast<int>(L.n());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    std::vector<bool> seen(n, false);
    bool ok = true;
    for (int r = 0; r < n && ok; ++r) {
      int s = L(r, perm[r]);
      ok = !seen[s];
      seen[s] = true;
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// All latin squares of order n with first row and column 0..n-1.
std::vector<Cells> reduced_squares(int n) {
  std::vector<Cells> out;
  Cells c(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) c[0][i] = c[i][0] = i;
  std::function<void(int)> go = [&](int pos) {
    if (pos == n * n) {
      out.push_back(c);
      return;
    }
    int r = pos / n, col = pos % n;
    if (r == 0 || col == 0) {
      go(pos + 1);
      return;
    }
    for (int s = 0; s < n; ++s) {
      bool clash = false;
      for (int k = 0; k < col && !clash; ++k) clash = c[r][k] == s;
      for (int k = 0; k < r && !clash; ++k) clash = c[k][col] == s;
      if (clash) continue;
      c[r][col] = s;
      go(pos + 1);
      c[r][col] = -1;
    }
  };
  go(0);
  return out;
}

// All latin squares of order n (tiny n only).
std::vector<Cells> all_squares(int n) {
  std::vector<Cells> out;
  Cells c(n, std::vector<int>(n, -1));
  std::function<void(int)> go = [&](int pos) {
    if (pos == n * n) {
      out.push_back(c);
      return;
    }
    int r = pos / n, col = pos % n;
    for (int s = 0; s < n; ++s) {
      bool clash = false;
      for (int k = 0; k < col && !clash; ++k) clash = c[r][k] == s;
      for (int k = 0; k < r && !clash; ++k) clash = c[k][col] == s;
      if (clash) continue;
      c[r][col] = s;
      go(pos + 1);
    }
    c[r][col] = -1;
  };
  go(0);
  return out;
}

// Every principal loop isotope associative.
bool all_isotopes_associative(const LatinSquare& L) {
  for (std::size_t r = 0; r < L.n(); ++r)
    for (std::size_t c = 0; c < L.n(); ++c)
      if (!is_associative(principal_isotope(L, r, c))) return false;
  return true;
}

// Sylow 2-subgroup trivial or non-cyclic, read from the element orders.
bool sylow_oracle(const GroupTable& G) {
  int n = G.n(), two = 1;
  while (n % 2 == 0) {
    n /= 2;
    two *= 2;
  }
  if (two == 1) return true;
  int max2 = 1;
  for (int a = 0; a < G.n(); ++a) {
    int o = G.element_order(a), t = 1;
    while (o % 2 == 0) {
      o /= 2;
      t *= 2;
    }
    max2 = std::max(max2, t);
  }
  return max2 < two;
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

}  // namespace

TEST(LatinSquare, Validation) {
  EXPECT_THROW(LatinSquare(Cells{}), std::invalid_argument);
  EXPECT_THROW(LatinSquare(Cells{{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(LatinSquare(Cells{{0, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(LatinSquare(Cells{{0, 2}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(LatinSquare(Cells{{0, 1}, {1}}), std::invalid_argument);
  EXPECT_NO_THROW(LatinSquare(Cells{{0, 1}, {1, 0}}));
}

TEST(LatinSquare, IsotopeRoundTrip) {
  std::mt19937_64 rng(3);
  for (int n : {3, 5, 8, 12}) {
    LatinSquare L = cyclic_group(n).table();
    auto r = random_perm(n, rng), c = random_perm(n, rng), s = random_perm(n, rng);
    LatinSquare M = L.isotope(r, c, s);
    EXPECT_EQ(M.isotope(inverse_perm(r), inverse_perm(c), inverse_perm(s)), L);
    EXPECT_EQ(count_transversals(M), count_transversals(L));
  }
}

TEST(Groups, Catalog) {
  auto cat = group_catalog();
  EXPECT_GE(cat.size(), 30u);
  for (const auto& G : cat) {
    EXPECT_LE(G.n(), 16);
    for (int a = 0; a < G.n(); ++a) EXPECT_EQ(G.mul(a, G.inverse(a)), G.identity());
  }
  EXPECT_EQ(dihedral_group(3).name(), "D6");
  EXPECT_FALSE(dihedral_group(3).is_abelian());
  EXPECT_TRUE(direct_product(cyclic_group(2), cyclic_group(4)).is_abelian());
}

TEST(Groups, NonAssociativeTableRejected) {
  // loop of order 5 that is not a group
  Cells t{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(GroupTable{t}, std::invalid_argument);
}

TEST(Groups, Isomorphism) {
  GroupTable z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);
  EXPECT_TRUE(isomorphic(direct_product(z2, z3), cyclic_group(6)));
  EXPECT_FALSE(isomorphic(z4, direct_product(z2, z2)));
  EXPECT_FALSE(isomorphic(direct_product(z2, z4), cyclic_group(8)));
  EXPECT_FALSE(isomorphic(dihedral_group(4), direct_product(z2, z4)));
  EXPECT_FALSE(isomorphic(dihedral_group(3), cyclic_group(6)));
  std::mt19937_64 rng(5);
  for (const auto& G : group_catalog()) {
    // relabel the elements and compare
    auto s = random_perm(G.n(), rng), si = inverse_perm(s);
    Cells t(G.n(), std::vector<int>(G.n()));
    for (int a = 0; a < G.n(); ++a)
      for (int b = 0; b < G.n(); ++b) t[s[a]][s[b]] = s[G.mul(a, b)];
    EXPECT_TRUE(isomorphic(G, GroupTable(t))) << G.name();
  }
}

TEST(Transversals, Examples) {
  EXPECT_FALSE(transversal_search(cyclic_group(2).table()));
  auto t = transversal_search(cyclic_group(3).table());
  ASSERT_TRUE(t);
  EXPECT_TRUE(is_transversal(cyclic_group(3).table(), *t));
  EXPECT_FALSE(transversal_search(cyclic_group(4).table()));
  EXPECT_TRUE(transversal_search(direct_product(cyclic_group(2), cyclic_group(2)).table()));
}

TEST(Transversals, CyclicCounts) {
  // transversals of Z_n for n = 1, 3, 5, 7
  const std::vector<std::pair<int, std::size_t>> known{{1, 1}, {3, 3}, {5, 15}, {7, 133}};
  for (auto [n, c] : known) EXPECT_EQ(count_transversals(cyclic_group(n).table()), c) << n;
  for (int n : {2, 4, 6, 8}) EXPECT_EQ(count_transversals(cyclic_group(n).table()), 0u) << n;
}

TEST(Transversals, AgreesWithPermutationCount) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : reduced_squares(n)) {
      LatinSquare L(c);
      auto M = L.isotope(random_perm(n, rng), random_perm(n, rng), random_perm(n, rng));
      std::size_t expected = count_by_permutations(M);
      EXPECT_EQ(count_transversals(M), expected);
      EXPECT_EQ(transversal_search(M).has_value(), expected > 0);
      if (auto t = transversal_search(M)) EXPECT_TRUE(is_transversal(M, *t));
    }
}

TEST(Transversals, RejectsBadCandidates) {
  LatinSquare L = cyclic_group(3).table();
  EXPECT_FALSE(is_transversal(L, {0, 0, 0}));
  EXPECT_TRUE(is_transversal(L, {0, 1, 2}));
  EXPECT_FALSE(is_transversal(L, {0, 2, 1}));
  EXPECT_FALSE(is_transversal(L, {0, 1}));
}

TEST(CompleteMappings, HallPaigeOnCatalog) {
  for (const auto& G : group_catalog()) {
    auto cm = complete_mapping_exists(G);
    EXPECT_EQ(cm.criterion, sylow_oracle(G)) << G.name();
    EXPECT_EQ(cm.exists, cm.criterion) << G.name();
    if (cm.exists) EXPECT_TRUE(is_complete_mapping(G, cm.theta)) << G.name();
    if (G.n() <= 10) {
      auto raw = complete_mapping_exists(G, false);
      EXPECT_EQ(raw.exists, cm.exists) << G.name();
      // a complete mapping is a transversal of the Cayley table
      EXPECT_EQ(transversal_search(G.table()).has_value(), cm.exists) << G.name();
    }
  }
}

TEST(CompleteMappings, Examples) {
  GroupTable z2 = cyclic_group(2);
  EXPECT_FALSE(complete_mapping_exists(cyclic_group(4)).exists);
  EXPECT_TRUE(complete_mapping_exists(direct_product(z2, z2)).exists);
  EXPECT_TRUE(complete_mapping_exists(cyclic_group(5)).exists);
  EXPECT_FALSE(complete_mapping_exists(dihedral_group(3)).exists);
  EXPECT_TRUE(complete_mapping_exists(dihedral_group(4)).exists);
  EXPECT_FALSE(is_complete_mapping(cyclic_group(3), {0, 0, 0}));
}

TEST(GroupIsotopes, CatalogTablesAndTheirIsotopes) {
  std::mt19937_64 rng(17);
  for (const auto& G : group_catalog()) {
    int n = G.n();
    LatinSquare M = G.table().isotope(random_perm(n, rng), random_perm(n, rng), random_perm(n, rng));
    auto H = is_group_coordinatizable(M);
    ASSERT_TRUE(H) << G.name();
    EXPECT_TRUE(isomorphic(G, *H)) << G.name();
  }
}

TEST(GroupIsotopes, OrderFiveSearch) {
  auto squares = reduced_squares(5);
  EXPECT_EQ(squares.size(), 56u);
  std::size_t groups = 0, others = 0;
  for (const auto& c : squares) {
    LatinSquare L(c);
    bool oracle = all_isotopes_associative(L);
    auto H = is_group_coordinatizable(L);
    EXPECT_EQ(H.has_value(), oracle);
    if (H) {
      EXPECT_TRUE(isomorphic(*H, cyclic_group(5)));
      ++groups;
    } else {
      // no principal isotope is associative either
      for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t col = 0; col < 5; ++col) EXPECT_FALSE(is_associative(principal_isotope(L, r, col)));
      ++others;
    }
  }
  EXPECT_GT(groups, 0u);
  EXPECT_GT(others, 0u);
}

TEST(GroupIsotopes, TinyOrdersAlwaysGroups) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& c : all_squares(n)) EXPECT_TRUE(is_group_coordinatizable(LatinSquare(c)));
}

TEST(FromNet, TriangularIsCyclic) {
  for (auto [n, p] : {std::pair<std::size_t, i64>{5, 11}, {7, 29}, {4, 13}, {6, 13}}) {
    DualNet net = triangular_cyclic(n, p);
    LatinSquare L = from_net(net);
    EXPECT_EQ(L.n(), n);
    auto H = is_group_coordinatizable(L);
    ASSERT_TRUE(H);
    EXPECT_TRUE(isomorphic(*H, cyclic_group(static_cast<int>(n))));
  }
}

TEST(FromNet, ConicLineIsCyclicWithTransversal) {
  DualNet net = conic_line(5, 11);
  LatinSquare L = from_net(net);
  auto H = is_group_coordinatizable(L);
  ASSERT_TRUE(H);
  EXPECT_TRUE(isomorphic(*H, cyclic_group(5)));
  EXPECT_TRUE(transversal_search(L));
}
