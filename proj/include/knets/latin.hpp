#pragma once

/**
 * @file latin.hpp
 * @brief Latin squares of dual 3-nets, transversals, complete mappings of
 * finite groups and the group-isotope test.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nets.hpp"

namespace knets {

class LatinSquare {
 public:
  explicit LatinSquare(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {
    const std::size_t n = cells_.size();
    if (n == 0 || n > 64) throw std::invalid_argument("latin square order must be in 1..64");
    for (const auto& row : cells_)
      if (row.size() != n) throw std::invalid_argument("latin square is not square");
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t rseen = 0, cseen = 0;
      for (std::size_t j = 0; j < n; ++j) {
        int a = cells_[i][j], b = cells_[j][i];
        if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
          throw std::invalid_argument("latin square symbol out of range");
        rseen |= std::uint64_t{1} << a;
        cseen |= std::uint64_t{1} << b;
      }
      std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
      if (rseen != full) throw std::invalid_argument("row " + std::to_string(i) + " repeats a symbol");
      if (cseen != full) throw std::invalid_argument("column " + std::to_string(i) + " repeats a symbol");
    }
  }

  [[nodiscard]] std::size_t n() const { return cells_.size(); }
  [[nodiscard]] int operator()(std::size_t i, std::size_t j) const { return cells_[i][j]; }
  [[nodiscard]] const std::vector<std::vector<int>>& cells() const { return cells_; }

  /// Rows, columns and symbols relabelled: new(r[i], c[j]) = s[old(i, j)].
  [[nodiscard]] LatinSquare isotope(const std::vector<int>& r, const std::vector<int>& c,
                                    const std::vector<int>& s) const {
    std::vector<std::vector<int>> out(n(), std::vector<int>(n()));
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) out[r[i]][c[j]] = s[cells_[i][j]];
    return LatinSquare(out);
  }

  bool operator==(const LatinSquare& o) const { return cells_ == o.cells_; }

 private:
  std::vector<std::vector<int>> cells_;
};

/// Multiplication table of a finite group on {0, ..., n-1}.
class GroupTable {
 public:
  GroupTable(std::vector<std::vector<int>> table, std::string name = {})
      : sq_(table), name_(std::move(name)) {
    const int n = static_cast<int>(sq_.n());
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = sq_(e, x) == x && sq_(x, e) == x;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("group table has no identity");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("group table is not associative");
  }

  [[nodiscard]] int n() const { return static_cast<int>(sq_.n()); }
  [[nodiscard]] int identity() const { return identity_; }
  [[nodiscard]] int mul(int a, int b) const { return sq_(a, b); }
  [[nodiscard]] const LatinSquare& table() const { return sq_; }
  [[nodiscard]] const std::string& name() const { return name_; }

  [[nodiscard]] int inverse(int a) const {
    for (int b = 0; b < n(); ++b)
      if (mul(a, b) == identity_) return b;
    throw std::logic_error("element without inverse");
  }

  [[nodiscard]] int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  [[nodiscard]] bool is_abelian() const {
    for (int a = 0; a < n(); ++a)
      for (int b = 0; b < n(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Sorted multiset of element orders.
  [[nodiscard]] std::vector<int> order_profile() const {
    std::vector<int> out;
    for (int a = 0; a < n(); ++a) out.push_back(element_order(a));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  LatinSquare sq_;
  int identity_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Catalog

inline GroupTable cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return {t, "Z" + std::to_string(n)};
}

/// Dihedral group of order 2m: r^i s^f encoded as i + m f.
inline GroupTable dihedral_group(int m) {
  if (m < 2) throw std::invalid_argument("dihedral_group needs m >= 2");
  const int n = 2 * m;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int i = a % m, f = a / m, j = b % m, g = b / m;
      // r^i s^f r^j s^g = r^(i + (-1)^f j) s^(f+g)
      int k = ((f ? i - j : i + j) % m + m) % m;
      t[a][b] = k + m * ((f + g) % 2);
    }
  return {t, "D" + std::to_string(n)};
}

inline GroupTable direct_product(const GroupTable& A, const GroupTable& B) {
  const int n = A.n() * B.n();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = A.mul(x / B.n(), y / B.n()) * B.n() + B.mul(x % B.n(), y % B.n());
  return {t, A.name() + "x" + B.name()};
}

/// Cyclic, dihedral, elementary abelian and a few direct products, all of
/// order at most 16.
inline std::vector<GroupTable> group_catalog() {
  std::vector<GroupTable> out;
  for (int n = 1; n <= 16; ++n) out.push_back(cyclic_group(n));
  for (int m = 3; m <= 8; ++m) out.push_back(dihedral_group(m));
  GroupTable z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);
  out.push_back(direct_product(z2, z2));
  out.push_back(direct_product(direct_product(z2, z2), z2));
  out.push_back(direct_product(direct_product(direct_product(z2, z2), z2), z2));
  out.push_back(direct_product(z3, z3));
  out.push_back(direct_product(z2, z4));
  out.push_back(direct_product(z2, cyclic_group(6)));
  out.push_back(direct_product(z2, cyclic_group(8)));
  out.push_back(direct_product(z4, z4));
  out.push_back(direct_product(direct_product(z2, z2), z4));
  out.push_back(direct_product(z2, dihedral_group(4)));
  return out;
}

// ---------------------------------------------------------------------------
// Latin square of a net

/// L(i, j) = k iff the line through the i-th point of the first component and
/// the j-th point of the second passes through the k-th point of the third.
inline LatinSquare from_net(const DualNet& net) {
  if (net.k() != 3) throw std::invalid_argument("from_net expects a 3-net");
  const auto& A = net.component(0);
  const auto& B = net.component(1);
  const auto& C = net.component(2);
  const std::size_t n = net.order();
  std::vector<std::vector<int>> cells(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ProjLine l = join(A[i], B[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (incident(C[k], l)) cells[i][j] = static_cast<int>(k);
    }
  return LatinSquare(cells);
}

// ---------------------------------------------------------------------------
// Transversals

/// Column chosen in each row; symbols pairwise distinct.
using Transversal = std::vector<int>;

/// Exhaustive backtracking, rows in order.
inline std::optional<Transversal> transversal_search(const LatinSquare& L) {
  const int n = static_cast<int>(L.n());
  Transversal pick(n, -1);
  std::uint64_t cols = 0, syms = 0;
  std::function<bool(int)> go = [&](int r) {
    if (r == n) return true;
    for (int c = 0; c < n; ++c) {
      std::uint64_t cb = std::uint64_t{1} << c, sb = std::uint64_t{1} << L(r, c);
      if ((cols & cb) || (syms & sb)) continue;
      cols |= cb;
      syms |= sb;
      pick[r] = c;
      if (go(r + 1)) return true;
      cols &= ~cb;
      syms &= ~sb;
    }
    return false;
  };
  if (go(0)) return pick;
  return std::nullopt;
}

/// Number of transversals, by the same backtracking without early exit.
inline std::size_t count_transversals(const LatinSquare& L) {
  const int n = static_cast<int>(L.n());
  std::size_t count = 0;
  std::uint64_t cols = 0, syms = 0;
  std::function<void(int)> go = [&](int r) {
    if (r == n) {
      ++count;
      return;
    }
    for (int c = 0; c < n; ++c) {
      std::uint64_t cb = std::uint64_t{1} << c, sb = std::uint64_t{1} << L(r, c);
      if ((cols & cb) || (syms & sb)) continue;
      cols |= cb;
      syms |= sb;
      go(r + 1);
      cols &= ~cb;
      syms &= ~sb;
    }
  };
  go(0);
  return count;
}

inline bool is_transversal(const LatinSquare& L, const Transversal& t) {
  const std::size_t n = L.n();
  if (t.size() != n) return false;
  std::vector<bool> col(n, false), sym(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    if (t[r] < 0 || t[r] >= static_cast<int>(n) || col[t[r]] || sym[L(r, t[r])]) return false;
    col[t[r]] = sym[L(r, t[r])] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Complete mappings

/// Hall-Paige: a complete mapping exists iff a Sylow 2-subgroup is trivial or
/// non-cyclic. The Sylow 2-subgroup of order 2^a is cyclic iff some element
/// has order 2^a.
inline bool hall_paige_criterion(const GroupTable& G) {
  int two_part = 1;
  while (G.n() % (two_part * 2) == 0) two_part *= 2;
  if (two_part == 1) return true;
  for (int a = 0; a < G.n(); ++a)
    if (G.element_order(a) == two_part) return false;
  return true;
}

namespace detail {

/// Abelianization G -> G/G': coset index of every element and the quotient
/// multiplication on coset indices.
struct Abelianization {
  std::vector<int> coset;
  std::vector<std::vector<int>> table;
  int identity;
};

inline Abelianization abelianize(const GroupTable& G) {
  const int n = G.n();
  std::vector<bool> in_d(n, false);
  std::vector<int> gens;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = G.mul(G.mul(a, b), G.mul(G.inverse(a), G.inverse(b)));
      if (!in_d[c]) {
        in_d[c] = true;
        gens.push_back(c);
      }
    }
  // closure of the commutator set is the derived subgroup
  std::vector<int> D;
  for (int x = 0; x < n; ++x)
    if (in_d[x]) D.push_back(x);
  for (std::size_t i = 0; i < D.size(); ++i)
    for (int g : gens) {
      int y = G.mul(D[i], g);
      if (!in_d[y]) {
        in_d[y] = true;
        D.push_back(y);
      }
    }
  Abelianization ab;
  ab.coset.assign(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (ab.coset[a] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int d : D) ab.coset[G.mul(a, d)] = idx;
  }
  const int m = static_cast<int>(reps.size());
  ab.table.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ab.table[i][j] = ab.coset[G.mul(reps[i], reps[j])];
  ab.identity = ab.coset[G.identity()];
  return ab;
}

}  // namespace detail

struct CompleteMapping {
  bool exists = false;
  std::vector<int> theta;  // theta[g]; g -> g * theta[g] is a bijection
  bool criterion = false;  // Hall-Paige prediction
};

inline bool is_complete_mapping(const GroupTable& G, const std::vector<int>& theta) {
  const int n = G.n();
  if (static_cast<int>(theta.size()) != n) return false;
  std::vector<bool> img(n, false), prod(n, false);
  for (int g = 0; g < n; ++g) {
    if (theta[g] < 0 || theta[g] >= n || img[theta[g]] || prod[G.mul(g, theta[g])]) return false;
    img[theta[g]] = prod[G.mul(g, theta[g])] = true;
  }
  return true;
}

/**
 * Backtracking search for a complete mapping theta with theta(e) = e. With
 * `prune`, a branch is cut when the unassigned elements, unused images and
 * unused products have incompatible totals in G/G' (the product of a
 * complete mapping's pairs must match there, whatever the order of factors).
 */
inline CompleteMapping complete_mapping_exists(const GroupTable& G, bool prune = true) {
  const int n = G.n();
  if (n > 63) throw std::invalid_argument("complete_mapping_exists: order too large");
  CompleteMapping out;
  out.criterion = hall_paige_criterion(G);
  const int e = G.identity();
  auto ab = detail::abelianize(G);
  auto amul = [&](int x, int y) { return ab.table[x][y]; };
  std::vector<int> theta(n, -1);
  theta[e] = e;
  std::uint64_t used_img = std::uint64_t{1} << e, used_prod = std::uint64_t{1} << e;
  std::vector<int> order;
  for (int g = 0; g < n; ++g)
    if (g != e) order.push_back(g);

  // Quotient totals of the remaining elements, images and products.
  auto total = [&](std::uint64_t used, bool as_domain, std::size_t depth) {
    int acc = ab.identity;
    if (as_domain) {
      for (std::size_t i = depth; i < order.size(); ++i) acc = amul(acc, ab.coset[order[i]]);
    } else {
      for (int x = 0; x < n; ++x)
        if (!(used & (std::uint64_t{1} << x))) acc = amul(acc, ab.coset[x]);
    }
    return acc;
  };

  std::function<bool(std::size_t)> go = [&](std::size_t depth) {
    if (depth == order.size()) return true;
    if (prune) {
      int lhs = amul(total(0, true, depth), total(used_img, false, depth));
      if (lhs != total(used_prod, false, depth)) return false;
    }
    int g = order[depth];
    for (int t = 0; t < n; ++t) {
      std::uint64_t tb = std::uint64_t{1} << t;
      if (used_img & tb) continue;
      int pr = G.mul(g, t);
      std::uint64_t pb = std::uint64_t{1} << pr;
      if (used_prod & pb) continue;
      used_img |= tb;
      used_prod |= pb;
      theta[g] = t;
      if (go(depth + 1)) return true;
      used_img &= ~tb;
      used_prod &= ~pb;
      theta[g] = -1;
    }
    return false;
  };
  out.exists = go(0);
  if (out.exists) out.theta = theta;
  return out;
}

// ---------------------------------------------------------------------------
// Group isotopes

/**
 * Principal loop isotope through cell (r0, c0): x o y = L(R(x), C(y)) where
 * R(x) is the row with L(R(x), c0) = x and C(y) the column with
 * L(r0, C(y)) = y. Its identity is L(r0, c0).
 */
inline std::vector<std::vector<int>> principal_isotope(const LatinSquare& L, std::size_t r0 = 0, std::size_t c0 = 0) {
  const std::size_t n = L.n();
  std::vector<int> R(n), C(n);
  for (std::size_t i = 0; i < n; ++i) {
    R[L(i, c0)] = static_cast<int>(i);
    C[L(r0, i)] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = L(R[x], C[y]);
  return t;
}

inline bool is_associative(const std::vector<std::vector<int>>& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

/// A latin square is isotopic to a group iff one (equivalently every) principal
/// loop isotope is associative; that loop is then the group.
inline std::optional<GroupTable> is_group_coordinatizable(const LatinSquare& L) {
  auto t = principal_isotope(L);
  if (!is_associative(t)) return std::nullopt;
  return GroupTable(t);
}

/// Isomorphism test by extending generator images.
inline bool isomorphic(const GroupTable& A, const GroupTable& B) {
  const int n = A.n();
  if (n != B.n() || A.order_profile() != B.order_profile() || A.is_abelian() != B.is_abelian()) return false;
  // greedy generating set of A
  std::vector<int> gens;
  std::vector<bool> in_span(n, false);
  in_span[A.identity()] = true;
  std::vector<int> span{A.identity()};
  auto close = [&](std::vector<int>& s, std::vector<bool>& mark, const std::vector<int>& g) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (int x : g) {
        int y = A.mul(s[i], x);
        if (!mark[y]) {
          mark[y] = true;
          s.push_back(y);
        }
      }
  };
  for (int a = 0; a < n && static_cast<int>(span.size()) < n; ++a) {
    if (in_span[a]) continue;
    gens.push_back(a);
    close(span, in_span, gens);
  }
  // try all images of the generators, extend as a word map and check
  std::vector<int> img(gens.size(), -1);
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      std::vector<int> phi(n, -1);
      phi[A.identity()] = B.identity();
      std::vector<int> queue{A.identity()};
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t g = 0; g < gens.size(); ++g) {
          int x = A.mul(queue[i], gens[g]);
          int y = B.mul(phi[queue[i]], img[g]);
          if (phi[x] < 0) {
            phi[x] = y;
            queue.push_back(x);
          } else if (phi[x] != y) {
            return false;
          }
        }
      std::vector<bool> hit(n, false);
      for (int x = 0; x < n; ++x) {
        if (hit[phi[x]]) return false;
        hit[phi[x]] = true;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (phi[A.mul(x, y)] != B.mul(phi[x], phi[y])) return false;
      return true;
    }
    for (int b = 0; b < n; ++b) {
      if (B.element_order(b) != A.element_order(gens[k])) continue;
      img[k] = b;
      if (go(k + 1)) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace knets
