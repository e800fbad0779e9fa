#pragma once

/**
 * @file nets.hpp
 * @brief Dual k-nets in PG(2, p): verification, lines of the net,
 * perspective centers, constant cross-ratio, classification and 4-nets.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "curves.hpp"
#include "linalg.hpp"

namespace knets {

using Component = std::vector<ProjPoint>;

struct Violation {
  std::string what;
  std::optional<ProjLine> line;
  std::size_t component = 0;
  std::size_t count = 0;

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << what;
    if (line) os << " on line " << line->str() << " (component " << component << ", " << count << " points)";
    return os.str();
  }
};

struct VerifyReport {
  bool ok = true;
  std::size_t line_count = 0;
  std::vector<Violation> violations;

  [[nodiscard]] std::string summary() const {
    if (ok) return "ok";
    std::string s = violations.front().str();
    if (violations.size() > 1) s += " (+" + std::to_string(violations.size() - 1) + " more)";
    return s;
  }
};

struct NetViolation : std::runtime_error {
  VerifyReport report;
  explicit NetViolation(VerifyReport r) : std::runtime_error("not a dual net: " + r.summary()), report(std::move(r)) {}
};

namespace detail {

inline void add_violation(VerifyReport& r, Violation v) {
  r.ok = false;
  if (r.violations.size() < 64) r.violations.push_back(std::move(v));
}

}  // namespace detail

/**
 * Full check of the net axioms. With `char_exception` the order may reach or
 * exceed the characteristic; otherwise p > n is required.
 */
inline VerifyReport check_net(Field F, const std::vector<Component>& comps, bool char_exception = false) {
  VerifyReport r;
  if (comps.size() < 3) {
    detail::add_violation(r, {"a dual net needs at least 3 components", std::nullopt, 0, 0});
    return r;
  }
  const std::size_t n = comps.front().size();
  if (n == 0) detail::add_violation(r, {"empty component", std::nullopt, 0, 0});
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].size() != n) detail::add_violation(r, {"component sizes differ", std::nullopt, i, comps[i].size()});
    for (const auto& P : comps[i])
      if (!(P.field() == F)) throw FieldMismatch{};
  }
  if (!char_exception && static_cast<i64>(n) >= F.p())
    detail::add_violation(r, {"order " + std::to_string(n) + " is not below the characteristic", std::nullopt, 0, 0});

  std::map<ProjPoint, std::size_t> owner;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (const auto& P : comps[i]) {
      auto [it, fresh] = owner.emplace(P, i);
      if (!fresh) detail::add_violation(r, {"point " + P.str() + " repeated or shared by components", std::nullopt, i, 2});
    }
  if (!r.ok) return r;

  std::set<ProjLine> lines;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      for (const auto& P : comps[i])
        for (const auto& Q : comps[j]) lines.insert(join(P, Q));

  for (const auto& l : lines) {
    std::vector<std::size_t> cnt(comps.size(), 0);
    for (const auto& [P, i] : owner)
      if (incident(P, l)) ++cnt[i];
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (cnt[i] != 1) detail::add_violation(r, {"line does not meet each component once", l, i, cnt[i]});
  }
  r.line_count = lines.size();
  if (r.ok && lines.size() != n * n)
    detail::add_violation(r, {"expected " + std::to_string(n * n) + " lines, found " + std::to_string(lines.size()), std::nullopt, 0, 0});
  return r;
}

/// A verified dual k-net. Instances only come out of verify().
class DualNet {
 public:
  static DualNet verify(Field F, std::vector<Component> comps, bool char_exception = false) {
    VerifyReport r = check_net(F, comps, char_exception);
    if (!r.ok) throw NetViolation(std::move(r));
    for (auto& c : comps) std::sort(c.begin(), c.end());
    return DualNet(F, std::move(comps), char_exception, r.line_count);
  }

  [[nodiscard]] Field field() const { return F_; }
  [[nodiscard]] std::size_t k() const { return comps_.size(); }
  [[nodiscard]] std::size_t order() const { return comps_.front().size(); }
  [[nodiscard]] const std::vector<Component>& components() const { return comps_; }
  [[nodiscard]] const Component& component(std::size_t i) const { return comps_.at(i); }
  [[nodiscard]] bool char_exception() const { return char_exception_; }
  [[nodiscard]] bool verified() const { return true; }
  [[nodiscard]] std::size_t line_count() const { return line_count_; }

  /// Index of the component containing P, if any.
  [[nodiscard]] std::optional<std::size_t> component_of(const ProjPoint& P) const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (std::binary_search(comps_[i].begin(), comps_[i].end(), P)) return i;
    return std::nullopt;
  }

  /// All points of all components.
  [[nodiscard]] std::vector<ProjPoint> all_net_points() const {
    std::vector<ProjPoint> out;
    for (const auto& c : comps_) out.insert(out.end(), c.begin(), c.end());
    return out;
  }

 private:
  DualNet(Field F, std::vector<Component> c, bool ce, std::size_t lines)
      : F_(F), comps_(std::move(c)), char_exception_(ce), line_count_(lines) {}
  Field F_;
  std::vector<Component> comps_;
  bool char_exception_;
  std::size_t line_count_;
};

/// The n^2 lines meeting every component, sorted.
inline std::vector<ProjLine> net_lines(const DualNet& net) {
  std::set<ProjLine> lines;
  for (const auto& P : net.component(0))
    for (const auto& Q : net.component(1)) lines.insert(join(P, Q));
  return {lines.begin(), lines.end()};
}

/// The point of a component on a line of the net.
inline ProjPoint point_on(const DualNet& net, const ProjLine& l, std::size_t comp) {
  for (const auto& P : net.component(comp))
    if (incident(P, l)) return P;
  throw std::invalid_argument("line " + l.str() + " misses component " + std::to_string(comp));
}

/// T is off the net, and the lines through T split the net points into n
/// classes, each with exactly one point of every component.
inline bool is_perspective_center(const DualNet& net, const ProjPoint& T) {
  if (net.component_of(T)) return false;
  std::map<ProjLine, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < net.k(); ++i)
    for (const auto& P : net.component(i)) {
      auto& cnt = classes.try_emplace(join(T, P), std::vector<std::size_t>(net.k(), 0)).first->second;
      if (++cnt[i] > 1) return false;
    }
  if (classes.size() != net.order()) return false;
  return std::all_of(classes.begin(), classes.end(), [](const auto& kv) {
    return std::all_of(kv.second.begin(), kv.second.end(), [](std::size_t c) { return c == 1; });
  });
}

/// Centers found by testing every point of the plane.
inline std::vector<ProjPoint> find_centers_sweep(const DualNet& net) {
  std::vector<ProjPoint> out;
  for (const auto& T : all_points(net.field()))
    if (is_perspective_center(net, T)) out.push_back(T);
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr i64 kSweepLimit = 30000;

/**
 * All perspective centers. A center lies on n lines of the net, so it is a
 * meet of two of them; those meets are the candidates. For planes with at
 * most kSweepLimit points the full sweep is run as well and must agree.
 */
inline std::vector<ProjPoint> find_centers(const DualNet& net) {
  auto lines = net_lines(net);
  std::set<ProjPoint> candidates;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) candidates.insert(meet(lines[i], lines[j]));
  std::vector<ProjPoint> out;
  for (const auto& T : candidates)
    if (is_perspective_center(net, T)) out.push_back(T);
  const i64 p = net.field().p();
  if (p * p + p + 1 <= kSweepLimit && find_centers_sweep(net) != out)
    throw std::logic_error("find_centers: candidate search disagrees with the full sweep");
  return out;
}

/// The lines through a center, each with its points in component order.
inline std::vector<std::vector<ProjPoint>> center_classes(const DualNet& net, const ProjPoint& T) {
  std::map<ProjLine, std::vector<ProjPoint>> classes;
  for (std::size_t i = 0; i < net.k(); ++i)
    for (const auto& P : net.component(i)) classes[join(T, P)].push_back(P);
  std::vector<std::vector<ProjPoint>> out;
  for (auto& [l, pts] : classes) out.push_back(std::move(pts));
  return out;
}

/// Cross-ratio of (T, l meet L1, l meet L2, l meet L3), the same on every line
/// l through the center T.
inline PValue constant_cross_ratio(const DualNet& net, const ProjPoint& T) {
  if (net.k() != 3) throw std::invalid_argument("constant_cross_ratio expects a 3-net");
  if (!is_perspective_center(net, T)) throw std::invalid_argument("not a perspective center: " + T.str());
  std::optional<PValue> kappa;
  std::optional<ProjLine> first;
  for (const auto& cls : center_classes(net, T)) {
    PValue k = cross_ratio(T, cls[0], cls[1], cls[2]);
    if (!kappa) {
      kappa = k;
      first = join(T, cls[0]);
    } else if (!(k == *kappa)) {
      throw std::logic_error("non-constant cross-ratio: " + kappa->str() + " on " + first->str() + " but " + k.str() +
                             " on " + join(T, cls[0]).str());
    }
  }
  return *kappa;
}

/// Cross-ratio of the four net points on each line of a 4-net; constant.
inline PValue crossratio_4net(const DualNet& net) {
  if (net.k() != 4) throw std::invalid_argument("crossratio_4net expects a 4-net");
  std::optional<PValue> kappa;
  std::optional<ProjLine> first;
  for (const auto& l : net_lines(net)) {
    PValue k = cross_ratio(point_on(net, l, 0), point_on(net, l, 1), point_on(net, l, 2), point_on(net, l, 3));
    if (!kappa) {
      kappa = k;
      first = l;
    } else if (!(k == *kappa)) {
      throw std::logic_error("non-constant cross-ratio: " + kappa->str() + " on " + first->str() + " but " + k.str() +
                             " on " + l.str());
    }
  }
  return *kappa;
}

inline DualNet derived_net(const DualNet& net, std::size_t drop) {
  if (net.k() < 4) throw std::invalid_argument("derived_net needs k >= 4");
  if (drop >= net.k()) throw std::out_of_range("derived_net: no component " + std::to_string(drop));
  std::vector<Component> comps;
  for (std::size_t i = 0; i < net.k(); ++i)
    if (i != drop) comps.push_back(net.component(i));
  return DualNet::verify(net.field(), std::move(comps), net.char_exception());
}

/// Adds the centers as a fourth component when there are exactly n of them and
/// no line through two centers touches the net.
inline std::optional<DualNet> extend_to_4net(const DualNet& net) {
  if (net.k() != 3) throw std::invalid_argument("extend_to_4net expects a 3-net");
  auto centers = find_centers(net);
  if (centers.size() != net.order()) return std::nullopt;
  auto pts = net.all_net_points();
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      ProjLine l = join(centers[i], centers[j]);
      if (std::any_of(pts.begin(), pts.end(), [&](const ProjPoint& P) { return incident(P, l); })) return std::nullopt;
    }
  auto comps = net.components();
  comps.push_back(centers);
  if (!check_net(net.field(), comps, net.char_exception()).ok) return std::nullopt;
  return DualNet::verify(net.field(), std::move(comps), net.char_exception());
}

// ---------------------------------------------------------------------------
// Classification

enum class NetType { triangular, pencil, conic_line, proper_algebraic, tetrahedron, unknown };

inline const char* to_string(NetType t) {
  switch (t) {
    case NetType::triangular: return "triangular";
    case NetType::pencil: return "pencil";
    case NetType::conic_line: return "conic-line";
    case NetType::proper_algebraic: return "proper-algebraic";
    case NetType::tetrahedron: return "tetrahedron";
    case NetType::unknown: return "unknown";
  }
  return "?";
}

struct CubicData {
  HomPoly cubic;
  std::size_t solution_dimension;  // dimension of the space of cubics through the net
  Singularity singularity;
  std::optional<PValue> j;  // nonsingular only
};

struct NetClass {
  NetType type = NetType::unknown;
  std::vector<ProjLine> lines;   // carrier lines (regular, conic-line, tetrahedron)
  std::optional<HomPoly> conic;  // conic-line
  std::optional<std::size_t> line_component;
  std::optional<CubicData> cubic;
};

namespace detail {

inline std::vector<Exponent> monomials(int d) {
  std::vector<Exponent> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

/// Basis of the forms of degree d vanishing on all points.
inline std::vector<HomPoly> forms_through(Field F, const std::vector<ProjPoint>& pts, int d) {
  auto mons = monomials(d);
  Matrix m;
  for (const auto& P : pts) {
    Row r;
    for (const auto& e : mons) r.push_back(P[0].pow(e[0]) * P[1].pow(e[1]) * P[2].pow(e[2]));
    m.push_back(std::move(r));
  }
  std::vector<HomPoly> out;
  for (const auto& v : nullspace(m, F, mons.size())) {
    HomPoly f(F, d);
    for (std::size_t i = 0; i < mons.size(); ++i) f.add_term(mons[i], v[i]);
    out.push_back(std::move(f));
  }
  return out;
}

/// The line through all points, if they are collinear.
inline std::optional<ProjLine> common_line(const std::vector<ProjPoint>& pts) {
  if (pts.size() < 2) return std::nullopt;
  ProjLine l = join(pts[0], pts[1]);
  for (const auto& P : pts)
    if (!incident(P, l)) return std::nullopt;
  return l;
}

inline bool nonsingular_conic(const HomPoly& q) {
  Scalar two = q.field()(2);
  Scalar a = q.coeff({2, 0, 0}), b = q.coeff({0, 2, 0}), c = q.coeff({0, 0, 2});
  Scalar xy = q.coeff({1, 1, 0}) / two, xz = q.coeff({1, 0, 1}) / two, yz = q.coeff({0, 1, 1}) / two;
  return !det(Matrix3{Triple{a, xy, xz}, Triple{xy, b, yz}, Triple{xz, yz, c}}).is_zero();
}

inline bool irreducible_cubic(const HomPoly& f) {
  for (const auto& l : all_lines(f.field()))
    if (contains_line(f, l)) return false;
  return true;
}

inline constexpr std::size_t kCubicMemberCap = 4096;

/// Members of the linear system spanned by `basis`, at most `cap` of them,
/// one per projective class of coefficient vectors.
inline std::vector<HomPoly> system_members(const std::vector<HomPoly>& basis, std::size_t cap) {
  std::vector<HomPoly> out;
  const std::size_t d = basis.size();
  if (d == 0) return out;
  Field F = basis[0].field();
  const i64 p = F.p();
  // leading coefficient 1 at position `lead`, free coefficients after it
  for (std::size_t lead = 0; lead < d && out.size() < cap; ++lead) {
    std::size_t free = d - lead - 1;
    std::vector<i64> digits(free, 0);
    while (out.size() < cap) {
      HomPoly f = basis[lead];
      for (std::size_t i = 0; i < free; ++i)
        if (digits[i] != 0) f = f + basis[lead + 1 + i] * F(digits[i]);
      out.push_back(f);
      std::size_t k = 0;
      while (k < free && ++digits[k] == p) digits[k++] = 0;
      if (k == free) break;
    }
  }
  return out;
}

inline std::optional<CubicData> fit_cubic(Field F, const std::vector<ProjPoint>& pts) {
  auto basis = forms_through(F, pts, 3);
  if (basis.empty()) return std::nullopt;
  std::optional<CubicData> best;
  for (const auto& f : system_members(basis, kCubicMemberCap)) {
    if (!irreducible_cubic(f)) continue;
    Singularity s = cubic_singularity(f);
    if (s == Singularity::nonsingular) {
      return CubicData{f, basis.size(), s, j_invariant_of_cubic(f, pts.front())};
    }
    if (!best) best = CubicData{f, basis.size(), s, std::nullopt};
  }
  return best;
}

/// Splits of a component into two collinear halves of equal size.
inline std::vector<std::pair<ProjLine, ProjLine>> collinear_splits(const Component& c) {
  std::vector<std::pair<ProjLine, ProjLine>> out;
  const std::size_t m = c.size() / 2;
  std::set<ProjLine> tried;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      ProjLine l = join(c[i], c[j]);
      if (!tried.insert(l).second) continue;
      Component on, off;
      for (const auto& P : c) (incident(P, l) ? on : off).push_back(P);
      if (on.size() != m) continue;
      auto l2 = common_line(off);
      if (!l2 || *l2 == l) continue;
      // keep each unordered split once
      if (on.front() < off.front()) out.emplace_back(l, *l2);
    }
  return out;
}

/// Six lines, two per component, that are the edges of a complete quadrangle
/// with each component on a pair of opposite edges.
inline bool quadrangle_edges(const std::array<std::pair<ProjLine, ProjLine>, 3>& s) {
  std::array<ProjLine, 6> L{s[0].first, s[0].second, s[1].first, s[1].second, s[2].first, s[2].second};
  std::set<ProjLine> distinct(L.begin(), L.end());
  if (distinct.size() != 6) return false;
  // opposite edges are the two lines of one component; vertices are points on
  // exactly three of the lines, one from each pair
  std::set<ProjPoint> vertices;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (i / 2 == j / 2) continue;
      ProjPoint V = meet(L[i], L[j]);
      std::array<int, 3> per{0, 0, 0};
      for (std::size_t k = 0; k < 6; ++k)
        if (incident(V, L[k])) ++per[k / 2];
      if (per == std::array<int, 3>{1, 1, 1}) vertices.insert(V);
    }
  if (vertices.size() != 4) return false;
  for (const auto& l : L) {
    int on = 0;
    for (const auto& V : vertices) on += incident(V, l) ? 1 : 0;
    if (on != 2) return false;
  }
  return true;
}

inline std::optional<std::array<std::pair<ProjLine, ProjLine>, 3>> tetrahedron_structure(const DualNet& net) {
  if (net.k() != 3 || net.order() % 2 != 0 || net.order() < 4) return std::nullopt;
  std::array<std::vector<std::pair<ProjLine, ProjLine>>, 3> splits;
  for (std::size_t i = 0; i < 3; ++i) {
    splits[i] = collinear_splits(net.component(i));
    if (splits[i].empty()) return std::nullopt;
  }
  for (const auto& a : splits[0])
    for (const auto& b : splits[1])
      for (const auto& c : splits[2]) {
        std::array<std::pair<ProjLine, ProjLine>, 3> s{a, b, c};
        if (quadrangle_edges(s)) return s;
      }
  return std::nullopt;
}

}  // namespace detail

/**
 * Decision procedure, first match wins:
 *  1. every component collinear: pencil if the three lines are concurrent,
 *     triangular otherwise;
 *  2. one collinear component and the other two on a nonsingular conic;
 *  3. components split into halves on the edges of a complete quadrangle
 *     (checked before the cubic: in order 4 such nets can also lie on an
 *     irreducible cubic);
 *  4. all points on an irreducible cubic;
 *  5. unknown.
 */
inline NetClass classify(const DualNet& net) {
  if (net.k() != 3) throw std::invalid_argument("classify expects a 3-net");
  Field F = net.field();
  NetClass out;

  std::array<std::optional<ProjLine>, 3> carriers;
  for (std::size_t i = 0; i < 3; ++i) carriers[i] = detail::common_line(net.component(i));

  if (carriers[0] && carriers[1] && carriers[2]) {
    out.lines = {*carriers[0], *carriers[1], *carriers[2]};
    bool concurrent = det(Matrix3{carriers[0]->coords(), carriers[1]->coords(), carriers[2]->coords()}).is_zero();
    out.type = concurrent ? NetType::pencil : NetType::triangular;
    return out;
  }

  for (std::size_t i = 0; i < 3; ++i) {
    if (!carriers[i]) continue;
    std::vector<ProjPoint> rest;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) rest.insert(rest.end(), net.component(j).begin(), net.component(j).end());
    auto conics = detail::forms_through(F, rest, 2);
    if (conics.size() == 1 && detail::nonsingular_conic(conics[0])) {
      out.type = NetType::conic_line;
      out.lines = {*carriers[i]};
      out.conic = conics[0];
      out.line_component = i;
      return out;
    }
  }

  if (auto tet = detail::tetrahedron_structure(net)) {
    out.type = NetType::tetrahedron;
    for (const auto& [a, b] : *tet) {
      out.lines.push_back(a);
      out.lines.push_back(b);
    }
    return out;
  }

  if (auto cubic = detail::fit_cubic(F, net.all_net_points())) {
    out.type = NetType::proper_algebraic;
    out.cubic = std::move(cubic);
    return out;
  }
  return out;
}

}  // namespace knets
