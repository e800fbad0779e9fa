// knets: construct, verify and analyse dual nets in PG(2, p).
//
// Exit codes: 0 success, 1 mathematical failure (not a net, no construction
// exists, a demo claim failed), 2 usage or parameter error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "demos.hpp"
#include "knets/io.hpp"
#include "knets/knets.hpp"

using nlohmann::json;
using namespace knets;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

json kappa_json(const ProjPoint& T, const PValue& k) {
  json j{{"center", point_json(T)}, {"kappa", k.str()}, {"kappa_signed", k.signed_str()}};
  if (!k.is_infinite()) {
    Scalar v = k.value();
    j["kappa^2-kappa+1=0"] = (v * v - v + 1).is_zero();
    j["kappa+1=0"] = (v + 1).is_zero();
  }
  return j;
}

json class_json(const NetClass& c) {
  json j{{"class", to_string(c.type)}};
  if (!c.lines.empty()) {
    j["lines"] = json::array();
    for (const auto& l : c.lines) j["lines"].push_back(line_json(l));
  }
  if (c.line_component) j["line_component"] = *c.line_component;
  if (c.conic) {
    json terms = json::array();
    for (const auto& [e, v] : c.conic->terms()) terms.push_back({{"exponent", e}, {"coefficient", v.value()}});
    j["conic"] = terms;
  }
  if (c.cubic) {
    json terms = json::array();
    for (const auto& [e, v] : c.cubic->cubic.terms()) terms.push_back({{"exponent", e}, {"coefficient", v.value()}});
    j["cubic"] = {{"terms", terms},
                  {"solution_dimension", c.cubic->solution_dimension},
                  {"singularity", to_string(c.cubic->singularity)}};
    if (c.cubic->j) j["cubic"]["j"] = c.cubic->j->str();
  }
  return j;
}

DualNet load_or_report(const std::string& path) {
  NetDocument doc;
  try {
    doc = parse_document(read_input(path));
  } catch (const ParseError& e) {
    throw UsageError(std::string("malformed net document: ") + e.what());
  }
  return load_net(doc);
}

int cmd_construct(const std::string& family, std::size_t n, i64 p, i64 c, std::size_t m) {
  json meta{{"family", family}};
  DualNet net = [&]() -> DualNet {
    if (family == "triangular") {
      meta["n"] = n, meta["p"] = p, meta["c"] = c;
      return triangular_cyclic(n, p, c);
    }
    if (family == "pencil") {
      meta["p"] = p;
      return pencil_char_p(p);
    }
    if (family == "conic-line") {
      meta["n"] = n, meta["p"] = p, meta["c"] = c;
      return conic_line(n, p, c);
    }
    if (family == "fermat") {
      meta["n"] = n, meta["p"] = p;
      FermatNet fn = algebraic_fermat(n, p);
      meta["center"] = point_json(fn.center);
      meta["base_point"] = point_json(fn.base_point.point());
      return fn.net;
    }
    if (family == "tetrahedron") {
      meta["m"] = m, meta["p"] = p;
      return tetrahedron(m, p);
    }
    if (family == "hesse4") {
      meta["p"] = p;
      return hesse_4net(p);
    }
    throw UsageError("unknown family " + family);
  }();
  std::cout << to_json(to_document(net, meta)).dump(2) << "\n";
  return kOk;
}

int cmd_verify(const std::string& path) {
  NetDocument doc;
  try {
    doc = parse_document(read_input(path));
  } catch (const ParseError& e) {
    throw UsageError(std::string("malformed net document: ") + e.what());
  }
  VerifyReport r = check_document(doc);
  json j{{"ok", r.ok}, {"p", doc.p}, {"k", doc.components.size()}};
  if (!doc.components.empty()) j["n"] = doc.components.front().size();
  if (r.ok) j["lines"] = r.line_count;
  json v = json::array();
  for (const auto& x : r.violations) {
    json e{{"what", x.what}};
    if (x.line) e["line"] = line_json(*x.line), e["component"] = x.component, e["count"] = x.count;
    v.push_back(e);
  }
  if (!r.ok) j["violations"] = v;
  std::cout << j.dump(2) << "\n";
  return r.ok ? kOk : kFail;
}

int cmd_classify(const std::string& path) {
  DualNet net = load_or_report(path);
  if (net.k() != 3) throw UsageError("classify expects a 3-net");
  std::cout << class_json(classify(net)).dump(2) << "\n";
  return kOk;
}

int cmd_centers(const std::string& path) {
  DualNet net = load_or_report(path);
  json j{{"centers", json::array()}};
  for (const auto& T : find_centers(net)) j["centers"].push_back(point_json(T));
  j["count"] = j["centers"].size();
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_crossratio(const std::string& path) {
  DualNet net = load_or_report(path);
  json j;
  if (net.k() == 4) {
    PValue k = crossratio_4net(net);
    j = {{"kappa", k.str()}, {"kappa_signed", k.signed_str()}};
  } else if (net.k() == 3) {
    j["centers"] = json::array();
    for (const auto& T : find_centers(net)) j["centers"].push_back(kappa_json(T, constant_cross_ratio(net, T)));
  } else {
    throw UsageError("crossratio expects a 3-net or a 4-net");
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_demo(const std::string& name) {
  const auto& reg = demo::registry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    std::string names;
    for (const auto& [k, v] : reg) names += " " + k;
    throw UsageError("unknown demo " + name + "; available:" + names);
  }
  demo::Transcript t(std::cout);
  it->second(t);
  return t.all() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual nets in projective planes over prime fields"};
  app.require_subcommand(1);

  std::string family, file = "-", demo_name;
  std::size_t n = 5, m = 2;
  i64 p = 11, c = 1;

  auto* construct = app.add_subcommand("construct", "Build a net and print it as JSON");
  construct->add_option("family", family, "triangular | pencil | conic-line | fermat | tetrahedron | hesse4")
      ->required()
      ->check(CLI::IsMember({"triangular", "pencil", "conic-line", "fermat", "tetrahedron", "hesse4"}));
  construct->add_option("--n", n, "order");
  construct->add_option("--p", p, "prime modulus");
  construct->add_option("--c", c, "scale parameter");
  construct->add_option("--m", m, "half order (tetrahedron)");

  auto* verify = app.add_subcommand("verify", "Check the net axioms");
  auto* classify_cmd = app.add_subcommand("classify", "Classify a 3-net");
  auto* centers = app.add_subcommand("centers", "List perspective centers");
  auto* crossratio = app.add_subcommand("crossratio", "Cross-ratio at each center (3-net) or on the lines (4-net)");
  for (auto* sc : {verify, classify_cmd, centers, crossratio})
    sc->add_option("file", file, "net JSON file, - for stdin")->required();

  auto* demo_cmd = app.add_subcommand("demo", "Run a checked walk-through");
  demo_cmd->add_option("name", demo_name, "pencil-crossratio | conic-line | fermat | j0-identities | negative | hesse4")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(family, n, p, c, m);
    if (*verify) return cmd_verify(file);
    if (*classify_cmd) return cmd_classify(file);
    if (*centers) return cmd_centers(file);
    if (*crossratio) return cmd_crossratio(file);
    if (*demo_cmd) return cmd_demo(demo_name);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NetViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
