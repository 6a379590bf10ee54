// Command-line front end: homology tables, critical cells, verification
// suites, independence complexes, and the E^1 page, with text or JSON output.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "artin/catalog.hpp"
#include "artin/independence.hpp"
#include "artin/snf.hpp"
#include "json.hpp"

namespace {

using namespace artin;
using nlohmann::json;

constexpr int kExitBadInput = 1;
constexpr int kExitVerifyFailed = 2;

int max_n_cap() {
  const char* env = std::getenv("ARTIN_MORSE_MAX_N");
  if (!env) return 12;
  return std::max(1, std::atoi(env));
}

struct Target {
  bool is_family = false;
  Family family = Family::A;
  int n = 0;
  CoxeterGraph graph = CoxeterGraph(1);
  std::string label;  // "A", "B", "tA", "tC" or "graph"
};

std::optional<Family> parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "tA") return Family::tA;
  if (s == "tC") return Family::tC;
  return std::nullopt;
}

// "A", "B:4", "tC:3", or a path to a JSON graph file
Target resolve_target(const std::string& spec, int n_arg) {
  Target t;
  std::string head = spec, tail;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    head = spec.substr(0, pos);
    tail = spec.substr(pos + 1);
  }
  if (auto fam = parse_family(head)) {
    t.is_family = true;
    t.family = *fam;
    t.label = head;
    t.n = tail.empty() ? n_arg : std::stoi(tail);
    if (t.n < 1) throw BadInput("missing or bad n for family " + head);
    t.graph = family_graph(t.family, t.n);
  } else {
    std::ifstream in(spec);
    if (!in) throw BadInput("cannot open graph file: " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    t.graph = CoxeterGraph::from_json(ss.str());
    t.n = t.graph.size();
    t.label = "graph";
  }
  if (t.graph.size() > max_n_cap())
    throw BadInput("graph exceeds ARTIN_MORSE_MAX_N = " + std::to_string(max_n_cap()));
  return t;
}

json table_to_json(const HomologyTable& table, int d_filter) {
  json degrees = json::array();
  for (size_t m = 0; m < table.torsion.size(); ++m) {
    json torsion = json::array();
    for (const auto& t : table.torsion[m]) {
      if (d_filter > 0 && t.d != d_filter) continue;
      torsion.push_back({{"d", t.d}, {"exp", t.exp}, {"mult", t.mult}});
    }
    degrees.push_back(
        {{"m", m}, {"free_rank", table.free_rank[m]}, {"torsion", torsion}});
  }
  return degrees;
}

std::string table_to_text(const HomologyTable& table, int d_filter) {
  if (d_filter <= 0) return table.str();
  HomologyTable filtered = table;
  for (auto& level : filtered.torsion) {
    std::vector<TorsionSummand> keep;
    for (const auto& t : level)
      if (t.d == d_filter) keep.push_back(t);
    level = keep;
  }
  return filtered.str();
}

HomologyTable filtered_copy(const HomologyTable& table, int d_filter) {
  HomologyTable out = table;
  if (d_filter > 0)
    for (auto& level : out.torsion) {
      std::vector<TorsionSummand> keep;
      for (const auto& t : level)
        if (t.d == d_filter) keep.push_back(t);
      level = keep;
    }
  return out;
}

int cmd_homology(const std::string& spec, int n_arg, const std::string& method, int d_filter,
                 const std::string& format) {
  Target t = resolve_target(spec, n_arg);
  auto t0 = std::chrono::steady_clock::now();

  std::optional<HomologyTable> morse_table, snf_table;
  if (method == "morse" || method == "both") {
    if (!t.is_family)
      throw BadInput("method 'morse' needs a cataloged family (A, B, tA, tC)");
    morse_table = homology_artin(
        t.graph, [&](int d) { return family_matching(t.family, t.n, d); });
  }
  if (method == "snf" || method == "both") snf_table = homology_direct(build_C(t.graph));

  bool both = method == "both";
  bool verified = both && *morse_table == *snf_table;
  const HomologyTable& table = morse_table ? *morse_table : *snf_table;

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "# elapsed_ms=" << ms << "\n";

  if (format == "json") {
    json out;
    out["family"] = t.label;
    out["n"] = t.n;
    out["d"] = d_filter > 0 ? json(d_filter) : json(nullptr);
    out["degrees"] = table_to_json(table, d_filter);
    out["verified"] = verified;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << table_to_text(table, d_filter);
    if (both) std::cout << (verified ? "cross-check: PASS\n" : "cross-check: FAIL\n");
  }
  if (both && !verified) {
    std::cerr << "morse/snf tables disagree\n";
    return kExitVerifyFailed;
  }
  return 0;
}

int cmd_critical(const std::string& spec, int n_arg, int d, bool show_weights,
                 const std::string& format) {
  Target t = resolve_target(spec, n_arg);
  if (!t.is_family) throw BadInput("critical needs a cataloged family");
  auto cells = critical_family(t.family, t.n, d);
  if (format == "json") {
    json arr = json::array();
    for (const auto& c : cells) {
      json cell{{"bits", bitstring(c.cell, t.graph.size())},
                {"degree", c.degree},
                {"exponent", c.exponent}};
      if (show_weights) cell["weight"] = poincare_polynomial(t.graph, c.cell).str();
      arr.push_back(cell);
    }
    json out{{"family", t.label}, {"n", t.n}, {"d", d}, {"cells", arr}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : cells) {
      std::cout << bitstring(c.cell, t.graph.size()) << "  degree " << c.degree
                << "  exponent " << c.exponent;
      if (show_weights) std::cout << "  W = " << poincare_polynomial(t.graph, c.cell).str();
      std::cout << "\n";
    }
    std::cout << "# " << cells.size() << " critical cells\n";
  }
  return 0;
}

int cmd_e1(const std::string& spec, int n_arg, int d, const std::string& format) {
  Target t = resolve_target(spec, n_arg);
  auto entries = e1_page(t.graph, d);
  if (format == "json") {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back({{"p", e.p}, {"q", e.q}, {"rank", e.rank}});
    json out{{"family", t.label}, {"n", t.n}, {"d", d}, {"entries", arr}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : entries)
      std::cout << "E1[p=" << e.p << ", q=" << e.q << "] rank " << e.rank << "\n";
    if (entries.empty()) std::cout << "E1 page is zero\n";
  }
  return 0;
}

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  if (auto pos = s.find(".."); pos != std::string::npos) {
    r.lo = std::stoi(s.substr(0, pos));
    r.hi = std::stoi(s.substr(pos + 2));
  } else {
    r.lo = r.hi = std::stoi(s);
  }
  if (r.lo > r.hi) throw BadInput("empty range " + s);
  return r;
}

// One (family, n, d) verification bundle. Returns a list of failed checks.
std::vector<std::string> verify_one(Family fam, int n, int d, int oracle_cap) {
  std::vector<std::string> failures;
  CoxeterGraph g = family_graph(fam, n);
  Matching m = family_matching(fam, n, d);
  if (!verify_acyclic(g, m)) failures.push_back("acyclic");
  if (!verify_weighted(g, m, d)) failures.push_back("weighted");
  MorseComplex mc = morse_complex(g, m, d);
  if (!verify_precise(mc)) failures.push_back("precise");
  if (!collapse_check(g, m, d)) failures.push_back("collapse");

  // closed-form critical cells
  std::vector<CatalogCell> computed;
  for (int k = 0; k <= mc.top_degree(); ++k)
    for (const auto& c : mc.cells[static_cast<size_t>(k)])
      computed.push_back({c.cell, k, c.exponent});
  auto expected = critical_family(fam, n, d);
  if (computed != expected) failures.push_back("critical-cells");

  // closed-form incidence numbers
  auto find_value = [&](Simplex from, Simplex to) -> long long {
    auto fi = mc.find(from);
    auto ti = mc.find(to);
    if (!fi || !ti || fi->first != ti->first + 1) return 0;
    return mc.boundary[static_cast<size_t>(fi->first)][static_cast<size_t>(ti->second)]
                      [static_cast<size_t>(fi->second)];
  };
  std::vector<CatalogIncidence> listed;
  bool exact_signs = true;
  if (fam == Family::B) listed = incidence_B(n, d);
  if (fam == Family::tC) listed = incidence_tC(n, d);
  if (fam == Family::tA) {
    listed = incidence_tA(n, d);
    exact_signs = false;
  }
  if (fam != Family::A) {
    bool ok = true;
    long long total_listed = 0;
    for (const auto& inc : listed) {
      long long got = find_value(inc.from, inc.to);
      ok = ok && (exact_signs ? got == inc.value : std::abs(got) == 1);
      ++total_listed;
    }
    // nothing nonzero off the list
    long long nonzero = 0;
    for (size_t k = 1; k < mc.cells.size(); ++k)
      for (const auto& row : mc.boundary[k])
        for (long long x : row)
          if (x != 0) ++nonzero;
    if (nonzero != total_listed) ok = false;
    if (!ok) failures.push_back("incidence");
  }

  if (n <= oracle_cap) {
    auto direct = homology_direct(build_C(g));
    auto morse = homology_artin(g, [&](int dd) { return family_matching(fam, n, dd); });
    if (!(direct == morse)) failures.push_back("oracle");
  }
  return failures;
}

int cmd_verify(const std::string& fam_str, const std::string& n_range, const std::string& d_range,
               int oracle_cap) {
  auto fam = parse_family(fam_str);
  if (!fam) throw BadInput("unknown family " + fam_str);
  Range nr = parse_range(n_range), dr = parse_range(d_range);
  bool affine = *fam == Family::tA || *fam == Family::tC;
  int min_n = affine ? 2 : 1;
  if (oracle_cap < 0) oracle_cap = affine ? 4 : 5;
  bool all_ok = true;
  for (int n = std::max(min_n, nr.lo); n <= nr.hi; ++n) {
    if (n + (affine ? 1 : 0) > max_n_cap()) throw BadInput("n exceeds ARTIN_MORSE_MAX_N");
    for (int d = dr.lo; d <= dr.hi; ++d) {
      auto failures = verify_one(*fam, n, d, oracle_cap);
      if (failures.empty()) {
        std::cout << "PASS " << fam_str << " n=" << n << " d=" << d << "\n";
      } else {
        all_ok = false;
        std::cout << "FAIL " << fam_str << " n=" << n << " d=" << d << " :";
        for (const auto& f : failures) std::cout << " " << f;
        std::cout << "\n";
      }
    }
  }
  return all_ok ? 0 : kExitVerifyFailed;
}

int cmd_independence(int n, int r, const std::string& contains, const std::string& graph_file,
                     const std::string& format) {
  SimpleGraph g;
  if (!graph_file.empty()) {
    std::ifstream in(graph_file);
    if (!in) throw BadInput("cannot open graph file: " + graph_file);
    std::stringstream ss;
    ss << in.rdbuf();
    g = SimpleGraph::from_coxeter(CoxeterGraph::from_json(ss.str()));
  } else {
    g = SimpleGraph::path(n);
  }
  if (g.n > max_n_cap()) throw BadInput("graph exceeds ARTIN_MORSE_MAX_N");

  if (!contains.empty()) {
    // vertices use the 1-based A_n labels
    Simplex s;
    std::stringstream ss(contains);
    std::string tok;
    while (std::getline(ss, tok, ',')) s = s.with(std::stoi(tok) - 1);
    bool member = ind_contains(g, r, s);
    std::cout << (member ? "true" : "false") << "\n";
    return 0;
  }
  auto betti = reduced_betti(ind_complex(g, r));
  if (format == "json") {
    json arr = json::array();
    for (const auto& [deg, rank] : betti) arr.push_back({{"degree", deg}, {"rank", rank}});
    json out{{"n", g.n}, {"r", r}, {"betti", arr}};
    std::cout << out.dump(2) << "\n";
  } else {
    if (betti.empty()) std::cout << "reduced homology is zero\n";
    for (const auto& [deg, rank] : betti)
      std::cout << "b~_" << deg << " = " << rank << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact twisted homology of Artin groups via weighted discrete Morse theory"};
  app.require_subcommand(1);

  std::string spec, format = "text", method = "morse";
  int n_arg = 0, d_arg = 0, r_arg = 1;

  auto* hom = app.add_subcommand("homology", "homology table H_*(X_W; Q[q^±1])");
  hom->add_option("target", spec, "family (A|B|tA|tC), family:n, or graph file")->required();
  hom->add_option("n", n_arg, "rank n");
  hom->add_option("--method", method, "morse | snf | both")
      ->check(CLI::IsMember({"morse", "snf", "both"}));
  hom->add_option("--d", d_arg, "report only the phi_d-primary part");
  hom->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  bool show_weights = false;
  auto* crit = app.add_subcommand("critical", "critical cells of the catalog matching");
  crit->add_option("target", spec)->required();
  crit->add_option("n", n_arg);
  crit->add_option("--d", d_arg, "cyclotomic index d")->required();
  crit->add_flag("--show-weights", show_weights, "also print each cell's Poincare polynomial");
  crit->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string n_range, d_range;
  int oracle_cap = -1;
  auto* ver = app.add_subcommand("verify", "acyclic/weighted/precise/collapse/catalog/oracle suite");
  ver->add_option("family", spec)->required();
  ver->add_option("nrange", n_range, "e.g. 2..8")->required();
  ver->add_option("drange", d_range, "e.g. 2..10")->required();
  ver->add_option("--oracle-cap", oracle_cap, "max n for the SNF cross-check");

  std::string contains, graph_file;
  auto* ind = app.add_subcommand("independence", "reduced Betti numbers of Ind_r(A_n)");
  ind->add_option("n", n_arg);
  ind->add_option("--r", r_arg, "component size bound")->required();
  ind->add_option("--contains", contains, "comma-separated vertex list membership test");
  ind->add_option("--graph", graph_file, "JSON graph instead of A_n");
  ind->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* e1 = app.add_subcommand("e1", "E^1 page of the weight filtration");
  e1->add_option("target", spec)->required();
  e1->add_option("n", n_arg);
  e1->add_option("--d", d_arg)->required();
  e1->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (hom->parsed()) return cmd_homology(spec, n_arg, method, d_arg, format);
    if (crit->parsed()) return cmd_critical(spec, n_arg, d_arg, show_weights, format);
    if (ver->parsed()) return cmd_verify(spec, n_range, d_range, oracle_cap);
    if (ind->parsed()) return cmd_independence(n_arg, r_arg, contains, graph_file, format);
    if (e1->parsed()) return cmd_e1(spec, n_arg, d_arg, format);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const BadParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitBadInput;
}
