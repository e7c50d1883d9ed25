#include "splitcm/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "splitcm/cm.hpp"
#include "splitcm/corpus.hpp"
#include "splitcm/families.hpp"
#include "splitcm/graph.hpp"
#include "splitcm/oracle.hpp"
#include "splitcm/parse.hpp"
#include "splitcm/split.hpp"

namespace splitcm {

namespace {

using nlohmann::json;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Stopwatch {
public:
  long long ms() const {
    auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json run_report(const std::string& command, const std::string& digest, json verdicts,
                json timings) {
  return json{{"command", command},
              {"input", digest},
              {"timings", std::move(timings)},
              {"verdicts", std::move(verdicts)},
              {"version", kToolVersion}};
}

unsigned thread_cap() {
  if (const char* env = std::getenv("SPLITCM_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

template <class Fn>
void parallel_for(std::size_t count, Fn fn) {
  std::size_t workers = std::min<std::size_t>(thread_cap(), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) fn(k);
    });
  for (auto& t : pool) t.join();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

void print_certificate(const SplitCertificate& c, std::ostream& out, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  switch (c.kind) {
    case SplitCertificate::Kind::Unit:
      out << pad << "unit ideal\n";
      return;
    case SplitCertificate::Kind::Zero:
      out << pad << "zero ideal\n";
      return;
    case SplitCertificate::Kind::Principal:
      out << pad << "principal (" << to_string(*c.gen) << ")\n";
      return;
    case SplitCertificate::Kind::Split:
      out << pad << to_string(c.ideal) << " = x" << c.var << "*inner + outer\n";
      out << pad << "inner:\n";
      print_certificate(*c.inner, out, indent + 1);
      out << pad << "outer:\n";
      print_certificate(*c.outer, out, indent + 1);
      return;
  }
}

json betti_json(const BettiTable& table, bool quotient) {
  json entries = json::array();
  if (quotient) {
    entries.push_back({0, 0, 1});
    for (const auto& [ij, b] : table.entries()) entries.push_back({ij.first + 1, ij.second, b});
    return json{{"entries", std::move(entries)},
                {"proj_dim", table.quotient_proj_dim()},
                {"regularity", table.quotient_regularity()}};
  }
  for (const auto& [ij, b] : table.entries()) entries.push_back({ij.first, ij.second, b});
  json j{{"entries", std::move(entries)}};
  if (!table.empty()) {
    j["proj_dim"] = table.proj_dim();
    j["regularity"] = table.regularity();
  }
  return j;
}

void print_betti(const BettiTable& table, bool quotient, std::ostream& out) {
  std::map<std::pair<int, int>, long long> cells;
  if (quotient) {
    cells[{0, 0}] = 1;
    for (const auto& [ij, b] : table.entries()) cells[{ij.first + 1, ij.second}] = b;
  } else {
    for (const auto& [ij, b] : table.entries()) cells[{ij.first, ij.second}] = b;
  }
  if (cells.empty()) {
    out << "zero ideal: empty resolution\n";
    return;
  }
  int max_i = 0;
  int min_j = cells.begin()->first.second;
  int max_j = min_j;
  for (const auto& [ij, b] : cells) {
    (void)b;
    max_i = std::max(max_i, ij.first);
    min_j = std::min(min_j, ij.second);
    max_j = std::max(max_j, ij.second);
  }
  std::vector<size_t> width(static_cast<size_t>(max_j - min_j) + 1);
  for (int j = min_j; j <= max_j; ++j) {
    size_t w = std::to_string(j).size() + 2;
    for (int i = 0; i <= max_i; ++i) {
      auto it = cells.find({i, j});
      if (it != cells.end()) w = std::max(w, std::to_string(it->second).size());
    }
    width[static_cast<size_t>(j - min_j)] = w;
  }
  size_t row_label = std::string("i=" + std::to_string(max_i)).size();
  out << std::string(row_label, ' ');
  for (int j = min_j; j <= max_j; ++j) {
    std::string head = "j=" + std::to_string(j);
    out << "  " << std::string(width[static_cast<size_t>(j - min_j)] - head.size(), ' ') << head;
  }
  out << "\n";
  for (int i = 0; i <= max_i; ++i) {
    std::string label = "i=" + std::to_string(i);
    out << label << std::string(row_label - label.size(), ' ');
    for (int j = min_j; j <= max_j; ++j) {
      auto it = cells.find({i, j});
      std::string cell = it == cells.end() ? "." : std::to_string(it->second);
      out << "  " << std::string(width[static_cast<size_t>(j - min_j)] - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
}

void print_explanation(const CmExplanation& e, std::ostream& out, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  out << pad << e.kind << " " << to_string(e.ideal);
  if (e.kind != "unit") out << ": cm " << yn(e.cm) << ", depth " << e.depth << ", dim " << e.krull_dim;
  if (e.kind == "split") {
    out << ", split at x" << e.var;
    if (e.hypothesis) {
      out << "; colon cm " << yn(*e.cm_colon) << " depth " << *e.depth_colon << ", sum cm "
          << yn(*e.cm_sum) << " depth " << *e.depth_sum << "; step verdict "
          << yn(*e.theorem_verdict) << (*e.agrees ? " (agrees)" : " (DISAGREES)");
    } else {
      out << "; degree-one generator present, step not applicable";
    }
  }
  out << "\n";
  if (e.inner) print_explanation(*e.inner, out, indent + 1);
  if (e.outer) print_explanation(*e.outer, out, indent + 1);
}

int cmd_split(const std::string& file, bool as_json, std::ostream& out) {
  MonomialIdeal I = parse_ideal_file(file);
  Splitter splitter;
  CertPtr cert = splitter.certify(I);
  if (!cert) {
    if (as_json)
      out << json{{"splittable", false}}.dump() << "\n";
    else
      out << "vertex splittable: no\n";
    return 1;
  }
  if (as_json) {
    json j = json::parse(certificate_json(*cert));
    out << json{{"certificate", std::move(j)}, {"splittable", true}}.dump() << "\n";
  } else {
    out << "vertex splittable: yes\n";
    print_certificate(*cert, out, 0);
  }
  return 0;
}

int cmd_betti(const std::string& file, bool as_json, bool quotient, std::ostream& out,
              std::ostream& err) {
  MonomialIdeal I = parse_ideal_file(file);
  Splitter splitter;
  CertPtr cert = splitter.certify(I);
  if (!cert) {
    err << "not vertex splittable; the Betti recursion does not apply\n";
    return 1;
  }
  BettiTable table = betti_table(*cert);
  if (as_json) {
    out << betti_json(table, quotient).dump() << "\n";
  } else {
    out << "graded Betti numbers of " << (quotient ? "S/I" : "I") << " for I = " << to_string(I)
        << "\n";
    print_betti(table, quotient, out);
  }
  return 0;
}

int cmd_cm(const std::string& file, bool as_json, bool explain, bool use_oracle,
           std::uint32_t field_p, std::ostream& out, std::ostream& err) {
  MonomialIdeal I = parse_ideal_file(file);
  if (!I.is_proper_nonzero()) {
    err << "the CM report covers proper nonzero ideals\n";
    return 2;
  }
  Splitter splitter;
  CertPtr cert = splitter.certify(I);
  if (!cert) {
    if (!use_oracle) {
      err << "not vertex splittable; rerun with --oracle for a resolution-based check\n";
      return 2;
    }
    gf::FieldSpec field(field_p);
    BettiTable table = taylor_betti(I, field);
    int depth = depth_oracle(I, field);
    int dim = I.krull_dim_quotient();
    bool cm = depth == dim;
    int proj_dim = table.quotient_proj_dim();
    int reg = table.quotient_regularity();
    json j{{"cm", cm},     {"depth", depth},       {"dim", dim},
           {"projdim", proj_dim}, {"reg", reg},   {"route", "oracle"}};
    if (cm) {
      long long type = table.quotient_total(proj_dim);
      j["cm_type"] = type;
      j["gorenstein"] = type == 1;
      int nonzero_cols = 0;
      for (const auto& [ij, b] : table.entries()) {
        (void)b;
        if (ij.first == proj_dim - 1) ++nonzero_cols;
      }
      j["level"] = nonzero_cols == 1;
      j["pseudo_gorenstein"] = table.quotient_at(proj_dim, proj_dim + reg) == 1;
    }
    if (as_json) {
      out << j.dump() << "\n";
    } else {
      out << "route: oracle resolution over GF(" << field_p << ")\n";
      out << "cm: " << yn(cm) << "\ndepth: " << depth << "\ndim: " << dim
          << "\nproj dim: " << proj_dim << "\nreg: " << reg << "\n";
      if (cm)
        out << "cm type: " << j["cm_type"].get<long long>() << "\ngorenstein: "
            << yn(j["gorenstein"].get<bool>()) << "\nlevel: " << yn(j["level"].get<bool>())
            << "\npseudo-gorenstein: " << yn(j["pseudo_gorenstein"].get<bool>()) << "\n";
    }
    return cm ? 0 : 1;
  }

  HomologicalSummary s = analyze(*cert);
  json j{{"cm", s.cm},           {"depth", s.depth},   {"dim", s.krull_dim},
         {"projdim", s.proj_dim}, {"reg", s.reg},      {"gorenstein", s.gorenstein},
         {"route", "split"}};
  if (s.cm_type) j["cm_type"] = *s.cm_type;
  if (s.level) j["level"] = *s.level;
  if (s.pseudo_gorenstein) j["pseudo_gorenstein"] = *s.pseudo_gorenstein;
  std::unique_ptr<CmExplanation> tree;
  if (explain) {
    tree = explain_cm(*cert, splitter);
    if (as_json) j["explanation"] = json::parse(explanation_json(*tree));
  }
  if (as_json) {
    out << j.dump() << "\n";
  } else {
    out << "cm: " << yn(s.cm) << "\ndepth: " << s.depth << "\ndim: " << s.krull_dim
        << "\nproj dim: " << s.proj_dim << "\nreg: " << s.reg << "\n";
    if (s.cm_type) out << "cm type: " << *s.cm_type << "\n";
    out << "gorenstein: " << yn(s.gorenstein) << "\n";
    if (s.level) out << "level: " << yn(*s.level) << "\n";
    if (s.pseudo_gorenstein) out << "pseudo-gorenstein: " << yn(*s.pseudo_gorenstein) << "\n";
    if (tree) {
      out << "inductive explanation:\n";
      print_explanation(*tree, out, 1);
    }
  }
  return s.cm ? 0 : 1;
}

std::vector<int> parse_gaps(const std::string& text) {
  std::vector<int> gaps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      gaps.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad gap vector entry '" + item + "'");
    }
  }
  if (gaps.empty()) throw ParseError("empty gap vector");
  return gaps;
}

int cmd_classify(const std::string& file, bool poly, const std::string& tspread, bool as_json,
                 std::ostream& out, std::ostream& err) {
  if (poly == !tspread.empty()) {
    err << "pick exactly one of --polymatroidal / --tspread\n";
    return 2;
  }
  MonomialIdeal I = parse_ideal_file(file);
  if (poly) {
    bool comp = is_componentwise_polymatroidal(I);
    bool single = I.is_equigenerated() && is_polymatroidal(I);
    json j{{"componentwise_polymatroidal", comp}, {"polymatroidal", single}};
    if (single && I.is_proper_nonzero()) {
      auto cls = classify_cm_polymatroidal(I);
      j["class"] = to_string(cls.tag);
      j["cm"] = cls.tag != PolymatroidalClass::NotCM;
    }
    if (as_json) {
      out << j.dump() << "\n";
    } else {
      out << "polymatroidal: " << yn(single) << "\ncomponentwise polymatroidal: " << yn(comp)
          << "\n";
      if (j.contains("class"))
        out << "cm class: " << j["class"].get<std::string>() << " (cm: "
            << yn(j["cm"].get<bool>()) << ")\n";
    }
    return comp ? 0 : 1;
  }

  SpreadVector t(parse_gaps(tspread));
  bool spread = true;
  for (const Monomial& g : I.gens()) {
    try {
      if (!is_tspread_monomial(g, t)) spread = false;
    } catch (const std::exception&) {
      spread = false;  // generator degree above what the gap vector supports
    }
    if (!spread) break;
  }
  bool stable = spread && is_tspread_strongly_stable(I, t);
  json j{{"tspread", spread}, {"tspread_strongly_stable", stable}};
  if (stable && I.is_proper_nonzero() && I.inside_m_squared()) {
    auto witness = tspread_cm_witness(I, t);
    bool conclusive = tspread_witness_conclusive(I, t);
    j["witness_present"] = witness.has_value();
    j["witness_conclusive"] = conclusive;
    if (witness) j["cm_witness"] = to_string(*witness);
    // a missing witness refutes CM outright; a present one proves it only
    // where the test is conclusive (equigenerated or all gaps zero)
    if (!witness)
      j["cm"] = false;
    else if (conclusive)
      j["cm"] = true;
  }
  if (as_json) {
    out << j.dump() << "\n";
  } else {
    out << "t-spread: " << yn(spread) << "\nt-spread strongly stable: " << yn(stable) << "\n";
    if (j.contains("cm")) {
      out << "cm: " << yn(j["cm"].get<bool>());
      if (j.contains("cm_witness")) out << " (witness " << j["cm_witness"].get<std::string>() << ")";
      out << "\n";
    } else if (j.contains("witness_present")) {
      out << "cm: undecided by the witness test (witness " << j["cm_witness"].get<std::string>()
          << " present, but mixed generator degrees with nonzero gaps); use the cm subcommand\n";
    }
  }
  return stable ? 0 : 1;
}

int cmd_bicm(const std::string& file, bool as_json, std::ostream& out) {
  SimpleGraph G = parse_graph_file(file);
  BicmReport r = bicm(G);
  if (as_json) {
    json j{{"bicm", r.bicm}, {"cochordal", r.cochordal}, {"peo", r.peo}};
    if (r.proj_dim) j["projdim"] = *r.proj_dim;
    if (r.violation)
      j["witness_violation"] = json{{"position_i", r.violation->position_i},
                                    {"position_j", r.violation->position_j},
                                    {"vertex_i", r.violation->vertex_i},
                                    {"vertex_j", r.violation->vertex_j},
                                    {"forward_i", r.violation->forward_i},
                                    {"forward_j", r.violation->forward_j}};
    out << j.dump() << "\n";
  } else {
    out << "bi-cm: " << yn(r.bicm) << "\ncomplement chordal: " << yn(r.cochordal) << "\n";
    if (!r.peo.empty()) {
      out << "order:";
      for (int v : r.peo) out << " " << v;
      out << "\n";
    }
    if (r.proj_dim) out << "proj dim S/I(G): " << *r.proj_dim << "\n";
    if (r.violation)
      out << "violation: positions " << r.violation->position_i << "," << r.violation->position_j
          << " (vertices " << r.violation->vertex_i << "," << r.violation->vertex_j
          << ") forward degrees " << r.violation->forward_i << "," << r.violation->forward_j
          << "\n";
  }
  return r.bicm ? 0 : 1;
}

int cmd_verify(const std::string& file, std::uint32_t field_p, bool as_json, std::ostream& out,
               std::ostream& err) {
  std::string bytes = read_file(file);
  MonomialIdeal I = parse_ideal_text(bytes);
  if (I.is_unit()) {
    err << "the unit ideal has no minimal resolution to compare\n";
    return 2;
  }
  if (I.num_gens() > 20) {
    err << "oracle comparison is capped at 20 generators\n";
    return 2;
  }
  Stopwatch total;
  Splitter splitter;
  Stopwatch split_time;
  CertPtr cert = splitter.certify(I);
  long long ms_split = split_time.ms();
  if (!cert) {
    if (as_json) {
      json verdicts{{"match", nullptr}, {"splittable", false}};
      out << run_report("verify", fnv1a_hex(bytes), std::move(verdicts),
                        json{{"split_ms", ms_split}, {"total_ms", total.ms()}})
                 .dump()
          << "\n";
    } else {
      out << "not vertex splittable; nothing to compare\n";
    }
    return 1;
  }
  BettiTable recursive = betti_table(*cert);
  gf::FieldSpec field(field_p);
  Stopwatch oracle_time;
  BettiTable oracle = taylor_betti(I, field);
  long long ms_oracle = oracle_time.ms();
  bool match = recursive == oracle;
  if (as_json) {
    json verdicts{{"field", field_p},
                  {"match", match},
                  {"splittable", true},
                  {"entries", static_cast<long long>(recursive.entries().size())}};
    out << run_report("verify", fnv1a_hex(bytes), std::move(verdicts),
                      json{{"oracle_ms", ms_oracle},
                           {"split_ms", ms_split},
                           {"total_ms", total.ms()}})
               .dump()
        << "\n";
  } else {
    out << "recursive vs oracle Betti table over GF(" << field_p << "): "
        << (match ? "match" : "MISMATCH") << "\n";
    print_betti(recursive, false, out);
    if (!match) {
      out << "oracle says:\n";
      print_betti(oracle, false, out);
    }
  }
  return match ? 0 : 1;
}

int cmd_gen(const std::vector<int>& veronese_nd, const std::vector<int>& sqfree_nd,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (veronese_nd.empty() == sqfree_nd.empty()) {
    err << "pick exactly one of --veronese / --sqfree-veronese\n";
    return 2;
  }
  MonomialIdeal I = veronese_nd.empty() ? squarefree_veronese(sqfree_nd[0], sqfree_nd[1])
                                        : veronese(veronese_nd[0], veronese_nd[1]);
  std::string text = ideal_file_text(I);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + out_path + "'");
    f << text;
  }
  return 0;
}

int cmd_corpus(const std::string& kind, int n, int count, int max_gens, int max_deg, int degree,
               std::uint64_t seed, std::uint32_t field_p, bool check, bool as_json,
               std::ostream& out, std::ostream& err) {
  std::vector<MonomialIdeal> ideals;
  if (kind == "antichain") {
    ideals = enumerate_antichain_ideals(n, max_gens, max_deg);
  } else if (kind == "random") {
    ideals = random_ideals(n, count, max_gens, max_deg, seed);
  } else if (kind == "polymatroidal") {
    ideals = enumerate_polymatroidal(n, degree, max_gens);
  } else {
    err << "unknown corpus kind '" << kind << "' (antichain|random|polymatroidal)\n";
    return 2;
  }

  Stopwatch total;
  gf::FieldSpec field(field_p);
  Splitter splitter;
  std::atomic<long long> splittable{0}, checked{0}, skipped{0}, mismatches{0}, errors{0};
  std::mutex log_mutex;
  std::vector<std::string> bad;
  parallel_for(ideals.size(), [&](std::size_t k) {
    const MonomialIdeal& I = ideals[k];
    try {
      CertPtr cert = splitter.certify(I);
      if (!cert) return;
      splittable.fetch_add(1);
      if (!check) return;
      if (I.num_gens() > 20) {
        skipped.fetch_add(1);
        return;
      }
      BettiTable recursive = betti_table(*cert);
      BettiTable oracle = taylor_betti(I, field);
      checked.fetch_add(1);
      if (!(recursive == oracle)) {
        mismatches.fetch_add(1);
        std::lock_guard<std::mutex> lock(log_mutex);
        if (bad.size() < 10) bad.push_back(to_string(I));
      }
    } catch (const std::exception& e) {
      errors.fetch_add(1);
      std::lock_guard<std::mutex> lock(log_mutex);
      if (bad.size() < 10) bad.push_back(to_string(I) + ": " + e.what());
    }
  });

  std::string params = kind + " n=" + std::to_string(n) + " count=" + std::to_string(count) +
                       " max_gens=" + std::to_string(max_gens) +
                       " max_deg=" + std::to_string(max_deg) +
                       " degree=" + std::to_string(degree) + " seed=" + std::to_string(seed);
  json verdicts{{"checked", checked.load()},
                {"errors", errors.load()},
                {"field", field_p},
                {"kind", kind},
                {"mismatches", mismatches.load()},
                {"skipped", skipped.load()},
                {"splittable", splittable.load()},
                {"total", static_cast<long long>(ideals.size())}};
  if (!bad.empty()) verdicts["examples"] = bad;
  bool ok = mismatches.load() == 0 && errors.load() == 0;
  if (as_json) {
    out << run_report("corpus", fnv1a_hex(params), std::move(verdicts),
                      json{{"total_ms", total.ms()}})
               .dump()
        << "\n";
  } else {
    out << "corpus " << params << "\n"
        << "ideals: " << ideals.size() << ", splittable: " << splittable.load();
    if (check)
      out << ", oracle-checked: " << checked.load() << ", mismatches: " << mismatches.load()
          << ", skipped (cap): " << skipped.load() << ", errors: " << errors.load();
    out << "\n";
    for (const std::string& s : bad) out << "  problem: " << s << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certificates and invariants of monomial ideals via vertex splitting"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string file;
  bool as_json = false, quotient = false, explain = false, use_oracle = false;
  bool poly = false, check = true;
  std::string tspread, out_path, kind = "antichain";
  std::uint32_t field_p = 32003;
  std::uint64_t seed = 0;
  int n = 3, count = 100, max_gens = 4, max_deg = 3, degree = 2;
  std::vector<int> veronese_nd, sqfree_nd;

  auto* split_cmd = app.add_subcommand("split", "find a vertex-splittability certificate");
  split_cmd->add_option("file", file, "ideal file")->required();
  split_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* betti_cmd = app.add_subcommand("betti", "graded Betti numbers via the splitting recursion");
  betti_cmd->add_option("file", file, "ideal file")->required();
  betti_cmd->add_flag("--json", as_json, "machine-readable output");
  betti_cmd->add_flag("--quotient", quotient, "report the table of S/I instead of I");

  auto* cm_cmd = app.add_subcommand("cm", "Cohen-Macaulay classification");
  cm_cmd->add_option("file", file, "ideal file")->required();
  cm_cmd->add_flag("--json", as_json, "machine-readable output");
  cm_cmd->add_flag("--explain", explain, "emit the inductive CM recursion tree");
  cm_cmd->add_flag("--oracle", use_oracle, "fall back to the resolution oracle when unsplittable");
  cm_cmd->add_option("--field", field_p, "oracle prime (2 or 32003)")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "family membership tests");
  classify_cmd->add_option("file", file, "ideal file")->required();
  classify_cmd->add_flag("--json", as_json, "machine-readable output");
  classify_cmd->add_flag("--polymatroidal", poly, "(componentwise) polymatroidal tests");
  classify_cmd->add_option("--tspread", tspread, "gap vector, e.g. 1,0,2");

  auto* bicm_cmd = app.add_subcommand("bicm", "bi-Cohen-Macaulay graph recognition");
  bicm_cmd->add_option("file", file, "graph file")->required();
  bicm_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* verify_cmd = app.add_subcommand("verify", "recursion vs resolution oracle");
  verify_cmd->add_option("file", file, "ideal file")->required();
  verify_cmd->add_flag("--json", as_json, "machine-readable output");
  verify_cmd->add_option("--field", field_p, "oracle prime (2 or 32003)")->capture_default_str();

  auto* gen_cmd = app.add_subcommand("gen", "write generated family ideals");
  gen_cmd->add_option("--veronese", veronese_nd, "n d: all degree-d monomials")->expected(2);
  gen_cmd->add_option("--sqfree-veronese", sqfree_nd, "n d: squarefree degree-d monomials")
      ->expected(2);
  gen_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* corpus_cmd = app.add_subcommand("corpus", "batch certification over generated corpora");
  corpus_cmd->add_option("--kind", kind, "antichain|random|polymatroidal")->capture_default_str();
  corpus_cmd->add_option("--n", n, "number of variables")->capture_default_str();
  corpus_cmd->add_option("--count", count, "random sample size")->capture_default_str();
  corpus_cmd->add_option("--max-gens", max_gens, "generator cap")->capture_default_str();
  corpus_cmd->add_option("--max-deg", max_deg, "degree cap (antichain/random)")
      ->capture_default_str();
  corpus_cmd->add_option("--degree", degree, "generator degree (polymatroidal)")
      ->capture_default_str();
  corpus_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  corpus_cmd->add_option("--field", field_p, "oracle prime")->capture_default_str();
  corpus_cmd->add_flag("--check,!--no-check", check, "compare against the resolution oracle");
  corpus_cmd->add_flag("--json", as_json, "machine-readable output");

  std::vector<const char*> argv;
  argv.push_back("splitcm");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.got_subcommand(split_cmd)) return cmd_split(file, as_json, out);
    if (app.got_subcommand(betti_cmd)) return cmd_betti(file, as_json, quotient, out, err);
    if (app.got_subcommand(cm_cmd))
      return cmd_cm(file, as_json, explain, use_oracle, field_p, out, err);
    if (app.got_subcommand(classify_cmd))
      return cmd_classify(file, poly, tspread, as_json, out, err);
    if (app.got_subcommand(bicm_cmd)) return cmd_bicm(file, as_json, out);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(file, field_p, as_json, out, err);
    if (app.got_subcommand(gen_cmd)) return cmd_gen(veronese_nd, sqfree_nd, out_path, out, err);
    if (app.got_subcommand(corpus_cmd))
      return cmd_corpus(kind, n, count, max_gens, max_deg, degree, seed, field_p, check, as_json,
                        out, err);
    err << "no subcommand selected\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace splitcm
