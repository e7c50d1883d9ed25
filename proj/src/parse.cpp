#include "splitcm/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace splitcm {

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 1; i <= m.num_vars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string out = "(";
  for (size_t k = 0; k < I.num_gens(); ++k) {
    if (k) out += ", ";
    out += to_string(I.gens()[k]);
  }
  out += ')';
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

std::string trimmed(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  size_t b = line.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = line.find_last_not_of(" \t\r\n");
  return line.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) fail("bad " + what + ": '" + tok + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail("bad " + what + ": '" + tok + "'");
  }
}

}  // namespace

Monomial parse_monomial(const std::string& text, int num_vars) {
  std::string s = trimmed(text);
  if (s.empty()) fail("empty monomial");
  if (s == "1") return Monomial::one(num_vars);
  std::vector<int> exps(static_cast<size_t>(num_vars), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (!first) {
      if (pos >= s.size()) break;
      if (s[pos] != '*') fail("expected '*' in monomial '" + s + "'");
      ++pos;
      skip_ws();
    }
    first = false;
    if (pos >= s.size() || s[pos] != 'x') fail("expected a factor x<i> in monomial '" + s + "'");
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("missing variable index in monomial '" + s + "'");
    int var = parse_int(s.substr(start, pos - start), "variable index");
    if (var < 1 || var > num_vars)
      fail("variable x" + std::to_string(var) + " outside ring with " +
           std::to_string(num_vars) + " variables");
    int exp = 1;
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip_ws();
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("missing exponent in monomial '" + s + "'");
      exp = parse_int(s.substr(start, pos - start), "exponent");
      if (exp < 1) fail("exponent must be positive in monomial '" + s + "'");
    }
    exps[static_cast<size_t>(var) - 1] += exp;
  }
  return Monomial::from_exponents(std::move(exps));
}

MonomialIdeal parse_ideal(std::istream& in) {
  std::string line;
  int lineno = 0;
  int num_vars = -1;
  std::vector<Monomial> gens;
  bool unit = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trimmed(line);
    if (s.empty()) continue;
    try {
      if (num_vars < 0) {
        std::istringstream iss(s);
        std::string kw, arg, extra;
        iss >> kw >> arg;
        if (kw != "ring" || arg.empty() || (iss >> extra))
          fail("expected 'ring <n>' as the first line");
        num_vars = parse_int(arg, "variable count");
        if (num_vars < 1 || num_vars > 63) fail("variable count must be between 1 and 63");
        continue;
      }
      if (s == "1") {
        unit = true;
        continue;
      }
      gens.push_back(parse_monomial(s, num_vars));
    } catch (const ParseError& e) {
      fail("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (num_vars < 0) fail("missing 'ring <n>' line");
  RingContext ring(num_vars);
  if (unit) return MonomialIdeal::unit(ring);
  return MonomialIdeal::make(ring, std::move(gens));
}

MonomialIdeal parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

MonomialIdeal parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return parse_ideal(in);
  } catch (const ParseError& e) {
    fail(path + ": " + e.what());
  }
}

std::string ideal_file_text(const MonomialIdeal& I) {
  std::string out = "ring " + std::to_string(I.num_vars()) + "\n";
  for (const Monomial& g : I.gens()) out += to_string(g) + "\n";
  return out;
}

SimpleGraph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trimmed(line);
    if (s.empty()) continue;
    try {
      std::istringstream iss(s);
      std::string kw;
      iss >> kw;
      if (n < 0) {
        std::string arg, extra;
        iss >> arg;
        if (kw != "graph" || arg.empty() || (iss >> extra))
          fail("expected 'graph <n>' as the first line");
        n = parse_int(arg, "vertex count");
        continue;
      }
      if (kw != "edge") fail("expected 'edge <i> <j>', got '" + s + "'");
      std::string a, b, extra;
      iss >> a >> b;
      if (a.empty() || b.empty() || (iss >> extra)) fail("expected 'edge <i> <j>', got '" + s + "'");
      edges.emplace_back(parse_int(a, "vertex"), parse_int(b, "vertex"));
    } catch (const ParseError& e) {
      fail("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (n < 0) fail("missing 'graph <n>' line");
  try {
    return SimpleGraph::make(n, std::move(edges));
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

SimpleGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

SimpleGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    fail(path + ": " + e.what());
  }
}

std::string graph_file_text(const SimpleGraph& G) {
  std::string out = "graph " + std::to_string(G.n) + "\n";
  for (auto [a, b] : G.edges)
    out += "edge " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

}  // namespace splitcm
