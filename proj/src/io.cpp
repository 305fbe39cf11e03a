#include "zetaeq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace zetaeq {

namespace {

std::string strip(std::string s) {
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::size_t parse_count(const std::string& w, std::size_t line) {
  if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a nonnegative integer, got '" + w + "'");
  try {
    return std::stoul(w);
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range: '" + w + "'");
  }
}

std::size_t parse_vertex(const std::string& w, std::size_t n, std::size_t line) {
  const std::size_t v = parse_count(w, line);
  if (v < 1 || v > n) throw ParseError(line, "vertex " + w + " out of range 1.." + std::to_string(n));
  return v - 1;
}

Rational parse_rational(const std::string& w, std::size_t line) {
  if (w.empty() || w.find_first_not_of("+-0123456789/") != std::string::npos)
    throw ParseError(line, "expected a rational p/q, got '" + w + "'");
  Rational r;
  try {
    r = Rational(w[0] == '+' ? w.substr(1) : w);
  } catch (const std::exception&) {
    throw ParseError(line, "malformed rational '" + w + "'");
  }
  if (r.get_den() == 0) throw ParseError(line, "zero denominator in '" + w + "'");
  r.canonicalize();
  return r;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

EdgeListFile parse_edge_list(std::istream& in) {
  EdgeListFile file;
  std::optional<std::size_t> n;
  bool weighted = false;
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto w = words(strip(raw));
    if (w.empty()) continue;
    if (!n) {
      if (w.size() != 2 || w[0] != "n") throw ParseError(line_no, "expected 'n <count>' before anything else");
      n = parse_count(w[1], line_no);
      file.graph = Digraph(*n);
      continue;
    }
    if (w[0] == "weighted") {
      if (w.size() != 1 || weighted || file.graph.edge_count() != 0)
        throw ParseError(line_no, "'weighted' must appear once, before any edge");
      weighted = true;
      file.weighted = WeightedDigraph(*n);
      continue;
    }
    if (w[0] == "native") {
      if (w.size() != 3 || file.natives) throw ParseError(line_no, "expected a single 'native <t> <h>' line");
      const std::size_t t = parse_vertex(w[1], *n, line_no), h = parse_vertex(w[2], *n, line_no);
      if (t == h) throw ParseError(line_no, "native vertices must differ");
      file.natives = std::make_pair(t, h);
      continue;
    }
    if (w.size() < 2 || w.size() > 3) throw ParseError(line_no, "expected 'u v' or 'u v w'");
    const std::size_t u = parse_vertex(w[0], *n, line_no), v = parse_vertex(w[1], *n, line_no);
    if (w.size() == 3 && !weighted) throw ParseError(line_no, "edge weight in an unweighted file");
    if (weighted) {
      const Rational wt = w.size() == 3 ? parse_rational(w[2], line_no) : Rational(1);
      if (sgn(wt) == 0) throw ParseError(line_no, "edge weights must be nonzero");
      if (file.weighted->has_edge(u, v)) throw ParseError(line_no, "weighted digraphs cannot have parallel edges");
      file.weighted->set_weight(u, v, wt);
    }
    file.graph.add_edge(u, v);
  }
  if (!n) throw ParseError(line_no, "missing 'n <count>' line");
  return file;
}

EdgeListFile parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

EdgeListFile read_edge_list(const std::string& path) { return parse_edge_list(read_file(path)); }

Invader parse_invader(const std::string& text) {
  EdgeListFile f = parse_edge_list(text);
  if (f.weighted) throw ParseError(0, "invaders are unweighted");
  if (!f.natives) throw ParseError(0, "invader file needs a 'native <t> <h>' line");
  return Invader(std::move(f.graph), f.natives->first, f.natives->second);
}

Invader read_invader(const std::string& path) { return parse_invader(read_file(path)); }

SwitchingPartition parse_partition(const std::string& text) {
  std::istringstream in(text);
  std::map<std::size_t, std::vector<std::size_t>> v, vp, w;
  SwitchingPartition p;
  bool have_x = false, have_phi = false;
  std::size_t line_no = 0;
  auto vertex = [&](const std::string& s) {
    const std::size_t k = parse_count(s, line_no);
    if (k < 1) throw ParseError(line_no, "vertices are numbered from 1");
    return k - 1;
  };
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected '<block>: <vertices>'");
    const std::string label = strip(line.substr(0, colon));
    const auto items = words(line.substr(colon + 1));
    if (label == "X") {
      if (have_x) throw ParseError(line_no, "duplicate X line");
      have_x = true;
      for (const auto& s : items) p.x.push_back(vertex(s));
    } else if (label == "phi") {
      if (have_phi) throw ParseError(line_no, "duplicate phi line");
      have_phi = true;
      for (const auto& s : items) {
        const auto arrow = s.find("->");
        if (arrow == std::string::npos) throw ParseError(line_no, "expected 'a->b', got '" + s + "'");
        const std::size_t a = vertex(s.substr(0, arrow)), b = vertex(s.substr(arrow + 2));
        if (!p.phi.emplace(a, b).second) throw ParseError(line_no, "phi defined twice on " + s.substr(0, arrow));
      }
    } else if (label.size() >= 2 && (label[0] == 'V' || label[0] == 'W')) {
      const bool prime = label.back() == '\'';
      const std::string digits = label.substr(1, label.size() - 1 - (prime ? 1 : 0));
      const std::size_t index = parse_count(digits, line_no);
      if (index < 1) throw ParseError(line_no, "block indices start at 1");
      if (label[0] == 'W' && prime) throw ParseError(line_no, "W blocks have no primed version");
      auto& target = label[0] == 'W' ? w : (prime ? vp : v);
      if (target.count(index)) throw ParseError(line_no, "duplicate block " + label);
      auto& block = target[index];
      for (const auto& s : items) block.push_back(vertex(s));
      if (block.empty()) throw ParseError(line_no, "empty block " + label);
    } else {
      throw ParseError(line_no, "unknown block label '" + label + "'");
    }
  }
  auto collect = [&](const std::map<std::size_t, std::vector<std::size_t>>& m, const char* what) {
    std::vector<std::vector<std::size_t>> out;
    std::size_t expect = 1;
    for (const auto& [k, b] : m) {
      if (k != expect++) throw ParseError(line_no, std::string(what) + " blocks must be numbered 1, 2, ...");
      out.push_back(b);
    }
    return out;
  };
  p.v_blocks = collect(v, "V");
  p.v_prime_blocks = collect(vp, "V'");
  p.w_blocks = collect(w, "W");
  if (p.v_blocks.size() != p.v_prime_blocks.size()) throw ParseError(line_no, "every V block needs a V' block");
  if (!have_phi) {
    for (std::size_t i = 0; i < p.v_blocks.size(); ++i) {
      if (p.v_blocks[i].size() != p.v_prime_blocks[i].size()) throw ParseError(line_no, "V_i and V'_i differ in size");
      for (std::size_t k = 0; k < p.v_blocks[i].size(); ++k) p.phi[p.v_blocks[i][k]] = p.v_prime_blocks[i][k];
    }
  }
  return p;
}

SwitchingPartition read_partition(const std::string& path) { return parse_partition(read_file(path)); }

std::string format_edge_list(const Digraph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.tail + 1 << ' ' << e.head + 1 << '\n';
  return os.str();
}

std::string format_edge_list(const WeightedDigraph& g) {
  std::ostringstream os;
  os << "n " << g.order() << "\nweighted\n";
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (g.has_edge(i, j)) os << i + 1 << ' ' << j + 1 << ' ' << to_string(g.weight(i, j)) << '\n';
  return os.str();
}

std::string format_invader(const Invader& s) {
  std::string text = format_edge_list(s.graph());
  const auto first_newline = text.find('\n');
  return text.insert(first_newline + 1, "native " + std::to_string(s.tail_native() + 1) + ' ' +
                                            std::to_string(s.head_native() + 1) + '\n');
}

std::string format_partition(const SwitchingPartition& p) {
  std::ostringstream os;
  auto list = [&](const std::vector<std::size_t>& b) {
    for (auto v : b) os << ' ' << v + 1;
    os << '\n';
  };
  for (std::size_t i = 0; i < p.v_blocks.size(); ++i) {
    os << 'V' << i + 1 << ':';
    list(p.v_blocks[i]);
    os << 'V' << i + 1 << "':";
    list(p.v_prime_blocks[i]);
  }
  for (std::size_t k = 0; k < p.w_blocks.size(); ++k) {
    os << 'W' << k + 1 << ':';
    list(p.w_blocks[k]);
  }
  os << "X:";
  list(p.x);
  if (!p.phi.empty()) {
    os << "phi:";
    for (const auto& [a, b] : p.phi) os << ' ' << a + 1 << "->" << b + 1;
    os << '\n';
  }
  return os.str();
}

}  // namespace zetaeq
