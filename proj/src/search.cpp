#include "zetaeq/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "zetaeq/charpoly.hpp"
#include "zetaeq/io.hpp"

namespace zetaeq {

std::string to_string(SearchMode mode) { return mode == SearchMode::digraph ? "digraph" : "graph"; }

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::none: return "none";
    case Connectivity::weak: return "weak";
    case Connectivity::strong: return "strong";
  }
  return "?";
}

void check_search_caps(const SearchConfig& config) {
  const std::size_t cap = config.mode == SearchMode::graph ? kMaxGraphOrder : kMaxDigraphOrder;
  if (config.n > cap)
    throw std::invalid_argument("exhaustive " + to_string(config.mode) + " search is capped at n = " +
                                std::to_string(cap));
}

std::size_t mask_bits(std::size_t n, SearchMode mode) {
  return mode == SearchMode::digraph ? n * (n - (n > 0 ? 1 : 0)) : n * (n - (n > 0 ? 1 : 0)) / 2;
}

Digraph from_mask(std::size_t n, SearchMode mode, std::uint64_t mask) {
  Digraph g(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = mode == SearchMode::graph ? i + 1 : 0; j < n; ++j) {
      if (i == j) continue;
      if ((mask >> bit++) & 1U) {
        g.set_multiplicity(i, j, 1);
        if (mode == SearchMode::graph) g.set_multiplicity(j, i, 1);
      }
    }
  }
  return g;
}

namespace {

bool reaches_all(const Digraph& g, bool forward) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      const long m = forward ? g.multiplicity(v, w) : g.multiplicity(w, v);
      if (m != 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool passes(const Digraph& g, Connectivity c) {
  switch (c) {
    case Connectivity::none: return true;
    case Connectivity::weak: return g.is_weakly_connected();
    case Connectivity::strong: return reaches_all(g, true) && reaches_all(g, false);
  }
  return false;
}

unsigned worker_count(const SearchConfig& config) {
  if (config.workers != 0) return config.workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<EnumeratedDigraph> enumerate_range(const SearchConfig& config, std::uint64_t lo, std::uint64_t hi) {
  std::vector<EnumeratedDigraph> out;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Digraph g = from_mask(config.n, config.mode, mask);
    if (!is_canonical(g, config.n) || !passes(g, config.connectivity)) continue;
    out.push_back({mask, std::move(g)});
  }
  return out;
}

MultiPoly exact_polynomial(const Digraph& g, SearchMode mode) {
  return mode == SearchMode::digraph ? eta(g).poly : eta_bar(g).poly;
}

std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> m) {
  const std::size_t n = m.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = modp::sub(0, det);
    }
    det = modp::mul(det, m[c][c]);
    const std::uint64_t inv = modp::inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = modp::mul(m[r][c], inv);
      for (std::size_t k = c; k < n; ++k) m[r][k] = modp::sub(m[r][k], modp::mul(f, m[c][k]));
    }
  }
  return det;
}

std::uint64_t residue(long v) {
  return v >= 0 ? static_cast<std::uint64_t>(v) % kFingerprintPrime
                : modp::sub(0, static_cast<std::uint64_t>(-v) % kFingerprintPrime);
}

EquivalenceClassReport finish(const SearchConfig& config, std::size_t enumerated, std::size_t groups,
                              std::vector<EquivalenceClass> classes) {
  for (auto& c : classes)
    std::sort(c.members.begin(), c.members.end(), [](const auto& a, const auto& b) { return a.mask < b.mask; });
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.members.front().mask < b.members.front().mask; });
  for (const auto& c : classes)
    for (std::size_t i = 0; i < c.members.size(); ++i)
      for (std::size_t j = i + 1; j < c.members.size(); ++j)
        if (is_isomorphic(c.members[i].graph, c.members[j].graph, config.n))
          throw std::logic_error("enumeration produced two isomorphic representatives");
  EquivalenceClassReport report;
  report.config = config;
  report.enumerated = enumerated;
  report.candidate_groups = groups;
  report.classes = std::move(classes);
  return report;
}

// Splits `members` by exact polynomial equality; keeps parts of size >= 2.
void confirm(const std::vector<const EnumeratedDigraph*>& members, SearchMode mode,
             std::vector<EquivalenceClass>& out) {
  std::map<std::string, EquivalenceClass> parts;
  for (const auto* m : members) {
    MultiPoly p = exact_polynomial(m->graph, mode);
    auto& part = parts[p.to_string()];
    if (part.members.empty()) part.polynomial = std::move(p);
    part.members.push_back(*m);
  }
  for (auto& [text, part] : parts)
    if (part.members.size() >= 2) out.push_back(std::move(part));
}

}  // namespace

std::vector<EnumeratedDigraph> enumerate(const SearchConfig& config) {
  check_search_caps(config);
  const std::uint64_t total = std::uint64_t{1} << mask_bits(config.n, config.mode);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(config), total));
  if (workers <= 1) return enumerate_range(config, 0, total);
  std::vector<std::vector<EnumeratedDigraph>> parts(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] { parts[w] = enumerate_range(config, lo, hi); });
  }
  for (auto& t : threads) t.join();
  std::vector<EnumeratedDigraph> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::uint64_t eta_fingerprint(const Digraph& g, SearchMode mode, std::uint64_t seed) {
  const auto pt = fingerprint_point(seed);
  const auto at = [&](Var v) { return pt[static_cast<std::size_t>(v)]; };
  const std::size_t n = g.order();
  const auto out = g.out_degrees(), in = g.in_degrees();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t a = residue(g.multiplicity(i, j));
      if (mode == SearchMode::graph) {
        m[i][j] = modp::mul(at(Var::uu), a);
      } else {
        m[i][j] = modp::add(modp::mul(at(Var::uu), a), modp::mul(at(Var::ud), residue(g.multiplicity(j, i))));
      }
    }
    std::uint64_t diag = modp::add(at(Var::x), modp::mul(at(Var::tu), residue(out[i])));
    if (mode == SearchMode::digraph) diag = modp::add(diag, modp::mul(at(Var::td), residue(in[i])));
    m[i][i] = modp::add(m[i][i], diag);
  }
  return det_mod(std::move(m));
}

EquivalenceClassReport mine_pairs(const SearchConfig& config) {
  const auto all = enumerate(config);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<const EnumeratedDigraph*>> groups;
  for (const auto& e : all)
    groups[{eta_fingerprint(e.graph, config.mode, config.seed),
            eta_fingerprint(e.graph, config.mode, config.seed + 1)}]
        .push_back(&e);
  std::vector<EquivalenceClass> classes;
  std::size_t candidates = 0;
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    ++candidates;
    confirm(members, config.mode, classes);
  }
  return finish(config, all.size(), candidates, std::move(classes));
}

EquivalenceClassReport mine_pairs_exact(const SearchConfig& config) {
  const auto all = enumerate(config);
  std::vector<const EnumeratedDigraph*> members;
  for (const auto& e : all) members.push_back(&e);
  std::vector<EquivalenceClass> classes;
  confirm(members, config.mode, classes);
  return finish(config, all.size(), 0, std::move(classes));
}

std::string EquivalenceClassReport::to_text() const {
  std::ostringstream os;
  os << "# " << to_string(config.mode) << " search, n = " << config.n << ", connectivity " << to_string(config.connectivity)
     << ", seed " << config.seed << '\n';
  os << "# " << enumerated << " isomorphism classes, " << classes.size() << " zeta-equivalence classes\n";
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& c = classes[k];
    os << "\nclass " << k + 1 << " (" << c.members.size() << " members)\n";
    os << (config.mode == SearchMode::digraph ? "eta: " : "eta_bar: ") << c.polynomial.to_string() << '\n';
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      os << "member " << i + 1 << '\n' << format_edge_list(c.members[i].graph);
    }
  }
  return os.str();
}

}  // namespace zetaeq
