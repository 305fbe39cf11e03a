#include "zetaeq/figures.hpp"

#include <chrono>
#include <functional>

#include "zetaeq/charpoly.hpp"

namespace zetaeq {

namespace {

Digraph from_one_based(std::size_t n, std::initializer_list<std::pair<int, int>> arcs, bool symmetric) {
  Digraph g(n);
  for (auto [u, v] : arcs) {
    g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    if (symmetric) g.add_edge(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1));
  }
  return g;
}

Digraph fig1b_with(std::initializer_list<std::pair<int, int>> apex) {
  Digraph g = from_one_based(9,
                             {{5, 3}, {7, 2}, {1, 8}, {4, 6}, {5, 1}, {1, 2}, {2, 6}, {7, 3}, {3, 4}, {4, 8}, {5, 7}, {1, 3},
                              {2, 4}, {6, 8}},
                             true);
  for (auto [u, v] : apex) {
    g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    g.add_edge(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1));
  }
  return g;
}

}  // namespace

Digraph fig1a_left() { return from_one_based(5, {{1, 2}, {3, 2}, {2, 4}, {4, 3}, {4, 5}}, false); }
Digraph fig1a_right() { return from_one_based(5, {{1, 2}, {2, 3}, {3, 4}, {4, 2}, {4, 5}}, false); }
Digraph fig1b_left() { return fig1b_with({{9, 3}, {9, 4}, {9, 8}, {9, 7}}); }
Digraph fig1b_right() { return fig1b_with({{9, 1}, {9, 2}, {9, 6}, {9, 5}}); }

SwitchingPartition fig1b_partition() {
  SwitchingPartition p;
  p.v_blocks = {{0, 1}, {4, 5}};
  p.v_prime_blocks = {{2, 3}, {6, 7}};
  p.x = {8};
  for (std::size_t v : {0, 1, 4, 5}) p.phi[v] = v + 2;
  return p;
}

std::vector<FigureCheck> reproduce_figures() {
  std::vector<FigureCheck> out;
  auto run = [&](std::string name, const std::function<bool()>& f) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    out.push_back({std::move(name), ok, dt.count()});
  };
  const Digraph a = fig1a_left(), a2 = fig1a_right();
  const Digraph b = fig1b_left(), b2 = fig1b_right();
  run("fig1a eta equal", [&] { return eta(a).poly == eta(a2).poly; });
  run("fig1a non-isomorphic", [&] { return !is_isomorphic(a, a2); });
  run("fig1a conjugator", [&] { return verify_fig1a_conjugator().passed(); });
  run("fig1b eta_bar equal", [&] { return eta_bar(b).poly == eta_bar(b2).poly; });
  run("fig1b complements eta_bar equal", [&] { return eta_bar(complement(b)).poly == eta_bar(complement(b2)).poly; });
  run("fig1b degree sequences equal",
      [&] { return degree_sequence_from_eta_bar(eta_bar(b)) == degree_sequence_from_eta_bar(eta_bar(b2)); });
  run("fig1b non-isomorphic", [&] { return !is_isomorphic(b, b2, 9); });
  run("fig1b switching", [&] {
    const SwitchingPartition p = fig1b_partition();
    if (!validate_partition(b, p).valid()) return false;
    const Digraph s = perform_switching(b, p);
    return is_isomorphic(s, b2, 9) && certify(b, s, build_conjugators(b, p)).passed();
  });
  return out;
}

}  // namespace zetaeq
