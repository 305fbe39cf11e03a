#include "zetaeq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "zetaeq/charpoly.hpp"
#include "zetaeq/figures.hpp"
#include "zetaeq/identities.hpp"
#include "zetaeq/invasion.hpp"
#include "zetaeq/io.hpp"
#include "zetaeq/search.hpp"
#include "zetaeq/switching.hpp"
#include "zetaeq/zeta.hpp"

namespace zetaeq {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

Digraph read_unweighted(const std::string& path) {
  EdgeListFile f = read_edge_list(path);
  if (f.weighted) throw std::invalid_argument(path + ": expected an unweighted edge list");
  return std::move(f.graph);
}

struct EtaArgs {
  std::string file;
  bool graph = false;
  bool complete = false;
};

int cmd_eta(const EtaArgs& a, std::ostream& out) {
  const Digraph g = read_unweighted(a.file);
  if (a.graph && a.complete) throw std::invalid_argument("--graph and --complete are exclusive");
  if (a.graph) {
    out << eta_bar(g).poly.to_string() << '\n';
  } else if (a.complete) {
    out << eta_complete(g).to_string() << '\n';
  } else {
    out << eta(g).poly.to_string() << '\n';
  }
  return kTrue;
}

struct ZetaArgs {
  std::string file;
  ZetaSpecialization spec = ZetaSpecialization::full;
  bool closed_form = false;
  std::size_t trunc = 0;
  bool oracle = false;
};

int cmd_zeta(const ZetaArgs& a, std::ostream& out) {
  EdgeListFile f = read_edge_list(a.file);
  const WeightedDigraph g = f.weighted ? *f.weighted : WeightedDigraph::unit_weights(f.graph);
  if (a.oracle && a.trunc == 0) throw std::invalid_argument("--oracle needs --trunc L");
  if (a.trunc == 0) {
    if (!a.closed_form) {
      out << zeta_inverse(g, a.spec).to_string() << '\n';
    } else if (a.spec == ZetaSpecialization::reversing) {
      out << zeta_closed_form_reversing(g).to_string() << '\n';
    } else if (a.spec == ZetaSpecialization::outgoing) {
      out << zeta_closed_form_outgoing(g).to_string() << '\n';
    } else if (a.spec == ZetaSpecialization::ihara) {
      out << ihara_determinant(g.unweighted()).to_string() << '\n';
    } else {
      throw std::invalid_argument("--closed-form needs --spec reversing, outgoing or ihara");
    }
    return kTrue;
  }
  // Power sums tr(M^k) from log det(I - s M), with the specialization applied to M.
  const Point point = specialization_point(a.spec);
  const PolyMatrix m = build_bidirectional(g).transfer_matrix();
  PolyMatrix im = PolyMatrix::identity(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) im(i, j) -= MultiPoly::var(Var::t) * m(i, j).specialize(point);
  const MultiPoly det = det_fraction_free(im);
  std::vector<MultiPoly> c;
  for (unsigned j = 0; j <= det.degree(Var::t); ++j) c.push_back(det.coefficient(Var::t, j));
  const auto p = power_sums_from_determinant(c, a.trunc);
  bool agree = true;
  const WalkTally tally = a.oracle ? walk_series_oracle(g, a.trunc) : WalkTally{};
  for (std::size_t k = 1; k <= a.trunc; ++k) {
    out << "p" << k << " = " << p[k].to_string() << '\n';
    if (!a.oracle) continue;
    const MultiPoly walks = tally.by_length[k].specialize(point);
    out << "w" << k << " = " << walks.to_string() << '\n';
    agree = agree && walks == p[k];
  }
  if (a.oracle) out << (agree ? "walk oracle agrees\n" : "walk oracle disagrees\n");
  return agree ? kTrue : kFalse;
}

struct EquivArgs {
  std::string a, b;
  SearchMode mode = SearchMode::digraph;
};

int cmd_equiv(const EquivArgs& a, std::ostream& out) {
  const Digraph g = read_unweighted(a.a), h = read_unweighted(a.b);
  const bool same = a.mode == SearchMode::digraph ? zeta_equivalent_digraphs(g, h) : zeta_equivalent_graphs(g, h);
  out << (same ? "zeta-equivalent" : "not zeta-equivalent");
  if (same && g.order() <= 10) out << (is_isomorphic(g, h, 10) ? " (isomorphic)" : " (non-isomorphic)");
  out << '\n';
  return same ? kTrue : kFalse;
}

enum class CharPolyMode { none, formula, direct, both };

struct InvadeArgs {
  std::string invader, graph;
  bool symmetric = false;
  CharPolyMode charpoly = CharPolyMode::none;
  bool quiet = false;
};

int cmd_invade(const InvadeArgs& a, std::ostream& out) {
  const Invader s = read_invader(a.invader);
  const Digraph g = read_unweighted(a.graph);
  const Digraph invaded = a.symmetric ? symmetric_invade(s, g) : invade(s, g);
  if (!a.quiet) out << format_edge_list(invaded);
  MultiPoly formula, direct;
  if (a.charpoly == CharPolyMode::formula || a.charpoly == CharPolyMode::both)
    formula = a.symmetric ? symmetric_invasion_char_poly(s, g) : invasion_char_poly(s, g);
  if (a.charpoly == CharPolyMode::direct || a.charpoly == CharPolyMode::both)
    direct = characteristic_polynomial(invaded.adjacency());
  switch (a.charpoly) {
    case CharPolyMode::none: return kTrue;
    case CharPolyMode::formula: out << "charpoly: " << formula.to_string() << '\n'; return kTrue;
    case CharPolyMode::direct: out << "charpoly: " << direct.to_string() << '\n'; return kTrue;
    case CharPolyMode::both:
      out << "charpoly (formula): " << formula.to_string() << '\n';
      out << "charpoly (direct): " << direct.to_string() << '\n';
      out << (formula == direct ? "agree\n" : "disagree\n");
      return formula == direct ? kTrue : kFalse;
  }
  return kError;
}

struct SwitchArgs {
  std::string graph, partition, out_file;
  bool certify = false;
};

int cmd_switch(const SwitchArgs& a, std::ostream& out) {
  const Digraph g = read_unweighted(a.graph);
  const SwitchingPartition p = read_partition(a.partition);
  const ValidationReport report = validate_partition(g, p);
  if (!report.valid()) {
    out << report.summary();
    return kFalse;
  }
  const Digraph switched = perform_switching(g, p);
  if (a.out_file.empty()) {
    out << format_edge_list(switched);
  } else {
    std::ofstream f(a.out_file);
    if (!f) throw std::runtime_error("cannot write " + a.out_file);
    f << format_edge_list(switched);
  }
  if (!a.certify) return kTrue;
  const Certificate cert = certify(g, switched, build_conjugators(g, p), true);
  out << cert.summary();
  return cert.passed() ? kTrue : kFalse;
}

struct SearchArgs {
  SearchConfig config;
  bool connected = false;
  std::string out_file;
};

int cmd_search(SearchArgs a, std::ostream& out) {
  if (a.connected) a.config.connectivity = Connectivity::weak;
  const EquivalenceClassReport report = mine_pairs(a.config);
  if (a.out_file.empty()) {
    out << report.to_text();
  } else {
    std::ofstream f(a.out_file);
    if (!f) throw std::runtime_error("cannot write " + a.out_file);
    f << report.to_text();
    out << report.enumerated << " isomorphism classes, " << report.classes.size() << " zeta-equivalence classes\n";
  }
  return kTrue;
}

int cmd_verify(std::uint64_t seed, std::size_t trials, std::ostream& out) {
  bool ok = true;
  for (const auto& r : verify_identities(seed, trials)) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.trials << " trials)";
    if (!r.passed()) out << ": " << r.failures << " failures, first " << r.first_failure;
    out << '\n';
    ok = ok && r.passed();
  }
  return ok ? kTrue : kFalse;
}

int cmd_figures(std::ostream& out) {
  bool ok = true;
  for (const auto& c : reproduce_figures()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    ok = ok && c.passed;
  }
  return ok ? kTrue : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized characteristic polynomials, digraph zeta functions and zeta-equivalence"};
  app.name("zetaeq");
  app.require_subcommand(1);

  EtaArgs eta_args;
  auto* eta_cmd = app.add_subcommand("eta", "Print eta (or eta-bar with --graph, or the all-ones version)");
  eta_cmd->add_option("file", eta_args.file, "edge-list file")->required();
  eta_cmd->add_flag("--graph", eta_args.graph, "print det(xI + tu D + uu A) of a graph");
  eta_cmd->add_flag("--complete", eta_args.complete, "include the y J term");

  ZetaArgs zeta_args;
  const std::map<std::string, ZetaSpecialization> specs = {{"full", ZetaSpecialization::full},
                                                           {"reversing", ZetaSpecialization::reversing},
                                                           {"outgoing", ZetaSpecialization::outgoing},
                                                           {"ihara", ZetaSpecialization::ihara}};
  auto* zeta_cmd = app.add_subcommand("zeta-inv", "Print det(I - M) of a (weighted) digraph");
  zeta_cmd->add_option("file", zeta_args.file, "edge-list file, optionally weighted")->required();
  zeta_cmd->add_option("--spec", zeta_args.spec, "full, reversing, outgoing or ihara")
      ->transform(CLI::CheckedTransformer(specs, CLI::ignore_case).description(""));
  zeta_cmd->add_flag("--closed-form", zeta_args.closed_form, "use the vertex-level closed form");
  zeta_cmd->add_option("--trunc", zeta_args.trunc, "print tr(M^k) for k = 1..L from the log expansion")
      ->check(CLI::Range(1, 255));
  zeta_cmd->add_flag("--oracle", zeta_args.oracle, "also print closed-walk sums wK and compare them with pK");

  EquivArgs equiv_args;
  const std::map<std::string, SearchMode> modes = {{"digraph", SearchMode::digraph}, {"graph", SearchMode::graph}};
  auto* equiv_cmd = app.add_subcommand("equiv", "Decide zeta-equivalence (exit 0 yes, 1 no)");
  equiv_cmd->add_option("a", equiv_args.a, "first edge-list file")->required();
  equiv_cmd->add_option("b", equiv_args.b, "second edge-list file")->required();
  equiv_cmd->add_option("--mode", equiv_args.mode, "digraph or graph")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  InvadeArgs invade_args;
  const std::map<std::string, CharPolyMode> cp_modes = {
      {"formula", CharPolyMode::formula}, {"direct", CharPolyMode::direct}, {"both", CharPolyMode::both}};
  auto* invade_cmd = app.add_subcommand("invade", "Replace every edge of a digraph by a copy of an invader");
  invade_cmd->add_option("invader", invade_args.invader, "invader file (edge list with a native line)")->required();
  invade_cmd->add_option("graph", invade_args.graph, "edge-list file")->required();
  invade_cmd->add_flag("--symmetric", invade_args.symmetric, "one copy per undirected edge of a graph");
  invade_cmd->add_option("--charpoly", invade_args.charpoly, "formula, direct or both")
      ->transform(CLI::CheckedTransformer(cp_modes, CLI::ignore_case));
  invade_cmd->add_flag("--quiet", invade_args.quiet, "do not print the invaded digraph");

  SwitchArgs switch_args;
  auto* switch_cmd = app.add_subcommand("switch", "Validate a partition and switch a digraph");
  switch_cmd->add_option("graph", switch_args.graph, "edge-list file")->required();
  switch_cmd->add_option("partition", switch_args.partition, "partition file")->required();
  switch_cmd->add_flag("--certify", switch_args.certify, "check the conjugation certificate");
  switch_cmd->add_option("--out", switch_args.out_file, "write the switched digraph here");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Mine small digraphs or graphs for zeta-equivalent classes");
  search_cmd->add_option("--n", search_args.config.n, "number of vertices")->required()->check(CLI::Range(1, 7));
  search_cmd->add_option("--mode", search_args.config.mode, "digraph or graph")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  search_cmd->add_flag("--connected", search_args.connected, "only (weakly) connected ones");
  search_cmd->add_option("--seed", search_args.config.seed, "fingerprint seed");
  search_cmd->add_option("--workers", search_args.config.workers, "threads (0 = all cores)");
  search_cmd->add_option("--out", search_args.out_file, "write the report here");

  std::uint64_t verify_seed = 1;
  std::size_t verify_trials = 20;
  auto* verify_cmd = app.add_subcommand("verify-identities", "Run the randomized exact identity suites");
  verify_cmd->add_option("--seed", verify_seed, "random seed");
  verify_cmd->add_option("--trials", verify_trials, "instances per suite")->check(CLI::Range(1, 100000));

  auto* figures_cmd = app.add_subcommand("reproduce-figures", "Exact checks on the example pairs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*eta_cmd) return cmd_eta(eta_args, out);
    if (*zeta_cmd) return cmd_zeta(zeta_args, out);
    if (*equiv_cmd) return cmd_equiv(equiv_args, out);
    if (*invade_cmd) return cmd_invade(invade_args, out);
    if (*switch_cmd) return cmd_switch(switch_args, out);
    if (*search_cmd) return cmd_search(search_args, out);
    if (*verify_cmd) return cmd_verify(verify_seed, verify_trials, out);
    if (*figures_cmd) return cmd_figures(out);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.erase(nl);
    err << "error: " << msg << '\n';
    return kError;
  }
  return kError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace zetaeq
