// Exhaustive enumeration of small simple digraphs and graphs up to
// isomorphism, and mining of zeta-equivalent non-isomorphic classes.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetaeq/digraph.hpp"
#include "zetaeq/poly.hpp"

namespace zetaeq {

enum class SearchMode { digraph, graph };
/// `strong` means strongly connected; for graphs it coincides with `weak`.
enum class Connectivity { none, weak, strong };

inline constexpr std::size_t kMaxGraphOrder = 7;
inline constexpr std::size_t kMaxDigraphOrder = 5;

struct SearchConfig {
  std::size_t n = 0;
  SearchMode mode = SearchMode::digraph;
  Connectivity connectivity = Connectivity::none;
  std::uint64_t seed = 1;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Throws std::invalid_argument when n exceeds the cap for the mode.
void check_search_caps(const SearchConfig& config);

/// Bit i of a mask is the i-th off-diagonal entry in row-major order (digraphs)
/// or the i-th upper-triangular entry (graphs).
std::size_t mask_bits(std::size_t n, SearchMode mode);
Digraph from_mask(std::size_t n, SearchMode mode, std::uint64_t mask);

struct EnumeratedDigraph {
  std::uint64_t mask;
  Digraph graph;  // canonical form
};

/// One canonical representative per isomorphism class passing the
/// connectivity filter, in increasing mask order.
std::vector<EnumeratedDigraph> enumerate(const SearchConfig& config);

/// eta (digraph mode) or eta-bar (graph mode) of `g` at `fingerprint_point(seed)`,
/// computed as a determinant modulo kFingerprintPrime. Equals
/// `fingerprint(eta(g).poly, seed)` resp. `fingerprint(eta_bar(g).poly, seed)`.
std::uint64_t eta_fingerprint(const Digraph& g, SearchMode mode, std::uint64_t seed);

struct EquivalenceClass {
  MultiPoly polynomial;  // shared eta / eta-bar
  std::vector<EnumeratedDigraph> members;
};

struct EquivalenceClassReport {
  SearchConfig config;
  std::size_t enumerated = 0;          // canonical representatives examined
  std::size_t candidate_groups = 0;    // fingerprint groups of size >= 2
  std::vector<EquivalenceClass> classes;
  /// One paragraph per class: members in edge-list format and the shared polynomial.
  std::string to_text() const;
};

/// Groups by fingerprints at two points (seed, seed + 1), confirms each group
/// by exact polynomial equality, and keeps classes with at least two members.
EquivalenceClassReport mine_pairs(const SearchConfig& config);

/// Same classes computed by all-pairs exact comparison, without fingerprints.
EquivalenceClassReport mine_pairs_exact(const SearchConfig& config);

std::string to_string(SearchMode mode);
std::string to_string(Connectivity c);

}  // namespace zetaeq
