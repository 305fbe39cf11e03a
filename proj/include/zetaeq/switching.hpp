// Switching of a simple digraph relative to a partition V + V' + W + X, and
// exact certificates that the switched digraph has the same generalized
// characteristic polynomial (and so does its complement).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "zetaeq/digraph.hpp"
#include "zetaeq/matrix.hpp"

namespace zetaeq {

/// Blocks V_1..V_p, V'_1..V'_p, W_1..W_q and X (0-based vertices) with a
/// bijection phi from V onto V' mapping V_i onto V'_i.
struct SwitchingPartition {
  std::vector<std::vector<std::size_t>> v_blocks;
  std::vector<std::vector<std::size_t>> v_prime_blocks;
  std::vector<std::vector<std::size_t>> w_blocks;
  std::vector<std::size_t> x;
  std::map<std::size_t, std::size_t> phi;
};

struct ValidationIssue {
  std::string condition;  // e.g. "(4)", "phi", "equitable W"
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  /// delta of each V block, taken from its first vertex and the first vertex of V'_i.
  std::vector<long> deltas;
  bool valid() const { return issues.empty(); }
  std::string summary() const;
};

/// Checks every hypothesis and reports every violation. Throws
/// std::invalid_argument for a malformed partition (overlap, missing vertex,
/// block size mismatch, phi not a bijection V_i -> V'_i) or a non-simple digraph.
ValidationReport validate_partition(const Digraph& g, const SwitchingPartition& p);

/// Complements the edges between each x in X and every block U in
/// {V_i + V'_i, W_k} that x is half-linked to or from. Throws
/// std::invalid_argument if the partition is invalid, std::logic_error if the
/// result differs from Q A Q.
Digraph perform_switching(const Digraph& g, const SwitchingPartition& p);

struct ConjugatorPair {
  RationalMatrix q;
  RationalMatrix r;
};

ConjugatorPair build_conjugators(const Digraph& g, const SwitchingPartition& p);

struct CertificateCheck {
  std::string name;
  bool passed;
};

struct Certificate {
  std::vector<CertificateCheck> checks;
  MultiPoly det_conjugator;  // det(Q + t R)
  bool passed() const;
  std::string summary() const;
};

/// Exact identities relating G, G' and the conjugators, plus det(Q + t R)
/// having no real root. With `compare_polynomials`, also compares eta of G, G'
/// and of their complements.
Certificate certify(const Digraph& g, const Digraph& switched, const ConjugatorPair& pair,
                    bool compare_polynomials = false);

/// The polynomial 5x5 conjugator of the smallest zeta-equivalent digraph pair.
PolyMatrix fig1a_conjugator();
/// M L_G = L_G' M, det M factorization, singular at tu = td = ud = 0.
Certificate verify_fig1a_conjugator();

/// Q_n = (2/n) J - I and R^sym_n = (2/n) J - 2 I.
RationalMatrix q_block(std::size_t n);
RationalMatrix r_sym_block(std::size_t n);
/// [[0, R^sym_n], [-R^sym_n, 0]].
RationalMatrix r_block(std::size_t n);

}  // namespace zetaeq
