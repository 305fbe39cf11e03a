// Text formats: edge lists (optionally weighted, optionally with native
// vertices for invaders) and switching partitions. Vertices are 1-based in
// every file.
//
//   n 5
//   weighted        # optional; edge lines may then carry a rational weight
//   native 1 3      # invader files only
//   1 2
//   2 3 1/2
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "zetaeq/digraph.hpp"
#include "zetaeq/invasion.hpp"
#include "zetaeq/switching.hpp"

namespace zetaeq {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListFile {
  Digraph graph;                           // support, with multiplicities
  std::optional<WeightedDigraph> weighted;  // present for `weighted` files
  std::optional<std::pair<std::size_t, std::size_t>> natives;  // 0-based
};

EdgeListFile parse_edge_list(std::istream& in);
EdgeListFile parse_edge_list(const std::string& text);
/// Throws std::runtime_error if the file cannot be opened.
EdgeListFile read_edge_list(const std::string& path);

/// Edge list plus a `native t h` line; throws ParseError when the line is missing.
Invader parse_invader(const std::string& text);
Invader read_invader(const std::string& path);

/// Lines `V1: 1 2`, `V1': 3 4`, `W1: 5 6`, `X: 9`, `phi: 1->3 2->4`. Without a
/// phi line, V_i is mapped onto V'_i in listed order.
SwitchingPartition parse_partition(const std::string& text);
SwitchingPartition read_partition(const std::string& path);

std::string format_edge_list(const Digraph& g);
std::string format_edge_list(const WeightedDigraph& g);
std::string format_invader(const Invader& s);
std::string format_partition(const SwitchingPartition& p);

std::string read_file(const std::string& path);

}  // namespace zetaeq
