#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgkit/half_laurent.hpp"
#include "lgkit/laurent.hpp"
#include "lgkit/link.hpp"

namespace lgkit {

// One node of the skein resolution tree: contributes multiplier * Delta(diagram).
struct ResolutionNode {
  OrientedDiagram diagram;
  HalfLaurent multiplier;
  int depth = 0;

  // Terminal nodes (split or descending) have a known value and no children.
  bool is_terminal() const;
  HalfLaurent terminal_value() const;
  // Children after applying the skein relation at the first descending
  // violation: Delta(L) = Delta(switched) + sign * (s - s^-1) * Delta(smoothed).
  std::vector<ResolutionNode> expand() const;
};

struct ConwayOptions {
  std::size_t crossing_budget = 64;
};

// Alexander-Conway polynomial in s = t^(1/2) with a memo table keyed on
// canonical diagrams. The table is shared by concurrent callers.
class ConwayEngine {
 public:
  explicit ConwayEngine(ConwayOptions options = {});

  HalfLaurent evaluate(const OrientedDiagram& d);
  std::size_t memo_size() const;

 private:
  HalfLaurent resolve(const OrientedDiagram& d);

  ConwayOptions options_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, HalfLaurent> memo_;
};

HalfLaurent conway(const OrientedDiagram& d, ConwayOptions options = {});
HalfLaurent conway(const BraidWord& b, ConwayOptions options = {});

// conway(d) with s -> tau^m.
Laurent2 conway_substituted(const OrientedDiagram& d, int m, ConwayOptions options = {});

}  // namespace lgkit
