#include "lgkit/errors.hpp"
#include "lgkit/skein.hpp"

namespace lgkit {

namespace {

const HalfLaurent& s_minus_inverse() {
  static const HalfLaurent z = HalfLaurent::s(1) - HalfLaurent::s(-1);
  return z;
}

}  // namespace

bool ResolutionNode::is_terminal() const {
  return is_split(diagram) || !first_descending_violation(diagram);
}

HalfLaurent ResolutionNode::terminal_value() const {
  // A descending diagram is an unlink; split links vanish by the skein relation.
  if (is_split(diagram)) return HalfLaurent();
  if (first_descending_violation(diagram)) throw std::logic_error("node is not terminal");
  return diagram.component_count() == 1 ? HalfLaurent(1) : HalfLaurent();
}

std::vector<ResolutionNode> ResolutionNode::expand() const {
  const auto violation = first_descending_violation(diagram);
  if (!violation) return {};
  const int sign = diagram.sign_of(*violation);
  HalfLaurent smooth_factor = s_minus_inverse() * HalfLaurent(sign);
  return {ResolutionNode{switch_crossing(diagram, *violation), multiplier, depth + 1},
          ResolutionNode{smooth_crossing(diagram, *violation), multiplier * smooth_factor, depth + 1}};
}

ConwayEngine::ConwayEngine(ConwayOptions options) : options_(options) {}

std::size_t ConwayEngine::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

HalfLaurent ConwayEngine::evaluate(const OrientedDiagram& d) {
  if (d.crossing_count() > options_.crossing_budget) {
    throw ResourceLimitExceeded("diagram has " + std::to_string(d.crossing_count()) +
                                " crossings; the budget is " + std::to_string(options_.crossing_budget));
  }
  return resolve(d);
}

HalfLaurent ConwayEngine::resolve(const OrientedDiagram& d) {
  const std::string key = canonical_key(d);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  ResolutionNode node{d, HalfLaurent(1), 0};
  HalfLaurent value;
  if (node.is_terminal()) {
    value = node.terminal_value();
  } else {
    for (const auto& child : node.expand()) value += child.multiplier * resolve(child.diagram);
  }
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

HalfLaurent conway(const OrientedDiagram& d, ConwayOptions options) {
  ConwayEngine engine(options);
  return engine.evaluate(d);
}

HalfLaurent conway(const BraidWord& b, ConwayOptions options) { return conway(braid_closure(b), options); }

Laurent2 conway_substituted(const OrientedDiagram& d, int m, ConwayOptions options) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  return conway(d, options).substitute_power(m);
}

}  // namespace lgkit
