#include <random>

#include "burau_oracle.hpp"
#include "doctest.h"
#include "lgkit/errors.hpp"
#include "lgkit/parse.hpp"
#include "lgkit/skein.hpp"

using namespace lgkit;

namespace {

HalfLaurent H(const char* s) { return parse_half_laurent(s); }

HalfLaurent alex(const char* word, std::optional<int> strands = std::nullopt) {
  return conway(parse_braid(word, strands));
}

}  // namespace

TEST_CASE("named links") {
  CHECK(alex("") == HalfLaurent(1));
  CHECK(alex("1 -1") == HalfLaurent(0));
  CHECK(alex("", 2) == HalfLaurent(0));
  CHECK(alex("1") == HalfLaurent(1));
  CHECK(alex("1 1") == H("s - s^-1"));
  CHECK(alex("-1 -1") == H("-s + s^-1"));
  CHECK(alex("1 1 1") == H("s^2 - 1 + s^-2"));
  CHECK(alex("-1 -1 -1") == H("s^2 - 1 + s^-2"));
  CHECK(alex("1 -2 1 -2") == H("-s^2 + 3 - s^-2"));
  CHECK(alex("1 1 1 1 1") == H("s^4 - s^2 + 1 - s^-2 + s^-4"));
  CHECK(alex("1 2 1 2 1 2 1 2") == H("s^6 - s^4 + 1 - s^-4 + s^-6"));
  CHECK(alex("1 1 1 2 -1 2") == H("2*s^2 - 3 + 2*s^-2"));
  CHECK(alex("1 2 1 2") == H("s^2 - 1 + s^-2"));
  CHECK(alex("1 2 1 2 1 2", 3) == H("s^4 - s^2 - s^-2 + s^-4"));
}

TEST_CASE("agrees with the Burau determinant up to a unit") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 250; ++n) {
    const BraidWord b = random_braid(rng, 1, 4, 10);
    const HalfLaurent d = conway(b);
    INFO(render_braid(b), " on ", b.strands, " strands: ", d.to_string());
    CHECK(burau::matches_up_to_unit(b, d));
  }
}

TEST_CASE("structural identities") {
  std::mt19937_64 rng(32);
  for (int n = 0; n < 250; ++n) {
    const BraidWord b = random_braid(rng, 1, 4, 10);
    const OrientedDiagram d = braid_closure(b);
    const HalfLaurent a = conway(d);
    const int c = static_cast<int>(d.component_count());
    CHECK(a.inverted() == (c % 2 == 1 ? a : -a));
    CHECK(a.evaluate(1) == (c == 1 ? 1 : 0));
    CHECK(a.has_only_even_powers() == (c % 2 == 1 || a.is_zero()));
    BraidWord mirror = b;
    for (auto& l : mirror.letters) l.sign = -l.sign;
    CHECK(conway(mirror) == a.inverted());
    if (is_split(d)) CHECK(a.is_zero());
  }
}

TEST_CASE("invariant under isotopy rewrites") {
  std::mt19937_64 rng(33);
  for (int n = 0; n < 150; ++n) {
    BraidWord b = random_braid(rng, 1, 4, 8);
    const HalfLaurent a = conway(b);
    for (int step = 0; step < 5; ++step) {
      const auto [move, next] = random_move(b, rng, 5);
      INFO(render_braid(b), " -> ", move_name(move), " -> ", render_braid(next));
      CHECK(conway(next) == a);
      b = next;
    }
  }
}

TEST_CASE("resolution tree") {
  const ResolutionNode root{braid_closure(parse_braid("1 1 1")), HalfLaurent(1), 0};
  CHECK_FALSE(root.is_terminal());
  const auto children = root.expand();
  REQUIRE(children.size() == 2);
  CHECK(children[0].diagram.crossing_count() == 3);
  CHECK(children[1].diagram.crossing_count() == 2);
  CHECK(children[0].depth == 1);
  // Summing terminal values over the fully expanded tree gives the polynomial.
  std::vector<ResolutionNode> stack = {root};
  HalfLaurent total;
  int guard = 0;
  while (!stack.empty() && ++guard < 10000) {
    ResolutionNode node = stack.back();
    stack.pop_back();
    if (node.is_terminal()) {
      total += node.multiplier * node.terminal_value();
      continue;
    }
    for (auto& child : node.expand()) stack.push_back(std::move(child));
  }
  CHECK(total == H("s^2 - 1 + s^-2"));
  const ResolutionNode unknot{braid_closure(parse_braid("")), HalfLaurent(1), 0};
  CHECK(unknot.is_terminal());
  CHECK(unknot.terminal_value() == HalfLaurent(1));
  const ResolutionNode split{braid_closure(parse_braid("", 2)), HalfLaurent(1), 0};
  CHECK(split.is_terminal());
  CHECK(split.terminal_value().is_zero());
}

TEST_CASE("memo table and budget") {
  ConwayEngine engine;
  const OrientedDiagram d = braid_closure(parse_braid("1 2 1 2 1 2 1 2"));
  const HalfLaurent a = engine.evaluate(d);
  const std::size_t size = engine.memo_size();
  CHECK(size > 0);
  CHECK(engine.evaluate(d) == a);
  CHECK(engine.memo_size() == size);
  CHECK_THROWS_AS(conway(parse_braid("1 1 1 1 1 1"), ConwayOptions{5}), ResourceLimitExceeded);
  CHECK_NOTHROW(conway(parse_braid("1 1 1 1 1"), ConwayOptions{5}));
}

TEST_CASE("substitution s -> tau^m") {
  const OrientedDiagram trefoil = braid_closure(parse_braid("1 1 1"));
  CHECK(conway_substituted(trefoil, 1) == parse_laurent("t^2 - 1 + t^-2"));
  CHECK(conway_substituted(trefoil, 3) == parse_laurent("t^6 - 1 + t^-6"));
}
