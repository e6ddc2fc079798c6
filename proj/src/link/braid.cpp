#include <charconv>
#include <cstdlib>
#include <sstream>

#include "lgkit/errors.hpp"
#include "lgkit/link.hpp"

namespace lgkit {

std::vector<int> BraidWord::permutation() const {
  // position[s] = current position of the strand that started at s
  std::vector<int> at(static_cast<std::size_t>(strands));
  for (int s = 0; s < strands; ++s) at[static_cast<std::size_t>(s)] = s;
  std::vector<int> strand_at = at;
  for (const auto& l : letters) {
    std::swap(strand_at[static_cast<std::size_t>(l.index - 1)], strand_at[static_cast<std::size_t>(l.index)]);
  }
  for (int p = 0; p < strands; ++p) at[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p)])] = p;
  return at;
}

int BraidWord::cycle_count() const {
  const auto perm = permutation();
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
  }
  return cycles;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  BraidWord b;
  int max_index = 0;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ParseError("braid token '" + token + "' is not an integer");
    }
    if (value == 0) throw ParseError("braid letter 0 is not a generator");
    b.letters.push_back(BraidLetter{std::abs(value), value > 0 ? 1 : -1});
    max_index = std::max(max_index, std::abs(value));
  }
  if (strands) {
    if (*strands < 1) throw ParseError("strand count must be positive");
    if (max_index >= *strands) {
      throw ParseError("generator " + std::to_string(max_index) + " needs more than " +
                       std::to_string(*strands) + " strands");
    }
    b.strands = *strands;
  } else {
    b.strands = max_index + 1;
  }
  return b;
}

std::string render_braid(const BraidWord& b) {
  std::string out;
  for (const auto& l : b.letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

}  // namespace lgkit
