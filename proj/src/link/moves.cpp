#include <algorithm>
#include <cstdlib>

#include "lgkit/link.hpp"

namespace lgkit {

std::string move_name(BraidMove m) {
  switch (m) {
    case BraidMove::InsertInversePair: return "insert-inverse-pair";
    case BraidMove::CancelInversePair: return "cancel-inverse-pair";
    case BraidMove::BraidRelation: return "braid-relation";
    case BraidMove::InsertRelator: return "insert-relator";
    case BraidMove::FarCommutation: return "far-commutation";
    case BraidMove::Conjugation: return "conjugation";
    case BraidMove::Stabilization: return "stabilization";
    case BraidMove::Destabilization: return "destabilization";
  }
  return "?";
}

namespace {

using Letters = std::vector<BraidLetter>;

std::ptrdiff_t at(std::size_t p) { return static_cast<std::ptrdiff_t>(p); }

}  // namespace

std::optional<BraidWord> apply_move(const BraidWord& b, BraidMove move, std::size_t position, int sign,
                                    int max_strands) {
  const Letters& w = b.letters;
  const int e = sign >= 0 ? 1 : -1;
  BraidWord out = b;
  Letters& o = out.letters;
  switch (move) {
    case BraidMove::InsertInversePair: {
      if (b.strands < 2 || position > w.size()) return std::nullopt;
      const int i = static_cast<int>(position % static_cast<std::size_t>(b.strands - 1)) + 1;
      o.insert(o.begin() + at(position), {BraidLetter{i, e}, BraidLetter{i, -e}});
      return out;
    }
    case BraidMove::CancelInversePair: {
      if (position + 1 >= w.size()) return std::nullopt;
      if (w[position].index != w[position + 1].index || w[position].sign != -w[position + 1].sign) {
        return std::nullopt;
      }
      o.erase(o.begin() + at(position), o.begin() + at(position) + 2);
      return out;
    }
    case BraidMove::BraidRelation: {
      if (position + 2 >= w.size()) return std::nullopt;
      const auto& x = w[position];
      const auto& y = w[position + 1];
      const auto& z = w[position + 2];
      if (x != z || x.sign != y.sign || std::abs(x.index - y.index) != 1) return std::nullopt;
      o[position] = y;
      o[position + 1] = x;
      o[position + 2] = y;
      return out;
    }
    case BraidMove::InsertRelator: {
      if (b.strands < 3 || position > w.size()) return std::nullopt;
      const int i = static_cast<int>(position % static_cast<std::size_t>(b.strands - 2)) + 1;
      const int j = i + 1;
      o.insert(o.begin() + at(position), {BraidLetter{i, e}, BraidLetter{j, e}, BraidLetter{i, e},
                                           BraidLetter{j, -e}, BraidLetter{i, -e}, BraidLetter{j, -e}});
      return out;
    }
    case BraidMove::FarCommutation: {
      if (position + 1 >= w.size() || std::abs(w[position].index - w[position + 1].index) < 2) {
        return std::nullopt;
      }
      std::swap(o[position], o[position + 1]);
      return out;
    }
    case BraidMove::Conjugation: {
      if (w.empty()) return std::nullopt;
      std::rotate(o.begin(), o.begin() + 1, o.end());
      return out;
    }
    case BraidMove::Stabilization: {
      if (b.strands >= max_strands) return std::nullopt;
      out.strands = b.strands + 1;
      o.push_back(BraidLetter{b.strands, e});
      return out;
    }
    case BraidMove::Destabilization: {
      if (w.empty() || b.strands < 2) return std::nullopt;
      const int top = b.strands - 1;
      if (w.back().index != top) return std::nullopt;
      const bool elsewhere = std::any_of(w.begin(), w.end() - 1, [top](const BraidLetter& l) { return l.index == top; });
      if (elsewhere) return std::nullopt;
      o.pop_back();
      out.strands = b.strands - 1;
      return out;
    }
  }
  return std::nullopt;
}

std::pair<BraidMove, BraidWord> random_move(const BraidWord& b, std::mt19937_64& rng, int max_strands) {
  static constexpr BraidMove moves[] = {
      BraidMove::InsertInversePair, BraidMove::CancelInversePair, BraidMove::BraidRelation,
      BraidMove::InsertRelator,     BraidMove::FarCommutation,    BraidMove::Conjugation,
      BraidMove::Stabilization,     BraidMove::Destabilization,
  };
  std::vector<std::pair<BraidMove, BraidWord>> options;
  std::uniform_int_distribution<int> coin(0, 1);
  for (BraidMove m : moves) {
    for (std::size_t p = 0; p <= b.letters.size(); ++p) {
      if (auto r = apply_move(b, m, p, coin(rng) == 0 ? 1 : -1, max_strands)) options.emplace_back(m, std::move(*r));
    }
  }
  // InsertInversePair always applies, so options is never empty.
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  return options[pick(rng)];
}

BraidWord random_braid(std::mt19937_64& rng, int min_strands, int max_strands, int max_letters) {
  std::uniform_int_distribution<int> strands_dist(min_strands, max_strands);
  std::uniform_int_distribution<int> length_dist(0, max_letters);
  BraidWord b;
  b.strands = strands_dist(rng);
  if (b.strands < 2) return b;
  std::uniform_int_distribution<int> index_dist(1, b.strands - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int length = length_dist(rng);
  for (int k = 0; k < length; ++k) b.letters.push_back(BraidLetter{index_dist(rng), sign_dist(rng) == 0 ? 1 : -1});
  return b;
}

}  // namespace lgkit
