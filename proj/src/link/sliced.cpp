#include "lgkit/errors.hpp"
#include "lgkit/link.hpp"

namespace lgkit {

std::vector<Strand> piece_inputs(Piece p) {
  switch (p) {
    case Piece::Up: return {Strand::V};
    case Piece::Down: return {Strand::VDual};
    case Piece::PositiveCrossing:
    case Piece::NegativeCrossing: return {Strand::V, Strand::V};
    case Piece::CapN: return {Strand::V, Strand::VDual};
    case Piece::CapNTilde: return {Strand::VDual, Strand::V};
    case Piece::CupU:
    case Piece::CupUTilde: return {};
  }
  return {};
}

std::vector<Strand> piece_outputs(Piece p) {
  switch (p) {
    case Piece::Up: return {Strand::V};
    case Piece::Down: return {Strand::VDual};
    case Piece::PositiveCrossing:
    case Piece::NegativeCrossing: return {Strand::V, Strand::V};
    case Piece::CapN:
    case Piece::CapNTilde: return {};
    case Piece::CupU: return {Strand::V, Strand::VDual};
    case Piece::CupUTilde: return {Strand::VDual, Strand::V};
  }
  return {};
}

bool is_identity_piece(Piece p) { return p == Piece::Up || p == Piece::Down; }

std::string piece_name(Piece p) {
  switch (p) {
    case Piece::Up: return "|";
    case Piece::Down: return "!";
    case Piece::PositiveCrossing: return "R";
    case Piece::NegativeCrossing: return "R'";
    case Piece::CapN: return "n";
    case Piece::CapNTilde: return "n~";
    case Piece::CupU: return "u";
    case Piece::CupUTilde: return "u~";
  }
  return "?";
}

SlicedDiagram::SlicedDiagram(std::vector<Strand> bottom, std::vector<Row> rows)
    : bottom_(std::move(bottom)), rows_(std::move(rows)) {
  std::vector<Strand> boundary = bottom_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::vector<Strand> in;
    std::vector<Strand> out;
    int special = 0;
    for (Piece p : rows_[r]) {
      auto pi = piece_inputs(p);
      auto po = piece_outputs(p);
      in.insert(in.end(), pi.begin(), pi.end());
      out.insert(out.end(), po.begin(), po.end());
      if (!is_identity_piece(p)) ++special;
    }
    if (in != boundary) {
      throw MalformedDiagram("row " + std::to_string(r) + " does not match the boundary below it");
    }
    if (special > 1) {
      throw MalformedDiagram("row " + std::to_string(r) + " holds more than one crossing or critical point");
    }
    boundary = std::move(out);
  }
  top_ = std::move(boundary);
}

std::string SlicedDiagram::to_string() const {
  std::string out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    bool first = true;
    for (Piece p : *it) {
      if (!first) out += ' ';
      out += piece_name(p);
      first = false;
    }
    out += '\n';
  }
  return out;
}

namespace {

SlicedDiagram::Row repeat(Piece p, int count) {
  return SlicedDiagram::Row(static_cast<std::size_t>(std::max(count, 0)), p);
}

void append(SlicedDiagram::Row& row, const SlicedDiagram::Row& more) {
  row.insert(row.end(), more.begin(), more.end());
}

}  // namespace

SlicedDiagram to_sliced(const BraidWord& b, bool open_first, ClosureSide side) {
  const int n = b.strands;
  for (const auto& l : b.letters) {
    if (l.index < 1 || l.index >= n) throw MalformedDiagram("braid letter out of range");
  }
  const int open = open_first ? 1 : 0;
  const int closed = n - open;
  std::vector<SlicedDiagram::Row> rows;
  std::vector<Strand> bottom(static_cast<std::size_t>(open), Strand::V);

  if (side == ClosureSide::Right) {
    // Strand 1 stays open on the left; closed strands return on the right.
    for (int made = 0; made < closed; ++made) {
      SlicedDiagram::Row row = repeat(Piece::Up, open + made);
      row.push_back(Piece::CupU);
      append(row, repeat(Piece::Down, made));
      rows.push_back(std::move(row));
    }
    for (const auto& l : b.letters) {
      SlicedDiagram::Row row = repeat(Piece::Up, l.index - 1);
      row.push_back(l.sign > 0 ? Piece::PositiveCrossing : Piece::NegativeCrossing);
      append(row, repeat(Piece::Up, n - l.index - 1));
      append(row, repeat(Piece::Down, closed));
      rows.push_back(std::move(row));
    }
    for (int left = closed; left > 0; --left) {
      SlicedDiagram::Row row = repeat(Piece::Up, open + left - 1);
      row.push_back(Piece::CapN);
      append(row, repeat(Piece::Down, left - 1));
      rows.push_back(std::move(row));
    }
  } else {
    // The last strand stays open on the right; closed strands return on the left.
    for (int made = 0; made < closed; ++made) {
      SlicedDiagram::Row row = repeat(Piece::Down, made);
      row.push_back(Piece::CupUTilde);
      append(row, repeat(Piece::Up, made + open));
      rows.push_back(std::move(row));
    }
    for (const auto& l : b.letters) {
      SlicedDiagram::Row row = repeat(Piece::Down, closed);
      append(row, repeat(Piece::Up, l.index - 1));
      row.push_back(l.sign > 0 ? Piece::PositiveCrossing : Piece::NegativeCrossing);
      append(row, repeat(Piece::Up, n - l.index - 1));
      rows.push_back(std::move(row));
    }
    for (int left = closed; left > 0; --left) {
      SlicedDiagram::Row row = repeat(Piece::Down, left - 1);
      row.push_back(Piece::CapNTilde);
      append(row, repeat(Piece::Up, left - 1 + open));
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty() && !bottom.empty()) rows.push_back(repeat(Piece::Up, open));
  return SlicedDiagram(std::move(bottom), std::move(rows));
}

}  // namespace lgkit
