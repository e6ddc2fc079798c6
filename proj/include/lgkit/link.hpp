#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgkit {

struct BraidLetter {
  int index = 1;  // sigma_index acts on strands index and index + 1 (1-based)
  int sign = 1;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  // Image of each strand position under the underlying permutation.
  std::vector<int> permutation() const;
  int cycle_count() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Whitespace-separated nonzero integers; k > 0 is sigma_k, k < 0 its inverse.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);
std::string render_braid(const BraidWord& b);

struct Crossing {
  int id = 0;
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Visit {
  int crossing = 0;
  bool over = false;
  friend bool operator==(const Visit&, const Visit&) = default;
};

// A closed component listed from its basepoint in the direction of travel.
// A component with no visits is a crossingless circle.
struct Component {
  std::vector<Visit> visits;
  friend bool operator==(const Component&, const Component&) = default;
};

class OrientedDiagram {
 public:
  OrientedDiagram() = default;
  // Throws MalformedDiagram unless each crossing is visited exactly twice,
  // once over and once under.
  OrientedDiagram(std::vector<Crossing> crossings, std::vector<Component> components);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t component_count() const { return components_.size(); }
  int writhe() const;
  bool has_crossing(int id) const;
  int sign_of(int id) const;

  friend bool operator==(const OrientedDiagram&, const OrientedDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  std::vector<Component> components_;
};

OrientedDiagram braid_closure(const BraidWord& b);

OrientedDiagram switch_crossing(const OrientedDiagram& d, int id);
OrientedDiagram smooth_crossing(const OrientedDiagram& d, int id);
// Renames crossing ids; the map must be injective on the ids present.
OrientedDiagram relabel(const OrientedDiagram& d, const std::map<int, int>& ids);

bool is_split(const OrientedDiagram& d);
std::string canonical_key(const OrientedDiagram& d);

// First crossing met on its under-strand when traversing components in
// order from their basepoints, if any.
std::optional<int> first_descending_violation(const OrientedDiagram& d);

// Elementary pieces of a sliced diagram. Maps read bottom to top; V is an
// upward strand, V* a downward one.
enum class Piece {
  Up,                // id_V
  Down,              // id_V*
  PositiveCrossing,  // R : V (x) V -> V (x) V
  NegativeCrossing,  // R^-1
  CapN,              // n  : V (x) V* -> C
  CapNTilde,         // n~ : V* (x) V -> C
  CupU,              // u  : C -> V (x) V*
  CupUTilde,         // u~ : C -> V* (x) V
};

enum class Strand { V, VDual };

std::vector<Strand> piece_inputs(Piece p);
std::vector<Strand> piece_outputs(Piece p);
bool is_identity_piece(Piece p);
std::string piece_name(Piece p);

class SlicedDiagram {
 public:
  using Row = std::vector<Piece>;

  // Throws MalformedDiagram when adjacent rows do not match or a row holds
  // more than one crossing or critical point.
  SlicedDiagram(std::vector<Strand> bottom, std::vector<Row> rows);

  const std::vector<Strand>& bottom() const { return bottom_; }
  const std::vector<Strand>& top() const { return top_; }
  const std::vector<Row>& rows() const { return rows_; }

  std::string to_string() const;

 private:
  std::vector<Strand> bottom_;
  std::vector<Strand> top_;
  std::vector<Row> rows_;
};

enum class ClosureSide { Right, Left };

// Braid closure as a sliced diagram: cups below, one crossing per row, caps
// above. With open_first set, strand 1 (or the last strand for a left closure)
// stays open, giving the (1,1)-tangle whose bracket is the invariant times id.
SlicedDiagram to_sliced(const BraidWord& b, bool open_first = false,
                        ClosureSide side = ClosureSide::Right);


// Rewrites that preserve the closure up to isotopy.
enum class BraidMove {
  InsertInversePair,  // Reidemeister II: insert sigma_i^e sigma_i^-e
  CancelInversePair,
  BraidRelation,      // sigma_i sigma_j sigma_i -> sigma_j sigma_i sigma_j, |i - j| = 1
  InsertRelator,      // insert sigma_i sigma_j sigma_i (sigma_j sigma_i sigma_j)^-1
  FarCommutation,     // swap adjacent letters with |i - j| >= 2
  Conjugation,        // move the first letter to the end
  Stabilization,      // append sigma_n^{+-1} on n + 1 strands
  Destabilization,
};

std::string move_name(BraidMove m);

// Applies the move at a letter position, or returns nothing if it does not
// apply there. sign selects the orientation of inserted letters.
std::optional<BraidWord> apply_move(const BraidWord& b, BraidMove move, std::size_t position, int sign = 1,
                                    int max_strands = 4);

// Picks a random applicable move.
std::pair<BraidMove, BraidWord> random_move(const BraidWord& b, std::mt19937_64& rng, int max_strands = 4);

BraidWord random_braid(std::mt19937_64& rng, int min_strands, int max_strands, int max_letters);

}  // namespace lgkit
