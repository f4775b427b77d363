#pragma once

#include "vuf/parabolic.hpp"

#include <span>
#include <vector>

namespace vuf {

/// Tuple (w_1, ..., w_r) of longest double-coset representatives, attached
/// to a Wenzel datum.
class BsdhWord {
 public:
  /// Throws InputError when an entry is not its own W_I normalization.
  BsdhWord(WenzelDatum datum, std::vector<WeylElement> entries);
  /// Replaces every entry by its longest double-coset representative first.
  static BsdhWord normalized(WenzelDatum datum, std::vector<WeylElement> entries);

  const WenzelDatum& datum() const { return datum_; }
  const std::vector<WeylElement>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const WeylElement& operator[](int i) const { return entries_[i]; }

 private:
  WenzelDatum datum_;
  std::vector<WeylElement> entries_;
};

enum class Exactness { Exact, TangentHeuristic };

struct ThickeningDirection {
  Root root;       // direction at the point, in translated coordinates
  int exponent;    // order p^exponent
  Root source;     // member of J the direction comes from
  bool flagged = false;  // lands back in J with a larger order; left unresolved
};

struct ThickeningReport {
  std::vector<ThickeningDirection> directions;
  Exactness exactness = Exactness::Exact;
  std::vector<WeylElement> residual_word;

  bool reduced() const { return directions.empty(); }
};

int dimension(const BsdhWord& word);

/// to_W_I of the Demazure product of the entries.
WeylElement geometric_star(const BsdhWord& word);

/// Fiber of p_1 over a point of the open cell of X_P(w_1): the directions
/// beta in J with w_1(beta) a root of P_red.
ThickeningReport first_projection_generic_fiber(const BsdhWord& word);

/// Root directions of the neighbourhood of the fixed point v in X_B(w),
/// written in v-translated coordinates.
struct LocalDirections {
  std::vector<Root> cell;   // v^{-1}(R+) ∩ R-
  std::vector<Root> slice;  // from distinguished subexpressions of v in normal_word(w)
  std::vector<Root> curves; // delta < 0 with v s_delta <= w: T-stable curves through v
  int distinguished = 0;    // number of distinguished subexpressions
  bool exact = false;
};

LocalDirections local_directions(const WeylElement& w, const WeylElement& v);

/// Fiber of p_1 over the torus-fixed point vP/P (Borel case, v <= w_1).
ThickeningReport first_projection_fixed_point_fiber(const BsdhWord& word, const WeylElement& v);

/// One report per coordinate 1..r-1 of a generic fiber of the last
/// projection (Borel case, reduced concatenation).
std::vector<ThickeningReport> last_projection_generic_fiber(const BsdhWord& word);
bool is_last_projection_birational(const BsdhWord& word);

/// Infinitesimal structure of PwP/P at wP/P (Borel case).
ThickeningReport schubert_cell_thickening(const WenzelDatum& datum, const WeylElement& w);

/// w0(Q-Levi) ⋆ w == w.
bool is_Q_type(const WenzelDatum& p_datum, const LeviSubset& q_levi, const WeylElement& w);

/// Grouped geometric Demazure products of the W_H images of the entries;
/// theta lists the 1-based cut points i_1 < ... < i_m <= r.
std::vector<WeylElement> convolution_targets(const WenzelDatum& p_datum, const LeviSubset& q_levi,
                                             std::span<const int> theta, const BsdhWord& word);

}  // namespace vuf
