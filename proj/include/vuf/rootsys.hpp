#pragma once

#include <Eigen/Dense>

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vuf {

enum class Family { A, B, C, D };

/// Integer coefficients of a root over the simple roots.
using RootVector = Eigen::VectorXi;

/// Index of a root inside its RootSystem. Positive roots occupy
/// [0, N), their negatives [N, 2N) in the same order.
struct Root {
  int index = -1;
  friend auto operator<=>(const Root&, const Root&) = default;
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Split semisimple root system of classical type, in simple-root coordinates.
///
/// Positive roots are ordered by height, then by descending lexicographic order
/// of their coefficient vectors, so the simple roots alpha_1, ..., alpha_n come
/// first in index order. Reflections and coroot pairings are tabulated at
/// construction; everything afterwards is a lookup.
class RootSystem {
 public:
  static RootSystemPtr build(Family family, int rank);
  /// Parses names such as "A2", "B3", "D4".
  static RootSystemPtr parse(std::string_view name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// cartan()(i, j) = <alpha_i^vee, alpha_j>.
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  int num_positive() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }

  const RootVector& coeffs(Root r) const { return coeffs_[r.index]; }
  bool is_positive(Root r) const { return r.index < num_positive_; }
  bool is_negative(Root r) const { return !is_positive(r); }
  Root negate(Root r) const {
    return {is_positive(r) ? r.index + num_positive_ : r.index - num_positive_};
  }
  Root simple(int i) const;
  int height(Root r) const { return coeffs_[r.index].sum(); }
  bool is_simple(Root r) const { return is_positive(r) && r.index < rank_; }

  std::optional<Root> find(const RootVector& v) const;

  /// s_{alpha_i}(theta).
  Root reflect(Root theta, int i) const;
  /// <theta^vee, alpha_i>.
  int pairing(Root theta, int i) const;

  /// Simple indices on which the root has a nonzero coefficient.
  std::vector<int> support(Root r) const;

  std::vector<Root> positive_roots() const;
  std::vector<Root> all_roots() const;

  /// "a", "b", ... for rank <= 26, else "1", "2", ...
  std::string simple_name(int i) const;
  std::optional<int> parse_simple_name(std::string_view token) const;
  /// Sum notation: "a+b", "-b", "-a-b", "2a+b".
  std::string root_name(Root r) const;
  /// Accepts sum notation or a bracketed coefficient list "[0,-1,0,0]".
  Root parse_root(std::string_view text) const;

 private:
  RootSystem(Family family, int rank, Eigen::MatrixXi form);

  Family family_;
  int rank_;
  Eigen::MatrixXi form_;  // symmetric, (alpha_i, alpha_j) scaled to integers
  Eigen::MatrixXi cartan_;
  int num_positive_ = 0;
  std::vector<RootVector> coeffs_;
  std::map<std::vector<int>, int> lookup_;
  std::vector<int> reflect_table_;  // [root * rank + i]
  std::vector<int> pairing_table_;  // [root * rank + i]
};

}  // namespace vuf
