#pragma once

#include "vuf/parabolic.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace vuf {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
/// Integer polynomial in q, coefficient of q^k at index k.
using IntPolynomial = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Minimal coset representatives of W / W_L, graded by length. Index k is the
/// class [X(reps[k])].
class SchubertBasis {
 public:
  explicit SchubertBasis(const LeviSubset& levi);

  const LeviSubset& levi() const { return levi_; }
  const std::vector<WeylElement>& reps() const { return reps_; }
  int size() const { return static_cast<int>(reps_.size()); }
  const WeylElement& operator[](int k) const { return reps_[k]; }
  /// Representative of the longest class (the longest minimal representative).
  const WeylElement& top() const { return reps_.back(); }
  std::optional<int> index_of(const WeylElement& w) const;

 private:
  LeviSubset levi_;
  std::vector<WeylElement> reps_;
};

/// d_w: sum of n_alpha over alpha in J with w(alpha) in I. w must be a
/// minimal coset representative for the datum's Levi subset.
int d_exponent(const WenzelDatum& d, const WeylElement& w);

enum class TransferDirection { Pushforward, Pullback };

/// Diagonal transfer matrix on the Schubert basis, kept as exponents of p.
struct TransferMatrix {
  TransferDirection direction;
  int p;
  Eigen::VectorXi exponents;

  int size() const { return static_cast<int>(exponents.size()); }
  /// Expanded integer matrix; throws InvariantError on int64 overflow.
  IntMatrix dense() const;
};

TransferMatrix pushforward_matrix(const WenzelDatum& d);
TransferMatrix pullback_matrix(const WenzelDatum& d);

/// Exponents of the composite a∘b (diagonal, so the order does not matter).
Eigen::VectorXi composite_exponents(const TransferMatrix& a, const TransferMatrix& b);

struct PrimePower {
  int p;
  std::int64_t exponent;
  /// p^exponent; throws InvariantError on overflow.
  std::int64_t value() const;
};

/// Order of coker(pi^*): product of p^{d_top - d_w} over the basis.
PrimePower cokernel_order(const WenzelDatum& d);

IntPolynomial poincare_polynomial(const LeviSubset& levi);
std::int64_t evaluate(const IntPolynomial& poly, std::int64_t q);

struct ChowRow {
  WeylElement rep;
  int d;
  int push;  // exponent of p in pi_*
  int pull;  // exponent of p in pi^*
};

std::vector<ChowRow> chow_table(const WenzelDatum& d);

}  // namespace vuf
