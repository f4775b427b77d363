#pragma once

#include "vuf/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vuf {

enum class Validation { Permissive, Strict };

/// A direction of U(J, n): the negative root and its nilpotency exponent,
/// meaning the factor Spec k[T]/(T^{p^exponent}).
struct InfinitesimalRoot {
  Root root;
  int exponent = 1;
  friend bool operator==(const InfinitesimalRoot&, const InfinitesimalRoot&) = default;
};

/// Exponent per negative simple root; a missing key or std::nullopt means
/// the direction is absent (exponent infinity).
using SimpleProfile = std::map<int, std::optional<int>>;

bool is_prime(long long n);

/// Combinatorial data (I, J, n) plus characteristic of a parabolic P with
/// P_red = P_I and P ∩ U(-I) = U(J, n).
class WenzelDatum {
 public:
  /// Closure of a simple profile (Borel case only): a negative root beta is in
  /// J when some negative simple root -delta with finite exponent pairs
  /// positively with it, <beta^vee, -delta> > 0; n_beta is the least such
  /// exponent.
  static WenzelDatum from_profile(RootSystemPtr sys, const SimpleProfile& profile, int p);

  /// Stores (J, n) verbatim. Strict mode rejects data failing the closure
  /// rule; permissive mode records the failures as warnings.
  static WenzelDatum from_explicit(LeviSubset levi, std::vector<InfinitesimalRoot> entries, int p,
                                   Validation mode = Validation::Permissive);

  const RootSystemPtr& system() const { return levi_.system(); }
  const RootSystem& roots() const { return *levi_.system(); }
  const LeviSubset& levi() const { return levi_; }
  int characteristic() const { return p_; }

  /// Entries of J sorted by root index.
  const std::vector<InfinitesimalRoot>& entries() const { return entries_; }
  std::vector<Root> J() const;
  std::optional<int> exponent(Root r) const;
  bool contains(Root r) const { return exponent(r).has_value(); }
  bool is_reduced() const { return entries_.empty(); }
  bool is_borel() const { return levi_.is_borel(); }

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  WenzelDatum(LeviSubset levi, std::vector<InfinitesimalRoot> entries, int p);

  LeviSubset levi_;
  std::vector<InfinitesimalRoot> entries_;
  int p_;
  std::vector<std::string> warnings_;
};

/// Human-readable descriptions of every place the datum departs from the
/// closure rule; empty when the datum is closed.
std::vector<std::string> closure_violations(const WenzelDatum& d);

/// Sum of the exponents; deg(G/P_red -> G/P) = p^thickening_length.
int thickening_length(const WenzelDatum& d);

}  // namespace vuf
