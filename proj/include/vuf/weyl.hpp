#pragma once

#include "vuf/rootsys.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vuf {

/// Element of the Weyl group, stored canonically by its action on roots.
///
/// The root permutation decides equality; the length (number of inversions)
/// and the lexicographically least reduced word are derived at construction.
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr sys);
  static WeylElement simple_reflection(RootSystemPtr sys, int i);
  /// Product s_{word[0]} * s_{word[1]} * ... (the word need not be reduced).
  static WeylElement from_word(RootSystemPtr sys, std::span<const int> word);
  /// "e", "sa*sb", "s1*s2", or bare letters "a*b".
  static WeylElement parse(RootSystemPtr sys, std::string_view text);

  const RootSystemPtr& system() const { return sys_; }
  const RootSystem& roots() const { return *sys_; }

  Root operator()(Root theta) const { return {perm_[theta.index]}; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  const std::vector<int>& normal_word() const { return word_; }
  const std::vector<int>& root_permutation() const { return perm_; }

  /// l(s_i w) < l(w).
  bool has_left_descent(int i) const;
  /// l(w s_i) < l(w).
  bool has_right_descent(int i) const;

  std::string to_string() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
  /// Total order for containers: by length, then normal word.
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.word_ < b.word_;
  }

 private:
  WeylElement(RootSystemPtr sys, std::vector<int> perm);
  friend WeylElement compose(const WeylElement& u, const WeylElement& v);
  friend WeylElement inverse(const WeylElement& u);

  RootSystemPtr sys_;
  std::vector<int> perm_;
  int length_ = 0;
  std::vector<int> word_;
};

WeylElement operator*(const WeylElement& u, const WeylElement& v);
WeylElement compose(const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& u);
Root act_on_root(const WeylElement& u, Root theta);

/// Subset of simple indices generating the Levi factor, together with the
/// radical root set I (positive roots not supported on the subset).
class LeviSubset {
 public:
  LeviSubset(RootSystemPtr sys, std::vector<int> generators);
  static LeviSubset borel(RootSystemPtr sys) { return LeviSubset(std::move(sys), {}); }
  static LeviSubset full(RootSystemPtr sys);

  const RootSystemPtr& system() const { return sys_; }
  const std::vector<int>& generators() const { return gens_; }
  bool contains(int i) const;
  bool is_borel() const { return gens_.empty(); }
  bool is_subset_of(const LeviSubset& other) const;

  /// Root supported only on the generators (a root of the Levi factor).
  bool in_levi(Root r) const;
  /// Member of I.
  bool in_radical(Root r) const { return sys_->is_positive(r) && !in_levi(r); }
  /// Root of P_red: I together with all Levi roots.
  bool in_parabolic(Root r) const { return sys_->is_positive(r) || in_levi(r); }
  std::vector<Root> radical() const;

  friend bool operator==(const LeviSubset& a, const LeviSubset& b) { return a.gens_ == b.gens_; }

 private:
  RootSystemPtr sys_;
  std::vector<int> gens_;
};

WeylElement longest_element(const RootSystemPtr& sys);
/// Reflection s_gamma in the root gamma (sign irrelevant).
WeylElement reflection_of(const RootSystemPtr& sys, Root gamma);
WeylElement longest_element(const LeviSubset& levi);

/// Bruhat order, decided by walking the normal word of v.
bool bruhat_leq(const WeylElement& u, const WeylElement& v);

/// 0-Hecke (Demazure) product: u * s = us if l(us) > l(u), else u.
WeylElement demazure_product(const WeylElement& u, const WeylElement& v);
WeylElement demazure_product(std::span<const WeylElement> factors);

/// Whole group, sorted by length then normal word.
std::vector<WeylElement> all_elements(const RootSystemPtr& sys);

/// Minimal-length representatives of W / W_L, sorted by length.
std::vector<WeylElement> minimal_coset_reps(const LeviSubset& levi);

/// Longest element of W_left * w * W_right.
WeylElement max_double_coset_rep(const LeviSubset& left, const LeviSubset& right,
                                 const WeylElement& w);
/// Longest representative of W_L w W_L; the normalization onto W_I.
WeylElement to_W_I(const LeviSubset& levi, const WeylElement& w);

std::vector<int> support(const WeylElement& w);
/// All reduced words, lexicographically sorted.
std::vector<std::vector<int>> reduced_words(const WeylElement& w);

}  // namespace vuf
