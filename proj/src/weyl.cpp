#include "vuf/weyl.hpp"

#include "vuf/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace vuf {

namespace {

void require_same(const WeylElement& a, const WeylElement& b) {
  if (a.system() != b.system() && a.roots().name() != b.roots().name())
    throw InputError("Weyl elements from different root systems");
}

int count_inversions(const RootSystem& sys, const std::vector<int>& perm) {
  int n = 0;
  for (int i = 0; i < sys.num_positive(); ++i)
    if (!sys.is_positive(Root{perm[i]})) ++n;
  return n;
}

// perm of s_i * w
std::vector<int> left_multiply(const RootSystem& sys, const std::vector<int>& perm, int i) {
  std::vector<int> out(perm.size());
  for (size_t k = 0; k < perm.size(); ++k) out[k] = sys.reflect(Root{perm[k]}, i).index;
  return out;
}

bool perm_has_left_descent(const RootSystem& sys, const std::vector<int>& perm, int i) {
  // w^{-1}(alpha_i) < 0, i.e. alpha_i is the image of a negative root.
  for (size_t k = sys.num_positive(); k < perm.size(); ++k)
    if (perm[k] == i) return true;
  return false;
}

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

WeylElement::WeylElement(RootSystemPtr sys, std::vector<int> perm)
    : sys_(std::move(sys)), perm_(std::move(perm)) {
  length_ = count_inversions(*sys_, perm_);
  std::vector<int> rest = perm_;
  for (int remaining = length_; remaining > 0; --remaining) {
    int letter = 0;
    while (!perm_has_left_descent(*sys_, rest, letter)) ++letter;
    word_.push_back(letter);
    rest = left_multiply(*sys_, rest, letter);
  }
}

WeylElement WeylElement::identity(RootSystemPtr sys) {
  std::vector<int> perm(sys->num_roots());
  for (int i = 0; i < sys->num_roots(); ++i) perm[i] = i;
  return WeylElement(std::move(sys), std::move(perm));
}

WeylElement WeylElement::simple_reflection(RootSystemPtr sys, int i) {
  std::vector<int> perm(sys->num_roots());
  for (int k = 0; k < sys->num_roots(); ++k) perm[k] = sys->reflect(Root{k}, i).index;
  return WeylElement(std::move(sys), std::move(perm));
}

WeylElement WeylElement::from_word(RootSystemPtr sys, std::span<const int> word) {
  std::vector<int> perm(sys->num_roots());
  for (int k = 0; k < sys->num_roots(); ++k) perm[k] = k;
  // s_{w0} ... s_{wm}: apply letters to the left, last letter first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= sys->rank()) throw InputError("simple reflection index out of range");
    perm = left_multiply(*sys, perm, *it);
  }
  return WeylElement(std::move(sys), std::move(perm));
}

WeylElement WeylElement::parse(RootSystemPtr sys, std::string_view text) {
  const std::string s = trim(text);
  if (s.empty() || s == "e" || s == "id" || s == "1") return identity(std::move(sys));
  std::vector<int> word;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    std::string token = trim(std::string_view(s).substr(pos, end - pos));
    std::optional<int> idx;
    if (token.size() >= 2 && token[0] == 's') idx = sys->parse_simple_name(token.substr(1));
    if (!idx) idx = sys->parse_simple_name(token);
    if (!idx) throw InputError("cannot parse Weyl element '" + s + "' in " + sys->name());
    word.push_back(*idx);
    pos = end + 1;
  }
  return from_word(std::move(sys), word);
}

bool WeylElement::has_left_descent(int i) const { return perm_has_left_descent(*sys_, perm_, i); }

bool WeylElement::has_right_descent(int i) const {
  return !sys_->is_positive(Root{perm_[sys_->simple(i).index]});
}

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < word_.size(); ++k) {
    if (k) out += '*';
    out += 's' + sys_->simple_name(word_[k]);
  }
  return out;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) { return compose(u, v); }

WeylElement compose(const WeylElement& u, const WeylElement& v) {
  require_same(u, v);
  const auto& pu = u.root_permutation();
  const auto& pv = v.root_permutation();
  std::vector<int> perm(pv.size());
  for (size_t k = 0; k < pv.size(); ++k) perm[k] = pu[pv[k]];
  return WeylElement(u.system(), std::move(perm));
}

WeylElement inverse(const WeylElement& u) {
  const auto& pu = u.root_permutation();
  std::vector<int> perm(pu.size());
  for (size_t k = 0; k < pu.size(); ++k) perm[pu[k]] = static_cast<int>(k);
  return WeylElement(u.system(), std::move(perm));
}

Root act_on_root(const WeylElement& u, Root theta) { return u(theta); }

LeviSubset::LeviSubset(RootSystemPtr sys, std::vector<int> generators)
    : sys_(std::move(sys)), gens_(std::move(generators)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  for (int g : gens_)
    if (g < 0 || g >= sys_->rank()) throw InputError("Levi generator index out of range");
}

LeviSubset LeviSubset::full(RootSystemPtr sys) {
  std::vector<int> all(sys->rank());
  for (int i = 0; i < sys->rank(); ++i) all[i] = i;
  return LeviSubset(std::move(sys), std::move(all));
}

bool LeviSubset::contains(int i) const { return std::binary_search(gens_.begin(), gens_.end(), i); }

bool LeviSubset::is_subset_of(const LeviSubset& other) const {
  return std::includes(other.gens_.begin(), other.gens_.end(), gens_.begin(), gens_.end());
}

bool LeviSubset::in_levi(Root r) const {
  for (int i : sys_->support(r))
    if (!contains(i)) return false;
  return true;
}

std::vector<Root> LeviSubset::radical() const {
  std::vector<Root> out;
  for (Root r : sys_->positive_roots())
    if (in_radical(r)) out.push_back(r);
  return out;
}

WeylElement longest_element(const RootSystemPtr& sys) { return longest_element(LeviSubset::full(sys)); }

WeylElement reflection_of(const RootSystemPtr& sys, Root gamma) {
  if (sys->is_negative(gamma)) gamma = sys->negate(gamma);
  // Walk gamma down to a simple root: s_gamma = s_i s_{s_i(gamma)} s_i.
  std::vector<int> path;
  while (!sys->is_simple(gamma)) {
    int i = 0;
    while (sys->pairing(gamma, i) <= 0) ++i;
    path.push_back(i);
    gamma = sys->reflect(gamma, i);
  }
  std::vector<int> word(path.begin(), path.end());
  word.push_back(gamma.index);
  word.insert(word.end(), path.rbegin(), path.rend());
  return WeylElement::from_word(sys, word);
}

WeylElement longest_element(const LeviSubset& levi) {
  std::vector<int> word;
  WeylElement w = WeylElement::identity(levi.system());
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : levi.generators()) {
      if (!w.has_right_descent(s)) {
        word.push_back(s);
        w = WeylElement::from_word(levi.system(), word);
        grew = true;
      }
    }
  }
  return w;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
  require_same(u, v);
  const RootSystem& sys = u.roots();
  std::vector<int> current = u.root_permutation();
  int current_length = u.length();
  const auto& word = v.normal_word();
  // Each letter of the normal word is a left descent of the remaining suffix;
  // strip it from v and, when it is also a left descent of u, from u.
  for (size_t k = 0; k < word.size(); ++k) {
    const int remaining = static_cast<int>(word.size() - k);
    if (current_length > remaining) return false;
    if (current_length == 0) return true;
    if (perm_has_left_descent(sys, current, word[k])) {
      current = left_multiply(sys, current, word[k]);
      --current_length;
    }
  }
  return current_length == 0;
}

WeylElement demazure_product(const WeylElement& u, const WeylElement& v) {
  require_same(u, v);
  std::vector<int> word = u.normal_word();
  WeylElement acc = u;
  for (int s : v.normal_word()) {
    if (!acc.has_right_descent(s)) {
      word.push_back(s);
      acc = WeylElement::from_word(u.system(), word);
    }
  }
  return acc;
}

WeylElement demazure_product(std::span<const WeylElement> factors) {
  if (factors.empty()) throw InputError("empty Demazure product");
  WeylElement acc = factors.front();
  for (size_t k = 1; k < factors.size(); ++k) acc = demazure_product(acc, factors[k]);
  return acc;
}

std::vector<WeylElement> all_elements(const RootSystemPtr& sys) {
  std::set<std::vector<int>> seen;
  std::vector<WeylElement> out;
  std::deque<WeylElement> queue{WeylElement::identity(sys)};
  seen.insert(queue.front().root_permutation());
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int i = 0; i < sys->rank(); ++i) {
      WeylElement next = w * WeylElement::simple_reflection(sys, i);
      if (seen.insert(next.root_permutation()).second) queue.push_back(next);
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElement> minimal_coset_reps(const LeviSubset& levi) {
  std::vector<WeylElement> out;
  for (auto& w : all_elements(levi.system())) {
    bool minimal = true;
    for (int s : levi.generators())
      if (w.has_right_descent(s)) minimal = false;
    if (minimal) out.push_back(std::move(w));
  }
  return out;
}

WeylElement max_double_coset_rep(const LeviSubset& left, const LeviSubset& right,
                                 const WeylElement& w) {
  return demazure_product(longest_element(left), demazure_product(w, longest_element(right)));
}

WeylElement to_W_I(const LeviSubset& levi, const WeylElement& w) { return max_double_coset_rep(levi, levi, w); }

std::vector<int> support(const WeylElement& w) {
  std::vector<int> out(w.normal_word());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void collect_reduced_words(const WeylElement& w, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i = 0; i < w.roots().rank(); ++i) {
    if (!w.has_left_descent(i)) continue;
    prefix.push_back(i);
    collect_reduced_words(WeylElement::simple_reflection(w.system(), i) * w, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const WeylElement& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_reduced_words(w, prefix, out);
  return out;
}

}  // namespace vuf
