#include "vuf/parabolic.hpp"

#include "vuf/error.hpp"

#include <algorithm>
#include <numeric>

namespace vuf {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void require_prime(int p) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
}

// Least exponent over the simple directions -delta that pair positively with
// beta, i.e. pairing(beta, delta) < 0. nullopt when there are none.
template <class ExponentOf>
std::optional<int> closure_exponent(const RootSystem& sys, Root beta, ExponentOf&& simple_exponent) {
  std::optional<int> best;
  for (int i = 0; i < sys.rank(); ++i) {
    if (sys.pairing(beta, i) >= 0) continue;
    std::optional<int> e = simple_exponent(i);
    if (e && (!best || *e < *best)) best = e;
  }
  return best;
}

}  // namespace

WenzelDatum::WenzelDatum(LeviSubset levi, std::vector<InfinitesimalRoot> entries, int p)
    : levi_(std::move(levi)), entries_(std::move(entries)), p_(p) {
  std::sort(entries_.begin(), entries_.end(),
            [](const InfinitesimalRoot& a, const InfinitesimalRoot& b) { return a.root < b.root; });
}

WenzelDatum WenzelDatum::from_profile(RootSystemPtr sys, const SimpleProfile& profile, int p) {
  require_prime(p);
  for (const auto& [i, e] : profile) {
    if (i < 0 || i >= sys->rank()) throw InputError("profile index out of range");
    if (e && *e <= 0) throw InputError("profile exponents must be positive");
  }
  auto simple_exponent = [&](int i) -> std::optional<int> {
    auto it = profile.find(i);
    return it == profile.end() ? std::nullopt : it->second;
  };
  std::vector<InfinitesimalRoot> entries;
  for (Root r : sys->positive_roots()) {
    Root beta = sys->negate(r);
    if (auto n = closure_exponent(*sys, beta, simple_exponent)) entries.push_back({beta, *n});
  }
  return WenzelDatum(LeviSubset::borel(sys), std::move(entries), p);
}

WenzelDatum WenzelDatum::from_explicit(LeviSubset levi, std::vector<InfinitesimalRoot> entries, int p,
                                       Validation mode) {
  require_prime(p);
  const RootSystem& sys = *levi.system();
  std::vector<Root> seen;
  for (const auto& e : entries) {
    if (e.root.index < 0 || e.root.index >= sys.num_roots()) throw InputError("root index out of range");
    if (!(sys.is_negative(e.root) && levi.in_radical(sys.negate(e.root))))
      throw InputError("J must lie in -I, got " + sys.root_name(e.root));
    if (e.exponent <= 0) throw InputError("exponents must be positive");
    if (std::find(seen.begin(), seen.end(), e.root) != seen.end())
      throw InputError("duplicate root " + sys.root_name(e.root) + " in J");
    seen.push_back(e.root);
  }
  WenzelDatum d(std::move(levi), std::move(entries), p);
  auto problems = closure_violations(d);
  if (!problems.empty()) {
    if (mode == Validation::Strict) throw InputError("datum fails the closure rule: " + problems.front());
    d.warnings_ = std::move(problems);
  }
  return d;
}

std::vector<Root> WenzelDatum::J() const {
  std::vector<Root> out;
  for (const auto& e : entries_) out.push_back(e.root);
  return out;
}

std::optional<int> WenzelDatum::exponent(Root r) const {
  for (const auto& e : entries_)
    if (e.root == r) return e.exponent;
  return std::nullopt;
}

std::vector<std::string> closure_violations(const WenzelDatum& d) {
  const RootSystem& sys = d.roots();
  auto simple_exponent = [&](int i) { return d.exponent(sys.negate(sys.simple(i))); };
  std::vector<std::string> out;
  for (Root r : d.levi().radical()) {
    Root beta = sys.negate(r);
    std::optional<int> expected = closure_exponent(sys, beta, simple_exponent);
    std::optional<int> actual = d.exponent(beta);
    if (!expected) continue;
    if (!actual)
      out.push_back(sys.root_name(beta) + " is forced into J with exponent " + std::to_string(*expected));
    else if (*actual != *expected)
      out.push_back(sys.root_name(beta) + " has exponent " + std::to_string(*actual) + ", closure gives " +
                    std::to_string(*expected));
  }
  return out;
}

int thickening_length(const WenzelDatum& d) {
  return std::accumulate(d.entries().begin(), d.entries().end(), 0,
                         [](int acc, const InfinitesimalRoot& e) { return acc + e.exponent; });
}

}  // namespace vuf
