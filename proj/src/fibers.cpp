#include "vuf/fibers.hpp"

#include "vuf/error.hpp"

#include <algorithm>

namespace vuf {

BsdhWord::BsdhWord(WenzelDatum datum, std::vector<WeylElement> entries)
    : datum_(std::move(datum)), entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("a BSDH word needs at least one entry");
  for (const auto& w : entries_) {
    if (w.roots().name() != datum_.roots().name()) throw InputError("word entry from another root system");
    if (!(to_W_I(datum_.levi(), w) == w))
      throw InputError(w.to_string() + " is not the longest representative of its double coset");
  }
}

BsdhWord BsdhWord::normalized(WenzelDatum datum, std::vector<WeylElement> entries) {
  for (auto& w : entries) w = to_W_I(datum.levi(), w);
  return BsdhWord(std::move(datum), std::move(entries));
}

int dimension(const BsdhWord& word) {
  int total = 0;
  for (const auto& w : word.entries()) total += w.length();
  return total;
}

WeylElement geometric_star(const BsdhWord& word) {
  return to_W_I(word.datum().levi(), demazure_product(word.entries()));
}

namespace {

std::vector<WeylElement> tail(const BsdhWord& word) {
  return {word.entries().begin() + 1, word.entries().end()};
}

void require_borel(const WenzelDatum& d, const char* what) {
  if (!d.is_borel()) throw InputError(std::string(what) + " needs P_red = B");
}

bool contains(const std::vector<Root>& roots, Root r) {
  return std::find(roots.begin(), roots.end(), r) != roots.end();
}

// Direction delta of a J-root carried to another point. Positive roots are
// absorbed by B; roots of J absorb orders up to their own exponent.
void add_translated(const WenzelDatum& d, Root delta, const InfinitesimalRoot& source,
                    ThickeningReport& report) {
  const RootSystem& sys = d.roots();
  if (sys.is_positive(delta)) return;
  if (auto own = d.exponent(delta)) {
    if (source.exponent > *own) {
      report.directions.push_back({delta, source.exponent, source.root, true});
      report.exactness = Exactness::TangentHeuristic;
    }
    return;
  }
  report.directions.push_back({delta, source.exponent, source.root, false});
}

struct SubexpressionSearch {
  const RootSystemPtr& sys;
  const std::vector<int>& word;
  const WeylElement& target;
  std::vector<bool> used;
  std::vector<std::vector<Root>> found;  // slice directions, one list per subexpression

  void run(size_t pos, const WeylElement& partial) {
    if (pos == word.size()) {
      if (partial == target) found.push_back(slice_directions());
      return;
    }
    const int s = word[pos];
    // Distinguished: a letter that shortens the partial product must be used.
    const bool forced = partial.has_right_descent(s);
    used[pos] = true;
    run(pos + 1, partial * WeylElement::simple_reflection(sys, s));
    if (!forced) {
      used[pos] = false;
      run(pos + 1, partial);
    }
  }

  std::vector<Root> slice_directions() const {
    std::vector<Root> out;
    for (size_t j = 0; j < word.size(); ++j) {
      if (used[j]) continue;
      Root r = sys->negate(sys->simple(word[j]));
      // Conjugate past the used letters to the right: R_j^{-1}(-alpha_j).
      for (size_t k = j + 1; k < word.size(); ++k)
        if (used[k]) r = sys->reflect(r, word[k]);
      out.push_back(r);
    }
    return out;
  }
};

}  // namespace

ThickeningReport first_projection_generic_fiber(const BsdhWord& word) {
  const WenzelDatum& d = word.datum();
  ThickeningReport report;
  for (const auto& e : d.entries())
    if (d.levi().in_parabolic(word[0](e.root))) report.directions.push_back({e.root, e.exponent, e.root, false});
  report.residual_word = tail(word);
  return report;
}

LocalDirections local_directions(const WeylElement& w, const WeylElement& v) {
  if (!bruhat_leq(v, w)) throw InputError(v.to_string() + " is not below " + w.to_string() + " in Bruhat order");
  const RootSystem& sys = w.roots();
  LocalDirections out;
  for (Root r : sys.all_roots())
    if (sys.is_negative(r) && sys.is_positive(v(r))) out.cell.push_back(r);

  SubexpressionSearch search{w.system(), w.normal_word(), v, std::vector<bool>(w.normal_word().size()), {}};
  search.run(0, WeylElement::identity(w.system()));
  out.distinguished = static_cast<int>(search.found.size());
  if (out.distinguished == 0) throw InvariantError("no distinguished subexpression for v <= w");

  bool clean = out.distinguished == 1;
  for (const auto& list : search.found) {
    for (Root r : list) {
      if (sys.is_positive(r)) {
        clean = false;
        continue;
      }
      if (contains(out.cell, r) || contains(out.slice, r)) {
        clean = false;
        if (contains(out.slice, r)) continue;
      }
      out.slice.push_back(r);
    }
  }
  std::sort(out.slice.begin(), out.slice.end());
  out.exact = clean;

  for (Root r : sys.all_roots()) {
    if (!sys.is_negative(r)) continue;
    const auto reflection = reflection_of(w.system(), r);
    if (bruhat_leq(v * reflection, w)) out.curves.push_back(r);
  }
  return out;
}

ThickeningReport first_projection_fixed_point_fiber(const BsdhWord& word, const WeylElement& v) {
  const WenzelDatum& d = word.datum();
  require_borel(d, "fixed-point fiber analysis");
  const LocalDirections local = local_directions(word[0], v);
  ThickeningReport report;
  report.exactness = local.exact ? Exactness::Exact : Exactness::TangentHeuristic;
  for (const auto& e : d.entries())
    if (contains(local.cell, e.root) || contains(local.slice, e.root) || contains(local.curves, e.root))
      report.directions.push_back({e.root, e.exponent, e.root, false});
  report.residual_word = tail(word);
  return report;
}

std::vector<ThickeningReport> last_projection_generic_fiber(const BsdhWord& word) {
  const WenzelDatum& d = word.datum();
  require_borel(d, "last projection analysis");
  WeylElement total = WeylElement::identity(d.system());
  int length_sum = 0;
  for (const auto& w : word.entries()) {
    total = total * w;
    length_sum += w.length();
  }
  if (total.length() != length_sum)
    throw InputError("concatenated word is not reduced; generic last-projection fiber is not computed");

  std::vector<ThickeningReport> reports;
  WeylElement prefix = WeylElement::identity(d.system());
  for (int i = 0; i + 1 < word.size(); ++i) {
    prefix = prefix * word[i];
    const WeylElement back = inverse(prefix);
    ThickeningReport report;
    for (const auto& e : d.entries()) add_translated(d, back(total(e.root)), e, report);
    reports.push_back(std::move(report));
  }
  return reports;
}

bool is_last_projection_birational(const BsdhWord& word) {
  for (const auto& r : last_projection_generic_fiber(word))
    if (!r.reduced()) return false;
  return true;
}

ThickeningReport schubert_cell_thickening(const WenzelDatum& datum, const WeylElement& w) {
  require_borel(datum, "Schubert cell thickening");
  const WeylElement back = inverse(w);
  ThickeningReport report;
  for (const auto& e : datum.entries()) add_translated(datum, back(e.root), e, report);
  report.residual_word = {w};
  return report;
}

bool is_Q_type(const WenzelDatum& p_datum, const LeviSubset& q_levi, const WeylElement& w) {
  if (!p_datum.levi().is_subset_of(q_levi)) throw InputError("Levi subset of P must be contained in that of Q");
  return demazure_product(longest_element(q_levi), w) == w;
}

std::vector<WeylElement> convolution_targets(const WenzelDatum& p_datum, const LeviSubset& q_levi,
                                             std::span<const int> theta, const BsdhWord& word) {
  if (!p_datum.levi().is_subset_of(q_levi)) throw InputError("Levi subset of P must be contained in that of Q");
  if (theta.empty()) throw InputError("theta must be nonempty");
  for (size_t k = 0; k < theta.size(); ++k) {
    if (theta[k] < 1 || theta[k] > word.size()) throw InputError("theta entry out of range");
    if (k > 0 && theta[k] <= theta[k - 1]) throw InputError("theta must be strictly increasing");
  }
  std::vector<WeylElement> images;
  for (const auto& w : word.entries()) images.push_back(to_W_I(q_levi, w));
  std::vector<WeylElement> targets;
  int start = 0;
  for (int cut : theta) {
    std::span<const WeylElement> group(images.data() + start, cut - start);
    targets.push_back(to_W_I(q_levi, demazure_product(group)));
    start = cut;
  }
  return targets;
}

}  // namespace vuf
