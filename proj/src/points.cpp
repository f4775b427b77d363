#include "vuf/points.hpp"

#include "vuf/error.hpp"

#include <algorithm>
#include <thread>

namespace vuf {

namespace {

using Elem = GaloisField::Elem;

struct CompiledTerm {
  Elem coeff;
  std::vector<std::pair<int, int>> powers;  // (variable, exponent)
};
using CompiledPoly = std::vector<CompiledTerm>;

std::vector<CompiledPoly> compile(const std::vector<Polynomial>& gens, const GaloisField& field) {
  std::vector<CompiledPoly> out;
  for (const auto& g : gens) {
    CompiledPoly poly;
    for (const auto& [m, c] : g.terms()) {
      CompiledTerm t{field.from_int(c), {}};
      for (size_t k = 0; k < m.size(); ++k)
        if (m[k] > 0) t.powers.emplace_back(static_cast<int>(k), m[k]);
      poly.push_back(std::move(t));
    }
    out.push_back(std::move(poly));
  }
  return out;
}

bool vanishes(const std::vector<CompiledPoly>& polys, const GaloisField& field, const std::vector<Elem>& x) {
  for (const auto& poly : polys) {
    Elem acc = 0;
    for (const auto& t : poly) {
      Elem v = t.coeff;
      for (const auto& [var, e] : t.powers) {
        v = field.mul(v, field.pow(x[var], static_cast<std::uint64_t>(e)));
        if (v == 0) break;
      }
      acc = field.add(acc, v);
    }
    if (acc != 0) return false;
  }
  return true;
}

// One factor of the product being enumerated: its variables and the list of
// coordinate tuples they run through.
struct Factor {
  std::vector<int> vars;
  std::vector<std::vector<Elem>> values;
};

void check_field(const std::vector<Polynomial>& gens, const FieldPtr& field) {
  if (gens.empty()) throw InputError("point count needs at least one generator");
  for (const auto& g : gens)
    if (!(*g.ring() == *gens.front().ring())) throw InputError("generators live in different rings");
  if (field->characteristic() != gens.front().ring()->p)
    throw InputError("field " + field->name() + " does not match characteristic " +
                     std::to_string(gens.front().ring()->p));
}

std::int64_t checked_product(const std::vector<Factor>& factors, std::int64_t budget) {
  std::int64_t total = 1;
  for (const auto& f : factors) {
    const auto size = static_cast<std::int64_t>(f.values.size());
    if (size == 0) return 0;
    if (total > budget / size) throw BudgetExceeded("point enumeration exceeds budget of " + std::to_string(budget));
    total *= size;
  }
  return total;
}

std::int64_t count_points(const std::vector<Polynomial>& gens, const std::vector<Factor>& factors,
                          const GaloisField& field) {
  const auto polys = compile(gens, field);
  const int nvars = gens.front().ring()->nvars();
  if (factors.empty()) return vanishes(polys, field, std::vector<Elem>(nvars, 0)) ? 1 : 0;

  const size_t outer = factors.front().values.size();
  const size_t nthreads =
      std::max<size_t>(1, std::min<size_t>({outer, std::thread::hardware_concurrency(), 8}));
  std::vector<std::int64_t> partial(nthreads, 0);

  auto worker = [&](size_t tid) {
    std::vector<Elem> x(nvars, 0);
    std::vector<size_t> idx(factors.size(), 0);
    auto assign = [&](size_t f) {
      const auto& vals = factors[f].values[idx[f]];
      for (size_t k = 0; k < vals.size(); ++k) x[factors[f].vars[k]] = vals[k];
    };
    std::int64_t count = 0;
    for (size_t first = tid; first < outer; first += nthreads) {
      idx.assign(factors.size(), 0);
      idx[0] = first;
      for (size_t f = 0; f < factors.size(); ++f) assign(f);
      for (;;) {
        if (vanishes(polys, field, x)) ++count;
        size_t f = factors.size();
        while (f-- > 1) {
          if (++idx[f] < factors[f].values.size()) {
            assign(f);
            break;
          }
          idx[f] = 0;
          assign(f);
        }
        if (f == 0) break;
      }
    }
    partial[tid] = count;
  };

  std::vector<std::thread> threads;
  for (size_t t = 1; t < nthreads; ++t) threads.emplace_back(worker, t);
  worker(0);
  for (auto& t : threads) t.join();
  std::int64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::vector<std::vector<Elem>> normalized_representatives(int m, Elem q) {
  std::vector<std::vector<Elem>> out;
  for (int lead = 0; lead < m; ++lead) {
    const int free = m - 1 - lead;
    std::int64_t count = 1;
    for (int k = 0; k < free; ++k) count *= q;
    for (std::int64_t r = 0; r < count; ++r) {
      std::vector<Elem> v(m, 0);
      v[lead] = 1;
      std::int64_t rest = r;
      for (int k = m - 1; k > lead; --k) {
        v[k] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

std::int64_t affine_point_count(const std::vector<Polynomial>& generators, const FieldPtr& field,
                                std::int64_t budget) {
  check_field(generators, field);
  const int n = generators.front().ring()->nvars();
  std::vector<Factor> factors(n);
  for (int k = 0; k < n; ++k) {
    factors[k].vars = {k};
    for (Elem a = 0; a < field->order(); ++a) factors[k].values.push_back({a});
  }
  checked_product(factors, budget);
  return count_points(generators, factors, *field);
}

std::int64_t projective_point_count(const std::vector<Polynomial>& generators,
                                    const std::vector<std::vector<int>>& blocks, const FieldPtr& field,
                                    std::int64_t budget) {
  check_field(generators, field);
  const int n = generators.front().ring()->nvars();
  std::vector<int> seen(n, 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw InputError("empty projective block");
    for (int v : b) {
      if (v < 0 || v >= n) throw InputError("block variable out of range");
      ++seen[v];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
    throw InputError("blocks must partition the variables");
  for (const auto& g : generators)
    for (const auto& b : blocks)
      if (!g.is_homogeneous_in(b)) throw InputError(g.to_string() + " is not homogeneous in every block");

  std::vector<Factor> factors;
  std::int64_t total = 1;
  for (const auto& b : blocks) {
    // Size check before materializing the representatives.
    std::int64_t size = 0, power = 1;
    for (size_t k = 0; k < b.size(); ++k) {
      size += power;
      if (power > budget / field->order()) throw BudgetExceeded("point enumeration exceeds budget");
      power *= field->order();
    }
    if (total > budget / size) throw BudgetExceeded("point enumeration exceeds budget of " + std::to_string(budget));
    total *= size;
    factors.push_back({b, normalized_representatives(static_cast<int>(b.size()), field->order())});
  }
  return count_points(generators, factors, *field);
}

}  // namespace vuf
