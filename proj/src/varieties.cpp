#include "vuf/varieties.hpp"

#include "vuf/error.hpp"
#include "vuf/groebner.hpp"
#include "vuf/parabolic.hpp"

#include <algorithm>
#include <numeric>

namespace vuf {

void ProjectiveIdealPresentation::validate() const {
  for (const auto& g : generators) {
    if (!(*g.ring() == *ring)) throw InputError("generator outside the presentation ring");
    for (const auto& b : blocks)
      if (!g.is_homogeneous_in(b)) throw InputError(g.to_string() + " is not homogeneous in every block");
  }
}

std::string ProjectiveIdealPresentation::to_string() const {
  std::string out = "<";
  for (size_t k = 0; k < generators.size(); ++k) {
    if (k > 0) out += ", ";
    out += generators[k].to_string();
  }
  return out + ">";
}

namespace {

std::vector<std::string> indexed(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int k = 1; k <= count; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

// Ring with variables u_1..u_{n+1}, v_1..v_{n+1} in two blocks.
ProjectiveIdealPresentation dual_pair(int n, int p, const std::string& u, const std::string& v, std::string tag) {
  if (n < 1) throw InputError("n must be at least 1");
  auto vars = indexed(u, n + 1);
  auto second = indexed(v, n + 1);
  vars.insert(vars.end(), second.begin(), second.end());
  ProjectiveIdealPresentation pres{make_ring(p, std::move(vars)), {}, {}, std::move(tag)};
  std::vector<int> first_block(n + 1), second_block(n + 1);
  std::iota(first_block.begin(), first_block.end(), 0);
  std::iota(second_block.begin(), second_block.end(), n + 1);
  pres.blocks = {first_block, second_block};
  return pres;
}

// sum over k in [from, to] (1-based) of u_k v_k^e.
Polynomial pairing_form(const ProjectiveIdealPresentation& pres, int n, int from, int to, int e) {
  Polynomial f(pres.ring);
  for (int k = from; k <= to; ++k) {
    Monomial m(pres.ring->nvars(), 0);
    m[k - 1] = 1;
    m[n + k] = e;
    f.add_term(m, 1);
  }
  return f;
}

std::string params(int n, int p) { return "(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")"; }

}  // namespace

ProjectiveIdealPresentation incidence(int n, int p) {
  auto pres = dual_pair(n, p, "x", "y", "incidence" + params(n, p));
  pres.generators = {pairing_form(pres, n, 1, n + 1, 1)};
  return pres;
}

ProjectiveIdealPresentation twisted_incidence(int n, int p) { return twisted_incidence(n, p, p); }

ProjectiveIdealPresentation twisted_incidence(int n, int p, int exponent) {
  if (exponent < 1) throw InputError("exponent must be positive");
  auto pres = dual_pair(n, p, "z", "w", "twisted_incidence" + params(n, p));
  pres.generators = {pairing_form(pres, n, 1, n + 1, exponent)};
  return pres;
}

ProjectiveIdealPresentation schubert_ideal(int n, int p, int i, int j, bool twisted) {
  if (n < 1) throw InputError("n must be at least 1");
  if (i < 1 || j < 1 || i > n + 1 || j > n + 1 || i == j)
    throw InputError("Schubert indices need 1 <= i, j <= n+1 and i != j");
  const std::string tag = std::string(twisted ? "I" : "I'") + "_{" + std::to_string(i) + "," + std::to_string(j) +
                          "}" + params(n, p);
  auto pres = twisted ? dual_pair(n, p, "z", "w", tag) : dual_pair(n, p, "x", "y", tag);
  const int e = twisted ? p : 1;
  if (j <= i) pres.generators.push_back(pairing_form(pres, n, j, i, e));
  for (int k = i + 1; k <= n + 1; ++k) pres.generators.push_back(Polynomial::variable(pres.ring, k - 1));
  for (int k = 1; k < j; ++k) pres.generators.push_back(Polynomial::variable(pres.ring, n + k));
  return pres;
}

ProjectiveIdealPresentation nonnormal_schubert(int n, int p) {
  if (n < 2) throw InputError("non-normal Schubert examples need n >= 2");
  return n == 2 ? schubert_ideal(2, p, 2, 1) : schubert_ideal(n, p, 3, 2);
}

ProjectiveIdealPresentation bsdh_sl3(int p) {
  ProjectiveIdealPresentation pres{make_ring(p, {"x", "y", "z", "a", "b", "c"}), {{0, 1, 2}, {3, 4, 5}}, {},
                                   "bsdh_sl3(p=" + std::to_string(p) + ")"};
  pres.generators = {parse_polynomial("a^" + std::to_string(p) + "*x + b^" + std::to_string(p) + "*y", pres.ring),
                     Polynomial::variable(pres.ring, "z")};
  return pres;
}

bool equal_up_to_renaming(const ProjectiveIdealPresentation& a, const ProjectiveIdealPresentation& b) {
  if (a.characteristic() != b.characteristic() || a.ring->nvars() != b.ring->nvars() ||
      a.blocks.size() != b.blocks.size())
    return false;
  const auto target = groebner_basis(a.generators);
  const int n = a.ring->nvars();

  std::vector<int> block_order(b.blocks.size());
  std::iota(block_order.begin(), block_order.end(), 0);
  long long attempts = 0;
  do {
    bool sizes_ok = true;
    for (size_t k = 0; k < block_order.size(); ++k)
      sizes_ok = sizes_ok && b.blocks[block_order[k]].size() == a.blocks[k].size();
    if (!sizes_ok) continue;

    // Odometer over the within-block permutations.
    std::vector<std::vector<int>> perms;
    for (size_t k = 0; k < a.blocks.size(); ++k) perms.push_back(a.blocks[k]);
    for (auto& pm : perms) std::sort(pm.begin(), pm.end());
    for (;;) {
      if (++attempts > 1'000'000) throw BudgetExceeded("too many renamings to compare");
      std::vector<int> map(n, -1);
      for (size_t k = 0; k < block_order.size(); ++k) {
        const auto& src = b.blocks[block_order[k]];
        for (size_t m = 0; m < src.size(); ++m) map[src[m]] = perms[k][m];
      }
      std::vector<Polynomial> moved;
      for (const auto& g : b.generators) moved.push_back(remap(g, a.ring, map));
      if (groebner_basis(moved) == target) return true;
      size_t k = 0;
      while (k < perms.size() && !std::next_permutation(perms[k].begin(), perms[k].end())) ++k;
      if (k == perms.size()) break;
    }
  } while (std::next_permutation(block_order.begin(), block_order.end()));
  return false;
}

std::vector<Chart> all_charts(const ProjectiveIdealPresentation& pres) {
  std::vector<Chart> out{Chart{}};
  for (const auto& block : pres.blocks) {
    std::vector<Chart> next;
    for (const auto& c : out)
      for (int v : block) {
        Chart d = c;
        d.vars.push_back(v);
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  return out;
}

Chart parse_chart(const ProjectiveIdealPresentation& pres, const std::vector<std::string>& names) {
  Chart chart{std::vector<int>(pres.blocks.size(), -1)};
  for (const auto& name : names) {
    const int v = pres.ring->index_of(name);
    if (v < 0) throw InputError("unknown chart variable " + name);
    bool placed = false;
    for (size_t b = 0; b < pres.blocks.size(); ++b) {
      if (std::find(pres.blocks[b].begin(), pres.blocks[b].end(), v) == pres.blocks[b].end()) continue;
      if (chart.vars[b] >= 0) throw InputError("two chart variables in one block");
      chart.vars[b] = v;
      placed = true;
    }
    if (!placed) throw InputError(name + " is in no block");
  }
  for (int v : chart.vars)
    if (v < 0) throw InputError("a chart needs one variable per block");
  return chart;
}

std::string chart_name(const ProjectiveIdealPresentation& pres, const Chart& chart) {
  std::string out;
  for (int v : chart.vars) {
    if (!out.empty()) out += ",";
    out += pres.ring->vars[v];
  }
  return out;
}

std::vector<Polynomial> chart_ideal(const ProjectiveIdealPresentation& pres, const Chart& chart) {
  if (chart.vars.size() != pres.blocks.size()) throw InputError("a chart needs one variable per block");
  const int n = pres.ring->nvars();
  std::vector<int> map(n);
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) {
    if (std::find(chart.vars.begin(), chart.vars.end(), v) != chart.vars.end()) {
      map[v] = -2;  // the constant 1
    } else {
      map[v] = static_cast<int>(names.size());
      names.push_back(pres.ring->vars[v]);
    }
  }
  const RingPtr ring = make_ring(pres.characteristic(), std::move(names));
  std::vector<Polynomial> out;
  for (const auto& g : pres.generators) {
    Polynomial h = remap(g, ring, map);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  if (out.empty()) out.push_back(Polynomial(ring));
  return out;
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial determinant(const PolyMatrix& m, const RingPtr& ring) {
  const size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial det(ring);
  for (size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMatrix minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(minor, ring);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

// Calls fn with every size-k subset of [0, n).
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SingularCodimension singular_codimension(const ProjectiveIdealPresentation& pres, const Chart& chart) {
  const auto gens = chart_ideal(pres, chart);
  const RingPtr& ring = gens.front().ring();
  const int dim = ideal_dimension(gens);
  if (dim < 0) throw InputError("the variety does not meet the chart " + chart_name(pres, chart));
  const int nv = ring->nvars();
  const int c = nv - dim;

  PolyMatrix jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (int v = 0; v < nv; ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> singular = gens;
  for_each_subset(static_cast<int>(gens.size()), c, [&](const std::vector<int>& rows) {
    for_each_subset(nv, c, [&](const std::vector<int>& cols) {
      PolyMatrix sub;
      for (int r : rows) {
        std::vector<Polynomial> row;
        for (int col : cols) row.push_back(jac[r][col]);
        sub.push_back(std::move(row));
      }
      Polynomial det = determinant(sub, ring);
      if (!det.is_zero()) singular.push_back(std::move(det));
    });
  });
  const int sdim = ideal_dimension(singular);
  SingularCodimension out{dim, sdim, std::nullopt};
  if (sdim >= 0) out.codimension = dim - sdim;
  return out;
}

NormalityCertificate non_normality_certificate(const ProjectiveIdealPresentation& pres) {
  NormalityCertificate cert{NormalityVerdict::Inconclusive, true, std::nullopt, {}};
  for (const auto& chart : all_charts(pres)) {
    ChartCodimension entry{chart, ideal_dimension(chart_ideal(pres, chart)) >= 0, std::nullopt};
    if (entry.meets_variety) {
      entry.result = singular_codimension(pres, chart);
      if (auto c = entry.result->codimension) {
        cert.smooth = false;
        if (!cert.min_codimension || *c < *cert.min_codimension) cert.min_codimension = c;
      }
    }
    cert.charts.push_back(std::move(entry));
  }
  if (cert.min_codimension == 1) cert.verdict = NormalityVerdict::NotNormal;
  return cert;
}

std::int64_t projective_point_count(const ProjectiveIdealPresentation& pres, std::int64_t q, std::int64_t budget) {
  const FieldPtr field = GaloisField::of_order(q);
  if (field->characteristic() != pres.characteristic())
    throw InputError("q = " + std::to_string(q) + " is not a power of p = " + std::to_string(pres.characteristic()));
  return projective_point_count(pres.generators, pres.blocks, field, budget);
}

std::vector<PointCountRow> point_count_vs_paving(const ProjectiveIdealPresentation& pres,
                                                 const IntPolynomial& expected,
                                                 const std::vector<std::int64_t>& q_list, std::int64_t budget) {
  std::vector<PointCountRow> rows;
  for (std::int64_t q : q_list) {
    const std::int64_t counted = projective_point_count(pres, q, budget);
    const std::int64_t want = evaluate(expected, q);
    rows.push_back({q, counted, want, counted == want});
  }
  return rows;
}

std::vector<PointCountRow> point_count_vs_paving(const ProjectiveIdealPresentation& pres, const LeviSubset& levi,
                                                 const std::vector<std::int64_t>& q_list, std::int64_t budget) {
  return point_count_vs_paving(pres, poincare_polynomial(levi), q_list, budget);
}

}  // namespace vuf
