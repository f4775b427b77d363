#include "vuf/commands.hpp"

#include "vuf/chow.hpp"
#include "vuf/error.hpp"
#include "vuf/varieties.hpp"

#include <algorithm>
#include <sstream>

namespace vuf {

using nlohmann::ordered_json;

namespace {

ordered_json letters(const WeylElement& w) {
  ordered_json out = ordered_json::array();
  for (int i : w.normal_word()) out.push_back(w.roots().simple_name(i));
  return out;
}

ordered_json element_list(const std::vector<WeylElement>& ws) {
  ordered_json out = ordered_json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

ordered_json datum_json(const WenzelDatum& d) {
  const RootSystem& sys = d.roots();
  ordered_json levi = ordered_json::array();
  for (int i : d.levi().generators()) levi.push_back(sys.simple_name(i));
  ordered_json J = ordered_json::array();
  for (const auto& e : d.entries()) J.push_back({{"root", sys.root_name(e.root)}, {"exponent", e.exponent}});
  return {{"system", sys.name()}, {"p", d.characteristic()}, {"levi", levi}, {"J", J}};
}

ordered_json report_json(const RootSystem& sys, const ThickeningReport& r) {
  ordered_json dirs = ordered_json::array();
  for (const auto& d : r.directions)
    dirs.push_back({{"root", sys.root_name(d.root)},
                    {"exponent", d.exponent},
                    {"source", sys.root_name(d.source)},
                    {"flagged", d.flagged}});
  return {{"directions", dirs},
          {"reduced", r.reduced()},
          {"exactness", r.exactness == Exactness::Exact ? "exact" : "tangent-heuristic"},
          {"residual_word", element_list(r.residual_word)}};
}

ordered_json roots_json(const RootSystem& sys, const std::vector<Root>& roots) {
  ordered_json out = ordered_json::array();
  for (Root r : roots) out.push_back(sys.root_name(r));
  return out;
}

BsdhWord make_word(const RunConfig& c, const WenzelDatum& d) {
  if (c.word.empty()) throw InputError("this command needs --word");
  return BsdhWord(d, parse_word(d.system(), c.word));
}

ordered_json cmd_root(const RunConfig& c) {
  const auto sys = RootSystem::parse(c.system);
  ordered_json cartan = ordered_json::array();
  for (int r = 0; r < sys->rank(); ++r) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < sys->rank(); ++k) row.push_back(sys->cartan()(r, k));
    cartan.push_back(row);
  }
  ordered_json roots = ordered_json::array();
  for (Root r : sys->positive_roots()) {
    const auto& v = sys->coeffs(r);
    roots.push_back({{"index", r.index},
                     {"name", sys->root_name(r)},
                     {"coefficients", std::vector<int>(v.data(), v.data() + v.size())},
                     {"height", sys->height(r)}});
  }
  return {{"command", "root"},  {"system", sys->name()},          {"rank", sys->rank()},
          {"cartan", cartan},   {"num_positive", sys->num_positive()}, {"positive_roots", roots}};
}

ordered_json cmd_weyl(const RunConfig& c) {
  const auto sys = RootSystem::parse(c.system);
  if (c.element.empty()) throw InputError("weyl needs --element");
  const WeylElement w = WeylElement::parse(sys, c.element);
  ordered_json left = ordered_json::array(), right = ordered_json::array(), supp = ordered_json::array();
  for (int i = 0; i < sys->rank(); ++i) {
    if (w.has_left_descent(i)) left.push_back(sys->simple_name(i));
    if (w.has_right_descent(i)) right.push_back(sys->simple_name(i));
  }
  for (int i : support(w)) supp.push_back(sys->simple_name(i));
  ordered_json out = {{"command", "weyl"},
                      {"system", sys->name()},
                      {"element", w.to_string()},
                      {"normal_word", letters(w)},
                      {"length", w.length()},
                      {"inverse", inverse(w).to_string()},
                      {"left_descents", left},
                      {"right_descents", right},
                      {"support", supp},
                      {"is_longest", w == longest_element(sys)}};
  if (!c.compare.empty()) {
    const WeylElement v = WeylElement::parse(sys, c.compare);
    out["compare"] = v.to_string();
    out["bruhat_leq"] = bruhat_leq(w, v);
    out["bruhat_geq"] = bruhat_leq(v, w);
    out["product"] = (w * v).to_string();
    out["demazure_product"] = demazure_product(w, v).to_string();
  }
  return out;
}

ordered_json cmd_parabolic(const RunConfig& c) {
  const WenzelDatum d = make_datum(c);
  const int len = thickening_length(d);
  ordered_json out = {{"command", "parabolic"}};
  out.update(datum_json(d));
  out["reduced"] = d.is_reduced();
  out["thickening_length"] = len;
  out["degree"] = {{"p", d.characteristic()}, {"exponent", len}};
  out["closure_violations"] = closure_violations(d);
  out["warnings"] = d.warnings();
  return out;
}

ordered_json cmd_chow(const RunConfig& c) {
  const WenzelDatum d = make_datum(c);
  ordered_json rows = ordered_json::array();
  for (const auto& row : chow_table(d))
    rows.push_back({{"class", row.rep.to_string()},
                    {"length", row.rep.length()},
                    {"d", row.d},
                    {"push", row.push},
                    {"pull", row.pull}});
  const SchubertBasis basis(d.levi());
  const IntPolynomial poincare = poincare_polynomial(d.levi());
  const PrimePower coker = cokernel_order(d);
  ordered_json out = {{"command", "chow"}};
  out.update(datum_json(d));
  out["classes"] = basis.size();
  out["d_identity"] = d_exponent(d, basis[0]);
  out["d_top"] = d_exponent(d, basis.top());
  out["thickening_length"] = thickening_length(d);
  out["cokernel_order"] = {{"p", coker.p}, {"exponent", coker.exponent}};
  out["poincare_polynomial"] = std::vector<std::int64_t>(poincare.data(), poincare.data() + poincare.size());
  out["rows"] = rows;
  return out;
}

ordered_json cmd_fiber(const RunConfig& c) {
  const WenzelDatum d = make_datum(c);
  const RootSystem& sys = d.roots();
  ordered_json out = {{"command", "fiber"}, {"mode", c.mode}};
  out.update(datum_json(d));
  if (c.mode == "first") {
    const BsdhWord word = make_word(c, d);
    out["word"] = element_list(word.entries());
    if (c.at.empty()) {
      out["at"] = "generic";
      out["report"] = report_json(sys, first_projection_generic_fiber(word));
    } else {
      const WeylElement v = WeylElement::parse(d.system(), c.at);
      const LocalDirections local = local_directions(word[0], v);
      out["at"] = v.to_string();
      out["local"] = {{"cell", roots_json(sys, local.cell)},
                      {"slice", roots_json(sys, local.slice)},
                      {"curves", roots_json(sys, local.curves)},
                      {"distinguished", local.distinguished}};
      out["report"] = report_json(sys, first_projection_fixed_point_fiber(word, v));
    }
  } else if (c.mode == "last") {
    const BsdhWord word = make_word(c, d);
    out["word"] = element_list(word.entries());
    ordered_json coords = ordered_json::array();
    const auto reports = last_projection_generic_fiber(word);
    for (size_t k = 0; k < reports.size(); ++k) {
      ordered_json entry = {{"coordinate", k + 1}};
      entry.update(report_json(sys, reports[k]));
      entry.erase("residual_word");
      coords.push_back(entry);
    }
    out["coordinates"] = coords;
    out["birational"] = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.reduced(); });
  } else if (c.mode == "cell") {
    if (c.element.empty()) throw InputError("fiber cell needs --element");
    const WeylElement w = WeylElement::parse(d.system(), c.element);
    out["element"] = w.to_string();
    out["report"] = report_json(sys, schubert_cell_thickening(d, w));
  } else {
    throw InputError("fiber mode must be first, last or cell");
  }
  return out;
}

ordered_json cmd_star(const RunConfig& c) {
  const WenzelDatum d = make_datum(c);
  const BsdhWord word = BsdhWord::normalized(d, parse_word(d.system(), c.word));
  ordered_json out = {{"command", "star"}};
  out.update(datum_json(d));
  out["word"] = element_list(word.entries());
  out["dimension"] = dimension(word);
  out["geometric_star"] = geometric_star(word).to_string();
  return out;
}

ordered_json cmd_qtype(const RunConfig& c) {
  const WenzelDatum d = make_datum(c);
  const LeviSubset q_levi = parse_levi(d.system(), c.q_levi);
  ordered_json out = {{"command", "qtype"}};
  out.update(datum_json(d));
  ordered_json ql = ordered_json::array();
  for (int i : q_levi.generators()) ql.push_back(d.roots().simple_name(i));
  out["q_levi"] = ql;
  if (!c.element.empty()) {
    const WeylElement w = WeylElement::parse(d.system(), c.element);
    out["element"] = w.to_string();
    out["q_type"] = is_Q_type(d, q_levi, w);
  }
  if (!c.theta.empty()) {
    const BsdhWord word = make_word(c, d);
    out["word"] = element_list(word.entries());
    out["theta"] = c.theta;
    out["targets"] = element_list(convolution_targets(d, q_levi, c.theta, word));
  }
  if (c.element.empty() && c.theta.empty()) throw InputError("qtype needs --element or --theta with --word");
  return out;
}

ProjectiveIdealPresentation build_variety(const RunConfig& c, bool twisted) {
  const std::string& m = c.mode;
  if (m == "incidence") return incidence(c.n, c.p);
  if (m == "twisted-incidence") return twisted ? twisted_incidence(c.n, c.p) : incidence(c.n, c.p);
  if (m == "schubert") return schubert_ideal(c.n, c.p, c.i, c.j, twisted && !c.untwisted);
  if (m == "nonnormal-schubert") {
    if (twisted) return nonnormal_schubert(c.n, c.p);
    return c.n == 2 ? schubert_ideal(2, c.p, 2, 1, false) : schubert_ideal(c.n, c.p, 3, 2, false);
  }
  if (m == "bsdh-sl3") return twisted ? bsdh_sl3(c.p) : schubert_ideal(2, c.p, 2, 1, false);
  throw InputError("unknown variety '" + m +
                   "' (incidence, twisted-incidence, schubert, nonnormal-schubert, bsdh-sl3)");
}

ordered_json codim_json(const std::optional<SingularCodimension>& r) {
  if (!r) return nullptr;
  ordered_json out = {{"variety_dim", r->variety_dim}, {"singular_dim", r->singular_dim}};
  if (r->codimension)
    out["codimension"] = *r->codimension;
  else
    out["codimension"] = "infinite";
  return out;
}

ordered_json cmd_variety(const RunConfig& c) {
  const ProjectiveIdealPresentation pres = build_variety(c, true);
  pres.validate();
  ordered_json blocks = ordered_json::array();
  for (const auto& b : pres.blocks) {
    ordered_json names = ordered_json::array();
    for (int v : b) names.push_back(pres.ring->vars[v]);
    blocks.push_back(names);
  }
  ordered_json gens = ordered_json::array();
  for (const auto& g : pres.generators) gens.push_back(g.to_string());
  ordered_json out = {{"command", "variety"},
                      {"variety", c.mode},
                      {"tag", pres.tag},
                      {"p", pres.characteristic()},
                      {"blocks", blocks},
                      {"generators", gens}};
  if (!c.chart.empty()) {
    const Chart chart = parse_chart(pres, c.chart);
    ordered_json chart_gens = ordered_json::array();
    for (const auto& g : chart_ideal(pres, chart)) chart_gens.push_back(g.to_string());
    out["chart"] = {{"chart", chart_name(pres, chart)},
                    {"ideal", chart_gens},
                    {"singular", codim_json(singular_codimension(pres, chart))}};
  }
  if (c.certify_normality) {
    const NormalityCertificate cert = non_normality_certificate(pres);
    ordered_json charts = ordered_json::array();
    for (const auto& e : cert.charts) {
      ordered_json entry = {{"chart", chart_name(pres, e.chart)}, {"meets_variety", e.meets_variety}};
      entry["singular"] = codim_json(e.result);
      charts.push_back(entry);
    }
    out["normality"] = {{"verdict", cert.verdict == NormalityVerdict::NotNormal ? "not normal" : "inconclusive"},
                        {"smooth", cert.smooth},
                        {"min_codimension", cert.min_codimension ? ordered_json(*cert.min_codimension)
                                                                 : ordered_json("infinite")},
                        {"charts", charts}};
  }
  if (!c.count_points.empty()) {
    std::vector<PointCountRow> rows;
    std::string source;
    if (c.mode == "incidence" || c.mode == "twisted-incidence") {
      // G/P_red is SL_{n+1} modulo the parabolic whose Levi omits the two end nodes.
      const auto sys = RootSystem::build(Family::A, c.n);
      std::vector<int> gens;
      for (int k = 1; k + 1 < c.n; ++k) gens.push_back(k);
      rows = point_count_vs_paving(pres, LeviSubset(sys, gens), c.count_points, c.budget);
      source = "poincare polynomial of " + sys->name() + " partial flags";
    } else {
      const ProjectiveIdealPresentation partner = build_variety(c, false);
      for (auto q : c.count_points) {
        const auto counted = projective_point_count(pres, q, c.budget);
        const auto expected = projective_point_count(partner, q, c.budget);
        rows.push_back({q, counted, expected, counted == expected});
      }
      source = "untwisted presentation " + partner.tag;
    }
    ordered_json counts = ordered_json::array();
    for (const auto& r : rows)
      counts.push_back({{"q", r.q}, {"counted", r.counted}, {"expected", r.expected}, {"match", r.match}});
    out["point_counts"] = {{"expected_from", source}, {"rows", counts}};
  }
  return out;
}

ordered_json cmd_count(const RunConfig& c) {
  if (c.polys.empty()) throw InputError("count needs --poly");
  if (c.q < 2) throw InputError("count needs --q");
  const FieldPtr field = GaloisField::of_order(c.q);
  const RingPtr ring = infer_ring(c.polys, field->characteristic());
  std::vector<Polynomial> gens;
  for (const auto& t : c.polys) gens.push_back(parse_polynomial(t, ring));
  ordered_json out = {{"command", "count"}, {"field", field->name()}, {"variables", ring->vars}};
  ordered_json texts = ordered_json::array();
  for (const auto& g : gens) texts.push_back(g.to_string());
  out["generators"] = texts;
  if (c.blocks.empty()) {
    out["space"] = "affine";
    out["count"] = affine_point_count(gens, field, c.budget);
  } else {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : c.blocks) {
      std::vector<int> idx;
      for (const auto& name : split_list(b)) {
        const int v = ring->index_of(name);
        if (v < 0) throw InputError("block variable " + name + " does not occur in the polynomials");
        idx.push_back(v);
      }
      blocks.push_back(idx);
    }
    out["space"] = "multi-projective";
    out["blocks"] = c.blocks;
    out["count"] = projective_point_count(gens, blocks, field, c.budget);
  }
  return out;
}

std::string cell_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& x : v) {
      if (!out.empty()) out += ", ";
      out += x.is_array() ? "[" + cell_text(x) + "]" : cell_text(x);
    }
    return out;
  }
  return v.dump();
}

void render(std::ostringstream& os, const ordered_json& report, const std::string& prefix) {
  for (const auto& [key, value] : report.items()) {
    const std::string name = prefix + key;
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::vector<std::string> cols;
      for (const auto& [k, v] : value.front().items()) cols.push_back(k);
      std::vector<size_t> width;
      for (const auto& col : cols) width.push_back(col.size());
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : value) {
        std::vector<std::string> line;
        for (size_t k = 0; k < cols.size(); ++k) {
          line.push_back(row.contains(cols[k]) ? cell_text(row[cols[k]]) : "");
          width[k] = std::max(width[k], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      os << name << ":\n";
      auto emit = [&](const std::vector<std::string>& line) {
        os << " ";
        for (size_t k = 0; k < line.size(); ++k) os << " " << line[k] << std::string(width[k] - line[k].size(), ' ');
        os << "\n";
      };
      emit(cols);
      for (const auto& line : cells) emit(line);
    } else if (value.is_object()) {
      render(os, value, name + ".");
    } else {
      os << name << ": " << cell_text(value) << "\n";
    }
  }
}

}  // namespace

ordered_json run_command(const RunConfig& config) {
  const std::string& cmd = config.command;
  if (cmd == "root") return cmd_root(config);
  if (cmd == "weyl") return cmd_weyl(config);
  if (cmd == "parabolic") return cmd_parabolic(config);
  if (cmd == "chow") return cmd_chow(config);
  if (cmd == "fiber") return cmd_fiber(config);
  if (cmd == "star") return cmd_star(config);
  if (cmd == "qtype") return cmd_qtype(config);
  if (cmd == "variety") return cmd_variety(config);
  if (cmd == "count") return cmd_count(config);
  throw InputError("unknown command '" + cmd + "'");
}

std::string render_table(const ordered_json& report) {
  std::ostringstream os;
  render(os, report, "");
  return os.str();
}

}  // namespace vuf
