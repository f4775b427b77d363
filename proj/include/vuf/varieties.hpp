#pragma once

#include "vuf/chow.hpp"
#include "vuf/points.hpp"
#include "vuf/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vuf {

/// Closed subvariety of a product of projective spaces; blocks[b] lists the
/// homogeneous coordinates of factor b.
struct ProjectiveIdealPresentation {
  RingPtr ring;
  std::vector<std::vector<int>> blocks;
  std::vector<Polynomial> generators;
  std::string tag;

  int characteristic() const { return ring->p; }
  /// Throws InputError unless every generator is homogeneous in each block.
  void validate() const;
  std::string to_string() const;
};

/// sum_{i=1}^{n+1} x_i y_i in P^n x dual P^n.
ProjectiveIdealPresentation incidence(int n, int p);
/// sum_{i=1}^{n+1} z_i w_i^p in P^n x dual P^n.
ProjectiveIdealPresentation twisted_incidence(int n, int p);
/// sum z_i w_i^exponent; exponent 1 gives the untwisted form in z, w.
ProjectiveIdealPresentation twisted_incidence(int n, int p, int exponent);

/// Schubert subvariety I_{i,j} of the (twisted) incidence variety:
/// sum_{k=j}^{i} z_k w_k^p together with z_{i+1} = ... = z_{n+1} = 0 and
/// w_1 = ... = w_{j-1} = 0. The untwisted version uses x, y and exponent 1.
ProjectiveIdealPresentation schubert_ideal(int n, int p, int i, int j, bool twisted = true);

/// The n-dimensional non-normal Schubert variety of the twisted incidence
/// variety: I_{2,1} for n = 2, I_{3,2} for n >= 3. For n >= 3 its ideal on
/// the chart z_1 != 0, w_{n+1} != 0 is <z_2 w_2^p + z_3 w_3^p, w_1, z_4, ...>.
ProjectiveIdealPresentation nonnormal_schubert(int n, int p);

/// <a^p x + b^p y, z> in P^2 (x:y:z) x dual P^2 (a:b:c).
ProjectiveIdealPresentation bsdh_sl3(int p);

/// Same characteristic and block sizes, and some block-preserving bijection
/// of variables carries one reduced Groebner basis onto the other.
bool equal_up_to_renaming(const ProjectiveIdealPresentation& a, const ProjectiveIdealPresentation& b);

/// Affine chart: for each block, the variable set to 1.
struct Chart {
  std::vector<int> vars;
  friend bool operator==(const Chart&, const Chart&) = default;
};

std::vector<Chart> all_charts(const ProjectiveIdealPresentation& pres);
/// Chart from variable names, one per block in any order.
Chart parse_chart(const ProjectiveIdealPresentation& pres, const std::vector<std::string>& names);
std::string chart_name(const ProjectiveIdealPresentation& pres, const Chart& chart);

/// Generators restricted to the chart, in the ring of the remaining variables.
std::vector<Polynomial> chart_ideal(const ProjectiveIdealPresentation& pres, const Chart& chart);

struct SingularCodimension {
  int variety_dim;
  int singular_dim;              // -1 when the singular locus misses the chart
  std::optional<int> codimension;  // nullopt: no singular points on the chart
};

/// Jacobian criterion on one chart: the singular ideal is the chart ideal plus
/// all c x c minors of its Jacobian, c = (chart variables) - dim. Throws
/// InputError when the variety misses the chart.
SingularCodimension singular_codimension(const ProjectiveIdealPresentation& pres, const Chart& chart);

enum class NormalityVerdict { NotNormal, Inconclusive };

struct ChartCodimension {
  Chart chart;
  bool meets_variety;
  std::optional<SingularCodimension> result;
};

struct NormalityCertificate {
  NormalityVerdict verdict;
  bool smooth;  // no chart has singular points
  std::optional<int> min_codimension;
  std::vector<ChartCodimension> charts;
};

/// "not normal" when some chart has a codimension-1 singular locus (a normal
/// variety is regular in codimension one); inconclusive otherwise.
NormalityCertificate non_normality_certificate(const ProjectiveIdealPresentation& pres);

struct PointCountRow {
  std::int64_t q;
  std::int64_t counted;
  std::int64_t expected;
  bool match;
};

std::vector<PointCountRow> point_count_vs_paving(const ProjectiveIdealPresentation& pres,
                                                 const IntPolynomial& expected,
                                                 const std::vector<std::int64_t>& q_list,
                                                 std::int64_t budget = kDefaultPointBudget);
/// Expected counts from the Poincaré polynomial of G/P_levi.
std::vector<PointCountRow> point_count_vs_paving(const ProjectiveIdealPresentation& pres, const LeviSubset& levi,
                                                 const std::vector<std::int64_t>& q_list,
                                                 std::int64_t budget = kDefaultPointBudget);

std::int64_t projective_point_count(const ProjectiveIdealPresentation& pres, std::int64_t q,
                                    std::int64_t budget = kDefaultPointBudget);

}  // namespace vuf
