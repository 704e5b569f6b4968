// Configurations of linear varieties cut out by lifting-matrix entries:
// enumeration of components, generalized-stick-figure checks, the
// downward-closure and redistribution-closure conditions, the inverse
// construction from a configuration back to an Artinian monomial ideal,
// and the liaison residual check.
//
// Components are handled purely combinatorially: a component is a set of
// matrix entries (row j, column i), at most one per row, and dimensions come
// from the certified genericity rule (codim of a set of entries equals
// min(#rows used + t, #entries) for restricted matrices, min(n + t, #entries)
// for fully general ones).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monolift/ideal_algebra.hpp"

namespace monolift {

// (i_1, ..., i_n), 1-based: the variety cut out by L_{1,i_1}, ..., L_{n,i_n}.
using ComponentIndex = std::vector<int>;

struct GeneralComponent {
  std::vector<std::pair<int, int>> entries;  // (row j, column i), 1-based, sorted, one per row

  int codim() const { return static_cast<int>(entries.size()); }
  friend bool operator==(const GeneralComponent&, const GeneralComponent&) = default;
  friend auto operator<=>(const GeneralComponent&, const GeneralComponent&) = default;
};

struct Configuration {
  enum class MatrixMode { restricted, general };

  int n = 0;
  int t = 0;
  std::vector<int> grid;  // N_1..N_n (grid case; empty in the general case)
  bool grid_case = true;
  std::vector<ComponentIndex> members;      // grid case, sorted lexicographically
  std::vector<GeneralComponent> general;    // general case, sorted
  MatrixMode mode = MatrixMode::restricted;

  size_t component_count() const { return grid_case ? members.size() : general.size(); }
  bool member(const ComponentIndex& idx) const;
  // Uniform component view (grid members become one-entry-per-row sets).
  std::vector<GeneralComponent> component_entries() const;
};

// Component enumeration for Artinian J on the grid given by `bounds`
// (default: max_exponents(J)): (i_1..i_n) is a component iff X^(i-1) is a
// standard monomial.
Configuration components_artinian(const MonomialIdeal& J, int t,
                                  std::optional<std::vector<int>> bounds = std::nullopt);

// Components of the lifting of arbitrary proper J, via the irreducible
// decomposition: (X_{j1}^{a1},..,X_{jp}^{ap}) contributes the grid of
// one-entry-per-row choices (j_s, b_s), b_s <= a_s; redundant entry-sets
// (supersets) are removed.
Configuration components_general(const MonomialIdeal& J, int t,
                                 Configuration::MatrixMode mode = Configuration::MatrixMode::restricted);

struct StickFigureReport {
  bool pass = false;
  bool equidimensional = true;
  bool restricted_away_from_w = false;
  size_t triples_checked = 0;
  size_t exempted_in_w = 0;
  std::vector<std::string> failures;
};

// Projective dimension of the intersection of the chosen components, from
// the certified genericity rule; -1 when empty.
long long intersection_dimension(const Configuration& V, const std::vector<size_t>& components);

// Any three components of a dimension stratum meet in dimension <= d-2
// (empty intersections pass).  With restrict_away_from_w, intersections
// contained in the u = 0 locus are exempt.
StickFigureReport is_generalized_stick_figure(const Configuration& V, bool restrict_away_from_w);

// Coordinatewise downward closure of the member set (order ideal).
bool check_condition2(const Configuration& V);

struct Condition3Result {
  bool pass = false;
  // First failing pair: the member and the missing redistribution tuple.
  std::optional<std::pair<ComponentIndex, ComponentIndex>> witness;
};

// Redistribution closure: for every member with i_j >= 2 (j < n) and every
// tuple i'_{j+1},..,i'_n >= 1 with sum = i_{j+1}+..+i_n+1, the tuple
// (i_1,..,i_j - 1, i'_{j+1},..,i'_n) must again be a member.  Tuples beyond
// the grid count as absent.
Condition3Result check_condition3(const Configuration& V);

// Inverse construction: the Artinian ideal whose lifting has exactly these
// components.  Requires the grid case, a nonempty member set, and the
// downward-closure condition.
MonomialIdeal monomial_ideal_from_configuration(const Configuration& V);

struct ResidualReport {
  bool pass = false;
  MonomialIdeal complete_intersection{0};
  MonomialIdeal residual{0};
  std::string detail;
};

// Liaison check: inside the complete intersection (X_1^{N_1},..,X_n^{N_n}),
// the components of the residual (CI : J) are exactly the grid complement of
// the components of J with every index reversed (i_j -> N_j + 1 - i_j), i.e.
// the residual configuration is the lifting via the column-reversed matrix.
ResidualReport residual_check(const MonomialIdeal& J, int t = 1);

// Plane-by-plane ASCII rendering for n = 3, one grid slice per i_1 value.
std::string render_slices(const Configuration& V);

}  // namespace monolift
