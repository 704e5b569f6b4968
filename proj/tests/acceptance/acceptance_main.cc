// Acceptance suite: one pass/fail line per criterion.  Every check is exact;
// the property suites run on seeded corpora and finish in seconds.
#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monolift/configuration.hpp"
#include "monolift/groebner.hpp"
#include "monolift/ideal_algebra.hpp"
#include "monolift/json_io.hpp"
#include "monolift/osequence.hpp"
#include "monolift/report.hpp"
#include "monolift/taylor.hpp"
#include "monolift/text_io.hpp"

using namespace monolift;

namespace {

int failures = 0;

void report_line(int id, const std::string& label, bool pass, const std::string& detail,
                 double ms) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " - " << label;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << " (" << static_cast<long>(ms) << " ms)\n";
  if (!pass) ++failures;
}

void run(int id, const std::string& label, const std::function<bool(std::string&)>& fn) {
  Stopwatch watch;
  std::string detail;
  bool pass = false;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report_line(id, label, pass, detail, watch.millis());
}

MonomialIdeal ideal3(const std::string& text) { return parse_monomial_ideal(text, Ring{3, 0}); }

MonomialIdeal cube_example() { return ideal3("x1^2*x2, x2^2*x3, x3^2*x1"); }

std::vector<Monomial> cube_gens_ordered() {
  Ring r{3, 0};
  return {parse_monomial("x1^2*x2", r), parse_monomial("x2^2*x3", r),
          parse_monomial("x1*x3^2", r)};
}

MonomialIdeal cone_example() {
  return ideal3("x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3, x2^3, x2^2*x3");
}

MonomialIdeal twenty_points() {
  return ideal3(
      "x1^3, x1^2*x2^2, x1^2*x2*x3, x1*x2^3, x1*x2^2*x3, x1*x2*x3^2, x1*x3^3, "
      "x2^4, x2^3*x3, x2^2*x3^2, x2*x3^3, x3^4");
}

MonomialIdeal fourteen_points() {
  return ideal3("x1^3, x1^2*x2, x1^2*x3, x1*x2^2, x1*x2*x3, x2^3, x1*x3^3, x2^2*x3^2, x2*x3^3, x3^4");
}

std::vector<Rat> consecutive_scalars(size_t p) {
  std::vector<Rat> out;
  for (size_t i = 1; i <= p; ++i) out.push_back(Rat(static_cast<long>(i)));
  return out;
}

LiftingMatrix vandermonde_for(const MonomialIdeal& J, int t) {
  MaxExponents N = max_exponents(J);
  size_t p = 0;
  for (int nj : N.per_variable) p += static_cast<size_t>(nj);
  return vandermonde_lifting_matrix(J.nvars(), t, N.per_variable, consecutive_scalars(p));
}

struct CorpusEntry {
  MonomialIdeal J{0};
  int t = 1;
};

// Seeded corpus: >= 200 Artinian monomial ideals, n <= 4, exponents <= 4,
// t cycling through {1,2,3}; generator counts kept small enough for the
// subset-indexed complexes.
std::vector<CorpusEntry> property_corpus() {
  std::mt19937_64 rng(20260810);
  std::vector<CorpusEntry> out;
  int t_cycle[3] = {1, 2, 3};
  while (out.size() < 200) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::uniform_int_distribution<int> exp_dist(1, 4);
    std::vector<Monomial> gens;
    for (int j = 0; j < n; ++j) gens.push_back(Monomial::variable(n, j, exp_dist(rng)));
    std::uniform_int_distribution<int> coord(0, 3);
    int extra = 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < extra; ++k) {
      std::vector<int> e(static_cast<size_t>(n));
      for (auto& v : e) v = coord(rng);
      gens.push_back(Monomial(std::move(e)));
    }
    MonomialIdeal J = MonomialIdeal::from_generators(n, std::move(gens));
    if (J.is_unit() || J.generator_count() > 8) continue;
    out.push_back({J, t_cycle[out.size() % 3]});
  }
  return out;
}

bool criterion1(std::string& detail) {
  MonomialIdeal J = cube_example();
  LiftingMatrix A = vandermonde_lifting_matrix(3, 2, {2, 2, 2}, consecutive_scalars(6));
  auto L = [&](int j, int i) { return A.entry(j, i); };

  std::vector<SparsePoly> gens = lifted_ideal(J, A);
  std::vector<SparsePoly> printed = {L(1, 1) * L(1, 2) * L(2, 1), L(2, 1) * L(2, 2) * L(3, 1),
                                     L(1, 1) * L(3, 1) * L(3, 2)};
  for (const SparsePoly& want : printed)
    if (std::count(gens.begin(), gens.end(), want) != 1) {
      detail = "lifted generators differ from the printed products";
      return false;
    }

  FreeComplex c = lift_taylor_complex_ordered(cube_gens_ordered(), A);
  if (!verify_complex(c)) {
    detail = "composite of consecutive differentials nonzero";
    return false;
  }
  // printed third matrix (-L22, L12, L32) under the basis change
  // (e12,e13,e23) -> (-e13,-e23,-e12)
  const int perm[3] = {1, 2, 0};
  std::vector<SparsePoly> expected3 = {-L(2, 2), L(1, 2), L(3, 2)};
  for (int printed_row = 0; printed_row < 3; ++printed_row)
    if (-c.diff[3].at(perm[printed_row], 0) != expected3[static_cast<size_t>(printed_row)]) {
      detail = "third differential entries differ";
      return false;
    }
  ExactnessReport rep = verify_exactness(c, 10);
  if (!rep.exact()) {
    detail = "exactness certificate failed: " + (rep.failures.empty() ? "" : rep.failures[0]);
    return false;
  }
  BettiTable expected = {{{1, 3}, 3}, {{2, 5}, 3}, {{3, 6}, 1}};
  if (graded_betti(J) != expected) {
    detail = "base Betti table off";
    return false;
  }
  if (tor_table(c) != expected) {
    detail = "lifted Tor table off";
    return false;
  }
  detail = "generators, matrices, exactness to degree 10, Betti (3,3,1) at (3,5,6)";
  return true;
}

bool criterion2(std::string& detail) {
  Configuration V = components_general(cone_example(), 1);
  using E = std::vector<std::pair<int, int>>;
  std::set<E> got;
  for (const auto& comp : V.general) got.insert(comp.entries);
  std::set<E> expected = {E{{1, 1}, {2, 1}},         E{{1, 1}, {2, 2}},
                          E{{1, 2}, {2, 1}},         E{{1, 3}, {2, 1}, {3, 1}},
                          E{{1, 1}, {2, 3}, {3, 1}}, E{{1, 2}, {2, 2}, {3, 1}}};
  if (got != expected) {
    detail = "component list differs";
    return false;
  }
  StickFigureReport plain = is_generalized_stick_figure(V, false);
  StickFigureReport away = is_generalized_stick_figure(V, true);
  if (plain.pass) {
    detail = "expected unrestricted failure (three lines through a point)";
    return false;
  }
  if (!away.pass) {
    detail = "expected pass away from the hyperplane section";
    return false;
  }
  detail = "3 lines + 3 points, stick check fails plainly and passes away from W";
  return true;
}

bool criterion3(std::string& detail) {
  MonomialIdeal J = twenty_points();
  HilbertData hd = hilbert_series(J);
  if (!hd.h_vector || *hd.h_vector != std::vector<long long>{1, 3, 6, 9, 1}) {
    detail = "h-vector differs";
    return false;
  }
  Configuration V = components_artinian(J, 1);
  auto slice_count = [&](int i1) {
    return std::count_if(V.members.begin(), V.members.end(),
                         [&](const ComponentIndex& m) { return m[0] == i1; });
  };
  if (V.members.size() != 20 || slice_count(1) != 10 || slice_count(2) != 6 ||
      slice_count(3) != 4) {
    detail = "component split differs";
    return false;
  }
  if (!check_condition2(V)) {
    detail = "downward closure failed";
    return false;
  }
  Condition3Result c3 = check_condition3(V);
  if (c3.pass || !c3.witness || c3.witness->first != ComponentIndex{3, 1, 3} ||
      c3.witness->second != ComponentIndex{2, 1, 4}) {
    detail = "redistribution witness differs";
    return false;
  }
  if (monomial_ideal_from_configuration(V) != J) {
    detail = "inversion does not round-trip";
    return false;
  }
  detail = "20 components 10/6/4, witness (L13,L21,L33) missing (L12,L21,L34), inversion ok";
  return true;
}

bool criterion4(std::string& detail) {
  Configuration V = components_artinian(fourteen_points(), 1);
  auto slice_count = [&](int i1) {
    return std::count_if(V.members.begin(), V.members.end(),
                         [&](const ComponentIndex& m) { return m[0] == i1; });
  };
  if (V.members.size() != 14 || slice_count(1) != 9 || slice_count(2) != 4 ||
      slice_count(3) != 1) {
    detail = "component split differs";
    return false;
  }
  Condition3Result c3 = check_condition3(V);
  if (c3.pass || !c3.witness || c3.witness->first != ComponentIndex{2, 1, 3} ||
      c3.witness->second != ComponentIndex{1, 4, 1}) {
    detail = "witness differs";
    return false;
  }
  detail = "14 components 9/4/1, member (L12,L21,L33) needs absent (L11,L24,L31)";
  return true;
}

bool criterion5(std::string& detail) {
  auto corpus = property_corpus();
  int honest_rank_checks = 0;
  for (const auto& [J, t] : corpus) {
    LiftingMatrix A = vandermonde_for(J, t);
    if (!check_genericity(A, J).pass) {
      detail = "vandermonde genericity failed";
      return false;
    }
    HilbertData base = hilbert_series(J);
    HilbertData lifted = base;
    lifted.nvars = J.nvars() + t;
    std::vector<long long> values;
    for (long long d = 0; d <= 10 + t; ++d) values.push_back(lifted.hilbert_function(d));
    std::vector<long long> dropped = difference(values, t);
    std::vector<long long> hist = standard_monomial_histogram(J);
    for (long long d = 0; d <= 10; ++d) {
      long long want = d < static_cast<long long>(hist.size()) ? hist[static_cast<size_t>(d)] : 0;
      if (dropped[static_cast<size_t>(d)] != want) {
        detail = "Delta^t identity failed";
        return false;
      }
    }
    long long total = 0;
    if (!base.h_vector) {
      detail = "missing h-vector for an Artinian ideal";
      return false;
    }
    for (long long v : *base.h_vector) total += v;
    Configuration V = components_artinian(J, t);
    if (static_cast<long long>(V.members.size()) != total) {
      detail = "component count differs from h-vector sum";
      return false;
    }
    // Honest slice ranks for a subsample: dim I_d from the first lifted
    // differential must match the resolution bookkeeping.
    if (honest_rank_checks < 10 && J.nvars() + t <= 4 && J.generator_count() <= 6) {
      ++honest_rank_checks;
      FreeComplex c = lift_taylor_complex(J, A);
      for (long long d = 0; d <= 6; ++d) {
        MatQ slice = graded_slice(c.diff[1], d);
        long long ideal_dim = rank_in_mode(slice, FieldMode::prime_field);
        long long ring_dim = count_monomials_of_degree(J.nvars() + t, d);
        if (ring_dim - ideal_dim != values[static_cast<size_t>(d)]) {
          detail = "slice rank disagrees with resolution Euler data";
          return false;
        }
      }
    }
  }
  detail = "200 seeded ideals, Delta^t identity to degree 10, honest ranks on " +
           std::to_string(honest_rank_checks) + " subsampled ideals";
  return true;
}

bool criterion6(std::string& detail) {
  auto corpus = property_corpus();
  for (const auto& [J, t] : corpus) {
    LiftingMatrix A = vandermonde_for(J, t);
    if (!betti_agreement(J, A, 20)) {
      detail = "lifted Tor table differs from graded Betti table";
      return false;
    }
  }
  detail = "200 seeded ideals, degreewise Tor ranks preserved";
  return true;
}

bool criterion7(std::string& detail) {
  // all order ideals in the 3x3x3 grid via monotone height matrices
  long long checked = 0, skipped = 0;
  std::vector<int> heights(9, 0);
  std::vector<int> grid = {3, 3, 3};
  for (long long code = 0; code < 262144; ++code) {
    long long c = code;
    for (int i = 0; i < 9; ++i) {
      heights[static_cast<size_t>(i)] = static_cast<int>(c % 4);
      c /= 4;
    }
    auto h = [&](int a, int b) { return heights[static_cast<size_t>(3 * a + b)]; };
    bool monotone = true;
    for (int a = 0; a < 3 && monotone; ++a)
      for (int b = 0; b < 3 && monotone; ++b) {
        if (a + 1 < 3 && h(a, b) < h(a + 1, b)) monotone = false;
        if (b + 1 < 3 && h(a, b) < h(a, b + 1)) monotone = false;
      }
    if (!monotone) continue;
    Configuration V;
    V.n = 3;
    V.t = 1;
    V.grid = grid;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int k = 1; k <= h(a, b); ++k) V.members.push_back({a + 1, b + 1, k});
    std::sort(V.members.begin(), V.members.end());
    if (V.members.empty()) {
      ++skipped;  // the empty configuration inverts to the unit ideal
      continue;
    }
    MonomialIdeal J = monomial_ideal_from_configuration(V);
    Configuration back = components_artinian(J, 1, grid);
    if (back.members != V.members) {
      detail = "inversion round trip failed";
      return false;
    }
    if (is_lex_segment(J) != check_condition3(V).pass) {
      detail = "lex-segment / redistribution equivalence failed";
      return false;
    }
    ++checked;
  }
  if (checked != 979) {  // 980 order ideals, minus the empty one
    detail = "expected 979 nonempty order ideals, saw " + std::to_string(checked);
    return false;
  }
  detail = "all 979 nonempty order ideals in the 3x3x3 grid";
  return true;
}

bool criterion8(std::string& detail) {
  std::mt19937_64 rng(424242);
  int attempted = 0, completed = 0, verified = 0;
  BuchbergerLimits limits;
  limits.max_total_degree = 14;
  limits.max_pair_reductions = 100000;
  while (attempted < 20) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::uniform_int_distribution<int> coord(0, 2);
    std::vector<Monomial> gens;
    int count = 3 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k) {
      std::vector<int> e(static_cast<size_t>(n));
      long long deg = 0;
      for (auto& v : e) {
        v = coord(rng);
        deg += v;
      }
      if (deg == 0 || deg > 4) {
        --k;
        continue;
      }
      gens.push_back(Monomial(std::move(e)));
    }
    MonomialIdeal J = MonomialIdeal::from_generators(n, std::move(gens));
    if (J.is_unit() || J.is_zero()) continue;
    if (J.generator_count() < 2 || J.generator_count() > 5) continue;
    long long maxdeg = 0;
    for (const Monomial& g : J.generators()) maxdeg = std::max(maxdeg, g.degree());
    if (maxdeg < 2) continue;
    ++attempted;
    LiftingMatrix A = vandermonde_for(J, 1);
    try {
      InitialIdealResult res = verify_initial_ideal(J, A, limits);
      if (res.completed) {
        ++completed;
        if (res.verified) ++verified;
      }
    } catch (const resource_limit_error&) {
      // counts as not completed
    }
  }
  if (completed < 15) {
    detail = "only " + std::to_string(completed) + " of 20 completed";
    return false;
  }
  if (verified != completed) {
    detail = "an initial ideal differed from J";
    return false;
  }
  detail = std::to_string(completed) + "/20 completed, all initial ideals equal J*R";
  return true;
}

bool criterion9(std::string& detail) {
  // line plus two points
  MonomialIdeal J1 = parse_monomial_ideal("x1^2, x1*x2, x1*x3, x2^2, x2*x3", Ring{3, 0});
  Configuration V1 = components_general(J1, 1);
  using E = std::vector<std::pair<int, int>>;
  std::set<E> got1;
  for (const auto& comp : V1.general) got1.insert(comp.entries);
  std::set<E> expected1 = {E{{1, 1}, {2, 1}}, E{{1, 1}, {2, 2}, {3, 1}}, E{{1, 2}, {2, 1}, {3, 1}}};
  if (got1 != expected1) {
    detail = "line-plus-two-points components differ";
    return false;
  }
  HomologicalSummary s1 = depth_and_cm(J1);
  if (s1.cohen_macaulay || s1.depth != 0 || s1.dim != 1) {
    detail = "first ideal's depth data off";
    return false;
  }
  if (is_equidimensional(J1)) {
    detail = "first ideal should be mixed";
    return false;
  }

  // two planes meeting at a point
  MonomialIdeal J2 = parse_monomial_ideal("x1*x3, x1*x4, x2*x3, x2*x4", Ring{4, 0});
  Configuration V2 = components_general(J2, 1);
  std::set<E> got2;
  for (const auto& comp : V2.general) got2.insert(comp.entries);
  std::set<E> expected2 = {E{{1, 1}, {2, 1}}, E{{3, 1}, {4, 1}}};
  if (got2 != expected2) {
    detail = "two-planes components differ";
    return false;
  }
  HomologicalSummary s2 = depth_and_cm(J2);
  if (s2.cohen_macaulay || s2.depth != 1 || s2.dim != 2) {
    detail = "second ideal's depth data off";
    return false;
  }
  if (!is_equidimensional(J2)) {
    detail = "second ideal should be equidimensional";
    return false;
  }
  detail = "line + two points and two planes through a point, both flagged non-CM";
  return true;
}

bool criterion10(std::string& detail) {
  std::mt19937_64 rng(777);
  int built = 0;
  while (built < 20) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<long long> h{1};
    long long total = 1;
    for (int d = 1; d <= 2 + static_cast<int>(rng() % 3); ++d) {
      long long cap = d == 1 ? n
                             : std::min(macaulay_growth(h.back(), d - 1),
                                        count_monomials_of_degree(n, d));
      if (cap <= 0) break;
      long long pick = 1 + static_cast<long long>(rng() % cap);
      h.push_back(pick);
      total += pick;
      if (total > 40) break;
    }
    if (!is_o_sequence(h)) continue;
    int t = 1 + static_cast<int>(rng() % 3);
    StickFigurePipelineResult r = stick_figure_from_o_sequence(h, t, n);
    ++built;
    if (!r.genericity.pass) {
      detail = "genericity failed";
      return false;
    }
    if (!r.stick.pass) {
      detail = "stick-figure check failed";
      return false;
    }
    if (!r.hilbert_identity_ok) {
      detail = "Hilbert function not reproduced";
      return false;
    }
    auto hv = hilbert_series(r.ideal).h_vector;
    std::vector<long long> stripped = h;
    while (!stripped.empty() && stripped.back() == 0) stripped.pop_back();
    if (!hv || *hv != stripped) {
      detail = "constructed ideal has the wrong h-vector";
      return false;
    }
  }
  detail = "20 random admissible Hilbert functions realized as stick figures";
  return true;
}

}  // namespace

int main() {
  std::cout << "acceptance suite\n";
  run(1, "cubic example lift: printed generators, matrices, exactness, Betti", criterion1);
  run(2, "cone example: general components and stick checks", criterion2);
  run(3, "20-point example: h-vector, slices, conditions, inversion", criterion3);
  run(4, "14-point example: slices and redistribution witness", criterion4);
  run(5, "Delta^t identity property suite", criterion5);
  run(6, "Betti preservation property suite", criterion6);
  run(7, "classification equivalence over the 3x3x3 grid", criterion7);
  run(8, "initial-ideal oracle", criterion8);
  run(9, "non-Cohen-Macaulay dichotomy examples", criterion9);
  run(10, "stick figures from admissible Hilbert functions", criterion10);
  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criteria failed\n";
  return 1;
}
