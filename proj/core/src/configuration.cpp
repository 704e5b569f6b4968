#include "monolift/configuration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "monolift/text_io.hpp"

namespace monolift {

bool Configuration::member(const ComponentIndex& idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

std::vector<GeneralComponent> Configuration::component_entries() const {
  if (!grid_case) return general;
  std::vector<GeneralComponent> out;
  out.reserve(members.size());
  for (const ComponentIndex& idx : members) {
    GeneralComponent c;
    for (int j = 0; j < n; ++j) c.entries.push_back({j + 1, idx[static_cast<size_t>(j)]});
    out.push_back(std::move(c));
  }
  return out;
}

Configuration components_artinian(const MonomialIdeal& J, int t,
                                  std::optional<std::vector<int>> bounds) {
  if (!J.is_unit() && !is_artinian(J))
    throw std::invalid_argument("components_artinian: ideal must be Artinian");
  Configuration V;
  V.n = J.nvars();
  V.t = t;
  V.grid = bounds ? std::move(*bounds) : max_exponents(J).per_variable;
  if (static_cast<int>(V.grid.size()) != V.n)
    throw std::invalid_argument("components_artinian: bad grid bounds");
  std::vector<int> idx(static_cast<size_t>(V.n), 1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == V.n) {
      std::vector<int> exps(static_cast<size_t>(V.n));
      for (int j = 0; j < V.n; ++j) exps[static_cast<size_t>(j)] = idx[static_cast<size_t>(j)] - 1;
      if (!J.contains(Monomial(std::move(exps)))) V.members.push_back(idx);
      return;
    }
    for (int i = 1; i <= V.grid[static_cast<size_t>(pos)]; ++i) {
      idx[static_cast<size_t>(pos)] = i;
      self(self, pos + 1);
    }
    idx[static_cast<size_t>(pos)] = 1;
  };
  if (V.n > 0 && !J.is_unit()) rec(rec, 0);
  std::sort(V.members.begin(), V.members.end());
  return V;
}

Configuration components_general(const MonomialIdeal& J, int t, Configuration::MatrixMode mode) {
  Configuration V;
  V.n = J.nvars();
  V.t = t;
  V.grid_case = false;
  V.mode = mode;
  std::set<GeneralComponent> comps;
  for (const IrreducibleComponent& q : irreducible_decomposition(J)) {
    // every one-per-row choice of columns within the exponents
    std::vector<std::pair<int, int>> vars(q.entries.begin(), q.entries.end());
    GeneralComponent cur;
    cur.entries.resize(vars.size());
    auto rec = [&](auto&& self, size_t pos) -> void {
      if (pos == vars.size()) {
        comps.insert(cur);
        return;
      }
      for (int b = 1; b <= vars[pos].second; ++b) {
        cur.entries[pos] = {vars[pos].first + 1, b};
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }
  // Remove strict supersets: the bigger entry set cuts a smaller variety.
  for (const GeneralComponent& c : comps) {
    bool redundant = false;
    for (const GeneralComponent& other : comps) {
      if (other.entries.size() >= c.entries.size() || other == c) continue;
      if (std::includes(c.entries.begin(), c.entries.end(), other.entries.begin(),
                        other.entries.end())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) V.general.push_back(c);
  }
  std::sort(V.general.begin(), V.general.end(), [](const GeneralComponent& a, const GeneralComponent& b) {
    if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
    return a.entries < b.entries;
  });
  return V;
}

namespace {

struct CutData {
  long long entries = 0;
  long long rows = 0;
  long long codim = 0;  // min(rows + t, entries) restricted, min(n+t, entries) general
};

CutData cut_of(const Configuration& V, const std::vector<const GeneralComponent*>& comps) {
  std::set<std::pair<int, int>> entries;
  std::set<int> rows;
  for (const GeneralComponent* c : comps)
    for (const auto& e : c->entries) {
      entries.insert(e);
      rows.insert(e.first);
    }
  CutData out;
  out.entries = static_cast<long long>(entries.size());
  out.rows = static_cast<long long>(rows.size());
  if (V.mode == Configuration::MatrixMode::restricted)
    out.codim = std::min<long long>(out.rows + V.t, out.entries);
  else
    out.codim = std::min<long long>(V.n + V.t, out.entries);
  return out;
}

}  // namespace

long long intersection_dimension(const Configuration& V, const std::vector<size_t>& components) {
  std::vector<GeneralComponent> all = V.component_entries();
  std::vector<const GeneralComponent*> picked;
  for (size_t i : components) picked.push_back(&all.at(i));
  CutData cut = cut_of(V, picked);
  if (cut.codim >= V.n + V.t) return -1;
  return V.n + V.t - 1 - cut.codim;
}

StickFigureReport is_generalized_stick_figure(const Configuration& V, bool restrict_away_from_w) {
  StickFigureReport report;
  report.restricted_away_from_w = restrict_away_from_w;
  std::vector<GeneralComponent> comps = V.component_entries();
  const int ambient_vars = V.n + V.t;  // projective dim = ambient_vars - 1
  // Group into dimension strata.
  std::map<int, std::vector<const GeneralComponent*>> strata;  // codim -> components
  for (const GeneralComponent& c : comps) strata[c.codim()].push_back(&c);
  report.equidimensional = strata.size() <= 1;
  report.pass = true;
  for (const auto& [codim, list] : strata) {
    const long long d = ambient_vars - 1 - codim;  // dimension of the stratum's components
    for (size_t a = 0; a < list.size(); ++a)
      for (size_t b = a + 1; b < list.size(); ++b)
        for (size_t c = b + 1; c < list.size(); ++c) {
          ++report.triples_checked;
          CutData cut = cut_of(V, {list[a], list[b], list[c]});
          if (cut.codim >= ambient_vars) continue;  // empty intersection
          long long dim_int = ambient_vars - 1 - cut.codim;
          if (dim_int <= d - 2) continue;
          if (restrict_away_from_w && V.mode == Configuration::MatrixMode::restricted &&
              cut.entries - cut.rows >= V.t) {
            ++report.exempted_in_w;  // intersection lies in the u = 0 locus
            continue;
          }
          report.pass = false;
          if (report.failures.size() < 16) {
            std::string s = "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ") in codim-" + std::to_string(codim) +
                            " stratum meets in dimension " + std::to_string(dim_int) +
                            " > " + std::to_string(d - 2);
            report.failures.push_back(std::move(s));
          }
        }
  }
  return report;
}

bool check_condition2(const Configuration& V) {
  if (!V.grid_case) throw std::invalid_argument("check_condition2: grid configuration required");
  for (const ComponentIndex& m : V.members)
    for (int j = 0; j < V.n; ++j) {
      if (m[static_cast<size_t>(j)] < 2) continue;
      ComponentIndex down = m;
      --down[static_cast<size_t>(j)];
      if (!V.member(down)) return false;
    }
  return true;
}

namespace {

// Compositions of `total` into `parts` parts >= 1, lexicographically
// ascending; invokes fn on each, stops early when fn returns false.
bool for_each_composition(long long total, int parts, std::vector<int>& buf,
                          const std::function<bool(const std::vector<int>&)>& fn) {
  if (parts == 0) return total != 0 || fn(buf);
  auto rec = [&](auto&& self, int pos, long long remaining) -> bool {
    if (pos == parts - 1) {
      if (remaining < 1) return true;
      buf[static_cast<size_t>(pos)] = static_cast<int>(remaining);
      return fn(buf);
    }
    for (long long v = 1; v + (parts - 1 - pos) <= remaining; ++v) {
      buf[static_cast<size_t>(pos)] = static_cast<int>(v);
      if (!self(self, pos + 1, remaining - v)) return false;
    }
    return true;
  };
  return rec(rec, 0, total);
}

}  // namespace

Condition3Result check_condition3(const Configuration& V) {
  if (!V.grid_case) throw std::invalid_argument("check_condition3: grid configuration required");
  Condition3Result out;
  for (const ComponentIndex& m : V.members) {
    for (int j = 0; j < V.n - 1; ++j) {
      if (m[static_cast<size_t>(j)] < 2) continue;
      long long tail_sum = 1;
      for (int l = j + 1; l < V.n; ++l) tail_sum += m[static_cast<size_t>(l)];
      const int parts = V.n - 1 - j;
      std::vector<int> buf(static_cast<size_t>(parts));
      bool ok = for_each_composition(tail_sum, parts, buf, [&](const std::vector<int>& tail) {
        ComponentIndex target(m.begin(), m.begin() + j + 1);
        --target[static_cast<size_t>(j)];
        target.insert(target.end(), tail.begin(), tail.end());
        if (V.member(target)) return true;
        out.witness = {m, target};
        return false;
      });
      if (!ok) {
        out.pass = false;
        return out;
      }
    }
  }
  out.pass = true;
  return out;
}

MonomialIdeal monomial_ideal_from_configuration(const Configuration& V) {
  if (!V.grid_case) throw std::invalid_argument("invert: grid configuration required");
  if (V.members.empty()) throw std::invalid_argument("invert: empty configuration");
  if (!check_condition2(V))
    throw std::invalid_argument(
        "invert: downward-closure condition fails; the configuration is not a pseudo-lifting");
  std::vector<Monomial> gens;
  // grid complement
  std::vector<int> idx(static_cast<size_t>(V.n), 1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == V.n) {
      if (!V.member(idx)) {
        std::vector<int> exps(static_cast<size_t>(V.n));
        for (int j = 0; j < V.n; ++j) exps[static_cast<size_t>(j)] = idx[static_cast<size_t>(j)] - 1;
        gens.push_back(Monomial(std::move(exps)));
      }
      return;
    }
    for (int i = 1; i <= V.grid[static_cast<size_t>(pos)]; ++i) {
      idx[static_cast<size_t>(pos)] = i;
      self(self, pos + 1);
    }
    idx[static_cast<size_t>(pos)] = 1;
  };
  rec(rec, 0);
  for (int j = 0; j < V.n; ++j)
    gens.push_back(Monomial::variable(V.n, j, V.grid[static_cast<size_t>(j)]));
  return MonomialIdeal::from_generators(V.n, std::move(gens));
}

ResidualReport residual_check(const MonomialIdeal& J, int t) {
  if (!is_artinian(J) || !J.is_proper())
    throw std::invalid_argument("residual_check: proper Artinian ideal required");
  ResidualReport report;
  MaxExponents N = max_exponents(J);
  std::vector<Monomial> ci_gens;
  for (int j = 0; j < J.nvars(); ++j)
    ci_gens.push_back(Monomial::variable(J.nvars(), j, N.per_variable[static_cast<size_t>(j)]));
  MonomialIdeal ci = MonomialIdeal::from_generators(J.nvars(), std::move(ci_gens));
  MonomialIdeal residual = quotient(ci, J);
  report.complete_intersection = ci;
  report.residual = residual;

  Configuration VJ = components_artinian(J, t, N.per_variable);
  std::set<ComponentIndex> expected;  // reversed grid complement of VJ
  std::vector<int> idx(static_cast<size_t>(J.nvars()), 1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == J.nvars()) {
      if (!VJ.member(idx)) {
        ComponentIndex rev(static_cast<size_t>(J.nvars()));
        for (int j = 0; j < J.nvars(); ++j)
          rev[static_cast<size_t>(j)] = N.per_variable[static_cast<size_t>(j)] + 1 - idx[static_cast<size_t>(j)];
        expected.insert(std::move(rev));
      }
      return;
    }
    for (int i = 1; i <= N.per_variable[static_cast<size_t>(pos)]; ++i) {
      idx[static_cast<size_t>(pos)] = i;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);

  std::set<ComponentIndex> actual;
  if (residual.is_unit()) {
    // residual defines the empty scheme
  } else {
    Configuration VR = components_artinian(residual, t, N.per_variable);
    actual.insert(VR.members.begin(), VR.members.end());
  }
  report.pass = actual == expected;
  report.detail =
      "residual components compared against the index-reversed grid complement "
      "(lifting via the column-reversed matrix); the closing liaison statement is read "
      "with the residual monomial ideal (CI : J) in place of the ground field";
  return report;
}

std::string render_slices(const Configuration& V) {
  if (!V.grid_case || V.n != 3) throw std::invalid_argument("render_slices: 3-variable grid configuration required");
  std::string out;
  const int n1 = V.grid[0], n2 = V.grid[1], n3 = V.grid[2];
  for (int i1 = 1; i1 <= n1; ++i1) {
    out += "L[1," + std::to_string(i1) + "]-plane";
    out += "  (rows L[2,i], columns L[3,i])\n";
    for (int i2 = 1; i2 <= n2; ++i2) {
      out += "  ";
      for (int i3 = 1; i3 <= n3; ++i3) {
        ComponentIndex idx = {i1, i2, i3};
        out += V.member(idx) ? "* " : ". ";
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace monolift
