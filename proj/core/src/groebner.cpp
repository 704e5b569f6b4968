#include "monolift/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace monolift {

namespace {

// One reduction step against the first basis element whose lead divides
// the lead of r; returns false when r is irreducible at the top.
bool top_reduce_once(SparsePoly& r, const std::vector<SparsePoly>& basis, const TermOrder& order) {
  if (r.is_zero()) return false;
  auto [lm, lc] = r.leading_term(order);
  for (const SparsePoly& g : basis) {
    if (g.is_zero()) continue;
    auto [gm, gc] = g.leading_term(order);
    if (!divides(gm, lm)) continue;
    SparsePoly factor = SparsePoly::from_monomial(colon(lm, gm), lc / gc);
    r -= factor * g;
    return true;
  }
  return false;
}

}  // namespace

SparsePoly normal_form(const SparsePoly& p, const std::vector<SparsePoly>& basis,
                       const TermOrder& order) {
  SparsePoly rem(p.nvars());
  SparsePoly work = p;
  while (!work.is_zero()) {
    if (top_reduce_once(work, basis, order)) continue;
    auto [lm, lc] = work.leading_term(order);
    rem.add_term(lm, lc);
    work.add_term(lm, -lc);
  }
  return rem;
}

GroebnerBasis buchberger(std::vector<SparsePoly> gens, const TermOrder& order,
                         const BuchbergerLimits& limits) {
  GroebnerBasis out;
  out.order = order;
  if (gens.size() > limits.max_generators)
    throw resource_limit_error("buchberger: generator limit exceeded");
  std::vector<SparsePoly> basis;
  for (SparsePoly& g : gens) {
    if (g.is_zero()) continue;
    if (g.degree() > limits.max_total_degree)
      throw resource_limit_error("buchberger: input degree limit exceeded");
    auto [lm, lc] = g.leading_term(order);
    basis.push_back(g.scaled(Rat(1) / lc));
  }

  struct Pair {
    size_t a, b;
    long long lcm_degree;
    std::vector<int> lcm_exps;
  };
  auto make_pair = [&](size_t a, size_t b) {
    auto [la, ca] = basis[a].leading_term(order);
    auto [lb, cb] = basis[b].leading_term(order);
    Monomial l = lcm(la, lb);
    return Pair{a, b, l.degree(), std::vector<int>(l.exponents().begin(), l.exponents().end())};
  };
  // Normal strategy: process by ascending lcm degree, then lcm, then indices.
  auto pair_less = [](const Pair& x, const Pair& y) {
    if (x.lcm_degree != y.lcm_degree) return x.lcm_degree < y.lcm_degree;
    if (x.lcm_exps != y.lcm_exps) return x.lcm_exps < y.lcm_exps;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  };
  std::deque<Pair> pairs;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) pairs.push_back(make_pair(a, b));

  out.completed = true;
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair pr = *it;
    pairs.erase(it);
    if (++out.pair_reductions > limits.max_pair_reductions) {
      out.completed = false;
      break;
    }
    auto [la, ca] = basis[pr.a].leading_term(order);
    auto [lb, cb] = basis[pr.b].leading_term(order);
    // Buchberger's coprimality criterion.
    if (product(la, lb) == lcm(la, lb)) continue;
    Monomial l = lcm(la, lb);
    SparsePoly s = SparsePoly::from_monomial(colon(l, la)) * basis[pr.a] -
                   SparsePoly::from_monomial(colon(l, lb)) * basis[pr.b];
    SparsePoly red = normal_form(s, basis, order);
    if (red.is_zero()) continue;
    if (red.degree() > limits.max_total_degree) {
      out.completed = false;
      break;
    }
    auto [lm, lc] = red.leading_term(order);
    basis.push_back(red.scaled(Rat(1) / lc));
    for (size_t a = 0; a + 1 < basis.size(); ++a) pairs.push_back(make_pair(a, basis.size() - 1));
  }

  if (out.completed) {
    // Interreduce to the unique reduced basis: drop elements whose lead is
    // divisible by another lead, then tail-reduce.
    std::vector<SparsePoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
      auto [lm, lc] = basis[i].leading_term(order);
      bool drop = false;
      for (size_t j = 0; j < basis.size() && !drop; ++j) {
        if (i == j) continue;
        auto [om, oc] = basis[j].leading_term(order);
        if (divides(om, lm) && !(om == lm && j > i)) drop = true;
      }
      if (!drop) minimal.push_back(basis[i]);
    }
    std::vector<SparsePoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<SparsePoly> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      SparsePoly nf = normal_form(minimal[i], others, order);
      if (!nf.is_zero()) {
        auto [lm, lc] = nf.leading_term(order);
        reduced.push_back(nf.scaled(Rat(1) / lc));
      }
    }
    std::sort(reduced.begin(), reduced.end(), [&order](const SparsePoly& x, const SparsePoly& y) {
      return order.less(x.leading_term(order).first, y.leading_term(order).first);
    });
    out.basis = std::move(reduced);
    out.reduced = true;
  } else {
    out.basis = std::move(basis);
  }
  return out;
}

InitialIdealResult verify_initial_ideal(const MonomialIdeal& J, const LiftingMatrix& A,
                                        const BuchbergerLimits& limits) {
  if (A.mode != LiftingMatrix::Mode::restricted)
    throw std::invalid_argument("verify_initial_ideal: restricted-mode matrix required");
  InitialIdealResult out;
  TermOrder order;  // deg-lex, x's before u's
  GroebnerBasis gb = buchberger(lifted_ideal(J, A), order, limits);
  out.completed = gb.completed;
  out.basis_size = gb.basis.size();
  if (!gb.completed) return out;
  std::vector<Monomial> leads;
  for (const SparsePoly& g : gb.basis) leads.push_back(g.leading_term(order).first);
  out.initial_ideal = MonomialIdeal::from_generators(A.nvars(), std::move(leads));
  out.verified = out.initial_ideal == J.extended(A.nvars());
  return out;
}

}  // namespace monolift
