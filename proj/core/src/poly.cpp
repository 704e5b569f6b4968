#include "monolift/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace monolift {

SparsePoly SparsePoly::constant(int nvars, const Rat& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial::unit(nvars), c);
  return p;
}

SparsePoly SparsePoly::from_monomial(const Monomial& m, const Rat& c) {
  SparsePoly p(m.nvars());
  p.add_term(m, c);
  return p;
}

SparsePoly SparsePoly::linear_form(const std::vector<Rat>& coeffs) {
  SparsePoly p(static_cast<int>(coeffs.size()));
  for (int j = 0; j < p.nvars(); ++j)
    if (coeffs[static_cast<size_t>(j)] != 0)
      p.add_term(Monomial::variable(p.nvars(), j), coeffs[static_cast<size_t>(j)]);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rat SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

long long SparsePoly::degree() const {
  long long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool SparsePoly::is_homogeneous() const {
  long long d = -1;
  for (const auto& [m, c] : terms_) {
    if (d < 0) d = m.degree();
    else if (m.degree() != d) return false;
  }
  return true;
}

void SparsePoly::add_term(const Monomial& m, const Rat& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("poly/monomial ambient mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("poly ambient mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("poly ambient mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly out = *this;
  out += o;
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly out = *this;
  out -= o;
  return out;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("poly ambient mismatch");
  SparsePoly out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(product(ma, mb), ca * cb);
  return out;
}

SparsePoly SparsePoly::scaled(const Rat& c) const {
  SparsePoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

SparsePoly SparsePoly::substitute(const std::map<int, SparsePoly>& assignments) const {
  for (const auto& [var, val] : assignments)
    if (val.nvars() != nvars_) throw std::invalid_argument("substitute: ambient mismatch");
  SparsePoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> kept(static_cast<size_t>(nvars_), 0);
    SparsePoly factor = SparsePoly::constant(nvars_, c);
    for (int j = 0; j < nvars_; ++j) {
      int e = m.exponent(j);
      if (e == 0) continue;
      auto it = assignments.find(j);
      if (it == assignments.end()) {
        kept[static_cast<size_t>(j)] = e;
        continue;
      }
      for (int k = 0; k < e; ++k) factor = factor * it->second;
    }
    out += factor * SparsePoly::from_monomial(Monomial(kept));
  }
  return out;
}

SparsePoly SparsePoly::restrict_tail_to_zero(int first_killed) const {
  SparsePoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    bool killed = false;
    for (int j = first_killed; j < nvars_; ++j)
      if (m.exponent(j) != 0) {
        killed = true;
        break;
      }
    if (!killed) out.add_term(m, c);
  }
  return out;
}

SparsePoly SparsePoly::extended(int new_nvars) const {
  SparsePoly out(new_nvars);
  for (const auto& [m, c] : terms_) out.add_term(m.extended(new_nvars), c);
  return out;
}

std::pair<Monomial, Rat> SparsePoly::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

std::optional<SparsePoly> exact_divide(const SparsePoly& a, const SparsePoly& b,
                                       const TermOrder& order) {
  if (b.is_zero()) return std::nullopt;
  SparsePoly rem = a;
  SparsePoly quot(a.nvars());
  auto [lmb, lcb] = b.leading_term(order);
  while (!rem.is_zero()) {
    auto [lmr, lcr] = rem.leading_term(order);
    if (!divides(lmb, lmr)) return std::nullopt;
    SparsePoly step = SparsePoly::from_monomial(colon(lmr, lmb), lcr / lcb);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

std::string to_string(const SparsePoly& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  // Display in descending degree-lex order, leading term first.
  TermOrder order;
  std::vector<const std::pair<const Monomial, Rat>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&order](auto* a, auto* b) { return order.greater(a->first, b->first); });
  std::string out;
  for (auto* t : terms) {
    const auto& [m, c] = *t;
    Rat abs_c = c < 0 ? Rat(-c) : c;
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    if (m.is_unit())
      out += to_string(abs_c);
    else if (abs_c == 1)
      out += to_string(m, ring);
    else
      out += to_string(abs_c) + "*" + to_string(m, ring);
  }
  return out;
}

namespace {

// poly := ['-'] term (('+'|'-') term)* ;  term := coef ['*' monomial] | monomial
// coef := digits ['/' digits]
SparsePoly parse_poly_impl(const std::string& text, const Ring& ring) {
  SparsePoly out(ring.nvars());
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_uint_str = [&]() -> std::string {
    std::string s;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) s += text[pos++];
    return s;
  };
  skip_ws();
  if (pos >= text.size()) throw parse_error("empty polynomial", pos);
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) throw parse_error("expected term", pos);
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (first && text[pos] == '+') throw parse_error("unexpected '+'", pos);
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw parse_error("expected '+' or '-' between terms", pos);
    }
    // optional coefficient
    Rat coef(sign);
    bool saw_coef = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      size_t save = pos;
      std::string num = parse_uint_str();
      std::string den;
      size_t after_num = pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        den = parse_uint_str();
        if (den.empty()) throw parse_error("expected denominator", pos);
      } else {
        pos = after_num;
      }
      // a bare "1" is only a coefficient if not a lone unit-monomial "1"
      if (num == "1" && den.empty()) {
        size_t look = pos;
        while (look < text.size() && std::isspace(static_cast<unsigned char>(text[look]))) ++look;
        if (look < text.size() && text[look] == '*') {
          coef = Rat(sign);
          saw_coef = true;
        } else {
          // lone constant term 1
          out.add_term(Monomial::unit(ring.nvars()), Rat(sign));
          first = false;
          continue;
        }
      } else {
        Rat q = parse_rational(den.empty() ? num : num + "/" + den);
        coef = sign < 0 ? Rat(-q) : q;
        saw_coef = true;
        skip_ws();
        if (pos >= text.size() || text[pos] != '*') {
          // constant term
          out.add_term(Monomial::unit(ring.nvars()), coef);
          first = false;
          continue;
        }
      }
      if (saw_coef) {
        skip_ws();
        if (pos >= text.size() || text[pos] != '*')
          throw parse_error("expected '*' after coefficient", pos);
        ++pos;
      }
      (void)save;
    }
    // monomial part: consume up to the next top-level '+'/'-'
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
    std::string mono_text = text.substr(start, pos - start);
    // trim
    while (!mono_text.empty() && std::isspace(static_cast<unsigned char>(mono_text.back())))
      mono_text.pop_back();
    if (mono_text.empty()) throw parse_error("expected monomial", start);
    Monomial m = [&] {
      try {
        return parse_monomial(mono_text, ring);
      } catch (const parse_error& e) {
        throw parse_error(e.what(), start + e.position());
      }
    }();
    out.add_term(m, coef);
    first = false;
  }
  return out;
}

}  // namespace

SparsePoly parse_poly(const std::string& text, const Ring& ring) {
  return parse_poly_impl(text, ring);
}

}  // namespace monolift
