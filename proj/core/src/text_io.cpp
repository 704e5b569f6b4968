#include "monolift/text_io.hpp"

#include <cctype>

namespace monolift {

std::string to_string(const Monomial& m, const Ring& ring) {
  if (m.nvars() != ring.nvars()) throw std::invalid_argument("ring/monomial ambient mismatch");
  if (m.is_unit()) return "1";
  std::string out;
  for (int j = 0; j < m.nvars(); ++j) {
    int e = m.exponent(j);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.var_name(j);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const MonomialIdeal& J, const Ring& ring) {
  if (J.is_zero()) return "0";
  std::string out;
  for (const Monomial& g : J.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, ring);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  long long read_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw parse_error("expected integer", pos);
    long long v = 0;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1LL << 31)) throw parse_error("integer too large", start);
      ++pos;
    }
    return v;
  }
};

Monomial parse_monomial_at(Cursor& c, const Ring& ring) {
  std::vector<int> exps(static_cast<size_t>(ring.nvars()), 0);
  bool first = true;
  for (;;) {
    c.skip_ws();
    if (c.pos >= c.s.size()) {
      if (first) throw parse_error("expected monomial", c.pos);
      break;
    }
    char ch = c.s[c.pos];
    if (ch == '1' && first) {
      ++c.pos;
      // "1" may be followed by '*' and more factors (e.g. "1*x1"), odd but legal
      if (c.peek() != '*') return Monomial(std::move(exps));
      ++c.pos;
      first = false;
      continue;
    }
    if (ch != 'x' && ch != 'u') {
      if (first) throw parse_error("expected variable or '1'", c.pos);
      break;
    }
    size_t var_pos = c.pos;
    ++c.pos;
    long long k = c.read_uint();
    int index;
    if (ch == 'x') {
      if (k < 1 || k > ring.nx) throw parse_error("x-index out of range", var_pos);
      index = static_cast<int>(k) - 1;
    } else {
      if (k < 1 || k > ring.nu) throw parse_error("u-index out of range", var_pos);
      index = ring.nx + static_cast<int>(k) - 1;
    }
    long long power = 1;
    if (c.peek() == '^') {
      ++c.pos;
      power = c.read_uint();
    }
    long long total = exps[static_cast<size_t>(index)] + power;
    if (total > (1LL << 31) - 1) throw parse_error("exponent overflow", var_pos);
    exps[static_cast<size_t>(index)] = static_cast<int>(total);
    first = false;
    if (c.peek() != '*') break;
    ++c.pos;
  }
  return Monomial(std::move(exps));
}

}  // namespace

Monomial parse_monomial(const std::string& text, const Ring& ring) {
  Cursor c{text};
  Monomial m = parse_monomial_at(c, ring);
  if (!c.done()) throw parse_error("trailing input after monomial", c.pos);
  return m;
}

MonomialIdeal parse_monomial_ideal(const std::string& text, const Ring& ring) {
  Cursor c{text};
  if (c.peek() == '0') {
    ++c.pos;
    if (!c.done()) throw parse_error("trailing input after '0'", c.pos);
    return MonomialIdeal::zero(ring.nvars());
  }
  std::vector<Monomial> gens;
  for (;;) {
    gens.push_back(parse_monomial_at(c, ring));
    if (c.done()) break;
    if (c.peek() != ',') throw parse_error("expected ',' between generators", c.pos);
    ++c.pos;
  }
  return MonomialIdeal::from_generators(ring.nvars(), std::move(gens));
}

Ring infer_ring(const std::string& text) {
  Ring ring;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch != 'x' && ch != 'u') continue;
    size_t j = i + 1;
    long long k = 0;
    bool have = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      k = k * 10 + (text[j] - '0');
      have = true;
      ++j;
    }
    if (!have) continue;
    if (ch == 'x')
      ring.nx = std::max(ring.nx, static_cast<int>(k));
    else
      ring.nu = std::max(ring.nu, static_cast<int>(k));
    i = j - 1;
  }
  return ring;
}

}  // namespace monolift
