#include "monolift/linalg.hpp"

#include <stdexcept>

namespace monolift {

std::string to_string(const Rat& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

Rat parse_rational(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  q.canonicalize();
  return q;
}

int rank_bareiss(MatZ m) {
  const int rows = m.rows(), cols = m.cols();
  Int prev(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    // find pivot in column col at/below row `rank`
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    const Int p = m.at(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      const Int f = m.at(r, col);
      for (int c = col + 1; c < cols; ++c) {
        Int v = p * m.at(r, c) - f * m.at(rank, c);
        // Bareiss: division by the previous pivot is exact
        m.at(r, c) = v / prev;
      }
      m.at(r, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

MatZ clear_denominators(const MatQ& m) {
  MatZ z(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    Int scale(1);
    for (int c = 0; c < m.cols(); ++c) {
      const Int& den = m.at(r, c).get_den();
      Int g = gcd(scale, den);
      scale = scale / g * den;
    }
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& q = m.at(r, c);
      z.at(r, c) = q.get_num() * (scale / q.get_den());
    }
  }
  return z;
}

int rank_rational(const MatQ& m) { return rank_bareiss(clear_denominators(m)); }

int rank_mod_p(MatP m) {
  const std::int64_t P = Fp::P;
  const int rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m.at(r, col) % P != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    std::int64_t inv = Fp(m.at(rank, col)).inverse().value();
    for (int c = col; c < cols; ++c) m.at(rank, c) = m.at(rank, c) % P * inv % P;
    for (int r = rank + 1; r < rows; ++r) {
      std::int64_t f = m.at(r, col) % P;
      if (f == 0) continue;
      for (int c = col; c < cols; ++c) {
        std::int64_t v = (m.at(r, c) - f * m.at(rank, c)) % P;
        m.at(r, c) = (v + P) % P;
      }
    }
    ++rank;
  }
  return rank;
}

MatP reduce_mod_p(const MatQ& m) {
  MatP out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = Fp::from_rational(m.at(r, c)).value();
  return out;
}

int rank_in_mode(const MatQ& m, FieldMode mode) {
  if (mode == FieldMode::prime_field) return rank_mod_p(reduce_mod_p(m));
  return rank_rational(m);
}

int rank_sparse_rational(std::vector<std::map<int, Rat>> rows) {
  // Markowitz-flavoured elimination: always pivot on the sparsest live row.
  int rank = 0;
  std::vector<bool> done(rows.size(), false);
  for (;;) {
    int pivot_row = -1;
    size_t best = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (done[r] || rows[r].empty()) continue;
      if (pivot_row < 0 || rows[r].size() < best) {
        pivot_row = static_cast<int>(r);
        best = rows[r].size();
      }
    }
    if (pivot_row < 0) break;
    ++rank;
    done[static_cast<size_t>(pivot_row)] = true;
    const auto& prow = rows[static_cast<size_t>(pivot_row)];
    const int col = prow.begin()->first;
    const Rat pval = prow.begin()->second;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (done[r] || rows[r].empty()) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      Rat factor = it->second / pval;
      for (const auto& [c, v] : prow) {
        auto jt = rows[r].find(c);
        if (jt == rows[r].end()) {
          rows[r].emplace(c, -factor * v);
        } else {
          jt->second -= factor * v;
          if (jt->second == 0) rows[r].erase(jt);
        }
      }
    }
  }
  return rank;
}

}  // namespace monolift
