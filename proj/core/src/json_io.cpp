#include "monolift/json_io.hpp"

#include <json.hpp>

#include "monolift/text_io.hpp"

namespace monolift {

using nlohmann::json;

namespace {

json betti_to_json_value(const BettiTable& betti) {
  json rows = json::array();
  for (const auto& [key, value] : betti) rows.push_back({key.first, key.second, value});
  return rows;
}

json hilbert_to_json_value(const HilbertData& h) {
  json out = json::object();
  out["hilbert_numerator"] = h.numerator;
  out["h_vector"] = h.h_vector ? json(*h.h_vector) : json::array();
  return out;
}

}  // namespace

std::string to_json(const BettiTable& betti, const HilbertData& hilbert) {
  json out = hilbert_to_json_value(hilbert);
  out["betti"] = betti_to_json_value(betti);
  return out.dump(2);
}

std::string to_json(const BettiTable& betti) {
  json out;
  out["betti"] = betti_to_json_value(betti);
  return out.dump(2);
}

std::string to_json(const HilbertData& hilbert) { return hilbert_to_json_value(hilbert).dump(2); }

std::string to_json(const Configuration& config) {
  json out;
  out["t"] = config.t;
  out["mode"] = config.mode == Configuration::MatrixMode::restricted ? "restricted" : "general";
  if (config.grid_case) {
    out["grid"] = config.grid;
    json comps = json::array();
    for (const auto& m : config.members) comps.push_back(m);
    out["components"] = comps;
  } else {
    out["n"] = config.n;
    json comps = json::array();
    for (const auto& c : config.general) {
      json entries = json::array();
      for (const auto& [row, col] : c.entries) entries.push_back({row, col});
      comps.push_back(entries);
    }
    out["general_components"] = comps;
  }
  return out.dump(2);
}

Configuration configuration_from_json(const std::string& text) {
  json doc = json::parse(text);
  Configuration out;
  out.t = doc.at("t").get<int>();
  if (doc.contains("mode") && doc.at("mode").get<std::string>() == "general")
    out.mode = Configuration::MatrixMode::general;
  if (doc.contains("components")) {
    out.grid_case = true;
    out.grid = doc.at("grid").get<std::vector<int>>();
    out.n = static_cast<int>(out.grid.size());
    for (const auto& item : doc.at("components")) {
      ComponentIndex idx = item.get<ComponentIndex>();
      if (static_cast<int>(idx.size()) != out.n)
        throw std::invalid_argument("configuration: component arity mismatch");
      for (int j = 0; j < out.n; ++j)
        if (idx[static_cast<size_t>(j)] < 1 || idx[static_cast<size_t>(j)] > out.grid[static_cast<size_t>(j)])
          throw std::invalid_argument("configuration: component index out of grid");
      out.members.push_back(std::move(idx));
    }
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
  } else {
    out.grid_case = false;
    out.n = doc.at("n").get<int>();
    for (const auto& comp : doc.at("general_components")) {
      GeneralComponent c;
      for (const auto& entry : comp) {
        int row = entry.at(0).get<int>(), col = entry.at(1).get<int>();
        if (row < 1 || row > out.n || col < 1)
          throw std::invalid_argument("configuration: entry out of range");
        c.entries.push_back({row, col});
      }
      std::sort(c.entries.begin(), c.entries.end());
      for (size_t i = 1; i < c.entries.size(); ++i)
        if (c.entries[i].first == c.entries[i - 1].first)
          throw std::invalid_argument("configuration: two entries from one row in a component");
      out.general.push_back(std::move(c));
    }
  }
  return out;
}

std::string to_json(const PolyMatrix& m, const Ring& ring) {
  json out;
  out["row_shifts"] = m.row_shifts();
  out["col_shifts"] = m.col_shifts();
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c), ring));
    entries.push_back(row);
  }
  out["entries"] = entries;
  return out.dump(2);
}

LiftingMatrix lifting_matrix_from_config(const std::string& text, int n,
                                         const std::vector<int>& row_lengths) {
  json doc = json::parse(text);
  int t = doc.at("t").get<int>();
  LiftingMatrix::Mode mode = LiftingMatrix::Mode::restricted;
  if (doc.contains("mode") && doc.at("mode").get<std::string>() == "general")
    mode = LiftingMatrix::Mode::general;
  const json& prov = doc.at("provenance");
  if (prov.contains("vandermonde")) {
    std::vector<Rat> scalars;
    for (const auto& item : prov.at("vandermonde").at("b"))
      scalars.push_back(item.is_string() ? parse_rational(item.get<std::string>())
                                         : Rat(item.get<long>()));
    LiftingMatrix A = vandermonde_lifting_matrix(n, t, row_lengths, scalars);
    if (mode != LiftingMatrix::Mode::restricted)
      throw std::invalid_argument("vandermonde provenance is restricted-mode");
    return A;
  }
  if (prov.contains("random")) {
    std::uint64_t seed = prov.at("random").at("seed").get<std::uint64_t>();
    return random_lifting_matrix(n, t, row_lengths, mode, seed);
  }
  if (prov.contains("explicit")) {
    LiftingMatrix A;
    A.n = n;
    A.t = t;
    A.mode = mode;
    A.provenance = "explicit";
    Ring ring{n, t};
    for (const auto& row : prov.at("explicit")) {
      std::vector<SparsePoly> forms;
      for (const auto& s : row) forms.push_back(parse_poly(s.get<std::string>(), ring));
      A.rows.push_back(std::move(forms));
    }
    if (static_cast<int>(A.rows.size()) != n)
      throw std::invalid_argument("explicit matrix: need one row per variable");
    for (int j = 0; j < n; ++j)
      if (A.row_length(j) < row_lengths[static_cast<size_t>(j)])
        throw std::invalid_argument("explicit matrix: row " + std::to_string(j + 1) + " too short");
    A.validate();
    return A;
  }
  throw std::invalid_argument("matrix config: unknown provenance");
}

std::string to_json(const LiftingMatrix& A) {
  json out;
  out["t"] = A.t;
  out["mode"] = A.mode == LiftingMatrix::Mode::restricted ? "restricted" : "general";
  Ring ring{A.n, A.t};
  json rows = json::array();
  for (int j = 0; j < A.n; ++j) {
    json row = json::array();
    for (int i = 1; i <= A.row_length(j); ++i) row.push_back(to_string(A.entry(j + 1, i), ring));
    rows.push_back(row);
  }
  out["provenance"] = {{"explicit", rows}};
  out["provenance_note"] = A.provenance;
  return out.dump(2);
}

}  // namespace monolift
