#include "monolift/cas_export.hpp"

namespace monolift {

namespace {

std::string var_list(const Ring& ring, const std::string& sep) {
  std::string out;
  for (int j = 0; j < ring.nvars(); ++j) {
    if (!out.empty()) out += sep;
    out += ring.var_name(j);
  }
  return out;
}

std::string gen_list(const Ring& ring, const std::vector<SparsePoly>& gens) {
  std::string out;
  for (const SparsePoly& g : gens) {
    if (!out.empty()) out += ",\n  ";
    out += to_string(g, ring);
  }
  return out;
}

}  // namespace

std::string macaulay2_script(const Ring& ring, const std::vector<SparsePoly>& gens,
                             const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "-- " + comment + "\n";
  out += "R = QQ[" + var_list(ring, ",") + ", MonomialOrder => GLex];\n";
  out += "I = ideal(\n  " + gen_list(ring, gens) + "\n);\n";
  out += "B = betti res I\n";
  out += "print B;\n";
  out += "print hilbertSeries(R^1/I, Reduce => true);\n";
  out += "print leadTerm I;\n";
  return out;
}

std::string singular_script(const Ring& ring, const std::vector<SparsePoly>& gens,
                            const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "// " + comment + "\n";
  out += "ring R = 0, (" + var_list(ring, ",") + "), Dp;\n";
  out += "ideal I =\n  " + gen_list(ring, gens) + ";\n";
  out += "resolution rs = mres(I, 0);\n";
  out += "print(betti(rs), \"betti\");\n";
  out += "ideal L = lead(std(I));\n";
  out += "print(L);\n";
  out += "quit;\n";
  return out;
}

}  // namespace monolift
