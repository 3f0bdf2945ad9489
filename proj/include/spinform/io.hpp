#pragma once

#include "spinform/classification.hpp"
#include "spinform/clifford.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace spinform {

using nlohmann::json;

/// Matrices serialize as arrays of rows of rational strings "a/b", keeping
/// exactness across tools.
inline json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Mat matrix_from_json(const json& j) {
  int r = static_cast<int>(j.size());
  int c = r ? static_cast<int>(j[0].size()) : 0;
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) m.at(i, k) = parse_rational(j[i][k].get<std::string>());
  return m;
}

inline json module_to_json(const CliffordModule& M) {
  json doc;
  doc["p"] = M.sig.p;
  doc["q"] = M.sig.q;
  doc["dimS"] = M.dimS;
  json gs = json::array();
  for (const auto& g : M.gammas) gs.push_back(matrix_to_json(g));
  doc["gammas"] = std::move(gs);
  if (M.grading) {
    doc["grading"] = matrix_to_json(*M.grading);
    doc["gradingLabel"] = M.gradingLabel;
  }
  if (M.complexStructure) doc["complexStructure"] = matrix_to_json(*M.complexStructure);
  doc["canonicalForm"] = matrix_to_json(M.canonicalGram);
  // admissible-basis report: names with their invariant triples
  json adm = json::array();
  for (const auto& op : M.ops) {
    json e;
    e["name"] = op.name;
    e["endo"] = invariants_to_string(op.endoInv);
    e["form"] = invariants_to_string(op.formInv);
    adm.push_back(std::move(e));
  }
  doc["admissible"] = std::move(adm);
  return doc;
}

inline json cell_to_json(const TableCell& c) {
  json j;
  j["n"] = c.nRes;
  j["s"] = c.sRes;
  if (c.absent) {
    j["absent"] = true;
    return j;
  }
  j["absent"] = false;
  j["p"] = c.cell.sig.p;
  j["q"] = c.cell.sig.q;
  j["b"] = c.cell.b;
  j["schur"] = c.cell.schur;
  j["lplus"] = c.cell.lplus;
  j["lminus"] = c.cell.lminus;
  if (c.cell.hasQuad) j["quad"] = c.cell.quad;
  return j;
}

inline json complex_cell_to_json(const ComplexCell& c) {
  json j;
  j["m"] = c.m;
  j["lplus"] = c.lplus;
  j["lminus"] = c.lminus;
  if (c.hasQuad) j["quad"] = c.quad;
  return j;
}

/// Line-delimited machine format: a header record followed by one record
/// per cell. parse_table(emit) round-trips exactly.
inline std::string table_to_machine(const TableDocument& T) {
  std::ostringstream os;
  json header;
  header["table"] = table_kind_name(T.kind);
  header["max_n"] = T.maxN;
  os << header.dump() << "\n";
  if (T.kind == TableKind::Complex) {
    for (const auto& c : T.complexCells) os << complex_cell_to_json(c).dump() << "\n";
  } else {
    for (const auto& c : T.cells) os << cell_to_json(c).dump() << "\n";
  }
  return os.str();
}

inline TableDocument table_from_machine(const std::string& text) {
  TableDocument T;
  std::istringstream is(text);
  std::string line;
  bool haveHeader = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (!haveHeader) {
      std::string kind = j.at("table").get<std::string>();
      T.kind = kind == "pairs" ? TableKind::Pairs
                               : (kind == "quadruples" ? TableKind::Quadruples : TableKind::Complex);
      T.maxN = j.at("max_n").get<int>();
      haveHeader = true;
      continue;
    }
    if (T.kind == TableKind::Complex) {
      ComplexCell c;
      c.m = j.at("m").get<int>();
      c.lplus = j.at("lplus").get<int>();
      c.lminus = j.at("lminus").get<int>();
      if (j.contains("quad")) {
        c.hasQuad = true;
        for (int k = 0; k < 4; ++k) c.quad[k] = j["quad"][k].get<int>();
      }
      T.complexCells.push_back(c);
      continue;
    }
    TableCell c;
    c.nRes = j.at("n").get<int>();
    c.sRes = j.at("s").get<int>();
    c.absent = j.at("absent").get<bool>();
    if (!c.absent) {
      c.cell.sig = {j.at("p").get<int>(), j.at("q").get<int>()};
      c.cell.b = j.at("b").get<int>();
      c.cell.schur = j.at("schur").get<std::string>();
      c.cell.lplus = j.at("lplus").get<int>();
      c.cell.lminus = j.at("lminus").get<int>();
      if (j.contains("quad")) {
        c.cell.hasQuad = true;
        for (int k = 0; k < 4; ++k) c.cell.quad[k] = j["quad"][k].get<int>();
      }
    }
    T.cells.push_back(c);
  }
  if (!haveHeader) throw std::invalid_argument("table_from_machine: missing header record");
  return T;
}

/// Human-readable grid mirroring the published layout: s rows descending
/// (4 down to -3), n columns ascending (-3 to 4); "." marks absent cells.
inline std::string table_to_grid(const TableDocument& T) {
  std::ostringstream os;
  if (T.kind == TableKind::Complex) {
    os << "m:      ";
    for (const auto& c : T.complexCells) os << c.m << "  ";
    os << "\ncounts: ";
    for (const auto& c : T.complexCells) os << c.countsString() << "  ";
    os << "\n";
    return os.str();
  }
  auto fmt = [&](int nDisp, int sDisp) -> std::string {
    if ((nDisp + sDisp) % 2 != 0) return "";
    const TableCell* c = T.find(((nDisp % 8) + 8) % 8, ((sDisp % 8) + 8) % 8);
    if (!c || c->absent) return ".";
    return c->cell.countsString();
  };
  int width = 2;
  for (int s = 4; s >= -3; --s)
    for (int n = -3; n <= 4; ++n) width = std::max(width, static_cast<int>(fmt(n, s).size()));
  os << "s\\n |";
  for (int n = -3; n <= 4; ++n) {
    std::string h = std::to_string(n);
    os << std::string(width + 1 - h.size(), ' ') << h;
  }
  os << "\n----+" << std::string(8 * (width + 1), '-') << "\n";
  for (int s = 4; s >= -3; --s) {
    std::string sh = std::to_string(s);
    os << std::string(3 - sh.size(), ' ') << sh << " |";
    for (int n = -3; n <= 4; ++n) {
      std::string cellText = fmt(n, s);
      os << std::string(width + 1 - cellText.size(), ' ') << cellText;
    }
    os << "\n";
  }
  return os.str();
}

inline json bracket_to_json(const ExtendedPoincareAlgebra& A, bool jacobiPass) {
  json j;
  j["p"] = A.sig.p;
  j["q"] = A.sig.q;
  j["epsilon"] = A.epsilon;
  json pis = json::array();
  for (const auto& P : A.Pi) pis.push_back(matrix_to_json(P));
  j["bracket"] = std::move(pis);
  j["jacobi"] = jacobiPass ? "pass" : "fail";
  return j;
}

}  // namespace spinform
