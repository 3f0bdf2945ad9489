// Command-line surface: build and dump Clifford modules, emit and verify
// classification tables, construct extended Poincare brackets, and run the
// verification suites.
//
// Exit codes: 0 success, 1 internal consistency failure / failing checks,
// 2 invalid arguments.

#include "spinform/classification.hpp"
#include "spinform/io.hpp"
#include "spinform/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace spinform;

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

/// Cells of a table are independent pure computations; with threads > 1 they
/// are evaluated concurrently and assembled in a fixed order.
TableDocument emit_table_threaded(int maxN, TableKind kind, int threads) {
  if (threads <= 1) return emit_table(maxN, kind);
  TableDocument doc;
  doc.kind = kind;
  doc.maxN = maxN;
  if (kind == TableKind::Complex) {
    std::vector<std::future<ComplexCell>> futs;
    for (int m = 1; m <= maxN; ++m)
      futs.push_back(std::async(std::launch::async, [m] { return classify_complex(m); }));
    for (auto& f : futs) doc.complexCells.push_back(f.get());
    return doc;
  }
  struct Job {
    int nRes, sRes;
    std::optional<Signature> rep;
  };
  std::vector<Job> jobs;
  for (int sRes = 0; sRes < 8; ++sRes)
    for (int nRes = 0; nRes < 8; ++nRes)
      if ((nRes + sRes) % 2 == 0)
        jobs.push_back({nRes, sRes, residue_representative(nRes, sRes, maxN)});
  std::vector<std::future<TableCell>> futs;
  for (const auto& job : jobs)
    futs.push_back(std::async(std::launch::async, [job, kind] {
      TableCell tc;
      tc.nRes = job.nRes;
      tc.sRes = job.sRes;
      if (job.rep) {
        tc.absent = false;
        tc.cell = count_embeddings(build(job.rep->p, job.rep->q));
        if (kind == TableKind::Pairs) {
          tc.cell.hasQuad = false;
          tc.cell.quad = {};
        }
      }
      return tc;
    }));
  for (auto& f : futs) doc.cells.push_back(f.get());
  return doc;
}

int cmd_build(int p, int q, const std::string& dump) {
  CliffordModule M;
  try {
    M = build(p, q);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid signature: " << e.what() << "\n";
    return 2;
  }
  try {
    check_module_invariants(M);
    volume_element(M);
    canonical_form(M);
    if (!dump.empty()) write_output(dump, module_to_json(M).dump(2) + "\n");
    else
      std::cout << "built (" << p << "," << q << "): dim S = " << M.dimS << ", "
                << M.gammas.size() << " gamma matrices"
                << (M.grading ? ", graded" : "")
                << (M.complexStructure ? ", complex structure" : "") << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 1;
  }
}

int cmd_table(int maxN, const std::string& kind, const std::string& format, int threads,
              const std::string& out) {
  TableKind k = kind == "pairs" ? TableKind::Pairs
                                : (kind == "quadruples" ? TableKind::Quadruples : TableKind::Complex);
  try {
    TableDocument T = emit_table_threaded(maxN, k, threads);
    write_output(out, format == "grid" ? table_to_grid(T) : table_to_machine(T));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "table computation failed: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(const std::string& suite, int maxN, const std::string& out) {
  Report rep;
  try {
    if (suite == "paper") rep = verify_paper(maxN > 0 ? maxN : 8);
    else if (suite == "oracle") rep = verify_oracle(maxN > 0 ? maxN : 6);
    else if (suite == "periodicity") rep = verify_periodicity(maxN > 0 ? maxN : 12);
    else if (suite == "jacobi") rep = verify_jacobi(maxN > 0 ? maxN : 6);
    else rep = verify_all(maxN > 0 ? maxN : 8, maxN > 0 ? std::min(maxN, 6) : 6,
                          maxN > 0 ? maxN : 12);
  } catch (const std::exception& e) {
    std::cerr << "verification aborted: " << e.what() << "\n";
    return 1;
  }
  std::ostringstream os;
  rep.print(os);
  std::cout << os.str();
  if (!out.empty() && out != "-") write_output(out, os.str());
  return rep.pass() ? 0 : 1;
}

int cmd_bracket(int p, int q, int epsilon, const std::string& coeffStr, const std::string& dump) {
  CliffordModule M;
  try {
    M = build(p, q);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid signature: " << e.what() << "\n";
    return 2;
  }
  try {
    auto ab = admissible_basis(M);
    size_t want = 0;
    for (const auto& e : ab.entries)
      if (e.formInv.tau * e.formInv.sigma == epsilon) ++want;
    std::vector<Rational> coeffs;
    if (coeffStr.empty()) {
      coeffs.assign(want, Rational(1));
    } else {
      std::stringstream ss(coeffStr);
      std::string item;
      while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
      if (coeffs.size() != want) {
        std::cerr << "expected " << want << " coefficients over the sigma-filtered basis\n";
        return 2;
      }
    }
    ExtendedPoincareAlgebra A = build_bracket(M, coeffs, epsilon);
    write_output(dump.empty() ? "-" : dump, bracket_to_json(A, true).dump(2) + "\n");
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "bracket construction failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Clifford modules, spinor bilinear invariants and extended Poincare algebras"};
  app.require_subcommand(1);

  auto* b = app.add_subcommand("build", "construct the module for a signature (p,q)");
  int p = 0, q = 0;
  std::string dump;
  b->add_option("p", p, "number of positive directions")->required();
  b->add_option("q", q, "number of negative directions")->required();
  b->add_option("--dump", dump, "write the module as JSON to a file ('-' for stdout)");

  auto* t = app.add_subcommand("table", "emit a classification table");
  int maxN = 8, threads = 1;
  std::string kind = "pairs", format = "grid", out = "-";
  t->add_option("--max-n", maxN, "largest total dimension used for representatives")
      ->check(CLI::PositiveNumber);
  t->add_option("--kind", kind, "pairs | quadruples | complex")
      ->check(CLI::IsMember({"pairs", "quadruples", "complex"}));
  t->add_option("--format", format, "grid | machine")->check(CLI::IsMember({"grid", "machine"}));
  t->add_option("--threads", threads, "evaluate cells concurrently");
  t->add_option("--out", out, "output file ('-' for stdout)");

  auto* v = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all", vout;
  int vMaxN = 0;
  v->add_option("--suite", suite, "paper | oracle | periodicity | jacobi | all")
      ->check(CLI::IsMember({"paper", "oracle", "periodicity", "jacobi", "all"}));
  v->add_option("--max-n", vMaxN, "override the suite's dimension bound");
  v->add_option("--out", vout, "also write the report to a file");

  auto* br = app.add_subcommand("bracket", "construct an epsilon-extension bracket");
  int bp = 0, bq = 0, epsilon = 1;
  std::string coeffs, bdump;
  br->add_option("p", bp, "number of positive directions")->required();
  br->add_option("q", bq, "number of negative directions")->required();
  br->add_option("--epsilon", epsilon, "+1 (super) or -1 (Z2-graded Lie)")
      ->check(CLI::IsMember({1, -1}));
  br->add_option("--coeffs", coeffs,
                 "comma-separated rational coefficients over the sigma-filtered basis");
  br->add_option("--dump", bdump, "write the bracket tensor as JSON ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (b->parsed()) return cmd_build(p, q, dump);
  if (t->parsed()) return cmd_table(maxN, kind, format, threads, out);
  if (v->parsed()) return cmd_verify(suite, vMaxN, vout);
  if (br->parsed()) return cmd_bracket(bp, bq, epsilon, coeffs, bdump);
  return 2;
}
