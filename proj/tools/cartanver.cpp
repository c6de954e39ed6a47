// Verification CLI for Cartan-type Lie superalgebras: builds the W, S,
// twisted-S and H families at a chosen size, checks their structure, solves
// the superderivation and super-biderivation systems exactly, and writes a
// machine-readable report.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "cartan/report.hpp"
#include "cartan/tableio.hpp"

using namespace cartan;

namespace {

struct Options {
  std::string family = "W";
  int n = 4;
  std::string field = "auto";  // exact | modp | auto
  std::uint64_t prime = 2147483647ull;
  std::string parity = "both";
  std::uint64_t seed = 1;
  long long block_limit = -1;
  std::string out;
  std::string table_path;
  bool timings = false;
};

void add_common(CLI::App* cmd, Options& opt, bool with_table) {
  cmd->add_option("--family", opt.family, "family: W, S, Stilde or H")
      ->check(CLI::IsMember({"W", "S", "Stilde", "H"}));
  cmd->add_option("--n", opt.n, "number of odd generators");
  cmd->add_option("--field", opt.field, "solver field (exact, modp or auto)")
      ->check(CLI::IsMember({"exact", "modp", "auto"}));
  cmd->add_option("--prime", opt.prime, "certificate prime (< 2^32)");
  cmd->add_option("--parity", opt.parity, "sectors to solve (even, odd or both)")
      ->check(CLI::IsMember({"even", "odd", "both"}));
  cmd->add_option("--seed", opt.seed, "seed for sampled checks");
  cmd->add_option("--block-limit", opt.block_limit,
                  "abort any block past this many rows (-1: unlimited)");
  cmd->add_option("--out", opt.out, "write the JSON report to this path");
  cmd->add_flag("--timings", opt.timings, "include wall-clock timings in the report");
  if (with_table)
    cmd->add_option("--table", opt.table_path,
                    "verify an imported structure-constant file instead of a built family");
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

struct Runner {
  Options opt;
  VerificationReport report;
  nlohmann::json timings = nlohmann::json::object();

  bool exact_mode(const AlgebraTable& t) const {
    if (opt.field == "exact") return true;
    if (opt.field == "modp") return false;
    // the largest system defaults to the modular certificate
    return t.family != "W";
  }

  AlgebraTable load() {
    if (!opt.table_path.empty()) {
      std::ifstream in(opt.table_path);
      if (!in) throw CLI::ValidationError("--table", "cannot open " + opt.table_path);
      return import_table(in);
    }
    return build_family(parse_family(opt.family), opt.n);
  }

  void do_info(const AlgebraTable& t, const ExtendedAlgebra& ext) {
    Timer timer;
    report.add_dimensions(t, ext);
    report.add_roots(check_roots(t, ext.t));
    timings["info_ms"] = timer.ms();
  }

  void do_jacobi(const AlgebraTable& t) {
    Timer timer;
    report.add_jacobi(t, verify_table_invariants(t), check_super_jacobi(t));
    timings["jacobi_ms"] = timer.ms();
  }

  void do_der(const AlgebraTable& t, const ExtendedAlgebra& ext) {
    Timer timer;
    report.add_derivations(run_der(t, ext, opt.prime));
    timings["der_ms"] = timer.ms();
  }

  BiderReport do_bder(const AlgebraTable& t, const ExtendedAlgebra& ext) {
    Timer timer;
    BiderOptions bopt;
    bopt.block_row_limit = opt.block_limit;
    BiderReport rep = run_bder(t, ext, exact_mode(t), opt.prime, opt.parity != "odd",
                               opt.parity != "even", bopt);
    report.add_biderivations(t, rep);
    timings["bder_ms"] = timer.ms();
    return rep;
  }

  void do_lemmas(const AlgebraTable& t, const ExtendedAlgebra& ext, const BiderReport* bider) {
    Timer timer;
    auto checks = run_struct_checks(t, ext, opt.seed);
    std::optional<LieBiderReport> degree0;
    std::string degree0_name;
    if (t.family != "W") {
      // the degree-0 part is a simple Lie algebra for these families
      std::vector<int> idx;
      for (int k = 0; k < t.dim; ++k)
        if (t.zdegree[k] == 0) idx.push_back(k);
      AlgebraTable l0 = subalgebra(t, idx, t.family + "0");
      degree0 = solve_bder_lie(l0);
      degree0_name = t.family == "H" ? "so(" + std::to_string(t.n) + ")"
                                     : "sl(" + std::to_string(t.n) + ")";
    }
    report.add_checks(checks, degree0, degree0_name, bider);
    timings["lemmas_ms"] = timer.ms();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Cartan-type Lie superalgebra structure"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* c_info = app.add_subcommand("info", "dimensions, gradings and roots");
  CLI::App* c_jacobi = app.add_subcommand("jacobi", "table invariants and the Jacobi identity");
  CLI::App* c_der = app.add_subcommand("der", "superderivation space");
  CLI::App* c_bder = app.add_subcommand("bder", "super-biderivation space and certificate");
  CLI::App* c_lemmas = app.add_subcommand("lemmas", "structural checks");
  CLI::App* c_all = app.add_subcommand("all", "every check");
  CLI::App* c_export = app.add_subcommand("export", "write the structure-constant file");
  for (CLI::App* c : {c_info, c_der, c_bder, c_lemmas, c_all, c_export})
    add_common(c, opt, false);
  add_common(c_jacobi, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Runner r;
  try {
    PrimeField validate_prime(opt.prime);
    r.opt = opt;
    r.report.config = {
        {"family", opt.family},        {"n", opt.n},
        {"field", opt.field},          {"prime", opt.prime},
        {"parity", opt.parity},        {"seed", opt.seed},
        {"block_limit", opt.block_limit},
        {"table", opt.table_path.empty() ? nlohmann::json(nullptr)
                                         : nlohmann::json(opt.table_path)},
    };

    if (c_export->parsed()) {
      AlgebraTable t = r.load();
      if (opt.out.empty()) throw CLI::ValidationError("--out", "export needs an output path");
      std::ofstream os(opt.out, std::ios::binary);
      export_table(os, t);
      std::cout << "wrote " << opt.out << "\n";
      return 0;
    }

    AlgebraTable t = r.load();
    r.report.config["resolved_family"] = t.family;
    r.report.config["resolved_n"] = t.n;

    if (c_jacobi->parsed()) {
      r.do_jacobi(t);
    } else {
      if (!opt.table_path.empty())
        throw CLI::ValidationError("--table", "imported tables only support the jacobi command");
      ExtendedAlgebra ext = build_extension(t);
      if (c_info->parsed()) r.do_info(t, ext);
      if (c_der->parsed()) r.do_der(t, ext);
      if (c_bder->parsed()) r.do_bder(t, ext);
      if (c_lemmas->parsed()) r.do_lemmas(t, ext, nullptr);
      if (c_all->parsed()) {
        r.do_info(t, ext);
        r.do_jacobi(t);
        BiderReport b = r.do_bder(t, ext);
        r.do_der(t, ext);
        r.do_lemmas(t, ext, &b);
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TableError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (opt.timings) r.report.config["timings"] = r.timings;
  std::cout << r.report.summary();
  if (!opt.out.empty()) {
    std::ofstream os(opt.out, std::ios::binary);
    os << r.report.pretty();
  }
  if (r.report.incomplete()) return 3;
  return r.report.all_passed() ? 0 : 1;
}
