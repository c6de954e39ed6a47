#include <fstream>
// Acceptance suite: runs every verification the project promises, one
// pass/fail line per criterion, with the runtime budgets enforced.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "cartan/bidersolve.hpp"
#include "cartan/dersolve.hpp"
#include "cartan/structchecks.hpp"

using namespace cartan;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void line(const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS  " : "FAIL  ") << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Instance {
  std::string name;
  AlgebraTable t;
  ExtendedAlgebra ext;
};

}  // namespace

int main(int argc, char** argv) {
  std::string cli_bin = argc > 1 ? argv[1] : "";

  std::vector<Instance> inst;
  for (auto [fam, n] : {std::pair{"W", 4}, {"S", 4}, {"Stilde", 4}, {"H", 5}}) {
    Instance i;
    i.name = std::string(fam) + "(" + std::to_string(n) + ")";
    i.t = build_family(parse_family(fam), n);
    i.ext = build_extension(i.t);
    inst.push_back(std::move(i));
  }

  // 1. construction sanity: exhaustive super-Jacobi and the Hamiltonian
  // bracket identity, each under ten seconds
  for (const auto& i : inst) {
    auto t0 = Clock::now();
    JacobiReport j = check_super_jacobi(i.t);
    double dt = since(t0);
    line("criterion-1 super-jacobi " + i.name, j.pass && dt < 10.0,
         "exhaustive, " + std::to_string(dt) + "s");
  }
  {
    auto t0 = Clock::now();
    bool ok = true;
    const int n = 5;
    for (std::uint32_t a = 0; a < (1u << n) && ok; ++a)
      for (std::uint32_t b = 0; b < (1u << n) && ok; ++b) {
        GrassmannPoly f = GrassmannPoly::term(Monomial(a, n), Rational(1));
        GrassmannPoly g = GrassmannPoly::term(Monomial(b, n), Rational(1));
        if (!(vf_bracket(hamiltonian_field(f), hamiltonian_field(g)) ==
              hamiltonian_field(apply(hamiltonian_field(f), g))))
          ok = false;
      }
    double dt = since(t0);
    line("criterion-1 hamiltonian-bracket-identity n=5", ok && dt < 10.0,
         "exhaustive over all monomial pairs, " + std::to_string(dt) + "s");
  }

  // 2. dimension table, zero tolerance
  {
    auto dims = [&](int k) { return inst[k].t.dim; };
    auto deg0 = [&](int k) {
      int c = 0;
      for (int j = 0; j < inst[k].t.dim; ++j)
        if (inst[k].t.zdegree[j] == 0) ++c;
      return c;
    };
    line("criterion-2 dim W(4)=64", dims(0) == 64);
    line("criterion-2 dim S(4)=49", dims(1) == 49);
    line("criterion-2 dim Stilde(4)=49", dims(2) == 49);
    line("criterion-2 dim H(5)=30", dims(3) == 30);
    line("criterion-2 degree0 dims 16/15/15/10",
         deg0(0) == 16 && deg0(1) == 15 && deg0(2) == 15 && deg0(3) == 10);
    line("criterion-2 top degrees 3/2/2/2",
         inst[0].t.top_degree == 3 && inst[1].t.top_degree == 2 &&
             inst[2].t.top_degree == 2 && inst[3].t.top_degree == 2);
  }

  // 3. root systems against the closed forms, zero weight excluded
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (const auto& i : inst) {
      RootsReport r = check_roots(i.t, i.ext.t);
      if (!r.matches || !r.extension_matches) ok = false;
    }
    double dt = since(t0);
    line("criterion-3 root systems", ok && dt < 10.0, std::to_string(dt) + "s");
  }

  // 4. superderivation spaces equal the adjoint of the extension
  {
    auto t0 = Clock::now();
    long long expect[4] = {64, 50, 49, 32};
    for (int k = 0; k < 4; ++k) {
      DerReport d = run_der(inst[k].t, inst[k].ext, 2147483647ull);
      line("criterion-4 derivations " + inst[k].name,
           d.pass && d.dim_even + d.dim_odd == expect[k],
           "dim=" + std::to_string(d.dim_even + d.dim_odd) + " expected=" +
               std::to_string(expect[k]));
    }
    line("criterion-4 within budget", since(t0) < 300.0, std::to_string(since(t0)) + "s");
  }

  // 5. the biderivation theorems: inner line only, vanishing off the zero
  // block, modular certificate for the largest instance
  for (int k = 0; k < 4; ++k) {
    bool exact = inst[k].t.family != "W";
    double budget = exact ? 600.0 : 1800.0;
    auto t0 = Clock::now();
    BiderReport b = run_bder(inst[k].t, inst[k].ext, exact, 2147483647ull, true, true, {});
    double dt = since(t0);
    bool pass = b.even_nullity == 1 && b.odd_nullity == 0 && b.bracket_in_span &&
                b.bracket_residual_zero && b.nonzero_weight_blocks_zero &&
                b.nonzero_degree_blocks_zero && b.inner && b.certificate_valid &&
                b.factor_pass && !b.aborted && dt < budget;
    std::ostringstream det;
    det << b.field_mode << ", even=" << b.even_nullity << ", odd=" << b.odd_nullity
        << ", " << dt << "s";
    line("criterion-5 biderivations-inner " + inst[k].name, pass, det.str());
  }

  // 6. structural checks
  {
    auto t0 = Clock::now();
    for (const auto& i : inst) {
      auto checks = run_struct_checks(i.t, i.ext, 1);
      bool ok = true;
      std::string bad;
      for (const auto& c : checks)
        if (!c.pass) {
          ok = false;
          bad = c.id;
        }
      line("criterion-6 structure " + i.name, ok, bad);
    }
    line("criterion-6 within budget", since(t0) < 300.0, std::to_string(since(t0)) + "s");
  }

  // 7. biderivations of the simple degree-0 parts
  {
    auto t0 = Clock::now();
    for (int k : {1, 3}) {  // sl(4) inside S(4), so(5) inside H(5)
      std::vector<int> idx;
      for (int j = 0; j < inst[k].t.dim; ++j)
        if (inst[k].t.zdegree[j] == 0) idx.push_back(j);
      AlgebraTable l0 = subalgebra(inst[k].t, idx, "degree0");
      LieBiderReport r = solve_bder_lie(l0);
      std::string nm = k == 1 ? "sl(4)" : "so(5)";
      line("criterion-7 degree0-inner " + nm, r.nullity == 1 && r.inner,
           "nullity=" + std::to_string(r.nullity));
    }
    line("criterion-7 within budget", since(t0) < 300.0, std::to_string(since(t0)) + "s");
  }

  // 8. property suites
  {
    bool ok = true;
    for (const auto& i : inst)
      for (long lam : {1L, -2L, 7L})
        if (!bider_residual_is_zero(i.t, 0, bracket_coefficients(i.t, Rational(lam))))
          ok = false;
    line("criterion-8 inner-residual-zero all families, lambda in {1,-2,7}", ok);
  }
  {
    AlgebraTable w2 = build_W(2);
    RationalField q;
    bool ok = true;
    for (int gamma : {0, 1}) {
      BiderOptions global;
      global.blocked = false;
      auto sb = solve_bder_sector(w2, gamma, q, {});
      auto sg = solve_bder_sector(w2, gamma, q, global);
      if (sb.total_nullity != sg.total_nullity) ok = false;
    }
    line("criterion-8 block-sum equals global nullity on W(2)", ok);
  }
  {
    // factorization of retained solutions is already part of criterion 5;
    // re-check the graded conditions explicitly on the inner solution
    bool ok = true;
    for (const auto& i : inst) {
      FactorizationResult fr =
          factor_biderivation(i.t, i.ext, bracket_coefficients(i.t, Rational(1)));
      if (!(fr.consistent && fr.unique && fr.graded && fr.verified)) ok = false;
    }
    line("criterion-8 factorization with graded support", ok);
  }
  if (!cli_bin.empty()) {
    // mutation flips the CLI verdict to exit 1
    std::string dir = "/tmp/cartanver_acceptance";
    std::system(("mkdir -p " + dir).c_str());
    std::string table = dir + "/w4.sc";
    int rc1 = WEXITSTATUS(
        std::system((cli_bin + " export --family W --n 4 --out " + table + " >/dev/null").c_str()));
    int rc2 = WEXITSTATUS(
        std::system((cli_bin + " jacobi --table " + table + " >/dev/null").c_str()));
    // bump the numerator of the first constant record
    {
      std::ifstream in(table, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      std::string s = buf.str();
      auto pos = s.find("\nc ");
      auto eol = s.find('\n', pos + 1);
      std::string rec = s.substr(pos + 1, eol - pos - 1);
      auto last = rec.rfind(' ');
      auto prev = rec.rfind(' ', last - 1);
      long num = std::stol(rec.substr(prev + 1, last - prev - 1));
      std::ofstream out(table, std::ios::binary);
      out << s.substr(0, pos + 1) << rec.substr(0, prev + 1) << (num + 1)
          << rec.substr(last) << s.substr(eol);
    }
    int rc3 = WEXITSTATUS(
        std::system((cli_bin + " jacobi --table " + table + " >/dev/null").c_str()));
    line("criterion-8 mutation flips the verdict to exit 1",
         rc1 == 0 && rc2 == 0 && rc3 == 1,
         "exits " + std::to_string(rc1) + "/" + std::to_string(rc2) + "/" +
             std::to_string(rc3));
  } else {
    line("criterion-8 mutation flips the verdict to exit 1", false, "no CLI path given");
  }

  std::cout << (g_failures ? "ACCEPTANCE: FAILED (" + std::to_string(g_failures) + ")"
                           : "ACCEPTANCE: ALL CRITERIA PASS")
            << std::endl;
  return g_failures ? 1 : 0;
}
