#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan/families.hpp"
#include "cartan/tableio.hpp"

using namespace cartan;

TEST_CASE("export and import round-trip bit-exactly") {
  for (std::string fam : {"W", "S", "Stilde"}) {
    AlgebraTable t = build_family(parse_family(fam), 4);
    std::string first = export_table_string(t);
    AlgebraTable back = import_table_string(first);
    std::string second = export_table_string(back);
    CHECK(first == second);
    CHECK(back.dim == t.dim);
    CHECK(back.parity == t.parity);
    CHECK(back.zdegree == t.zdegree);
    CHECK(back.weights == t.weights);
    CHECK(back.cartan == t.cartan);
    CHECK(back.grading_modulus == t.grading_modulus);
    CHECK(back.sc == t.sc);
    CHECK(back.basis.empty());  // realization is not part of the format
  }
}

TEST_CASE("imported tables pass the structural verifier") {
  AlgebraTable t = build_H(5);
  AlgebraTable back = import_table_string(export_table_string(t));
  CHECK(verify_table_invariants(back).empty());
  CHECK(check_super_jacobi(back).pass);
}

TEST_CASE("rational constants survive the trip") {
  AlgebraTable t = build_S(4);
  AlgebraTable back = import_table_string(export_table_string(t));
  CHECK(back.sc == t.sc);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(import_table_string(""));
  CHECK_THROWS(import_table_string("algebratable 99\nend\n"));
  CHECK_THROWS(import_table_string("algebratable 1\nfamily W\nn 2\ndim 1\n"
                                   "c 0 0 5 1 1\nend\n"));
  // missing end
  AlgebraTable t = build_W(2);
  std::string s = export_table_string(t);
  CHECK_THROWS(import_table_string(s.substr(0, s.size() - 4)));
}

TEST_CASE("a textual perturbation is caught by the jacobi verifier") {
  AlgebraTable t = build_W(2);
  std::string s = export_table_string(t);
  // corrupt the first constant record's numerator
  auto pos = s.find("\nc ");
  REQUIRE(pos != std::string::npos);
  auto eol = s.find('\n', pos + 1);
  std::string rec = s.substr(pos + 1, eol - pos - 1);
  // bump the numerator field
  auto last_space = rec.rfind(' ');
  auto prev_space = rec.rfind(' ', last_space - 1);
  long num = std::stol(rec.substr(prev_space + 1, last_space - prev_space - 1));
  std::string corrupted = s.substr(0, pos + 1) + rec.substr(0, prev_space + 1) +
                          std::to_string(num + 1) + rec.substr(last_space) +
                          s.substr(eol);
  AlgebraTable bad = import_table_string(corrupted);
  bool invariants_ok = verify_table_invariants(bad).empty();
  bool jacobi_ok = check_super_jacobi(bad).pass;
  CHECK(!(invariants_ok && jacobi_ok));
}
