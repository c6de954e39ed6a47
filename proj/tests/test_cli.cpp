#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// end-to-end runs of the installed binary
#ifndef CARTANVER_BIN
#error "CARTANVER_BIN must point at the CLI binary"
#endif

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(CARTANVER_BIN) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("") == 2);
  CHECK(run("bder --family Stilde --n 5") == 2);
  CHECK(run("bder --family X --n 4") == 2);
  CHECK(run("bder --family H --n 5 --prime 4") == 2);
  CHECK(run("frobnicate") == 2);
}

TEST_CASE("small family end to end") {
  CHECK(run("info --family W --n 2 --out /tmp/cartanver_w2_info.json") == 0);
  CHECK(run("jacobi --family W --n 2") == 0);
  CHECK(run("der --family W --n 2") == 0);
}

TEST_CASE("reports are byte-identical across runs") {
  CHECK(run("der --family S --n 3 --out /tmp/cartanver_s3_a.json") == 0);
  CHECK(run("der --family S --n 3 --out /tmp/cartanver_s3_b.json") == 0);
  std::string a = slurp("/tmp/cartanver_s3_a.json");
  std::string b = slurp("/tmp/cartanver_s3_b.json");
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("resource limits exit with code 3") {
  CHECK(run("bder --family W --n 2 --block-limit 1") == 3);
}

TEST_CASE("export, corrupt, verify round trip") {
  const char* path = "/tmp/cartanver_w2.sc";
  CHECK(run(std::string("export --family W --n 2 --out ") + path) == 0);
  CHECK(run(std::string("jacobi --table ") + path) == 0);
  // flip one structure constant in the text file
  std::string s = slurp(path);
  auto pos = s.find("\nc ");
  REQUIRE(pos != std::string::npos);
  auto fields_end = s.find('\n', pos + 1);
  std::string rec = s.substr(pos + 1, fields_end - pos - 1);
  auto last = rec.rfind(' ');
  auto prev = rec.rfind(' ', last - 1);
  long num = std::stol(rec.substr(prev + 1, last - prev - 1));
  std::string mutated = s.substr(0, pos + 1) + rec.substr(0, prev + 1) +
                        std::to_string(num + 1) + rec.substr(last) + s.substr(fields_end);
  {
    std::ofstream out(path, std::ios::binary);
    out << mutated;
  }
  CHECK(run(std::string("jacobi --table ") + path) == 1);
}
