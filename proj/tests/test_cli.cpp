#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclocert/certificate_io.hpp"
#include "cyclocert/cli.hpp"

using namespace cyclocert;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "cyclocert_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("phi") {
  CHECK(run({"phi", "6"}).out == "1,-1,1\n");
  CHECK(run({"phi", "1"}).out == "-1,1\n");

  const Run r = run({"phi", "105"});
  CHECK(r.code == kExitPass);
  std::vector<std::string> coeffs;
  std::stringstream ss(r.out.substr(0, r.out.size() - 1));
  for (std::string tok; std::getline(ss, tok, ',');) {
    coeffs.push_back(tok);
  }
  CHECK(coeffs.size() == 49);
  CHECK(coeffs[7] == "-2");

  CHECK(run({"phi", "0"}).code == kExitMalformed);
  CHECK(run({"phi", "abc"}).code == kExitMalformed);
  CHECK(run({"phi"}).code == kExitMalformed);
}

TEST_CASE("decompose and verify") {
  const auto dir = scratch_dir();
  const auto path = (dir / "c6.json").string();

  const Run d = run({"decompose", "6", "--out", path});
  CHECK(d.code == kExitPass);
  CHECK(d.out.find("h[p=2] degree") != std::string::npos);
  CHECK(run({"verify", path}).code == kExitPass);

  const Run d8 = run({"decompose", "8"});
  CHECK(d8.code == kExitPass);
  const auto cert = std::get<DecomposeCertificate>(parse_certificate(d8.out));
  CHECK(cert.cofactors == std::vector<IntPoly>{IntPoly{1}});
  CHECK(d8.err.find("h[p=2] degree 0") != std::string::npos);

  CHECK(run({"decompose", "30", "--trace", "--out", (dir / "c30.json").string()}).out.find(
            "[FAIL]") == std::string::npos);
  CHECK(run({"decompose", "1"}).code == kExitMalformed);

  SUBCASE("tampered certificate") {
    std::string text = slurp(path);
    const auto pos = text.find("\"phi\": [\n    \"1\"");
    REQUIRE(pos != std::string::npos);
    text.replace(text.find("\"1\"", pos), 3, "\"2\"");
    const auto bad = (dir / "bad.json").string();
    std::ofstream(bad) << text;
    const Run v = run({"verify", bad});
    CHECK(v.code == kExitVerificationFailed);
    CHECK(v.out.find("first mismatch at coefficient 0") != std::string::npos);
  }
  SUBCASE("truncated certificate") {
    const std::string text = slurp(path);
    const auto bad = (dir / "trunc.json").string();
    std::ofstream(bad) << text.substr(0, text.size() / 2);
    CHECK(run({"verify", bad}).code == kExitMalformed);
  }
  SUBCASE("missing file") {
    CHECK(run({"verify", (dir / "nope.json").string()}).code == kExitMalformed);
  }
}

TEST_CASE("bezout command") {
  const auto path = (scratch_dir() / "b.json").string();
  CHECK(run({"bezout", "21", "15", "--out", path}).code == kExitPass);
  CHECK(run({"verify", path}).code == kExitPass);
  const Run r = run({"bezout", "3", "2"});
  const auto c = std::get<BezoutCertificate>(parse_certificate(r.out));
  CHECK(c.d == 1);
}

TEST_CASE("theorem and sweep") {
  const Run t = run({"theorem", "30"});
  CHECK(t.code == kExitPass);
  CHECK(t.out.find("PASS") != std::string::npos);
  CHECK(run({"theorem", "1"}).code == kExitMalformed);

  const Run s1 = run({"sweep", "40"});
  CHECK(s1.code == kExitPass);
  CHECK(s1.out.find("39 passed, 0 failed") != std::string::npos);
  const Run s4 = run({"sweep", "40", "--jobs", "4"});
  CHECK(s4.out == s1.out);
  CHECK(run({"sweep", "1"}).code == kExitMalformed);

  const auto dir = scratch_dir() / "emitted";
  CHECK(run({"sweep", "12", "--emit-dir", dir.string()}).code == kExitPass);
  CHECK(run({"verify", (dir / "decompose_12.json").string()}).code == kExitPass);
}

TEST_CASE("ring") {
  CHECK(run({"ring", "6", "ind", "2", "1,0,0"}).out == "6:1,0,0,1,0,0\n");
  CHECK(run({"ring", "6", "mul", "0,1,0,0,0,0", "0,0,0,0,0,1"}).out == "6:1,0,0,0,0,0\n");
  CHECK(run({"ring", "6", "char", "2", "1"}).out == "0\n");
  CHECK(run({"ring", "6", "char", "2", "2"}).out == "2\n");
  CHECK(run({"ring", "6", "res", "2", "0,1,0,0,0,0"}).out == "3:0,1,0\n");

  const Run bad = run({"ring", "6", "mul", "0,1,x,0,0,0", "0,0,0,0,0,1"});
  CHECK(bad.code == kExitMalformed);
  CHECK(bad.err.find("position 4") != std::string::npos);
  CHECK(run({"ring", "6", "ind", "4", "1"}).code == kExitMalformed);
  CHECK(run({"ring", "6", "ind", "2", "1,0"}).code == kExitMalformed);
  CHECK(run({"ring", "6", "frob", "1"}).code == kExitMalformed);
}
