#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "fspt/io.hpp"
#include "fspt/sample.hpp"
#include "test_support.hpp"

using namespace fspt;
using namespace fspt::test;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(FSPT_BINARY) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return RunResult{WEXITSTATUS(raw), std::move(out)};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("fspt-cli-" + std::to_string(SplitMix64{static_cast<std::uint64_t>(
                                             reinterpret_cast<std::uintptr_t>(this))}
                                             .next()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

PD0Triple nontrivial_z2_triple() {
  const auto g = z2();
  PhaseCochain c(g, 3, 2);
  c.set({1, 1, 1}, PhasePair{Phase::fraction(1, 2), Phase::fraction(1, 2)});
  return PD0Triple{g, zero_hom(*g), BitCochain(g, 2), c};
}

}  // namespace

TEST_CASE("make-group writes loadable files and rejects bad input") {
  TempDir dir;
  const auto gf = dir.file("z2.json");
  CHECK(run("make-group --cyclic 2 --out " + gf).status == 0);
  CHECK(load_group(gf)->order() == 2);

  const auto g4 = dir.file("v4.json");
  CHECK(run("make-group --product " + gf + " " + gf + " --out " + g4).status == 0);
  CHECK(load_group(g4)->order() == 4);

  CHECK(run("make-group --cyclic 0 --out " + dir.file("bad.json")).status == 3);
  CHECK(run("make-group --out " + dir.file("none.json")).status == 3);
}

TEST_CASE("validate-triple exit codes partition ok, violation, input error") {
  TempDir dir;
  const auto tf = dir.file("t.json");
  write_json_file(tf, triple_to_json(nontrivial_z2_triple()));
  CHECK(run("validate-triple --in " + tf).status == 0);

  // break the cocycle condition
  Json j = read_json_file(tf);
  j["c"]["denominator"] = 4;
  j["c"]["entries"][7][0] = "1/4";
  j["c"]["entries"][7][1] = "1/4";
  const auto bad = dir.file("bad.json");
  write_json_file(bad, j);
  CHECK(run("validate-triple --in " + bad).status == 1);

  // schema violation
  j["c"]["entries"][0][0] = "3/6";
  const auto worse = dir.file("worse.json");
  write_json_file(worse, j);
  CHECK(run("validate-triple --in " + worse).status == 3);

  CHECK(run("validate-triple --in " + dir.file("missing.json")).status == 3);
}

TEST_CASE("equiv exit codes: 0 equivalent, 1 inequivalent, 2 budget") {
  TempDir dir;
  const auto triv = dir.file("trivial.json");
  const auto hot = dir.file("hot.json");
  write_json_file(triv, triple_to_json(PD0Triple::trivial(z2(), zero_hom(*z2()))));
  write_json_file(hot, triple_to_json(nontrivial_z2_triple()));

  const auto self = run("equiv --left " + hot + " --right " + hot);
  CHECK(self.status == 0);
  CHECK(run("equiv --left " + triv + " --right " + hot).status == 1);
  CHECK(run("equiv --left " + triv + " --right " + hot + " --enumerate --budget 0").status == 2);
}

TEST_CASE("reduce and synthesize round trip through files") {
  TempDir dir;
  const auto tf = dir.file("t.json");
  write_json_file(tf, triple_to_json(nontrivial_z2_triple()));

  const auto pf = dir.file("p.json");
  const auto syn = run("synthesize --triple " + tf + " --b 1,1 --out " + pf);
  CHECK(syn.status == 0);
  CHECK(run("validate-crt --in " + pf).status == 0);

  const auto out = dir.file("reduced.json");
  const auto cert = dir.file("cert.json");
  const auto red = run("reduce --in " + pf + " --out " + out + " --cert " + cert);
  CHECK(red.status == 0);
  const PD0Triple t = load_triple(out);
  CHECK(t.c == nontrivial_z2_triple().c);
  CHECK(fs::exists(cert));

  // a random b spec is deterministic under the seed
  const auto p1 = dir.file("p1.json");
  const auto p2 = dir.file("p2.json");
  CHECK(run("synthesize --triple " + tf + " --b random --seed 5 --out " + p1).status == 0);
  CHECK(run("synthesize --triple " + tf + " --b random --seed 5 --out " + p2).status == 0);
  std::ifstream f1(p1), f2(p2);
  const std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  const std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
}

TEST_CASE("classify reports class counts and emits deterministic json") {
  TempDir dir;
  const auto gf = dir.file("z2.json");
  REQUIRE(run("make-group --cyclic 2 --out " + gf).status == 0);

  const std::string cmd =
      "--format json classify --group " + gf + " --a 0 --denominator 8 --diagonal-only";
  const auto r1 = run(cmd);
  CHECK(r1.status == 0);
  const auto r2 = run(cmd);
  CHECK(r1.out == r2.out);  // byte-identical reports

  const Json j = Json::parse(r1.out);
  CHECK(j["result"]["class_count"] == 4);
  CHECK(j["result"]["per_a"][0]["sectors"].size() == 2);

  // census across all a
  const auto census =
      run("--format json classify --group " + gf + " --denominator 8 --diagonal-only");
  CHECK(census.status == 0);
  CHECK(Json::parse(census.out)["result"]["class_count"] == 5);

  CHECK(run("classify --group " + gf + " --a 9 --denominator 8").status == 3);
  CHECK(run("classify --group " + gf + " --denominator 3").status == 3);
}

TEST_CASE("json reports never contain floating point values") {
  TempDir dir;
  const auto gf = dir.file("z2.json");
  REQUIRE(run("make-group --cyclic 2 --out " + gf).status == 0);
  const auto r = run("--format json classify --group " + gf + " --denominator 8");
  const Json j = Json::parse(r.out);
  std::function<void(const Json&)> scan = [&](const Json& v) {
    CHECK(!v.is_number_float());
    if (v.is_object() || v.is_array())
      for (const auto& sub : v) scan(sub);
  };
  scan(j);
}
