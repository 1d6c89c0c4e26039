#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "moduli/io.hpp"

using moduli::io::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(MODULI_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines_starting(const std::string& s, const std::string& prefix) {
  int n = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto end = s.find('\n', pos);
    if (s.compare(pos, prefix.size(), prefix) == 0) ++n;
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return n;
}

} // namespace

TEST(Cli, BettiModuliMod2) {
  auto r = run("betti --rank 2 --genus 3 --circles 4 --odd 1 --char 2 --target moduli");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("P(t) = 1 + 4*t + 11*t^2 + 16*t^3 + 11*t^4 + 4*t^5 + t^6"), std::string::npos) << r.out;
}

TEST(Cli, BettiBcgOddCsv) {
  auto r = run("betti --rank 3 --genus 2 --circles 1 --odd 1 --char odd --trunc 8 --target bcg --format csv");
  ASSERT_EQ(r.code, 0) << r.out;
  // (1+t^3)^2 (1+t^5)^2 / (1-t^4)^2 through t^8
  const std::vector<std::string> expected = {"1", "0", "0", "2", "2", "2", "1", "4", "7"};
  for (std::size_t k = 0; k < expected.size(); ++k)
    EXPECT_NE(r.out.find("," + std::to_string(k) + "," + expected[k] + "\n"), std::string::npos) << k << "\n" << r.out;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "rank,genus,circles,odd,eps,d,char,target,trunc,degree,coefficient");
}

TEST(Cli, InvalidParametersExitTwo) {
  auto r = run("betti --rank 2 --genus 2 --circles 5 --odd 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("a <= g + 1 - eps"), std::string::npos) << r.out;
  EXPECT_EQ(run("betti --rank 2 --genus 3 --circles 2 --odd 2").code, 2); // no odd degree
  EXPECT_EQ(run("betti --rank 4 --genus 3 --circles 1 --odd 1 --char 2").code, 2); // unsupported
  EXPECT_EQ(run("pi1 --rank 2 --genus 2 --circles 1 --odd 1").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("distinguish --a 6,3,1 --b 6,3,1,0 --rank 2").code, 2);
}

TEST(Cli, Classify) {
  auto r = run("classify --genus 2 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(count_lines_starting(r.out, "2,"), 5) << r.out;
  auto j = json::parse(run("classify --genus 3 --format json").out);
  EXPECT_EQ(j.size(), 6u);
}

TEST(Cli, Pi1) {
  auto r = run("pi1 --rank 2 --genus 3 --circles 2 --odd 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Z/2 ⋉ (Z/2 × Z); H1 = (Z/2)^2\n");
}

TEST(Cli, Distinguish) {
  auto r = run("distinguish --a 6,3,1,2 --b 6,3,1,0 --rank 2 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "distinguished");
  EXPECT_EQ(j["witness_degree"], 3);
  auto same = run("distinguish --a 6,3,1,2 --b 6,3,1,2 --rank 2");
  EXPECT_EQ(same.out, "indistinguishable by these invariants\n");
}

TEST(Cli, JsonRoundTripsBitExactly) {
  auto r = run("betti --rank 2 --genus 4 --circles 3 --odd 1 --char odd --target bcg --trunc 12 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  // Polynomial results carry "trunc": null; truncated ones a number.
  auto reencode = [](const json& v) {
    if (v["trunc"].is_null()) return moduli::io::to_json(moduli::io::polynomial_from_json<moduli::Rational>(v)).dump();
    return moduli::io::to_json(moduli::io::series_from_json<moduli::Rational>(v)).dump();
  };
  EXPECT_EQ(reencode(j["result"]["series"]), j["result"]["series"].dump());
  for (const auto& [name, f] : j["result"]["factors"].items()) EXPECT_EQ(reencode(f), f.dump()) << name;
}

TEST(Cli, Deterministic) {
  const std::string args = "verify --suite golden --format json";
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(count_lines_starting(a.out, "{\"suite\":\"golden\""), 34);
}

TEST(Cli, TruncationFromEnvironment) {
  auto r = run("betti --rank 2 --genus 3 --circles 2 --odd 1 --target bcg --format json", "MODULI_BETTI_TRUNC=6");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["result"]["series"]["trunc"], 6);
  EXPECT_EQ(run("betti --rank 2 --genus 3 --circles 2 --odd 1 --target bcg", "MODULI_BETTI_TRUNC=x").code, 2);
}

TEST(Cli, DgaManifestRoundTrip) {
  auto exported = run("dga export --complex case1 --rank 3 --n 2 --ghat 0 --cap 10");
  ASSERT_EQ(exported.code, 0) << exported.out;
  const std::string path = ::testing::TempDir() + "case1_manifest.json";
  std::ofstream(path) << exported.out;
  auto from_file = run("dga homology --manifest " + path + " --cap 10 --format json");
  auto direct = run("dga homology --complex case1 --rank 3 --n 2 --ghat 0 --cap 10 --format json");
  EXPECT_EQ(from_file.code, 0);
  EXPECT_EQ(from_file.out, direct.out);
  auto series = json::parse(direct.out)["series"]["coeffs"];
  EXPECT_EQ(series[3].dump(), "[1,0]"); // t^3 from (1+t^3)
}

TEST(Cli, Latex) {
  auto r = run("classify --genus 1 --format latex");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\\begin{tabular}"), std::string::npos);
}
