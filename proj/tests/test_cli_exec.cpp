// Exercises the installed binary end to end: exit codes, output stability,
// file round trips. The binary path arrives as --cli=<path> ahead of the
// doctest arguments.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_cli_path;

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string command = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
    output.append(buffer.data(), n);
  }
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bemwe_cli_" + name);
}

}  // namespace

TEST_CASE("fit --nfl reproduces the published numbers and exits 0") {
  const RunResult r = run_cli("fit --nfl");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n1: 16") != std::string::npos);
  CHECK(r.output.find("n2: 2") != std::string::npos);
  CHECK(r.output.find("n3: 24") != std::string::npos);
  CHECK(r.output.find("0.0416") != std::string::npos);
  CHECK(r.output.find("-250.289") != std::string::npos);
  CHECK(r.output.find("converged: yes") != std::string::npos);
}

TEST_CASE("fit output is bit-stable across runs, including the json sidecar") {
  const auto json_a = temp_path("a.json");
  const auto json_b = temp_path("b.json");
  const RunResult a = run_cli("fit --nfl --json " + json_a.string());
  const RunResult b = run_cli("fit --nfl --json " + json_b.string());
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  std::ifstream fa(json_a), fb(json_b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().find("\"estimates\"") != std::string::npos);
  std::filesystem::remove(json_a);
  std::filesystem::remove(json_b);
}

TEST_CASE("fit on a csv file honors --scale") {
  const auto csv = temp_path("scaled.csv");
  {
    std::ofstream out(csv);
    out << "x1,x2\n";
    for (int i = 0; i < 12; ++i) {
      out << (50 + 10 * i) << "," << (60 + 11 * i) << "\n";
    }
    out << "70,70\n80,65\n";
  }
  const RunResult r =
      run_cli("fit --data " + csv.string() + " --scale 100 --alpha 1 --beta 1 --lambda 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("scale: 100") != std::string::npos);
  std::filesystem::remove(csv);
}

TEST_CASE("exit codes: input, domain, non-convergence") {
  CHECK(run_cli("fit --data /no/such/file.csv").exit_code == 2);
  CHECK(run_cli("fit").exit_code == 2);              // no source
  CHECK(run_cli("fit --nfl --data x.csv").exit_code == 2);
  CHECK(run_cli("eval --what nope --gamma1 1 1,2").exit_code == 2);
  CHECK(run_cli("eval --what cdf --gamma1 -1 1,2").exit_code == 3);
  CHECK(run_cli("eval --what hazard --alpha 1 --beta 1 --lambda 1 50,50").exit_code == 3);
  CHECK(run_cli("moments --which 5 --orders 1").exit_code == 3);

  // all ties: singular information matrix
  const auto csv = temp_path("ties.csv");
  {
    std::ofstream out(csv);
    out << "1,1\n2,2\n3,3\n";
  }
  CHECK(run_cli("fit --data " + csv.string() + " --alpha 1 --beta 1 --lambda 1").exit_code == 4);
  std::filesystem::remove(csv);

  // accuracy failure: the moment integral of this shape cannot be bracketed
  CHECK(run_cli("moments --gamma1 1 --gamma2 1 --gamma3 1 --alpha 1 --beta 1e-6 "
                "--lambda 1 --which 1 --orders 1").exit_code == 5);
}

TEST_CASE("eval prints the singular kind on diagonal points") {
  const RunResult r = run_cli(
      "eval --what pdf --gamma1 1 --gamma2 1 --gamma3 1 --alpha 1 --beta 1 --lambda 1 "
      "0.7,0.7 0.5,1.0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("kind=density_1d_singular") != std::string::npos);
  CHECK(r.output.find("kind=density_2d") != std::string::npos);
}

TEST_CASE("simulate writes identical bytes for identical seeds") {
  const auto csv1 = temp_path("sim1.csv");
  const auto csv2 = temp_path("sim2.csv");
  const std::string params =
      "--gamma1 1 --gamma2 1 --gamma3 1 --alpha 1 --beta 1 --lambda 1 --n 400 --seed 99";
  const RunResult a = run_cli("simulate " + params + " --out " + csv1.string());
  const RunResult b = run_cli("simulate " + params + " --out " + csv2.string());
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);  // summary line
  CHECK(a.output.find("tie_fraction") != std::string::npos);
  std::ifstream f1(csv1), f2(csv2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().rfind("x1,x2\n", 0) == 0);
  std::filesystem::remove(csv1);
  std::filesystem::remove(csv2);
}

TEST_CASE("moments subcommand emits one row per order") {
  const RunResult r = run_cli(
      "moments --gamma1 1 --gamma2 1 --gamma3 1 --alpha 1 --beta 1 --lambda 1 "
      "--which 1 --orders 1 2 3 --method quadrature");
  CHECK(r.exit_code == 0);
  int rows = 0;
  std::istringstream in(r.output);
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);  // header + 3 orders
}

int main(int argc, char** argv) {
  std::vector<char*> forwarded;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0) {
      g_cli_path = arg.substr(6);
    } else {
      forwarded.push_back(argv[i]);
    }
  }
  if (g_cli_path.empty()) {
    std::fprintf(stderr, "missing --cli=<path to bemwe binary>\n");
    return 1;
  }
  doctest::Context context(static_cast<int>(forwarded.size()), forwarded.data());
  return context.run();
}
