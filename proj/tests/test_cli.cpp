#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gravcat/cli.hpp"

using namespace gravcat;
using namespace gravcat::cli;

namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gravcat_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

double value_of(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  const std::string prefix = key + " = ";
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) return std::stod(line.substr(prefix.size()));
  }
  FAIL("missing key " << key);
  return 0.0;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, 2.4850531150161837, 3.4e-5, 1e-300, 0.0}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("csv schema") {
  std::ostringstream out;
  write_csv(out, {{0.5, 0.25, 0.5, 0.375, 0.125, ConcurrenceBranch::Block14},
                  {2.0, 0.0, 0.01, 0.01, 0.0, ConcurrenceBranch::Zero}});
  CHECK(out.str() ==
        "T,concurrence,l1_norm,g1,g2,branch\n"
        "0.5,0.25,0.5,0.375,0.125,rho14\n"
        "2,0,0.01,0.01,0,zero\n");
}

TEST_CASE("state command at very high temperature") {
  const Result r = invoke({"state", "--w", "1", "--delta", "0", "--T", "1e9"});
  REQUIRE(r.status == kExitOk);
  CHECK(value_of(r.out, "rho11") == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(value_of(r.out, "rho14") == 0.0);
  CHECK(value_of(r.out, "rho22") == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(value_of(r.out, "rho23") == 0.0);
  CHECK(value_of(r.out, "rho44") == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(value_of(r.out, "concurrence") == 0.0);
  CHECK(value_of(r.out, "Z") == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("state with oracle check and degenerate warning") {
  const Result ok = invoke({"state", "--w", "0.5", "--delta", "0.5", "--T", "0.1", "--oracle"});
  CHECK(ok.status == kExitOk);
  const Result degenerate = invoke({"state", "--w", "0", "--delta", "1", "--T", "0"});
  CHECK(degenerate.status == kExitOk);
  CHECK(degenerate.out.find("warning") != std::string::npos);
}

TEST_CASE("threshold command in physical units") {
  const Result r = invoke({"threshold", "--units", "physical", "--w", "0.015", "--delta", "17.0072"});
  REQUIRE(r.status == kExitOk);
  CHECK(r.out.find("status = found") != std::string::npos);
  CHECK(std::abs(value_of(r.out, "T_th") / 2.485053 - 1.0) < 1e-3);

  const Result zero = invoke({"threshold", "--w", "1", "--delta", "0"});
  CHECK(zero.status == kExitOk);
  CHECK(zero.out.find("always-zero") != std::string::npos);
}

TEST_CASE("coherence-max command") {
  const Result r = invoke({"coherence-max", "--w", "1", "--delta", "0.2"});
  REQUIRE(r.status == kExitOk);
  CHECK(value_of(r.out, "l1_max") == doctest::Approx(0.23394678434096795).epsilon(1e-10));
}

TEST_CASE("params command derives the coupling") {
  const Result r = invoke({"params", "--mass", "1e-7", "--d", "3e-4", "--L", "1.5e-4",
                           "--w_over_kB", "0.015"});
  REQUIRE(r.status == kExitOk);
  CHECK(std::abs(value_of(r.out, "delta") / 17.0072 - 1.0) < 1e-3);
  CHECK(value_of(r.out, "w") == 0.015);
  CHECK(r.out.find("units = physical") != std::string::npos);

  const Result half = invoke({"params", "--mass", "1e-7", "--d", "3e-4", "--L", "1.5e-4",
                              "--w_over_kB", "0.015", "--convention", "half"});
  REQUIRE(half.status == kExitOk);
  CHECK(value_of(half.out, "delta") ==
        doctest::Approx(0.5 * value_of(r.out, "delta")).epsilon(1e-15));

  CHECK(invoke({"params", "--mass", "1e-7", "--d", "3e-4", "--L", "1.5e-4"}).status == kExitUsage);
  CHECK(invoke({"params", "--mass", "1e-7", "--d", "0", "--L", "1.5e-4", "--w_over_kB", "1"})
            .status == kExitUsage);
}

TEST_CASE("sweep command writes a csv file") {
  const fs::path dir = scratch_dir("sweep");
  const fs::path csv = dir / "out.csv";
  const Result r = invoke({"sweep", "--w", "1", "--delta", "0.2", "--t_min", "0.01", "--t_max",
                           "100", "--n", "50", "--out", csv.string(), "--oracle"});
  REQUIRE(r.status == kExitOk);
  const std::string text = slurp(csv);
  CHECK(text.rfind("T,concurrence,l1_norm,g1,g2,branch\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 51);
  CHECK(text.find('\r') == std::string::npos);
  CHECK_FALSE(fs::exists(dir / "out.csv.tmp"));

  const Result to_stdout = invoke({"sweep", "--w", "1", "--delta", "0.2", "--t_min", "0.5",
                                   "--t_max", "1", "--n", "2"});
  CHECK(std::count(to_stdout.out.begin(), to_stdout.out.end(), '\n') == 3);
}

TEST_CASE("config file supplies values and flags override it") {
  const fs::path dir = scratch_dir("config");
  const fs::path cfg = dir / "run.conf";
  {
    std::ofstream f(cfg);
    f << "# unit coupling\n"
      << "w = 1\n"
      << "delta = 0.2\n"
      << "t_min = 0.01\n"
      << "t_max = 100\n"
      << "n = 10\n";
  }
  const Result from_file = invoke({"sweep", "--config", cfg.string()});
  REQUIRE(from_file.status == kExitOk);
  CHECK(std::count(from_file.out.begin(), from_file.out.end(), '\n') == 11);

  const Result overridden = invoke({"sweep", "--config", cfg.string(), "--n", "3"});
  REQUIRE(overridden.status == kExitOk);
  CHECK(std::count(overridden.out.begin(), overridden.out.end(), '\n') == 4);
}

TEST_CASE("figure presets") {
  const auto fig2 = figure_preset("2", {});
  REQUIRE(fig2.curves.size() == 4);
  CHECK(fig2.curves[3].params.w() == 3.0);
  CHECK(fig2.curves[3].params.delta() == 3.0);
  CHECK(fig2.t_min == 1e-2);
  CHECK(fig2.t_max == 1e2);
  CHECK(fig2.n_points == 400);

  const auto fig8 = figure_preset("8", {});
  CHECK(fig8.curves.at(0).params.unit_mode() == UnitMode::Physical);
  CHECK(fig8.t_min == 1e-5);

  CHECK(figure_preset("6", {}).curves.size() == 3);
  CHECK(figure_preset("7", {}).curves.at(2).params.delta() == 600.0);
  CHECK(figure_preset("9b", {}).spacing == Spacing::Linear);
  CHECK_THROWS_AS(figure_preset("3", {}), ConfigError);
  CHECK_THROWS_AS(figure_preset("3", {0.5, 0.05, 2.0}), ConfigError);  // 0.05 < w = 0.1
  CHECK(figure_preset("3", {0.5, 0.5, 2.0}).curves.size() == 3);
  CHECK_THROWS_AS(figure_preset("10", {}), ConfigError);
}

TEST_CASE("figure command writes one csv per curve") {
  const fs::path dir = scratch_dir("figure2");
  const Result r = invoke({"figure", "2", "--out", dir.string()});
  REQUIRE(r.status == kExitOk);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    CHECK(entry.path().extension() == ".csv");
    ++files;
  }
  CHECK(files == 4);
  CHECK(fs::exists(dir / "fig2_w3_delta3.csv"));

  const fs::path fig3 = scratch_dir("figure3");
  CHECK(invoke({"figure", "3", "--out", fig3.string()}).status == kExitUsage);
  CHECK(fs::is_empty(fig3));
  CHECK(invoke({"figure", "3", "--deltas", "0.05,0.5,2", "--out", fig3.string()}).status ==
        kExitOk);
}

TEST_CASE("figure 8 low-temperature row and zero crossing") {
  const fs::path dir = scratch_dir("figure8");
  REQUIRE(invoke({"figure", "8", "--out", dir.string()}).status == kExitOk);
  std::ifstream in(dir / "fig8_w0.015_delta5.101e-07.csv");
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  double first_c = -1.0;
  double last_positive = 0.0;
  double first_zero = 0.0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string t;
    std::string c;
    std::getline(row, t, ',');
    std::getline(row, c, ',');
    const double tv = std::stod(t);
    const double cv = std::stod(c);
    if (first_c < 0.0) first_c = cv;
    if (cv > 0.0) last_positive = tv;
    if (cv == 0.0 && first_zero == 0.0) first_zero = tv;
  }
  CHECK(std::abs(first_c / 3.4e-5 - 1.0) < 0.03);
  CHECK(last_positive < 0.0013658);
  CHECK(first_zero > 0.0013658);
  CHECK(first_zero / last_positive < 1.05);
}

TEST_CASE("usage errors exit with status 1") {
  CHECK(invoke({}).status == kExitUsage);
  CHECK(invoke({"bogus"}).status == kExitUsage);
  CHECK(invoke({"figure"}).status == kExitUsage);
  CHECK(invoke({"figure", "11"}).status == kExitUsage);
  CHECK(invoke({"state", "--w", "1"}).status == kExitUsage);
  CHECK(invoke({"state", "--w", "1", "--delta", "0.2", "--T", "-1"}).status == kExitUsage);
  CHECK(invoke({"state", "--w", "-1", "--delta", "0.2"}).status == kExitUsage);
  CHECK(invoke({"sweep", "--w", "1", "--delta", "0.2", "--t_min", "1"}).status == kExitUsage);
  CHECK(invoke({"sweep", "--w", "1", "--delta", "0.2", "--t_min", "1", "--t_max", "0.5"}).status ==
        kExitUsage);
  CHECK(invoke({"state", "--units", "kelvin"}).status == kExitUsage);
  CHECK(invoke({"state", "--w", "1", "--delta", "0.2", "--mass", "1", "--d", "1", "--L", "1",
                "--w_over_kB", "1"})
            .status == kExitUsage);

  const Result r = invoke({"sweep", "--w", "1", "--delta", "0.2", "--t_min", "0.1", "--t_max",
                           "1", "--out", "/nonexistent-dir/x.csv"});
  CHECK(r.status == kExitUsage);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("oracle verification flags a corrupted row") {
  const ModelParams p(1.0, 0.2);
  std::vector<CorrelationReport> rows{report(p, 0.3)};
  CHECK_NOTHROW(oracle_verify(p, rows));
  rows[0].concurrence += 1e-8;
  CHECK_THROWS_AS(oracle_verify(p, rows), OracleMismatch);
}
