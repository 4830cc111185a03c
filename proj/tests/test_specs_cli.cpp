#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "orlicz/cli.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/specs.hpp"

using namespace orlicz;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const cli::RunConfig& config) {
  std::ostringstream out, err;
  const int code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("gauge specs") {
  CHECK(parse_orlicz_spec("power:p=2") == OrliczFunction::power(2.0));
  CHECK(parse_orlicz_spec("exp") == OrliczFunction::exp_minus_one());
  CHECK(parse_orlicz_spec("power-log:p=1.5") == OrliczFunction::power_log(1.5));
  const auto spline = temp_file("orlicz_spline_test.csv", "0,0\n1,1\n2,3\n");
  CHECK(parse_orlicz_spec("spline:" + spline.string())(1.5) == doctest::Approx(2.0));
  CHECK_THROWS_AS(parse_orlicz_spec("power"), ParseError);
  CHECK_THROWS_AS(parse_orlicz_spec("power:p=abc"), ParseError);
  CHECK_THROWS_AS(parse_orlicz_spec("power:p=0.5x"), ParseError);
  CHECK_THROWS_AS(parse_orlicz_spec("cosh"), ParseError);
}

TEST_CASE("weight specs") {
  const auto pd = parse_weight_spec("power-decay:beta=1", 4);
  CHECK(pd.builtin_family);
  CHECK(pd.weights.dim() == 4);
  CHECK(pd.weights[3] == 0.25);
  CHECK(parse_weight_spec("geometric:q=0.5", 3).weights.tail_bound() == 0.0625);

  const auto csv = temp_file("orlicz_weights_test.csv", "# weights\n1\n0.5\n\n0.25\n");
  const auto w = parse_weight_spec("csv:" + csv.string(), 64);
  CHECK_FALSE(w.builtin_family);
  CHECK(w.weights.weights() == std::vector<double>{1, 0.5, 0.25});
  CHECK(w.weights.tail_bound() == 0.0);
  CHECK(parse_weight_spec("csv:" + csv.string(), 64, 0.1).weights.tail_bound() == 0.1);

  CHECK_THROWS_AS(parse_weight_spec("geometric:q=2", 3), ParseError);
  CHECK_THROWS_AS(parse_weight_spec("csv:/nonexistent/w.csv", 3), ParseError);
  CHECK_THROWS_AS(parse_weight_spec("harmonic", 3), ParseError);
  CHECK(parse_csv_values("1\n-2\n") == std::vector<double>{1, -2});
  CHECK_THROWS_AS(parse_csv_values("1\nx\n"), ParseError);
  const auto negative = temp_file("orlicz_negative_weights.csv", "1\n-2\n");
  CHECK_THROWS_AS(parse_weight_spec("csv:" + negative.string(), 64), ParseError);
}

TEST_CASE("lists and ranges") {
  CHECK(parse_value_list("3,4,12") == std::vector<double>{3, 4, 12});
  CHECK(parse_index_list("3,1") == IndexSet{0, 2});
  CHECK_THROWS_AS(parse_index_list("0"), ParseError);
  CHECK_THROWS_AS(parse_index_list("1,1"), ParseError);
  const auto r = parse_range("2..5");
  CHECK(r.lo == 2);
  CHECK(r.hi == 5);
  const auto single = parse_range("7");
  CHECK(single.lo == 7);
  CHECK(single.hi == 7);
  CHECK_THROWS_AS(parse_range("5..2"), ParseError);
  CHECK_THROWS_AS(parse_range("a..b"), ParseError);
  CHECK(format_double(1.0 / 6) == "0.16666666666666666");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("widths command on harmonic weights") {
  cli::RunConfig c;
  c.command = cli::Command::widths;
  c.weight_spec = "power-decay:beta=1";
  c.orlicz_spec = "power:p=2";
  c.m_range = IntRange{0, 5};
  c.d = 64;
  const auto r = run(c);
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "quantity,order,value,certified,witness\r");
  for (int m = 0; m <= 5; ++m) {
    REQUIRE(std::getline(lines, line));
    CHECK(line.rfind("d_m," + std::to_string(m) + "," + format_double(1.0 / (m + 1)) + ",true,", 0) == 0);
  }
}

TEST_CASE("sigma command on the worked instance") {
  cli::RunConfig c;
  c.command = cli::Command::sigma;
  c.weight_spec = "geometric:q=0.5";
  c.orlicz_spec = "power:p=1";
  c.p = 1.0;
  c.n_range = IntRange{1, 1};
  c.d = 32;
  const auto r = run(c);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("sigma_n,1,0.16666666666666666,true,s*=2\r\n") != std::string::npos);
}

TEST_CASE("norm command") {
  cli::RunConfig c;
  c.command = cli::Command::norm;
  c.values = "3,4,12";
  c.gamma = "3";
  const auto r = run(c);
  REQUIRE(r.code == 0);
  const auto at = r.out.find("\nnorm,0,");
  REQUIRE(at != std::string::npos);
  CHECK(std::stod(r.out.substr(at + 8)) == doctest::Approx(13.0).epsilon(1e-15));
  CHECK(r.out.find("tail_norm,1,5,true,gamma={3}") != std::string::npos);
}

TEST_CASE("exit codes") {
  cli::RunConfig bad_spec;
  bad_spec.command = cli::Command::widths;
  bad_spec.weight_spec = "power-decay:beta=1";
  bad_spec.orlicz_spec = "cosh";
  bad_spec.m_range = IntRange{0, 1};
  CHECK(run(bad_spec).code == cli::kExitUsage);

  cli::RunConfig missing;
  missing.command = cli::Command::sigma;
  missing.weight_spec = "geometric:q=0.5";
  missing.n_range = IntRange{1, 1};
  CHECK(run(missing).code == cli::kExitUsage);

  cli::RunConfig concave = missing;
  concave.p = 2.0;
  concave.orlicz_spec = "power:p=1";
  const auto r = run(concave);
  CHECK(r.code == cli::kExitHypothesis);
  CHECK(r.err.find("composed_orlicz") != std::string::npos);

  cli::RunConfig truncated;
  truncated.command = cli::Command::widths;
  truncated.weight_spec = "power-decay:beta=1";
  truncated.m_range = IntRange{0, 9};
  truncated.d = 5;
  CHECK(run(truncated).code == cli::kExitHypothesis);

  cli::RunConfig mismatch;
  mismatch.command = cli::Command::widths;
  mismatch.weight_spec = "power-decay:beta=1";
  mismatch.orlicz_spec = "exp";
  mismatch.target_spec = "power:p=2";
  mismatch.n_range = IntRange{0, 2};
  CHECK(run(mismatch).code == cli::kExitHypothesis);
}

TEST_CASE("table output is byte-identical across runs") {
  cli::RunConfig c;
  c.command = cli::Command::table;
  c.weight_spec = "power-decay:beta=1";
  c.orlicz_spec = "power:p=2";
  c.p = 1.0;
  c.m_range = IntRange{0, 9};
  c.n_range = IntRange{0, 6};
  c.d = 64;
  const auto a = run(c);
  const auto b = run(c);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("sigma_n,6,") != std::string::npos);
  CHECK(a.out.find("E_char_set,") != std::string::npos);
}

TEST_CASE("verify output is identical across runs") {
  cli::RunConfig c;
  c.command = cli::Command::verify;
  c.seed = 7;
  c.trials = 300;
  const auto a = run(c);
  const auto b = run(c);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("result=PASS") != std::string::npos);
}
