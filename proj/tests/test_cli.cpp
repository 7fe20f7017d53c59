#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <filesystem>

using test_util::cli_path;
using test_util::run_command;
using test_util::split_lines;
using test_util::testdata_dir;
using test_util::write_file;

namespace {

namespace fs = std::filesystem;

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

std::string cli(const std::string& args) { return cli_path() + " " + args; }

fs::path temp_file(const std::string& name, const std::string& content) {
  fs::path path = fs::temp_directory_path() / name;
  write_file(path, content);
  return path;
}

}  // namespace

TEST_CASE("gb prints the reduced basis in descending leading-term order") {
  auto r = run_command(cli("gb " + q(testdata_dir() / "single_product.poly")));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x*y + z\nx*z + z\ny*z + z\n");
}

TEST_CASE("gb --verify accepts its own output") {
  auto r = run_command(cli("gb --verify " + q(testdata_dir() / "single_product.poly")));
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("verified"));
}

TEST_CASE("gb --stats reports work on stderr only") {
  auto r = run_command(cli("gb --stats " + q(testdata_dir() / "single_product.poly")));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x*y + z\nx*z + z\ny*z + z\n");
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("pairs:"));
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("time:"));
}

TEST_CASE("gb output fed back through gb is a fixed point") {
  auto first = run_command(cli("gb " + q(testdata_dir() / "single_product.poly")));
  REQUIRE(first.exit_code == 0);
  fs::path reparse = temp_file("boolgb_cli_roundtrip.poly", "ring 3 : x y z\n" + first.out);
  auto second = run_command(cli("gb " + q(reparse)));
  CHECK(second.exit_code == 0);
  CHECK(second.out == first.out);
  fs::remove(reparse);
}

TEST_CASE("bad input exits 1 with a diagnostic") {
  auto r = run_command(cli("gb " + q(testdata_dir() / "parse_error.poly")));
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("error"));
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("line 2"));

  CHECK(run_command(cli("gb /no/such/file.poly")).exit_code == 1);
  CHECK(run_command(cli("frobnicate")).exit_code == 1);
  CHECK(run_command(cli("")).exit_code == 1);
  CHECK(run_command(cli("--help")).exit_code == 0);
}

TEST_CASE("verify reports non-bases with exit 2") {
  auto not_gb = run_command(cli("verify " + q(testdata_dir() / "single_product.poly")));
  CHECK(not_gb.exit_code == 2);
  CHECK_THAT(not_gb.out, Catch::Matchers::ContainsSubstring("no"));

  fs::path basis = temp_file("boolgb_cli_basis.poly",
                             "ring 3 : x y z\nx*y + z\nx*z + z\ny*z + z\n");
  auto is_gb = run_command(cli("verify " + q(basis)));
  CHECK(is_gb.exit_code == 0);
  CHECK_THAT(is_gb.out, Catch::Matchers::ContainsSubstring("yes"));
  fs::remove(basis);
}

TEST_CASE("shidoku prints a basis, a grid, or a verdict") {
  auto gb = run_command(cli("shidoku 1234341221434321"));
  CHECK(gb.exit_code == 0);
  CHECK(split_lines(gb.out).size() == 64);

  auto solved = run_command(cli("shidoku 1234341221434321 --solve"));
  CHECK(solved.exit_code == 0);
  CHECK(solved.out == "1234\n3412\n2143\n4321\n");

  auto open = run_command(cli("shidoku ................ --solve"));
  CHECK(open.exit_code == 0);
  CHECK_THAT(open.out, Catch::Matchers::ContainsSubstring("multiple solutions"));

  auto contradictory = run_command(cli("shidoku 11.............. --solve"));
  CHECK(contradictory.exit_code == 0);
  CHECK(contradictory.out == "no solution\n");

  CHECK(run_command(cli("shidoku 123 --solve")).exit_code == 1);
}

TEST_CASE("fixpoints lists the basis and optionally the points") {
  auto plain = run_command(cli("fixpoints " + q(testdata_dir() / "models" / "and_pair.model")));
  CHECK(plain.exit_code == 0);
  CHECK_FALSE(plain.out.empty());

  auto enumerated = run_command(
      cli("fixpoints --enumerate " + q(testdata_dir() / "models" / "and_pair.model")));
  CHECK(enumerated.exit_code == 0);
  CHECK_THAT(enumerated.out, Catch::Matchers::ContainsSubstring("# fixed points: 2"));
  CHECK_THAT(enumerated.out, Catch::Matchers::ContainsSubstring("00"));
  CHECK_THAT(enumerated.out, Catch::Matchers::ContainsSubstring("11"));

  auto none = run_command(
      cli("fixpoints --enumerate " + q(testdata_dir() / "models" / "negate.model")));
  CHECK(none.exit_code == 0);
  CHECK_THAT(none.out, Catch::Matchers::ContainsSubstring("1\n# fixed points: 0"));
}

TEST_CASE("random is reproducible and emits a loadable file") {
  std::string args = "random --vars 8 --polys 4 --max-terms 5 --max-degree 3 --seed 7";
  auto a = run_command(cli(args));
  auto b = run_command(cli(args));
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == test_util::read_file(testdata_dir() / "golden" / "random_v8_p4_s7.poly"));

  fs::path emitted = temp_file("boolgb_cli_random.poly", a.out);
  CHECK(run_command(cli("gb " + q(emitted))).exit_code == 0);
  fs::remove(emitted);

  CHECK(run_command(cli("random --vars 8 --polys 4 --max-terms 5 --max-degree 9 --seed 7"))
            .exit_code == 1);
  CHECK(run_command(cli("random --vars 8 --polys 4")).exit_code == 1);
}

TEST_CASE("bench runs a directory and emits a table or JSON lines") {
  auto table = run_command(cli("bench " + q(testdata_dir() / "bench")));
  CHECK(table.exit_code == 0);
  std::vector<std::string> rows = split_lines(table.out);
  REQUIRE(rows.size() == 4);  // header + three files
  CHECK_THAT(rows[0], Catch::Matchers::ContainsSubstring("name"));
  CHECK_THAT(rows[1], Catch::Matchers::ContainsSubstring("and_pair"));
  CHECK_THAT(rows[2], Catch::Matchers::ContainsSubstring("rand8"));
  CHECK_THAT(rows[3], Catch::Matchers::ContainsSubstring("small_product"));

  auto json_run = run_command(cli("bench --json " + q(testdata_dir() / "bench")));
  CHECK(json_run.exit_code == 0);
  std::vector<std::string> lines = split_lines(json_run.out);
  REQUIRE(lines.size() == 3);
  std::vector<std::string> names;
  for (const std::string& line : lines) {
    nlohmann::json record = nlohmann::json::parse(line);
    REQUIRE(record.size() == 6);
    CHECK(record.at("name").is_string());
    CHECK(record.at("nvars").is_number_integer());
    CHECK(record.at("ngens").is_number_integer());
    CHECK(record.at("gb_size").is_number_integer());
    CHECK(record.at("wall_time").is_number_float());
    CHECK(record.at("verified").is_boolean());
    CHECK(record.at("verified").get<bool>());
    names.push_back(record.at("name").get<std::string>());
  }
  CHECK(names == std::vector<std::string>{"and_pair", "rand8", "small_product"});
}

TEST_CASE("bench handles empty and missing directories") {
  fs::path empty = fs::temp_directory_path() / "boolgb_bench_empty";
  fs::create_directory(empty);
  auto table = run_command(cli("bench " + q(empty)));
  CHECK(table.exit_code == 0);
  CHECK(split_lines(table.out).size() == 1);  // header only
  auto json_run = run_command(cli("bench --json " + q(empty)));
  CHECK(json_run.exit_code == 0);
  CHECK(json_run.out.empty());
  fs::remove(empty);

  CHECK(run_command(cli("bench /no/such/dir")).exit_code == 1);
}

TEST_CASE("exit codes separate success, bad input, failed verification") {
  CHECK(run_command(cli("gb " + q(testdata_dir() / "single_product.poly"))).exit_code == 0);
  CHECK(run_command(cli("gb " + q(testdata_dir() / "parse_error.poly"))).exit_code == 1);
  CHECK(run_command(cli("verify " + q(testdata_dir() / "single_product.poly"))).exit_code == 2);
}
