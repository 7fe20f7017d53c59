// Command-line front end: Groebner bases of polynomial files, Shidoku
// encoding and solving, fixed points of Boolean update maps, reproducible
// random ideals, benchmarking, and basis verification.
//
// Exit codes: 0 success, 1 unusable input (bad file, bad arguments),
// 2 a verification that was asked for failed. Results go to stdout,
// diagnostics to stderr.

#include "boolgb/buchberger.hpp"
#include "boolgb/encoders.hpp"
#include "boolgb/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace boolgb;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TimedRun {
  GroebnerBasis gb;
  BuchbergerStats stats;
  double seconds;
};

TimedRun run_gb(std::vector<Polynomial> gens, Ring ring) {
  BuchbergerStats stats;
  auto start = std::chrono::steady_clock::now();
  GroebnerBasis gb = groebner_basis(std::move(gens), std::move(ring), {}, &stats);
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::move(gb), stats, seconds};
}

void print_basis(const GroebnerBasis& gb) {
  for (const Polynomial& f : gb.elements) std::cout << to_string(f, gb.ring) << "\n";
}

void print_stats(const TimedRun& run) {
  const BuchbergerStats& s = run.stats;
  std::cerr << "pairs: created " << s.pairs_created << ", popped " << s.pairs_popped
            << ", dropped " << s.pairs_dropped_dead << "\n"
            << "skips: coprime " << s.coprime_skips << ", chain " << s.chain_skips << "\n"
            << "reductions to zero: " << s.reductions_to_zero << "\n"
            << "basis: inserted " << s.elements_inserted << ", retired "
            << s.elements_retired << ", final " << run.gb.elements.size() << "\n"
            << "time: " << run.seconds << " s\n";
}

int cmd_gb(const std::string& path, bool verify, bool stats) {
  PolySystem sys = parse_poly_file(read_file(path));
  TimedRun run = run_gb(sys.polys, sys.ring);
  print_basis(run.gb);
  if (stats) print_stats(run);
  if (verify) {
    bool ok = is_groebner_basis(run.gb.elements);
    if (ok && run.gb.ring.nvars() <= variety_default_cap)
      ok = varieties_equal(sys.polys, run.gb.elements, run.gb.ring);
    if (!ok) {
      std::cerr << "verification failed\n";
      return 2;
    }
    std::cerr << "verified\n";
  }
  return 0;
}

int cmd_shidoku(const std::string& clues, bool solve) {
  ShidokuPuzzle puzzle = parse_clues(clues);
  PolySystem sys = encode_shidoku(puzzle);
  TimedRun run = run_gb(sys.polys, sys.ring);
  if (!solve) {
    print_basis(run.gb);
    return 0;
  }
  if (run.gb.elements.size() == 1 && run.gb.elements[0].is_one()) {
    std::cout << "no solution\n";
    return 0;
  }
  if (auto grid = decode_shidoku_linear_basis(run.gb.elements)) {
    for (const auto& row : *grid) {
      for (int v : row) std::cout << v;
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << "multiple solutions (basis size " << run.gb.elements.size() << ")\n";
  return 0;
}

int cmd_fixpoints(const std::string& path, bool enumerate) {
  BooleanModel model = parse_model(read_file(path));
  std::vector<Polynomial> gens = fixed_point_ideal(model);
  TimedRun run = run_gb(gens, model.ring);
  print_basis(run.gb);
  if (enumerate) {
    if (model.ring.nvars() > variety_default_cap) {
      std::cerr << "error: " << model.ring.nvars()
                << " variables is too many to enumerate\n";
      return 1;
    }
    VarietyReport fixed = enumerate_variety(run.gb.elements, model.ring);
    std::cout << "# fixed points: " << fixed.points.size() << "\n";
    for (Point p : fixed.points) {
      for (int i = 1; i <= model.ring.nvars(); ++i)
        std::cout << ((p.bits >> model.ring.bit_of(i)) & 1);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_random(const RandomIdealParams& params) {
  PolySystem sys = random_ideal(params);
  std::cout << render_ring_header(sys.ring) << "\n"
            << "# random ideal: vars=" << params.nvars << " polys=" << params.npolys
            << " max-terms=" << params.max_terms << " max-degree=" << params.max_degree
            << " seed=" << params.seed << "\n";
  for (const Polynomial& f : sys.polys) std::cout << to_string(f, sys.ring) << "\n";
  return 0;
}

int cmd_bench(const std::string& dir, bool as_json) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::runtime_error("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    fs::path p = entry.path();
    if (p.extension() == ".poly" || p.extension() == ".model") files.push_back(p);
  }
  std::sort(files.begin(), files.end());

  if (!as_json)
    std::cout << std::left << std::setw(24) << "name" << std::right << std::setw(6)
              << "nvars" << std::setw(6) << "ngens" << std::setw(8) << "gb_size"
              << std::setw(12) << "wall_time" << "  verified\n";

  bool all_verified = true;
  for (const fs::path& file : files) {
    std::string name = file.stem().string();
    Ring ring(1);
    std::vector<Polynomial> gens;
    if (file.extension() == ".poly") {
      PolySystem sys = parse_poly_file(read_file(file.string()));
      ring = std::move(sys.ring);
      gens = std::move(sys.polys);
    } else {
      BooleanModel model = parse_model(read_file(file.string()));
      gens = fixed_point_ideal(model);
      ring = std::move(model.ring);
    }
    std::size_t ngens = gens.size();
    TimedRun run = run_gb(std::move(gens), ring);
    bool verified = is_groebner_basis(run.gb.elements);
    all_verified = all_verified && verified;
    if (as_json) {
      nlohmann::ordered_json record{{"name", name},
                                    {"nvars", ring.nvars()},
                                    {"ngens", ngens},
                                    {"gb_size", run.gb.elements.size()},
                                    {"wall_time", run.seconds},
                                    {"verified", verified}};
      std::cout << record.dump() << "\n";
    } else {
      std::cout << std::left << std::setw(24) << name << std::right << std::setw(6)
                << ring.nvars() << std::setw(6) << ngens << std::setw(8)
                << run.gb.elements.size() << std::setw(12) << std::fixed
                << std::setprecision(4) << run.seconds << "  "
                << (verified ? "yes" : "NO") << "\n";
    }
  }
  return all_verified ? 0 : 2;
}

int cmd_verify(const std::string& path) {
  PolySystem sys = parse_poly_file(read_file(path));
  bool ok = is_groebner_basis(sys.polys);
  std::cout << "Groebner basis: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases over the Boolean quotient ring F2[x1..xn]/<xi^2+xi>"};
  app.require_subcommand(1);

  std::string gb_file;
  bool gb_verify = false, gb_stats = false;
  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of a polynomial file");
  gb->add_option("file", gb_file, "polynomial file")->required();
  gb->add_flag("--verify", gb_verify, "check the basis property and, when small enough, the variety");
  gb->add_flag("--stats", gb_stats, "print run statistics to stderr");

  std::string shidoku_clues;
  bool shidoku_solve = false;
  CLI::App* shidoku = app.add_subcommand("shidoku", "encode a 4x4 Sudoku as an ideal");
  shidoku->add_option("clues", shidoku_clues, "16 cells from {1,2,3,4,.}, row-major")->required();
  shidoku->add_flag("--solve", shidoku_solve, "decode the basis instead of printing it");

  std::string fix_file;
  bool fix_enumerate = false;
  CLI::App* fixpoints =
      app.add_subcommand("fixpoints", "fixed-point ideal of a Boolean update map");
  fixpoints->add_option("file", fix_file, "model file")->required();
  fixpoints->add_flag("--enumerate", fix_enumerate, "also list the fixed points");

  RandomIdealParams params;
  CLI::App* random_cmd = app.add_subcommand("random", "emit a reproducible random ideal");
  random_cmd->add_option("--vars", params.nvars, "number of variables")->required();
  random_cmd->add_option("--polys", params.npolys, "number of polynomials")->required();
  random_cmd->add_option("--max-terms", params.max_terms, "terms per polynomial, at most")->required();
  random_cmd->add_option("--max-degree", params.max_degree, "monomial degree, at most")->required();
  random_cmd->add_option("--seed", params.seed, "stream seed (default 0)");

  std::string bench_dir;
  bool bench_json = false;
  CLI::App* bench = app.add_subcommand("bench", "run every .poly and .model file in a directory");
  bench->add_option("dir", bench_dir, "input directory")->required();
  bench->add_flag("--json", bench_json, "one JSON record per line instead of a table");

  std::string verify_file;
  CLI::App* verify = app.add_subcommand("verify", "check whether a file is already a Groebner basis");
  verify->add_option("file", verify_file, "polynomial file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gb) return cmd_gb(gb_file, gb_verify, gb_stats);
    if (*shidoku) return cmd_shidoku(shidoku_clues, shidoku_solve);
    if (*fixpoints) return cmd_fixpoints(fix_file, fix_enumerate);
    if (*random_cmd) return cmd_random(params);
    if (*bench) return cmd_bench(bench_dir, bench_json);
    if (*verify) return cmd_verify(verify_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
