#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "econthermo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = econthermo::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("econthermo_cli_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("carnot default scenario") {
  const auto dir = fresh_dir("carnot");
  const auto r = run({"carnot", "--out", dir.string(), "--svg"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eta = 0.5\n") != std::string::npos);
  CHECK(r.out.find("W = 1\n") != std::string::npos);
  CHECK(r.out.find("validation = pass") != std::string::npos);
  for (const char* f : {"cycle_qp.csv", "cycle_ei.csv", "cycle.json", "cycle_qp.svg", "cycle_ei.svg"}) {
    CHECK(fs::exists(dir / f));
  }
}

TEST_CASE("carnot --reverse negates the energies") {
  const auto dir = fresh_dir("carnot_rev");
  const auto fwd = run({"carnot", "--out", dir.string()});
  const auto rev = run({"carnot", "--reverse", "--out", dir.string()});
  CHECK(rev.code == 0);
  CHECK(rev.out.find("W = -1\n") != std::string::npos);
  CHECK(rev.out.find("q_C = -1\n") != std::string::npos);
  CHECK(rev.out.find("counterclockwise") != std::string::npos);
}

TEST_CASE("malformed input exits 1 and writes nothing") {
  const auto dir = fresh_dir("bad");
  SUBCASE("domain error") {
    const auto r = run({"carnot", "--I-hot", "1", "--I-cold", "1", "--out", dir.string()});
    CHECK(r.code == 1);
    CHECK_FALSE(fs::exists(dir));
  }
  SUBCASE("bad f") {
    CHECK(run({"carnot", "--f", "4", "--out", dir.string()}).code == 1);
    CHECK_FALSE(fs::exists(dir));
  }
  SUBCASE("malformed config file") {
    const fs::path cfg = fs::temp_directory_path() / "econthermo_bad.ini";
    std::ofstream(cfg) << "[carnot]\nI-hot = banana\n";
    CHECK(run({"carnot", "--config", cfg.string(), "--out", dir.string()}).code == 1);
    std::ofstream(cfg) << "[carnot]\nunknown_key = 3\n";
    CHECK(run({"carnot", "--config", cfg.string(), "--out", dir.string()}).code == 1);
    CHECK_FALSE(fs::exists(dir));
  }
  SUBCASE("unknown command and flags") {
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"carnot", "--bogus"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"vdw"}).code == 1);
  }
}

TEST_CASE("config file with flag override") {
  const auto dir = fresh_dir("cfg");
  const fs::path cfg = fs::temp_directory_path() / "econthermo_ok.ini";
  std::ofstream(cfg) << "[carnot]\nI-hot = 4\nI-cold = 1\nf = 5\n";
  const auto r = run({"carnot", "--config", cfg.string(), "--I-cold", "2", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("eta = 0.5\n") != std::string::npos);
  const auto r2 = run({"carnot", "--config", cfg.string(), "--out", dir.string()});
  CHECK(r2.out.find("eta = 0.75\n") != std::string::npos);
}

TEST_CASE("vdw subcommands") {
  const auto dir = fresh_dir("vdw");
  const auto crit = run({"vdw", "critical"});
  CHECK(crit.code == 0);
  CHECK(crit.out.find("P_c = 1\nQ_c = 3\nI_c = 1\n") != std::string::npos);

  const auto mx = run({"vdw", "maxwell", "--I-reduced", "0.9"});
  CHECK(mx.code == 0);
  CHECK(mx.out.find("\"P_sat_reduced\": 0.64699835187") != std::string::npos);

  const auto super = run({"vdw", "maxwell", "--I-reduced", "1.1"});
  CHECK(super.code == 1);
  CHECK(super.err.find("supercritical") != std::string::npos);

  CHECK(run({"vdw", "isotherm", "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "vdw_isotherm_raw.csv"));
  CHECK(fs::exists(dir / "vdw_isotherm_corrected.csv"));
  CHECK(run({"vdw", "surface", "--out", dir.string()}).code == 0);
  CHECK(slurp(dir / "vdw_surface.csv").rfind("Q,P,I\n", 0) == 0);

  CHECK(run({"vdw", "--a", "-1", "critical"}).code == 1);
}

TEST_CASE("catastrophe command") {
  const auto dir = fresh_dir("cat");
  const auto c = run({"catastrophe"});
  CHECK(c.code == 0);
  CHECK(c.out.find("x = 0\nalpha = 0\nbeta = 0\n") != std::string::npos);

  const auto chk = run({"catastrophe", "--check", "--samples", "1000"});
  CHECK(chk.code == 0);
  CHECK(chk.out.find("surface_check = pass") != std::string::npos);

  CHECK(run({"catastrophe", "--grid", "--grid-points", "0", "--out", dir.string()}).code == 1);
  CHECK_FALSE(fs::exists(dir));
  CHECK(run({"catastrophe", "--grid", "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "cusp_bifurcation.csv"));

  CHECK(run({"catastrophe", "--P", "1", "--Q", "1"}).code == 1);
  CHECK(run({"catastrophe", "--P", "1", "--Q", "1", "--I", "1"}).code == 0);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("carnot") != std::string::npos);
}
