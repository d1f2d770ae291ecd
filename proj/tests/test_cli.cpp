#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

std::string cli_path() { return ZETALAB_CLI_PATH; }

int run(const std::string& args) {
  const std::string cmd = "\"" + cli_path() + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path tmp_file(const std::string& tag) {
  return fs::temp_directory_path() /
         ("zetalab_cli_test_" + std::to_string(static_cast<long>(::getpid())) + "_" + tag);
}

struct TmpFile {
  fs::path path;
  explicit TmpFile(const std::string& tag) : path(tmp_file(tag)) {}
  ~TmpFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
};

}  // namespace

TEST_CASE("exit codes: usage and domain errors give 1") {
  CHECK(run("bogus") == 1);
  CHECK(run("") == 1);
  CHECK(run("scan 341 --sigma-min 0.9 --n-sigma 4 --n-t 4") == 1);
  CHECK(run("zeta") == 1);  // --sigma is required
  CHECK(run("--help") == 0);
}

TEST_CASE("table CSV schema and values") {
  TmpFile out("table.csv");
  REQUIRE(run("table --limit 10 --out " + out.path.string()) == 0);
  const std::string csv = slurp(out.path);
  CHECK(csv.rfind("n,mangoldt,mobius,liouville,is_prime\n", 0) == 0);
  CHECK(csv.find("\n6,0,1,1,0\n") != std::string::npos);   // mu(6)=1, lambda(6)=1
  CHECK(csv.find("\n7,") != std::string::npos);
  CHECK(csv.find("\n4,0.693147180559945,0,1,0\n") != std::string::npos);  // Lambda(4)=log 2
}

TEST_CASE("zeta JSON keys") {
  TmpFile out("zeta.json");
  REQUIRE(run("zeta --sigma 2 --t 0 --out " + out.path.string()) == 0);
  const std::string js = slurp(out.path);
  for (const char* key : {"\"value\"", "\"re\"", "\"im\"", "\"err_bound\"", "\"n_cutoff\"",
                          "\"extra_terms\""})
    CHECK(js.find(key) != std::string::npos);
  CHECK(js.find("1.64493406684823") != std::string::npos);
}

TEST_CASE("quad and scan report schemas") {
  TmpFile kq("kernel.json");
  REQUIRE(run("kernel --u 0.5 --k 2 --T 500 --out " + kq.path.string()) == 0);
  const std::string kjs = slurp(kq.path);
  for (const char* key : {"\"estimate\"", "\"truncation_tail_bound\"",
                          "\"discretization_estimate\"", "\"evaluations\""})
    CHECK(kjs.find(key) != std::string::npos);

  TmpFile sq("scan.json");
  REQUIRE(run("scan nonvanish --t-min 2.72 --t-max 30 --n 50 --out " + sq.path.string()) == 0);
  const std::string sjs = slurp(sq.path);
  for (const char* key : {"\"grid\"", "\"extremum\"", "\"arg_extremum\"",
                          "\"empirical_constant\"", "\"samples\""})
    CHECK(sjs.find(key) != std::string::npos);
}

TEST_CASE("pnt-table CSV header") {
  TmpFile out("pnt.csv");
  REQUIRE(run("pnt-table --limits 1e3,1e4 --out " + out.path.string()) == 0);
  const std::string csv = slurp(out.path);
  CHECK(csv.rfind("x,psi_over_x,psi1_ratio,theta_ratio\n", 0) == 0);
}

TEST_CASE("dirichlet lambda-identity emits a small deviation") {
  TmpFile out("lam.json");
  REQUIRE(run("dirichlet lambda-identity --limit 2000 --out " + out.path.string()) == 0);
  const std::string js = slurp(out.path);
  CHECK(js.find("\"max_abs_deviation\"") != std::string::npos);
}

TEST_CASE("same argv twice produces byte-identical reports") {
  TmpFile a("det_a.json"), b("det_b.json");
  const std::string args = "scan nonvanish --t-min 2.72 --t-max 40 --n 300";
  REQUIRE(run(args + " --out " + a.path.string()) == 0);
  REQUIRE(run(args + " --out " + b.path.string()) == 0);
  const std::string ba = slurp(a.path), bb = slurp(b.path);
  REQUIRE(!ba.empty());
  CHECK(ba == bb);

  // thread count must not change the bytes either (fixed chunk layout)
  TmpFile c("det_c.json");
  REQUIRE(run(args + " --threads 1 --out " + c.path.string()) == 0);
  CHECK(slurp(c.path) == ba);
}

TEST_CASE("reconstruct emits the extended quad report and integrand dump") {
  TmpFile out("rec.json"), dump("rec.csv");
  REQUIRE(run("reconstruct --x 10 --T 200 --sieve-limit 100 --dump-integrand " +
              dump.path.string() + " --out " + out.path.string()) == 0);
  const std::string js = slurp(out.path);
  for (const char* key : {"\"estimate\"", "\"lhs_sieve\"", "\"abs_deviation\""})
    CHECK(js.find(key) != std::string::npos);
  const std::string csv = slurp(dump.path);
  CHECK(csv.rfind("t,re_h,im_h\n", 0) == 0);
}

TEST_CASE("manifest records outputs and checksums") {
  TmpFile out("zeta.json"), man("manifest.json");
  REQUIRE(run("zeta --sigma 2 --t 1 --out " + out.path.string() + " --manifest " +
              man.path.string()) == 0);
  const std::string js = slurp(man.path);
  for (const char* key : {"\"command_line\"", "\"config\"", "\"version\"", "\"wall_time_s\"",
                          "\"outputs\"", "\"fnv1a64\""})
    CHECK(js.find(key) != std::string::npos);
}

TEST_CASE("config file values are overridden by flags") {
  TmpFile cfg("cfg.ini"), out("cfg_zeta.json");
  {
    std::ofstream f(cfg.path);
    f << "tol=1e-6\nthreads=1\n";
  }
  REQUIRE(run("zeta --sigma 2 --t 0 --config " + cfg.path.string() + " --out " +
              out.path.string()) == 0);
  CHECK(!slurp(out.path).empty());
}

TEST_CASE("certify --quick passes and is byte-deterministic") {
  TmpFile a("cert_a.txt"), b("cert_b.txt");
  CHECK(run("certify --quick --out " + a.path.string()) == 0);
  CHECK(run("certify --quick --out " + b.path.string()) == 0);
  const std::string ra = slurp(a.path), rb = slurp(b.path);
  REQUIRE(!ra.empty());
  CHECK(ra == rb);
  CHECK(ra.find("PASS basel") != std::string::npos);
  CHECK(ra.find("SUMMARY") != std::string::npos);
  CHECK(ra.find("FAIL") == std::string::npos);
}
