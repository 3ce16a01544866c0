// Integration checks for the bench CLI. argv[1] = CLI binary, argv[2] = data dir.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, ""};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_checks <bench-binary> <data-dir>\n";
    return 2;
  }
  std::string bench = argv[1];
  std::filesystem::path data = argv[2];

  auto scratch = std::filesystem::temp_directory_path() / "bench_cli_checks";
  std::filesystem::remove_all(scratch);
  std::filesystem::create_directories(scratch);
  std::filesystem::current_path(scratch);

  // eval prints shortest round-trip decimals
  {
    CmdResult r = run(bench + " eval sphere --point 0,0");
    expect(r.exit_code == 0 && r.out == "0\n", "eval sphere at the origin prints 0");
    r = run(bench + " eval 58 --point 0,-1");
    expect(r.out == "3\n", "eval goldstein-price prints 3");
    r = run(bench + " eval no-such-fn --point 0");
    expect(r.exit_code == 1, "unknown function exits 1");
    r = run(bench + " eval rump --point 0,0");
    expect(r.exit_code == 1, "singular evaluation exits 1");
    r = run(bench + " nonsense");
    expect(r.exit_code == 1, "unknown subcommand exits 1");
    r = run(bench + " eval sphere --badflag 1");
    expect(r.exit_code == 1, "unknown flag exits 1");
  }

  // stochastic evaluation honours seed and noise flags
  {
    CmdResult a = run(bench + " eval quartic --point 0,0 --noise sample --seed 9");
    CmdResult b = run(bench + " eval quartic --point 0,0 --noise sample --seed 9");
    CmdResult c = run(bench + " eval quartic --point 0,0 --noise sample --seed 10");
    expect(a.out == b.out, "sampled evaluation is seed-deterministic");
    expect(a.out != c.out, "different seeds draw different noise");
    CmdResult d = run(bench + " eval quartic --point 0,0");
    expect(d.out == "0\n", "suppressed quartic evaluates to 0");
  }

  // list
  {
    CmdResult r = run(bench + " list --modality unimodal --separability separable --format csv");
    expect(r.exit_code == 0, "list exits 0");
    for (const char* fn : {"\n138,", "\n139,", "\n140,", "\n141,"})
      expect(r.out.find(fn) != std::string::npos, std::string("list csv contains ") + fn);
    CmdResult j = run(bench + " list --dimension 2 --format json");
    auto doc = nlohmann::json::parse(j.out);
    bool has105 = false;
    for (const auto& rec : doc)
      if (rec["index"] == 105) has105 = true;
    expect(!has105, "list --dimension 2 excludes the scalable rosenbrock");
  }

  // grid
  {
    CmdResult r = run(bench + " grid sphere --x1 -1:1 --x2 -1:1 --resolution 2 --out g2.csv");
    expect(r.exit_code == 0, "grid exits 0");
    std::string g = slurp("g2.csv");
    expect(g == "x1,x2,f\n-1,-1,2\n-1,1,2\n1,-1,2\n1,1,2\n", "resolution-2 grid bytes");
    run(bench + " grid sphere --resolution 33 --out ga.csv");
    run(bench + " grid sphere --resolution 33 --out gb.csv");
    expect(slurp("ga.csv") == slurp("gb.csv"), "grid output is byte-stable");
    CmdResult bad = run(bench + " grid shekel-5 --resolution 3 --out bad.csv");
    expect(bad.exit_code == 1, "grid rejects non-2-D functions");

    // point parsing round-trips: evaluating a grid row reproduces its f text
    std::stringstream rows(slurp("ga.csv"));
    std::string line;
    std::getline(rows, line);  // header
    int checked = 0;
    while (std::getline(rows, line) && checked < 5) {
      size_t c2 = line.rfind(',');
      std::string pt = line.substr(0, c2);
      std::string f = line.substr(c2 + 1);
      CmdResult ev = run(bench + " eval sphere --point " + pt);
      expect(ev.out == f + "\n", "grid/eval round-trip for " + pt);
      ++checked;
    }
  }

  // check + info cache + expected errata
  {
    CmdResult ok = run(bench + " check beale");
    expect(ok.exit_code == 0, "check beale exits 0");
    CmdResult bad = run(bench + " check egg-holder");
    expect(bad.exit_code == 1, "check egg-holder exits 1 without expectations");
    CmdResult info = run(bench + " info egg-holder");
    expect(info.out.find("discrepant (cached)") != std::string::npos,
           "info shows the cached audit status");
    CmdResult all = run(bench + " check --all --expected-errata " +
                        (data / "expected_errata.json").string());
    expect(all.exit_code == 0, "check --all with the expected-errata file exits 0");
    CmdResult noexp = run(bench + " check --all");
    expect(noexp.exit_code == 1, "check --all without expectations exits 1");
    CmdResult csv = run(bench + " check beale --format csv");
    expect(csv.out.rfind("fn,point,claimed,evaluated,residual,refined,stationarity,status,note",
                         0) == 0,
           "check csv header");
  }

  // probe
  {
    CmdResult r = run(bench + " probe sphere --seed 1");
    auto v = nlohmann::json::parse(r.out);
    expect(v["verdict"] == "additively-separable", "probe sphere verdict");
    CmdResult m = run(bench + " probe matyas --seed 1");
    expect(nlohmann::json::parse(m.out)["verdict"] == "non-separable", "probe matyas verdict");
  }

  // run
  {
    std::ofstream mf("m.json");
    mf << R"({"functions":["sphere"],"optimizers":[{"name":"random_search"}],
              "budget":200,"seeds":[0,1,2]})";
    mf.close();
    run(bench + " run --manifest m.json --out r1.json");
    run(bench + " run --manifest m.json --out r2.json");
    expect(slurp("r1.json") == slurp("r2.json"), "run results are byte-stable");
    auto doc = nlohmann::json::parse(slurp("r1.json"));
    expect(doc.size() == 3, "run produces one result per seed");
    run(bench + " run --manifest m.json --out r.csv");
    expect(slurp("r.csv").rfind("fn,optimizer,dim,seed,best_value,evals,success\n", 0) == 0,
           "csv results header");
    std::ofstream badmf("bad.json");
    badmf << R"({"functions":["nope"],"optimizers":["random_search"],"budget":1,"seeds":[1]})";
    badmf.close();
    CmdResult bad = run(bench + " run --manifest bad.json");
    expect(bad.exit_code == 1, "invalid manifest exits 1");
  }

  // catalog
  {
    CmdResult a = run(bench + " catalog --format json");
    CmdResult b = run(bench + " catalog --format json");
    expect(a.out == b.out, "catalog json is byte-stable");
    expect(nlohmann::json::parse(a.out).size() == 175, "catalog json holds 175 records");
    CmdResult c = run(bench + " catalog --format csv");
    expect(c.out.rfind("index,slug,name,dimension,bounds,flags,optima,stochastic,note\n", 0) == 0,
           "catalog csv header");
  }

  if (g_failures == 0) {
    std::cout << "cli checks passed\n";
    return 0;
  }
  std::cerr << g_failures << " cli check(s) failed\n";
  return 1;
}
