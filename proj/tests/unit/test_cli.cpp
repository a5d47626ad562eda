#include <gtest/gtest.h>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bandedge/version.hpp"
#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/csv.hpp"
#include "cli/svg.hpp"

using namespace bandedge;
using namespace bandedge::cli;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory per test.
fs::path scratch() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  const fs::path dir = fs::temp_directory_path() / "bandedge_cli_test" / info->test_suite_name() / info->name();
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int code;
  std::string output;
};

RunResult run_tool(const std::string& args, const fs::path& dir) {
  const fs::path log = dir / "tool_output.txt";
  const std::string cmd = std::string("\"") + BANDEDGE_TOOL_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(log)};
}

CsvTable read_table(const fs::path& p) {
  std::ifstream in(p);
  return read_csv(in);
}

std::string header_value(const CsvTable& t, const std::string& key) {
  for (const auto& [k, v] : header_values(t.comments))
    if (k == key) return v;
  return "";
}

// Decimal comma and digit grouping: what a careless printf/iostream would pick up.
struct CommaNumpunct : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};

class GlobalLocaleGuard {
 public:
  explicit GlobalLocaleGuard(const std::locale& loc) : saved_(std::locale::global(loc)) {}
  ~GlobalLocaleGuard() { std::locale::global(saved_); }

 private:
  std::locale saved_;
};

}  // namespace

TEST(Config, DefaultsAreTheFirstFigure) {
  const RunConfig cfg = preset("paper-fig1");
  EXPECT_EQ(cfg.A, 0.8);
  EXPECT_EQ(cfg.a, 1.0);
  EXPECT_EQ(cfg.t_min, 0.0);
  EXPECT_EQ(cfg.t_max, 5.9);
  EXPECT_FALSE(cfg.log_scale);
  EXPECT_NO_THROW(cfg.validate());
  const RunConfig fig2 = preset("paper-fig2");
  EXPECT_EQ(fig2.t_min, 3.2);
  EXPECT_EQ(fig2.t_max, 30.0);
  EXPECT_TRUE(fig2.log_scale);
  EXPECT_THROW(preset("paper-fig3"), ConfigError);
  EXPECT_EQ(preset_names().size(), 2u);
}

TEST(Config, ApplyTextAndOverrides) {
  RunConfig cfg;
  apply_text(cfg, "# comment\nA = 1.5\n  a=2 \n\nreservoir = special\ntime_unit = inv_a\nn_points = 17\nsvg = true\n");
  EXPECT_EQ(cfg.A, 1.5);
  EXPECT_EQ(cfg.a, 2.0);
  EXPECT_EQ(cfg.reservoir, ReservoirSelection::special);
  EXPECT_EQ(cfg.time_unit, TimeUnit::inv_a);
  EXPECT_EQ(cfg.n_points, 17u);
  EXPECT_TRUE(cfg.svg);
  apply(cfg, "A", "0.3");
  EXPECT_EQ(cfg.A, 0.3);
}

TEST(Config, ErrorsNameTheField) {
  RunConfig cfg;
  try {
    apply(cfg, "bogus", "1");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
  }
  try {
    apply_text(cfg, "A = 1\nA = nope\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  EXPECT_THROW(apply_text(cfg, "no equals sign\n"), ConfigError);
  EXPECT_THROW(apply(cfg, "n_points", "2.5"), ConfigError);
  EXPECT_THROW(apply(cfg, "svg", "maybe"), ConfigError);

  RunConfig bad;
  bad.a = -1.0;
  try {
    bad.validate();
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("a:", 0), 0u) << e.what();
  }
  RunConfig grid;
  grid.n_points = 2;
  grid.t_max = 0.0;
  EXPECT_THROW(grid.validate(), ConfigError);
  RunConfig state;
  state.rho10_0_re = 0.6;
  EXPECT_THROW(state.validate(), ConfigError);
  RunConfig regime;
  regime.strong_lambda = 30.0;
  EXPECT_THROW(regime.validate(), ConfigError);
  EXPECT_THROW(apply_file(cfg, "/nonexistent/bandedge.cfg"), IoError);
}

TEST(Config, UnitScaling) {
  RunConfig cfg;
  cfg.a = 4.0;
  const auto r = cfg.special_reservoir();
  EXPECT_DOUBLE_EQ(r.width(), 4.0);
  EXPECT_DOUBLE_EQ(r.amplitude(), 0.8 * 32.0);
  EXPECT_DOUBLE_EQ(r.omega0(), 2.0);
}

TEST(Numbers, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, 1e-16}) {
    EXPECT_EQ(parse_double(format_double(v), "v"), v);
  }
  EXPECT_EQ(format_double(0.2), "0.2");
  EXPECT_THROW(parse_double("1,5", "x"), ConfigError);
  EXPECT_THROW(parse_double("", "x"), ConfigError);
  EXPECT_THROW(parse_double("1.5abc", "x"), ConfigError);
}

TEST(Csv, RoundTripIsBitExact) {
  CsvTable t;
  t.comments = {"k = v", "note"};
  t.columns = {"t", "x"};
  t.rows = {{0.0, 1.0 / 3.0}, {1e-300, -7.25}};
  std::stringstream ss;
  write_csv(ss, t);
  const auto back = read_csv(ss);
  EXPECT_EQ(back.comments, t.comments);
  EXPECT_EQ(back.columns, t.columns);
  EXPECT_EQ(back.rows, t.rows);
  std::stringstream bad("t,x\n1,2,3\n");
  EXPECT_THROW(read_csv(bad), ConfigError);
}

TEST(Csv, IndependentOfGlobalLocale) {
  CsvTable t;
  t.columns = {"t", "x"};
  t.rows = {{1234.5, 0.25}};
  std::stringstream plain;
  write_csv(plain, t);
  GlobalLocaleGuard guard(std::locale(std::locale::classic(), new CommaNumpunct));
  std::stringstream ss;
  ss.imbue(std::locale());
  write_csv(ss, t);
  EXPECT_EQ(ss.str(), plain.str());
  EXPECT_EQ(ss.str(), "t,x\n1234.5,0.25\n");
  EXPECT_EQ(parse_double("1234.5", "x"), 1234.5);
}

TEST(Roots, JsonAgreesWithCsv) {
  const auto dir = scratch();
  RunConfig cfg;
  cfg.out = dir.string();
  cfg.json = true;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_roots(cfg, {}, out, err), kOk) << err.str();
  const auto j = nlohmann::json::parse(out.str());
  const auto csv = read_table(dir / "roots.csv");
  ASSERT_EQ(csv.rows.size(), 4u);
  for (int l = 0; l < 4; ++l) {
    EXPECT_EQ(j["roots"][l][0].get<double>(), csv.rows[l][1]);
    EXPECT_EQ(j["roots"][l][1].get<double>(), csv.rows[l][2]);
    EXPECT_EQ(j["residues"][l][0].get<double>(), csv.rows[l][3]);
    EXPECT_EQ(j["residues"][l][1].get<double>(), csv.rows[l][4]);
  }
  EXPECT_EQ(j["tau"].get<double>(), parse_double(header_value(csv, "tau"), "tau"));
  EXPECT_EQ(j["abs_D"].get<double>(), parse_double(header_value(csv, "abs_D"), "abs_D"));
  EXPECT_NEAR(j["tau"].get<double>(), 0.974, 1e-3);
  EXPECT_NEAR(j["abs_D"].get<double>(), 0.112, 1e-3);
  EXPECT_EQ(header_value(csv, "bandedge_version"), kVersion);
}

TEST(Roots, UnitsOfA) {
  // τ in 1/a and |D| in a^{-3/2} do not depend on a.
  RunConfig cfg;
  cfg.a = 3.0;
  cfg.json = true;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_roots(cfg, {}, out, err), kOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_NEAR(j["tau"].get<double>(), 0.973581726239411, 1e-12);
  EXPECT_NEAR(j["abs_D"].get<double>(), 0.1122419513282291, 1e-12);
}

TEST(Trajectory, FilesHeadersAndColumns) {
  const auto dir = scratch();
  RunConfig cfg;
  cfg.out = dir.string();
  cfg.n_points = 60;
  cfg.svg = true;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_trajectory(cfg, {}, out, err), kOk) << err.str();
  for (const char* model : {"special", "lorentzian_strong", "lorentzian_weak"}) {
    const auto t = read_table(dir / (std::string(model) + ".csv"));
    EXPECT_EQ(t.columns, (std::vector<std::string>{"t", "Re(G)", "Im(G)", "abs(G)", "rho11", "Re(rho10)", "Im(rho10)",
                                                   "abs(rho10)"}));
    ASSERT_EQ(t.rows.size(), 60u);
    EXPECT_EQ(header_value(t, "bandedge_version"), kVersion);
    EXPECT_EQ(header_value(t, "model"), model);
    EXPECT_EQ(header_value(t, "A"), "0.8");
    EXPECT_EQ(header_value(t, "n_points"), "60");
    EXPECT_EQ(t.rows[0][7], 0.2);
    for (const auto& r : t.rows) {
      EXPECT_NEAR(r[3], std::hypot(r[1], r[2]), 1e-15);
      EXPECT_NEAR(r[7], 0.2 * r[3], 1e-15);
      EXPECT_NEAR(r[4], 0.5 * r[3] * r[3], 1e-15);
    }
  }
  const std::string svg = slurp(dir / "rho10.svg");
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("bandedge_version"), std::string::npos);
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '\r'), 0);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Trajectory, BitStableAcrossRuns) {
  const auto dir = scratch();
  RunConfig cfg;
  cfg.n_points = 80;
  cfg.svg = true;
  std::ostringstream out, err;
  cfg.out = (dir / "a").string();
  fs::create_directories(cfg.out);
  ASSERT_EQ(cmd_trajectory(cfg, {}, out, err), kOk);
  cfg.out = (dir / "b").string();
  fs::create_directories(cfg.out);
  ASSERT_EQ(cmd_trajectory(cfg, {}, out, err), kOk);
  for (const char* f : {"special.csv", "lorentzian_strong.csv", "lorentzian_weak.csv"}) {
    // Only the out entry differs.
    auto a = slurp(dir / "a" / f), b = slurp(dir / "b" / f);
    a.erase(a.find("# out = "), a.find('\n', a.find("# out = ")) - a.find("# out = "));
    b.erase(b.find("# out = "), b.find('\n', b.find("# out = ")) - b.find("# out = "));
    EXPECT_EQ(a, b) << f;
  }
}

TEST(Trajectory, OracleWarningsGoToTheHeader) {
  const auto dir = scratch();
  RunConfig cfg;
  cfg.out = dir.string();
  cfg.reservoir = ReservoirSelection::special;
  cfg.n_points = 40;
  cfg.oracle_laplace = true;
  cfg.t_min = 3.2;
  cfg.t_max = 30.0;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_trajectory(cfg, {}, out, err), kOk);
  const auto t = read_table(dir / "special.csv");
  bool warned = false;
  for (const auto& c : t.comments) warned |= c.rfind("warning = ", 0) == 0;
  EXPECT_TRUE(warned);
  EXPECT_FALSE(fs::exists(dir / "lorentzian_strong.csv"));
}

TEST(Svg, Deterministic) {
  PlotSpec spec;
  spec.title = "t";
  spec.log_y = true;
  spec.series.push_back({"s", {1, 2, 3}, {1.0, 0.1, 0.0}});
  const auto a = render_svg(spec);
  EXPECT_EQ(a, render_svg(spec));
  EXPECT_NE(a.find("<polyline"), std::string::npos);
}

TEST(Tool, ExitCodes) {
  const auto dir = scratch();
  EXPECT_EQ(run_tool("roots --set a=-1", dir).code, 2);
  EXPECT_NE(run_tool("roots --set a=-1", dir).output.find("a:"), std::string::npos);
  EXPECT_EQ(run_tool("trajectory --set n_points=2 --set t_max=0 --out \"" + dir.string() + "\"", dir).code, 2);
  EXPECT_EQ(run_tool("roots --set nonsense=1", dir).code, 2);
  EXPECT_EQ(run_tool("roots --preset paper-fig9", dir).code, 2);
  EXPECT_EQ(run_tool("roots --config /nonexistent/x.cfg", dir).code, 3);
  EXPECT_EQ(run_tool("trajectory --out /proc/bandedge-cannot-write", dir).code, 3);
  EXPECT_EQ(run_tool("roots --preset paper-fig2", dir).code, 0);
}

TEST(Tool, ConfigFileAndFlagOverride) {
  const auto dir = scratch();
  std::ofstream(dir / "run.cfg") << "A = 2\nreservoir = special\n";
  const auto r = run_tool("roots --json --config \"" + (dir / "run.cfg").string() + "\" --set A=0.8", dir);
  ASSERT_EQ(r.code, 0) << r.output;
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["config"]["A"], "0.8");
  EXPECT_EQ(j["config"]["reservoir"], "special");
}

TEST(Tool, VerifyQuickPasses) {
  const auto dir = scratch();
  const auto start = std::chrono::steady_clock::now();
  const auto r = run_tool("verify --quick", dir);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(r.code, 0) << r.output;
  EXPECT_EQ(r.output.find("FAIL"), std::string::npos) << r.output;
  RecordProperty("verify_quick_seconds", std::to_string(secs));
}

TEST(Tool, InjectedFaultFailsVerify) {
  const auto dir = scratch();
  const auto r = run_tool("verify --quick --inject-fault residue", dir);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.output.find("FAIL  residue sum identity"), std::string::npos) << r.output;
}
