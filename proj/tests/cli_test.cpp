#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "sdepth/errors.hpp"
#include "sdepth/report.hpp"
#include "support/oracles.hpp"

namespace sdepth {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = SDEPTH_GOLDEN_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// First line `# flags: ...` of a golden script.
std::string flag_line(const std::string& script) {
  const std::string prefix = "# flags: ";
  if (script.rfind(prefix, 0) != 0) return "";
  return script.substr(prefix.size(), script.find('\n') - prefix.size());
}

RunFlags flags_of(const std::string& line) {
  RunFlags flags;
  std::istringstream in(line);
  std::string word;
  while (in >> word) {
    std::string value;
    if (word == "--verify") {
      flags.verify = true;
    } else if (word == "--routes" && in >> value) {
      flags.routes = parse_routes(value);
    } else if (word == "--ext-bound" && in >> value) {
      flags.ext_bound = std::stoul(value);
    } else if (word == "--seed" && in >> value) {
      flags.seed = std::stoull(value);
    } else {
      throw std::runtime_error("bad flag line: " + line);
    }
  }
  return flags;
}

std::vector<fs::path> golden_scripts() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kGolden))
    if (e.path().extension() == ".sd") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

struct Process {
  int status;
  std::string out;
};

#ifdef SDEPTH_CLI_PATH
Process run_cli(const std::string& args) {
  const std::string cmd = std::string(SDEPTH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}
#endif

std::string without_timing(const std::string& jsonl) {
  std::istringstream in(jsonl);
  std::string line, out;
  while (std::getline(in, line))
    if (line.find("\"type\":\"timing\"") == std::string::npos) out += line + "\n";
  return out;
}

TEST(ParseScript, Examples) {
  Script s = parse_script("ring R = QQ[x,y]; ideal I = (x, y); sdepth(I, R_as_module, zero);");
  EXPECT_EQ(s.items.size(), 3u);
  EXPECT_EQ(s.command_count(), 1u);
  EXPECT_EQ(s.ideals.at("I").generators().size(), 2u);

  try {
    parse_script("ideal I = (x);");
    FAIL() << "expected a ScriptError";
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.pos(), (SourcePos{1, 1}));
    EXPECT_NE(e.message().find("no ring in scope"), std::string::npos);
  }

  s = parse_script("ring R = QQ[x,y]; module M = coker [[x], [y]];");
  EXPECT_EQ(s.modules.at("M").module.ambient_rank(), 2u);
  EXPECT_EQ(s.modules.at("M").module.relations().size(), 1u);
}

TEST(ParseScript, DoubleCaretPointsAtSecondCaret) {
  try {
    parse_script("ring R = QQ[x];\nideal I = (x^^2);");
    FAIL() << "expected a ScriptError";
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.pos(), (SourcePos{2, 14}));
    EXPECT_EQ(std::string(e.what()), "2:14: " + e.message());
  }
  Report r = run_text("ring R = QQ[x];\nideal I = (x^^2);", {});
  EXPECT_EQ(r.exit_code, 1);
  ASSERT_TRUE(r.parse_error.has_value());
  EXPECT_EQ(r.parse_error->pos, (SourcePos{2, 14}));
}

TEST(ParseScript, StaticErrors) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"ring R = QQ[x]; ring S = QQ[y];", "only one ring per script"},
      {"ring R = QQ[x]; ideal I = (y);", "y"},
      {"ring R = QQ[x,x];", "x"},
      {"ring R = FF(4)[x];", "4"},
      {"ring R = QQ[x]; ideal I = (x); sdepth(I, zero);", "sdepth expects 3 arguments, got 2"},
      {"ring R = QQ[x]; ideal I = (x); sdepth(I, J, zero);", "J"},
      {"ring R = QQ[x]; ideal I = (x); resolve(I, 9);", "at most 3"},
      {"ring R = QQ[x]; ideal I = (x); gb(I, I);", "gb expects 1 argument, got 2"},
      {"ring R = QQ[x,y]; complex D on 3 { facets: {1,2} }; module K = stanley_reisner(D);", "3"},
      {"ring R = QQ[x,y]; complex D on 2 { facets: {1,3} };", "3"},
      {"ring R = QQ[x]; ideal I = (1/0);", "0"},
      {"ring R = FF(3)[x]; ideal I = (1/3*x);", "3"},
      {"ring R = QQ[x]; ideal I = (x^70000);", "65535"},
      {"ring R = QQ[x]; ideal I = (x) @", "unexpected character"},
  };
  for (const auto& [text, fragment] : cases) {
    try {
      parse_script(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ScriptError& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << text << " -> " << e.what();
    }
  }
}

TEST(ParsePolynomial, RoundTripsPrinting) {
  auto r = make_ring(CoefField::rationals(), {"x", "y", "z"});
  for (const char* text : {"3*x^2*y - 1/2*z + 7", "(x + y)^3", "-x*(y - z)", "x^0 + 0*y"}) {
    Polynomial p = parse_polynomial(r, text);
    EXPECT_EQ(parse_polynomial(r, p.to_string()), p) << text;
  }
  EXPECT_EQ(parse_polynomial(r, "(x + y)^2"), parse_polynomial(r, "x^2 + 2*x*y + y^2"));
  EXPECT_THROW(parse_polynomial(r, "x +"), ScriptError);
}

TEST(ExitCode, Precedence) {
  Report r;
  EXPECT_EQ(exit_code_for(r), 0);
  auto with = [](std::initializer_list<const char*> statuses) {
    Report rep;
    for (const char* s : statuses) {
      CommandRecord c;
      c.status = s;
      rep.commands.push_back(c);
    }
    return exit_code_for(rep);
  };
  EXPECT_EQ(with({"ok", "ok"}), 0);
  EXPECT_EQ(with({"ok", "incomplete"}), 3);
  EXPECT_EQ(with({"incomplete", "error"}), 1);
  EXPECT_EQ(with({"error", "mismatch", "incomplete"}), 2);
  r.parse_error = ParseFailure{{1, 1}, "x"};
  EXPECT_EQ(exit_code_for(r), 1);
}

TEST(Run, ExitCodesFromScripts) {
  EXPECT_EQ(run_text("ring R = QQ[x,y]; ideal m = (x, y); sdepth(m, R_as_module, zero);", {}).exit_code, 0);
  RunFlags tight;
  tight.ext_bound = 1;
  EXPECT_EQ(run_text("ring R = QQ[x,y]; ideal m = (x, y); ext_scan(m, R_as_module, zero);", tight).exit_code, 3);
  RunFlags hochster;
  hochster.routes = {Route::Hochster};
  EXPECT_EQ(run_text("ring R = QQ[x,y]; ideal I = (x); sdepth(I, R_as_module, zero);", hochster).exit_code, 1);
  EXPECT_EQ(run_text("ring R = QQ[x", {}).exit_code, 1);
}

TEST(Report, RoundTripAndFixedPoint) {
  for (const auto& path : golden_scripts()) {
    const std::string text = slurp(path);
    Report r = run_text(text, flags_of(flag_line(text)));
    for (bool timing : {false, true}) {
      const std::string once = emit_report(r, timing);
      Report back = parse_report(once);
      if (!timing)
        for (auto& c : back.commands) c.wall_ms = r.commands[&c - back.commands.data()].wall_ms;
      EXPECT_EQ(back, r) << path;
      EXPECT_EQ(emit_report(back, timing), once) << path;
    }
  }
  EXPECT_THROW(parse_report("{\"type\":\"header\"}"), StructuralError);
  EXPECT_THROW(parse_report("not json"), StructuralError);
}

TEST(Report, GoldenOutputs) {
  const bool update = std::getenv("SDEPTH_UPDATE_GOLDEN") != nullptr;
  for (const auto& path : golden_scripts()) {
    const std::string text = slurp(path);
    const std::string actual = emit_report(run_text(text, flags_of(flag_line(text))));
    fs::path expected_path = path;
    expected_path.replace_extension(".jsonl");
    if (update) std::ofstream(expected_path, std::ios::binary) << actual;
    EXPECT_EQ(actual, slurp(expected_path)) << path;
  }
}

TEST(Report, SameSeedSameCanonicalOutput) {
  const std::string text = slurp(kGolden / "rp2_qq.sd");
  for (std::uint64_t seed : {0u, 7u}) {
    RunFlags flags;
    flags.seed = seed;
    EXPECT_EQ(emit_report(run_text(text, flags)), emit_report(run_text(text, flags)));
  }
  RunFlags other;
  other.seed = 99;
  Report a = run_text(text, {});
  Report b = run_text(text, other);
  ASSERT_EQ(a.commands.size(), b.commands.size());
  for (std::size_t i = 0; i < a.commands.size(); ++i)
    for (std::size_t k = 0; k < a.commands[i].routes.size(); ++k)
      EXPECT_EQ(a.commands[i].routes[k].value, b.commands[i].routes[k].value);
}

TEST(Fuzz, MutatedScriptsNeverCrash) {
  std::vector<std::string> corpus;
  for (const auto& path : golden_scripts()) corpus.push_back(slurp(path));
  const std::string alphabet = "xyzabc0123456789()[]{},;:=*^+-/<>#@ \n\t\\\"'QFRdimzeroideal";
  std::mt19937_64 rng(2024);
  std::size_t parsed = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    std::string s = corpus[testing::draw(rng, corpus.size())];
    const auto edits = 1 + testing::draw(rng, 4);
    for (std::uint64_t e = 0; e < edits && !s.empty(); ++e) {
      const auto at = testing::draw(rng, s.size());
      switch (testing::draw(rng, 4)) {
        case 0: s[at] = alphabet[testing::draw(rng, alphabet.size())]; break;
        case 1: s.insert(at, 1, alphabet[testing::draw(rng, alphabet.size())]); break;
        case 2: s.erase(at, 1 + testing::draw(rng, 8)); break;
        default: s.resize(at); break;
      }
    }
    try {
      parse_script(s);
      ++parsed;
    } catch (const ScriptError&) {
    }
  }
  EXPECT_GT(parsed, 0u);
}

#ifdef SDEPTH_CLI_PATH
TEST(Cli, MatchesLibraryOnGoldenScripts) {
  for (const auto& path : golden_scripts()) {
    const std::string text = slurp(path);
    Process p = run_cli("--json --script " + path.string() + " " + flag_line(text));
    fs::path expected_path = path;
    expected_path.replace_extension(".jsonl");
    EXPECT_EQ(without_timing(p.out), slurp(expected_path)) << path;
    EXPECT_EQ(p.status, parse_report(p.out).exit_code) << path;
  }
}

TEST(Cli, TableOutputStdinAndErrors) {
  Process p = run_cli("--script - < " + (kGolden / "full_depth.sd").string());
  EXPECT_EQ(p.status, 0);
  EXPECT_NE(p.out.find("consistent"), std::string::npos);
  EXPECT_NE(p.out.find("exit code 0"), std::string::npos);

  EXPECT_EQ(run_cli("--script " + (kGolden / "parse_error.sd").string()).status, 1);
  EXPECT_EQ(run_cli("--script /nonexistent/file.sd").status, 1);
  EXPECT_EQ(run_cli("--routes nope --script " + (kGolden / "full_depth.sd").string()).status, 1);
  EXPECT_EQ(run_cli("--ext-bound 1 --script " + (kGolden / "bound.sd").string()).status, 3);
}
#endif

}  // namespace
}  // namespace sdepth
