#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "sdepth/errors.hpp"
#include "sdepth/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"S-depth of finitely presented modules, computed three ways"};
  std::string script_path;
  std::uint64_t seed = 0;
  std::optional<std::size_t> ext_bound;
  std::string routes;
  bool json = false;
  bool verify = false;
  app.add_option("--script", script_path, "Script file, or - for stdin")->required();
  app.add_option("--seed", seed, "Seed for the candidate pool")->default_val(0);
  app.add_option("--ext-bound", ext_bound, "Ext scan bound (default: number of variables + 1)");
  app.add_option("--routes", routes, "Comma list of seq, ext, hochster (or all)");
  app.add_flag("--json", json, "Machine-readable JSON Lines report on stdout");
  app.add_flag("--verify", verify, "Re-check d^2 = 0 and audit Groebner bases");
  CLI11_PARSE(app, argc, argv);

  sdepth::RunFlags flags;
  flags.seed = seed;
  flags.ext_bound = ext_bound;
  flags.verify = verify;
  try {
    if (!routes.empty()) flags.routes = sdepth::parse_routes(routes);
  } catch (const sdepth::StructuralError& e) {
    std::cerr << "sdepth: " << e.what() << "\n";
    return 1;
  }

  std::string text;
  if (script_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(script_path, std::ios::binary);
    if (!in) {
      std::cerr << "sdepth: cannot read " << script_path << "\n";
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  const sdepth::Report report = sdepth::run_text(text, flags);
  if (json) {
    std::cout << sdepth::emit_report(report, true);
  } else {
    std::cout << sdepth::render_table(report);
  }
  return report.exit_code;
}
