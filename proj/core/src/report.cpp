#include "sdepth/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "sdepth/errors.hpp"

namespace sdepth {

using Json = nlohmann::ordered_json;

std::vector<Route> parse_routes(std::string_view text) {
  std::vector<Route> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view name = text.substr(start, end - start);
    if (name == "seq") {
      out.push_back(Route::Sequence);
    } else if (name == "ext") {
      out.push_back(Route::Ext);
    } else if (name == "hochster") {
      out.push_back(Route::Hochster);
    } else if (name == "all") {
      out.insert(out.end(), {Route::Sequence, Route::Ext, Route::Hochster});
    } else {
      throw StructuralError("unknown route '" + std::string(name) + "' (expected seq, ext, hochster or all)");
    }
    start = end + 1;
  }
  return out;
}

namespace {

std::string matrix_string(const PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols; ++c) out += (c ? ", " : "") + m.at(r, c).to_string();
    out += "]";
  }
  return out + "]";
}

struct Execution {
  const Script& script;
  const RunFlags& flags;

  std::size_t bound() const { return flags.ext_bound.value_or(script.ring->nvars() + 1); }

  void sdepth(CommandRecord& rec, const Item& item) {
    const Ideal& ideal = script.ideals.at(item.args[0].text);
    const ModuleBinding& mod = script.modules.at(item.args[1].text);
    DepthOptions opts;
    opts.routes = flags.routes;
    opts.seed = flags.seed;
    opts.bound = bound();
    if (mod.complex) opts.complex = &script.complexes.at(*mod.complex);
    rec.seed = flags.seed;
    rec.bound = bound();
    DepthReport report = s_depth(ideal, mod.module, script.serre_argument(item.args[2]), opts);
    rec.instance = report.instance;
    for (const auto& o : report.routes) {
      RouteRecord r{route_name(o.route), std::nullopt, o.error, {}, std::nullopt};
      if (o.value) r.value = o.value->to_string();
      if (o.certificate) {
        for (const auto& p : o.certificate->elements()) r.sequence.push_back(p.to_string());
        if (o.certificate->maximality) r.maximality = o.certificate->maximality->to_string();
      }
      rec.routes.push_back(std::move(r));
    }
    rec.verdict = verdict_name(report.verdict);
    rec.details = report.details;
    if (report.verdict == DepthReport::Verdict::Mismatch) rec.status = "mismatch";
    if (report.verdict == DepthReport::Verdict::Inconclusive) rec.status = "incomplete";
  }

  void ext_scan_cmd(CommandRecord& rec, const Item& item) {
    const Ideal& ideal = script.ideals.at(item.args[0].text);
    const PresentedModule& m = script.modules.at(item.args[1].text).module;
    ExtCalculator calc(ideal);
    rec.bound = bound();
    ScanResult result = ext_scan(calc, m, script.serre_argument(item.args[2]), {bound(), true});
    rec.value = result.to_string();
    const std::size_t last = std::min(result.is_finite() ? result.value() : bound(), calc.max_length() - 1);
    for (std::size_t i = 0; i <= last; ++i) rec.ext_modules.push_back(calc.ext(i, m).to_string());
    if (result.kind() == ScanResult::Kind::BoundExceeded) rec.status = "incomplete";
  }

  void seq_build(CommandRecord& rec, const Item& item) {
    const Ideal& ideal = script.ideals.at(item.args[0].text);
    const PresentedModule& m = script.modules.at(item.args[1].text).module;
    rec.seed = flags.seed;
    MaximalSequence result = extend_to_maximal({}, m, ideal, script.serre_argument(item.args[2]), flags.seed);
    rec.value = result.value.to_string();
    for (const auto& p : result.certificate.elements()) rec.sequence.push_back(p.to_string());
    if (result.certificate.maximality) rec.maximality = result.certificate.maximality->to_string();
  }

  void hochster(CommandRecord& rec, const Item& item) {
    const SimplicialComplex& d = script.complexes.at(item.args[0].text);
    rec.bound = bound();
    ScanResult result = hochster_depth(d, script.ring->field(), bound());
    rec.value = result.to_string();
    if (result.kind() == ScanResult::Kind::BoundExceeded) rec.status = "incomplete";
  }

  void gb(CommandRecord& rec, const Item& item) {
    for (const auto& p : script.ideals.at(item.args[0].text).groebner().polynomials())
      rec.basis.push_back(p.to_string());
  }

  void resolve(CommandRecord& rec, const Item& item) {
    FreeResolution res = free_resolution(script.ideals.at(item.args[0].text), std::stoul(item.args[1].text));
    if (!res.is_complex()) throw ContractError("resolution differentials do not compose to zero");
    rec.ranks = res.ranks;
    for (const auto& d : res.differentials) rec.differentials.push_back(matrix_string(d));
  }

  CommandRecord execute(const Item& item, std::size_t index) {
    CommandRecord rec;
    rec.index = index;
    rec.command = item.name;
    rec.pos = item.pos;
    for (const auto& a : item.args) rec.args.push_back(a.text);
    const auto start = std::chrono::steady_clock::now();
    auto failed = [&](const char* kind, const char* what, const char* status = "error") {
      rec.status = status;
      rec.error_kind = kind;
      rec.error = what;
    };
    try {
      switch (item.command) {
        case CommandKind::SDepth:
          sdepth(rec, item);
          break;
        case CommandKind::ExtScan:
          ext_scan_cmd(rec, item);
          break;
        case CommandKind::SeqBuild:
          seq_build(rec, item);
          break;
        case CommandKind::Hochster:
          hochster(rec, item);
          break;
        case CommandKind::Gb:
          gb(rec, item);
          break;
        case CommandKind::Resolve:
          resolve(rec, item);
          break;
      }
    } catch (const SearchIncomplete& e) {
      failed("search_incomplete", e.what(), "incomplete");
    } catch (const ContractError& e) {
      failed("contract", e.what());
    } catch (const StructuralError& e) {
      failed("structural", e.what());
    } catch (const DomainError& e) {
      failed("domain", e.what());
    } catch (const std::exception& e) {
      failed("internal", e.what());
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
  }
};

Report header_for(const RunFlags& flags) {
  Report report;
  report.seed = flags.seed;
  report.ext_bound = flags.ext_bound;
  for (Route r : flags.routes) report.routes.push_back(route_name(r));
  report.verify = flags.verify;
  return report;
}

class VerificationScope {
 public:
  explicit VerificationScope(bool on) : previous_(verification_enabled()) { set_verification(on || previous_); }
  ~VerificationScope() { set_verification(previous_); }
  VerificationScope(const VerificationScope&) = delete;
  VerificationScope& operator=(const VerificationScope&) = delete;

 private:
  bool previous_;
};

}  // namespace

int exit_code_for(const Report& report) {
  if (report.parse_error) return 1;
  auto any = [&](const char* status) {
    return std::any_of(report.commands.begin(), report.commands.end(),
                       [&](const CommandRecord& c) { return c.status == status; });
  };
  if (any("mismatch")) return 2;
  if (any("error")) return 1;
  if (any("incomplete")) return 3;
  return 0;
}

Report run(const Script& script, const RunFlags& flags) {
  VerificationScope scope(flags.verify);
  Report report = header_for(flags);
  if (script.ring) report.ring = script.ring->description();
  Execution exec{script, flags};
  std::size_t index = 0;
  for (const auto& item : script.items)
    if (item.kind == ItemKind::Command) report.commands.push_back(exec.execute(item, ++index));
  report.exit_code = exit_code_for(report);
  return report;
}

Report run_text(std::string_view text, const RunFlags& flags) {
  try {
    Script script = parse_script(text);
    return run(script, flags);
  } catch (const ScriptError& e) {
    Report report = header_for(flags);
    report.parse_error = ParseFailure{e.pos(), e.message()};
    report.exit_code = 1;
    return report;
  }
}

std::string emit_report(const Report& report, bool timing) {
  std::string out;
  auto line = [&](const Json& j) { out += j.dump() + "\n"; };

  Json header;
  header["type"] = "header";
  header["format"] = "sdepth-report";
  header["version"] = 1;
  header["seed"] = report.seed;
  header["ext_bound"] = report.ext_bound ? Json(*report.ext_bound) : Json(nullptr);
  header["routes"] = report.routes;
  header["verify"] = report.verify;
  header["ring"] = report.ring;
  line(header);

  if (report.parse_error) {
    Json err;
    err["type"] = "parse_error";
    err["line"] = report.parse_error->pos.line;
    err["column"] = report.parse_error->pos.column;
    err["message"] = report.parse_error->message;
    line(err);
  }

  for (const auto& c : report.commands) {
    Json j;
    j["type"] = "command";
    j["index"] = c.index;
    j["command"] = c.command;
    j["line"] = c.pos.line;
    j["column"] = c.pos.column;
    j["args"] = c.args;
    j["status"] = c.status;
    if (!c.error_kind.empty()) j["error_kind"] = c.error_kind;
    if (!c.error.empty()) j["error"] = c.error;
    if (c.value) j["value"] = *c.value;
    if (c.seed) j["seed"] = *c.seed;
    if (c.bound) j["bound"] = *c.bound;
    if (!c.instance.empty()) j["instance"] = c.instance;
    if (!c.routes.empty()) {
      Json routes = Json::array();
      for (const auto& r : c.routes) {
        Json jr;
        jr["route"] = r.route;
        jr["value"] = r.value ? Json(*r.value) : Json(nullptr);
        if (!r.error.empty()) jr["error"] = r.error;
        if (!r.sequence.empty()) jr["sequence"] = r.sequence;
        if (r.maximality) jr["maximality"] = *r.maximality;
        routes.push_back(std::move(jr));
      }
      j["routes"] = std::move(routes);
    }
    if (!c.verdict.empty()) j["verdict"] = c.verdict;
    if (!c.details.empty()) j["details"] = c.details;
    if (!c.sequence.empty()) j["sequence"] = c.sequence;
    if (c.maximality) j["maximality"] = *c.maximality;
    if (!c.basis.empty()) j["basis"] = c.basis;
    if (!c.ranks.empty()) j["ranks"] = c.ranks;
    if (!c.differentials.empty()) j["differentials"] = c.differentials;
    if (!c.ext_modules.empty()) j["ext_modules"] = c.ext_modules;
    line(j);
  }

  Json summary;
  summary["type"] = "summary";
  summary["commands"] = report.commands.size();
  summary["exit_code"] = report.exit_code;
  line(summary);

  if (timing) {
    Json t;
    t["type"] = "timing";
    Json walls = Json::array();
    for (const auto& c : report.commands) walls.push_back(c.wall_ms);
    t["wall_ms"] = std::move(walls);
    line(t);
  }
  return out;
}

namespace {

template <class T>
void read_optional(const Json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

template <class T>
void read_plain(const Json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

Report parse_report(std::string_view text) {
  Report report;
  bool saw_header = false;
  bool saw_summary = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      const Json j = Json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        if (j.at("format") != "sdepth-report" || j.at("version") != 1) throw StructuralError("unsupported format");
        report.seed = j.at("seed").get<std::uint64_t>();
        read_optional(j, "ext_bound", report.ext_bound);
        report.routes = j.at("routes").get<std::vector<std::string>>();
        report.verify = j.at("verify").get<bool>();
        report.ring = j.at("ring").get<std::string>();
        saw_header = true;
      } else if (type == "parse_error") {
        report.parse_error = ParseFailure{{j.at("line").get<std::size_t>(), j.at("column").get<std::size_t>()},
                                          j.at("message").get<std::string>()};
      } else if (type == "command") {
        CommandRecord c;
        c.index = j.at("index").get<std::size_t>();
        c.command = j.at("command").get<std::string>();
        c.pos = {j.at("line").get<std::size_t>(), j.at("column").get<std::size_t>()};
        c.args = j.at("args").get<std::vector<std::string>>();
        c.status = j.at("status").get<std::string>();
        read_plain(j, "error_kind", c.error_kind);
        read_plain(j, "error", c.error);
        read_optional(j, "value", c.value);
        read_optional(j, "seed", c.seed);
        read_optional(j, "bound", c.bound);
        read_plain(j, "instance", c.instance);
        if (j.contains("routes")) {
          for (const auto& jr : j.at("routes")) {
            RouteRecord r;
            r.route = jr.at("route").get<std::string>();
            read_optional(jr, "value", r.value);
            read_plain(jr, "error", r.error);
            read_plain(jr, "sequence", r.sequence);
            read_optional(jr, "maximality", r.maximality);
            c.routes.push_back(std::move(r));
          }
        }
        read_plain(j, "verdict", c.verdict);
        read_plain(j, "details", c.details);
        read_plain(j, "sequence", c.sequence);
        read_optional(j, "maximality", c.maximality);
        read_plain(j, "basis", c.basis);
        read_plain(j, "ranks", c.ranks);
        read_plain(j, "differentials", c.differentials);
        read_plain(j, "ext_modules", c.ext_modules);
        report.commands.push_back(std::move(c));
      } else if (type == "summary") {
        if (j.at("commands").get<std::size_t>() != report.commands.size())
          throw StructuralError("summary command count disagrees with the command lines");
        report.exit_code = j.at("exit_code").get<int>();
        saw_summary = true;
      } else if (type == "timing") {
        const auto walls = j.at("wall_ms").get<std::vector<double>>();
        if (walls.size() != report.commands.size()) throw StructuralError("timing line has the wrong length");
        for (std::size_t i = 0; i < walls.size(); ++i) report.commands[i].wall_ms = walls[i];
      } else {
        throw StructuralError("unknown record type '" + type + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw StructuralError("report line " + std::to_string(line_no) + ": " + e.what());
  }
  if (!saw_header || !saw_summary) throw StructuralError("report needs a header and a summary line");
  return report;
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) out += (out.empty() ? "" : ", ") + item;
  return out;
}

std::string result_cell(const CommandRecord& c) {
  if (c.status == "error") return c.error_kind + " error";
  if (!c.routes.empty()) {
    std::string out;
    for (const auto& r : c.routes) {
      if (!out.empty()) out += "  ";
      out += r.route + "=" + (r.value ? *r.value : std::string("n/a"));
    }
    return out;
  }
  if (c.value) return *c.value;
  if (!c.basis.empty()) return std::to_string(c.basis.size()) + " basis elements";
  if (!c.ranks.empty()) {
    std::string out = "ranks";
    for (auto r : c.ranks) out += " " + std::to_string(r);
    return out;
  }
  return c.error_kind.empty() ? "-" : c.error_kind;
}

}  // namespace

std::string render_table(const Report& report) {
  std::ostringstream out;
  if (report.parse_error) {
    out << "error at " << report.parse_error->pos.to_string() << ": " << report.parse_error->message << "\n";
    out << "exit code " << report.exit_code << "\n";
    return out.str();
  }
  if (!report.ring.empty()) out << "ring " << report.ring << ", seed " << report.seed << "\n";
  struct Row {
    std::string cells[5];
  };
  std::vector<Row> rows;
  rows.push_back({{"#", "at", "command", "result", "status"}});
  for (const auto& c : report.commands) {
    std::string call = c.command + "(";
    for (std::size_t i = 0; i < c.args.size(); ++i) call += (i ? ", " : "") + c.args[i];
    call += ")";
    std::string status = c.verdict.empty() ? c.status : c.verdict;
    rows.push_back({{std::to_string(c.index), c.pos.to_string(), call, result_cell(c), status}});
  }
  std::size_t width[5] = {};
  for (const auto& r : rows)
    for (int k = 0; k < 5; ++k) width[k] = std::max(width[k], r.cells[k].size());
  for (const auto& r : rows) {
    for (int k = 0; k < 5; ++k) {
      if (k == 4) {
        out << r.cells[k] << "\n";
      } else {
        out << std::left << std::setw(static_cast<int>(width[k])) << r.cells[k] << "  ";
      }
    }
  }
  for (const auto& c : report.commands) {
    for (const auto& r : c.routes)
      if (!r.sequence.empty()) {
        out << "  #" << c.index << " " << r.route << " sequence: " << join(r.sequence) << "\n";
      }
    if (!c.sequence.empty()) {
      out << "  #" << c.index << " sequence: " << join(c.sequence) << "\n";
    }
    for (const auto& b : c.basis) out << "  #" << c.index << " " << b << "\n";
    for (const auto& r : c.routes)
      if (!r.error.empty()) out << "  #" << c.index << " " << r.route << ": " << r.error << "\n";
    if (!c.error.empty()) out << "  #" << c.index << " " << c.error << "\n";
    if (!c.details.empty()) out << "  #" << c.index << " " << c.details << "\n";
  }
  out << "exit code " << report.exit_code << "\n";
  return out.str();
}

}  // namespace sdepth
