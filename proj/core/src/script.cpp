#include "sdepth/script.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <gmpxx.h>

#include "sdepth/errors.hpp"

namespace sdepth {

std::string command_name(CommandKind kind) {
  switch (kind) {
    case CommandKind::SDepth:
      return "sdepth";
    case CommandKind::ExtScan:
      return "ext_scan";
    case CommandKind::SeqBuild:
      return "seq_build";
    case CommandKind::Hochster:
      return "hochster";
    case CommandKind::Gb:
      return "gb";
    case CommandKind::Resolve:
      return "resolve";
  }
  return {};
}

std::size_t Script::command_count() const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [](const Item& it) { return it.kind == ItemKind::Command; }));
}

SerreClass Script::serre_argument(const Argument& arg) const {
  if (arg.text == "zero") return SerreClass::zero();
  if (arg.text.rfind("dim<=", 0) == 0) return SerreClass::dim_le(std::stoi(arg.text.substr(5)));
  auto it = serre_classes.find(arg.text);
  if (it == serre_classes.end()) throw ScriptError(arg.pos, "unknown serre class '" + arg.text + "'");
  return it->second;
}

namespace {

constexpr std::size_t kMaxIntDigits = 400;
constexpr std::size_t kMaxNesting = 64;
constexpr std::size_t kMaxTerms = 20000;
constexpr std::size_t kMaxRank = 32;
constexpr std::size_t kMaxRelations = 256;
constexpr unsigned long kMaxExponent = 65535;

enum class Tok { Ident, Int, Punct, Le, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Int:
      return "integer '" + t.text + "'";
    case Tok::Ident:
      return "'" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j - i > kMaxIntDigits) throw ScriptError(start, "integer literal too long");
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (c == '<' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::Le, "<=", start});
      advance(2);
      continue;
    }
    if (std::string_view("=;()[]{},:*^+-/").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), start});
      advance(1);
      continue;
    }
    std::string shown;
    if (std::isprint(c)) {
      shown = std::string(1, static_cast<char>(c));
    } else {
      static const char* hex = "0123456789abcdef";
      shown = std::string("\\x") + hex[c >> 4] + hex[c & 15];
    }
    throw ScriptError(start, "unexpected character '" + shown + "'");
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words{
      "ring",    "ideal",     "module",   "complex", "serre",    "zero",          "dim",
      "coker",   "on",        "facets",   "QQ",      "FF",       "lex",           "grevlex",
      "sdepth",  "ext_scan",  "seq_build", "hochster", "gb",     "resolve",       "quotient_ring",
      "stanley_reisner"};
  return words;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script script() {
    while (peek().kind != Tok::End) item();
    return std::move(script_);
  }

  Polynomial standalone_polynomial(const RingPtr& ring) {
    script_.ring = ring;
    Polynomial p = polynomial();
    if (peek().kind != Tok::End) fail(peek(), "unexpected " + describe(peek()) + " after polynomial");
    return p;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  Script script_;
  std::map<std::string, ItemKind> names_;
  std::size_t depth_ = 0;

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (at_ < toks_.size() - 1) ++at_;
    return t;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& message) { throw ScriptError(t.pos, message); }

  bool is_punct(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool is_word(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }
  const Token& expect_punct(const char* p) {
    if (!is_punct(p)) fail(peek(), std::string("expected '") + p + "', found " + describe(peek()));
    return next();
  }
  const Token& expect_word(const char* w) {
    if (!is_word(w)) fail(peek(), std::string("expected '") + w + "', found " + describe(peek()));
    return next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }
  std::size_t expect_small_int(const char* what, std::size_t max) {
    if (peek().kind != Tok::Int) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    const Token& t = next();
    if (t.text.size() > 9 || std::stoul(t.text) > max)
      fail(t, std::string(what) + " must be at most " + std::to_string(max));
    return std::stoul(t.text);
  }

  void require_ring(const Token& at) {
    if (!script_.ring) fail(at, "no ring in scope");
  }

  const Token& new_name() {
    const Token& t = expect_ident("a name");
    if (reserved_words().count(t.text)) fail(t, "'" + t.text + "' is a reserved word");
    if (names_.count(t.text)) fail(t, "name '" + t.text + "' already declared");
    return t;
  }

  void item() {
    const Token& head = peek();
    if (head.kind != Tok::Ident) fail(head, "expected a declaration or command, found " + describe(head));
    const std::string& w = head.text;
    if (w == "ring") return ring_decl();
    if (w == "ideal") return ideal_decl();
    if (w == "module") return module_decl();
    if (w == "complex") return complex_decl();
    if (w == "serre") return serre_decl();
    static const std::map<std::string, CommandKind> commands{
        {"sdepth", CommandKind::SDepth},     {"ext_scan", CommandKind::ExtScan}, {"seq_build", CommandKind::SeqBuild},
        {"hochster", CommandKind::Hochster}, {"gb", CommandKind::Gb},            {"resolve", CommandKind::Resolve}};
    auto it = commands.find(w);
    if (it == commands.end()) fail(head, "expected a declaration or command, found " + describe(head));
    command(it->second);
  }

  void ring_decl() {
    const Token& kw = next();
    if (script_.ring) fail(kw, "only one ring per script");
    const Token& name = new_name();
    expect_punct("=");
    const Token& field_tok = expect_ident("QQ or FF(p)");
    CoefField field = CoefField::rationals();
    if (field_tok.text == "FF") {
      expect_punct("(");
      const Token& p = peek();
      if (p.kind != Tok::Int) fail(p, "expected a prime, found " + describe(p));
      next();
      if (p.text.size() > 12) fail(p, "characteristic too large");
      try {
        field = CoefField::prime(std::stoull(p.text));
      } catch (const DomainError& e) {
        fail(p, e.what());
      }
      expect_punct(")");
    } else if (field_tok.text != "QQ") {
      fail(field_tok, "expected QQ or FF(p), found " + describe(field_tok));
    }
    expect_punct("[");
    std::vector<std::string> vars;
    std::vector<SourcePos> parts;
    for (;;) {
      const Token& v = expect_ident("a variable name");
      if (std::find(vars.begin(), vars.end(), v.text) != vars.end()) fail(v, "duplicate variable '" + v.text + "'");
      if (vars.size() == kMaxVars) fail(v, "at most 12 variables are supported");
      vars.push_back(v.text);
      parts.push_back(v.pos);
      if (is_punct(",")) {
        next();
        continue;
      }
      break;
    }
    expect_punct("]");
    MonomialOrder order = MonomialOrder::GrevLex;
    if (is_word("lex")) {
      next();
      order = MonomialOrder::Lex;
    } else if (is_word("grevlex")) {
      next();
    } else if (peek().kind == Tok::Ident) {
      fail(peek(), "expected lex or grevlex, found " + describe(peek()));
    }
    expect_punct(";");
    script_.ring = make_ring(field, vars, order);
    script_.ring_name = name.text;
    names_[name.text] = ItemKind::Ring;
    const std::string builtin = name.text + "_as_module";
    if (!names_.count(builtin)) {
      names_[builtin] = ItemKind::Module;
      script_.modules.emplace(builtin, ModuleBinding{PresentedModule::free(script_.ring, 1), std::nullopt});
    }
    script_.items.push_back({ItemKind::Ring, kw.pos, name.text, CommandKind::SDepth, {}, std::move(parts)});
  }

  void ideal_decl() {
    const Token& kw = next();
    require_ring(kw);
    const Token& name = new_name();
    expect_punct("=");
    std::vector<SourcePos> parts;
    std::vector<Polynomial> gens = polynomial_list("(", ")", parts);
    expect_punct(";");
    names_[name.text] = ItemKind::Ideal;
    script_.ideals.emplace(name.text, Ideal(script_.ring, std::move(gens)));
    script_.items.push_back({ItemKind::Ideal, kw.pos, name.text, CommandKind::SDepth, {}, std::move(parts)});
  }

  std::vector<Polynomial> polynomial_list(const char* open, const char* close, std::vector<SourcePos>& parts) {
    expect_punct(open);
    std::vector<Polynomial> out;
    if (is_punct(close)) {
      next();
      return out;
    }
    for (;;) {
      parts.push_back(peek().pos);
      out.push_back(polynomial());
      if (out.size() > kMaxRelations) fail(peek(), "too many entries");
      if (is_punct(",")) {
        next();
        continue;
      }
      break;
    }
    expect_punct(close);
    return out;
  }

  template <class Map>
  const typename Map::mapped_type& lookup(const Map& map, const Token& t, ItemKind kind, const char* what) {
    auto found = names_.find(t.text);
    if (found == names_.end()) fail(t, "unknown name '" + t.text + "'");
    if (found->second != kind) fail(t, "'" + t.text + "' is not " + what);
    return map.at(t.text);
  }

  void module_decl() {
    const Token& kw = next();
    require_ring(kw);
    const Token& name = new_name();
    expect_punct("=");
    const Token& form = expect_ident("coker, quotient_ring or stanley_reisner");
    std::vector<SourcePos> parts;
    std::optional<ModuleBinding> binding;
    if (form.text == "coker") {
      expect_punct("[");
      std::vector<std::vector<Polynomial>> rows;
      for (;;) {
        parts.push_back(peek().pos);
        const Token& row_start = peek();
        std::vector<SourcePos> ignored;
        rows.push_back(polynomial_list("[", "]", ignored));
        if (rows.size() > kMaxRank) fail(row_start, "ambient rank exceeds 32");
        if (rows.back().size() != rows.front().size())
          fail(row_start, "row has " + std::to_string(rows.back().size()) + " entries, expected " +
                              std::to_string(rows.front().size()));
        if (is_punct(",")) {
          next();
          continue;
        }
        break;
      }
      expect_punct("]");
      std::vector<FreeModuleElement> relations;
      for (std::size_t c = 0; c < rows.front().size(); ++c) {
        FreeModuleElement col;
        for (const auto& row : rows) col.components.push_back(row[c]);
        relations.push_back(std::move(col));
      }
      binding = ModuleBinding{PresentedModule(script_.ring, rows.size(), relations), std::nullopt};
    } else if (form.text == "quotient_ring" || form.text == "stanley_reisner") {
      expect_punct("(");
      const Token& arg = expect_ident("a name");
      parts.push_back(arg.pos);
      if (form.text == "quotient_ring") {
        const Ideal& ideal = lookup(script_.ideals, arg, ItemKind::Ideal, "an ideal");
        binding = ModuleBinding{PresentedModule::quotient_ring(ideal), std::nullopt};
      } else {
        const SimplicialComplex& d = lookup(script_.complexes, arg, ItemKind::Complex, "a complex");
        check_vertices(arg, d);
        binding = ModuleBinding{PresentedModule::quotient_ring(stanley_reisner_ideal(d, script_.ring)), arg.text};
      }
      expect_punct(")");
    } else {
      fail(form, "expected coker, quotient_ring or stanley_reisner, found " + describe(form));
    }
    expect_punct(";");
    names_[name.text] = ItemKind::Module;
    script_.modules.emplace(name.text, std::move(*binding));
    script_.items.push_back({ItemKind::Module, kw.pos, name.text, CommandKind::SDepth, {}, std::move(parts)});
  }

  void check_vertices(const Token& at, const SimplicialComplex& d) {
    if (d.vertex_count() != script_.ring->nvars())
      fail(at, "complex '" + at.text + "' has " + std::to_string(d.vertex_count()) + " vertices but the ring has " +
                   std::to_string(script_.ring->nvars()) + " variables");
  }

  void complex_decl() {
    const Token& kw = next();
    const Token& name = new_name();
    expect_word("on");
    const std::size_t n = expect_small_int("a vertex count", kMaxVars);
    expect_punct("{");
    std::vector<Face> facets;
    std::vector<SourcePos> parts;
    if (is_word("facets")) {
      next();
      expect_punct(":");
      while (is_punct("{")) {
        parts.push_back(next().pos);
        Face f = 0;
        while (!is_punct("}")) {
          const Token& v = peek();
          const std::size_t vertex = expect_small_int("a vertex", 1u << 20);
          if (vertex < 1 || vertex > n) fail(v, "vertex " + v.text + " outside 1.." + std::to_string(n));
          f |= Face{1} << (vertex - 1);
          if (!is_punct(",")) break;
          next();
        }
        expect_punct("}");
        facets.push_back(f);
        if (!is_punct(",")) break;
        next();
      }
    }
    expect_punct("}");
    if (is_punct(";")) next();
    names_[name.text] = ItemKind::Complex;
    script_.complexes.emplace(name.text, SimplicialComplex(n, std::move(facets)));
    script_.items.push_back({ItemKind::Complex, kw.pos, name.text, CommandKind::SDepth, {}, std::move(parts)});
  }

  // zero | dim <= k
  std::optional<std::string> serre_literal() {
    if (is_word("zero")) {
      next();
      return "zero";
    }
    if (is_word("dim")) {
      next();
      if (peek().kind != Tok::Le) fail(peek(), "expected '<=', found " + describe(peek()));
      next();
      return "dim<=" + std::to_string(expect_small_int("a dimension bound", 1000000));
    }
    return std::nullopt;
  }

  void serre_decl() {
    const Token& kw = next();
    const Token& name = new_name();
    expect_punct("=");
    const Token& at = peek();
    auto lit = serre_literal();
    if (!lit) fail(at, "expected zero or dim<= k, found " + describe(at));
    expect_punct(";");
    names_[name.text] = ItemKind::Serre;
    script_.serre_classes.emplace(name.text, script_.serre_argument({at.pos, *lit}));
    script_.items.push_back({ItemKind::Serre, kw.pos, name.text, CommandKind::SDepth, {}, {}});
  }

  Argument serre_arg() {
    const Token& at = peek();
    if (auto lit = serre_literal()) return {at.pos, *lit};
    const Token& t = expect_ident("a serre class");
    lookup(script_.serre_classes, t, ItemKind::Serre, "a serre class");
    return {t.pos, t.text};
  }

  template <class Map>
  Argument name_arg(const Map& map, ItemKind kind, const char* what) {
    const Token& t = expect_ident(what);
    lookup(map, t, kind, what);
    return {t.pos, t.text};
  }

  // Counts top-level arguments up to the closing parenthesis so that an
  // arity mistake is reported before any name is resolved.
  void check_arity(const Token& head, CommandKind kind) {
    const std::size_t expected =
        kind == CommandKind::Gb ? 1 : (kind == CommandKind::Hochster || kind == CommandKind::Resolve) ? 2 : 3;
    std::size_t count = 0, depth = 0;
    bool pending = false;
    for (std::size_t k = 0;; ++k) {
      const Token& t = peek(k);
      if (t.kind == Tok::End || (t.kind == Tok::Punct && t.text == ";")) return;
      if (t.kind == Tok::Punct && (t.text == "(" || t.text == "[" || t.text == "{")) ++depth;
      if (t.kind == Tok::Punct && (t.text == "]" || t.text == "}") && depth > 0) --depth;
      if (t.kind == Tok::Punct && t.text == ")") {
        if (depth > 0) {
          --depth;
          continue;
        }
        count += pending ? 1 : 0;
        if (count != expected)
          fail(t, head.text + " expects " + std::to_string(expected) + " argument" + (expected == 1 ? "" : "s") +
                      ", got " + std::to_string(count));
        return;
      }
      if (depth == 0 && t.kind == Tok::Punct && t.text == ",") {
        ++count;
        pending = false;
      } else {
        pending = true;
      }
    }
  }

  void command(CommandKind kind) {
    const Token& head = next();
    const std::string cname = head.text;
    expect_punct("(");
    std::vector<Argument> args;
    std::size_t arity = 0;
    check_arity(head, kind);
    auto comma = [&](std::size_t index) {
      if (index == 0) return;
      if (is_punct(")"))
        fail(peek(), cname + " expects " + std::to_string(arity) + " arguments, got " + std::to_string(index));
      expect_punct(",");
    };
    switch (kind) {
      case CommandKind::SDepth:
      case CommandKind::ExtScan:
      case CommandKind::SeqBuild: {
        arity = 3;
        require_ring(head);
        args.push_back(name_arg(script_.ideals, ItemKind::Ideal, "an ideal"));
        comma(1);
        args.push_back(name_arg(script_.modules, ItemKind::Module, "a module"));
        comma(2);
        args.push_back(serre_arg());
        break;
      }
      case CommandKind::Hochster: {
        arity = 2;
        require_ring(head);
        const Token& d = peek();
        args.push_back(name_arg(script_.complexes, ItemKind::Complex, "a complex"));
        check_vertices(d, script_.complexes.at(d.text));
        comma(1);
        args.push_back(serre_arg());
        if (!(script_.serre_argument(args.back()) == SerreClass::zero()))
          throw ScriptError(args.back().pos, "hochster requires S = zero");
        break;
      }
      case CommandKind::Gb:
        arity = 1;
        require_ring(head);
        args.push_back(name_arg(script_.ideals, ItemKind::Ideal, "an ideal"));
        break;
      case CommandKind::Resolve: {
        arity = 2;
        require_ring(head);
        args.push_back(name_arg(script_.ideals, ItemKind::Ideal, "an ideal"));
        comma(1);
        const Token& t = peek();
        const std::size_t cap = script_.ring->nvars() + 2;
        args.push_back({t.pos, std::to_string(expect_small_int("a resolution length", cap))});
        break;
      }
    }
    if (is_punct(","))
      fail(peek(), cname + " expects " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s"));
    expect_punct(")");
    expect_punct(";");
    script_.items.push_back({ItemKind::Command, head.pos, cname, kind, std::move(args), {}});
  }

  // expr := ['+'|'-'] term {('+'|'-') term}
  Polynomial polynomial() {
    if (++depth_ > kMaxNesting) fail(peek(), "expression nested too deeply");
    Polynomial acc(script_.ring);
    bool negate = false;
    if (is_punct("+") || is_punct("-")) negate = next().text == "-";
    for (;;) {
      const Token& start = peek();
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      if (acc.size() > kMaxTerms) fail(start, "polynomial too large");
      if (is_punct("+") || is_punct("-")) {
        negate = next().text == "-";
        continue;
      }
      break;
    }
    --depth_;
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (is_punct("*")) {
      const Token& star = next();
      Polynomial f = factor();
      if (acc.size() * f.size() > kMaxTerms) fail(star, "polynomial too large");
      try {
        acc = acc * f;
      } catch (const DomainError& e) {
        fail(star, e.what());
      }
    }
    if (is_punct("/")) fail(peek(), "division is only allowed between integer literals");
    return acc;
  }

  Polynomial factor() {
    const Token& start = peek();
    Polynomial base = primary();
    if (!is_punct("^")) return base;
    next();
    const Token& e = peek();
    if (e.kind != Tok::Int) fail(e, "expected an integer exponent after '^', found " + describe(e));
    next();
    if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponent) fail(e, "exponent too large (at most " + std::to_string(kMaxExponent) + " per variable)");
    const unsigned long k = std::stoul(e.text);
    if (k == 0) return Polynomial::constant(script_.ring, 1);
    if (base.size() <= 1) {
      if (!base.is_zero()) {
        const Term& t = base.terms().front();
        const CoefField& field = script_.ring->field();
        if (t.mono.degree > 0 && *std::max_element(t.mono.exp.begin(), t.mono.exp.end()) * k > kMaxExponent)
          fail(e, "exponent too large (at most " + std::to_string(kMaxExponent) + " per variable)");
        if (field.is_rationals() && !field.is_one(t.coeff) && !field.is_one(field.neg(t.coeff)) && k > 4096)
          fail(e, "exponent too large (at most " + std::to_string(kMaxExponent) + " per variable)");
      }
      return pow(base, static_cast<unsigned>(k));
    }
    if (k > 64) fail(e, "exponent too large for a polynomial with several terms");
    Polynomial acc = base;
    for (unsigned long i = 1; i < k; ++i) {
      if (acc.size() * base.size() > kMaxTerms) fail(start, "polynomial too large");
      acc = acc * base;
    }
    return acc;
  }

  Polynomial primary() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      next();
      const CoefField& field = script_.ring->field();
      mpq_class value{mpz_class(t.text)};
      if (is_punct("/") && peek(1).kind == Tok::Int) {
        next();
        const Token& den = next();
        mpz_class d(den.text);
        if (d == 0) fail(den, "division by zero");
        if (!field.is_rationals() && d % static_cast<unsigned long>(field.characteristic()) == 0)
          fail(den, "denominator vanishes in " + field.name());
        value = mpq_class(mpz_class(t.text), d);
        value.canonicalize();
      }
      return Polynomial::constant(script_.ring, field.from_mpq(value));
    }
    if (t.kind == Tok::Ident) {
      next();
      const int idx = script_.ring->var_index(t.text);
      if (idx < 0) fail(t, "unknown variable '" + t.text + "'");
      return Polynomial::variable(script_.ring, static_cast<std::size_t>(idx));
    }
    if (is_punct("(")) {
      next();
      Polynomial inner = polynomial();
      expect_punct(")");
      return inner;
    }
    fail(t, "expected a polynomial term, found " + describe(t));
  }
};

template <class F>
auto guarded(F&& body) -> decltype(body()) {
  SourcePos where{1, 1};
  try {
    return body();
  } catch (const ScriptError&) {
    throw;
  } catch (const std::bad_alloc&) {
    throw ScriptError(where, "input too large");
  } catch (const std::exception& e) {
    throw ScriptError(where, e.what());
  }
}

}  // namespace

Script parse_script(std::string_view text) {
  return guarded([&] { return Parser(lex(text)).script(); });
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return guarded([&] { return Parser(lex(text)).standalone_polynomial(ring); });
}

}  // namespace sdepth
