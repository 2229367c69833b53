#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdepth/presented_module.hpp"
#include "sdepth/serre_class.hpp"
#include "sdepth/stanley_reisner.hpp"

namespace sdepth {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

// Syntax, name-resolution and static-check failures. what() is
// "line:col: message".
class ScriptError : public std::runtime_error {
 public:
  ScriptError(SourcePos pos, const std::string& message)
      : std::runtime_error(pos.to_string() + ": " + message), pos_(pos), message_(message) {}

  SourcePos pos() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

enum class ItemKind { Ring, Ideal, Module, Complex, Serre, Command };
enum class CommandKind { SDepth, ExtScan, SeqBuild, Hochster, Gb, Resolve };

std::string command_name(CommandKind kind);

struct Argument {
  SourcePos pos;
  // Binding name, a serre literal (`zero`, `dim<=1`) or an integer.
  std::string text;
};

struct ModuleBinding {
  PresentedModule module;
  // Set for `stanley_reisner(D)`.
  std::optional<std::string> complex;
};

struct Item {
  ItemKind kind;
  SourcePos pos;
  // Declared name, or the command name.
  std::string name;
  CommandKind command = CommandKind::SDepth;
  std::vector<Argument> args;
  // Positions of the polynomials, rows or facets inside a declaration body.
  std::vector<SourcePos> parts;
};

struct Script {
  RingPtr ring;
  std::string ring_name;
  std::vector<Item> items;

  std::map<std::string, Ideal> ideals;
  std::map<std::string, ModuleBinding> modules;
  std::map<std::string, SimplicialComplex> complexes;
  std::map<std::string, SerreClass> serre_classes;

  std::size_t command_count() const;
  // Resolves a serre argument: a declared name or a literal.
  SerreClass serre_argument(const Argument& arg) const;
};

// Parses and statically checks a whole script: arity, argument kinds, name
// resolution, single ring, variable counts. Throws ScriptError only.
Script parse_script(std::string_view text);

// Parses `3*x^2*y - 1/2*z + 7` over `ring`. Throws ScriptError with a
// position relative to `text`.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

}  // namespace sdepth
