#pragma once

#include <string>

#include "sdepth/presented_module.hpp"

namespace sdepth {

// A Serre class with a decidable membership test on presented modules.
// Zero is the class of zero modules; DimLE(k) is the class of modules of
// Krull dimension at most k. For finitely generated modules DimLE(0) is
// the class of modules of finite length.
struct SerreClass {
  enum class Kind { Zero, DimLE };

  Kind kind = Kind::Zero;
  int k = 0;

  static SerreClass zero() { return {}; }
  // Throws DomainError for k < 0.
  static SerreClass dim_le(int k);

  // "zero" or "dim<=k", the script syntax.
  std::string to_string() const;

  friend bool operator==(const SerreClass&, const SerreClass&) = default;
};

bool membership(const PresentedModule& m, const SerreClass& s);

}  // namespace sdepth
