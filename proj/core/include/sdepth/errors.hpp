#pragma once

#include <stdexcept>
#include <string>

namespace sdepth {

// Operands that do not fit together (different rings, ranks, shapes).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation evaluated outside its mathematical domain (lt(0), 1/0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A caller-side precondition that had to be checked and failed
// (ill-defined module map, non-complex, element outside the ideal, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The randomized search for a regular element ran out of candidates
// before reaching the depth certified by the Ext scan.
class SearchIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Expensive internal re-checks (division identity, d^2 = 0, S-pair audits).
// Off by default; the CLI turns it on with --verify and the tests always do.
void set_verification(bool on) noexcept;
bool verification_enabled() noexcept;

}  // namespace sdepth
