#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sdepth/presented_module.hpp"
#include "sdepth/serre_class.hpp"

namespace sdepth {

// F_t -> ... -> F_1 -> F_0 = R resolving R/I. differentials[i-1] is d_i,
// a b_{i-1} x b_i matrix.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::size_t> ranks;
  std::vector<PolyMatrix> differentials;

  std::size_t length() const noexcept { return differentials.size(); }
  // d_i o d_{i+1} = 0 for every consecutive pair.
  bool is_complex() const;
};

// Resolution by iterated syzygies: d_1 = generators of I, d_{i+1} = syzygies
// of the columns of d_i. Length is capped at nvars + 2.
FreeResolution free_resolution(const Ideal& ideal, std::size_t length);

// H^i(Hom(F, M)) for any complex of free modules F augmented over R.
// Hom(R^b, M) = M^b and the differentials act by transposed matrices.
PresentedModule cohomology_of_hom(const FreeResolution& resolution, std::size_t i, const PresentedModule& m);

// Ext^i_R(R/I, M) through the syzygy resolution of R/I.
PresentedModule ext_module(std::size_t i, const Ideal& ideal, const PresentedModule& m);

// inf{i : Ext^i(R/I, M) not in S}, the value "infinite" (M/IM in S), or a
// scan that stopped at its bound without an answer.
class ScanResult {
 public:
  enum class Kind { Finite, Infinite, BoundExceeded };

  static ScanResult finite(std::size_t v) { return {Kind::Finite, v}; }
  static ScanResult infinite() { return {Kind::Infinite, 0}; }
  static ScanResult bound_exceeded(std::size_t bound) { return {Kind::BoundExceeded, bound}; }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
  // The depth for Finite, the bound for BoundExceeded.
  std::size_t value() const noexcept { return value_; }

  // "3", "inf", "bound_exceeded(4)".
  std::string to_string() const;
  // Inverse of to_string; throws StructuralError on anything else.
  static ScanResult parse(const std::string& text);

  friend bool operator==(const ScanResult&, const ScanResult&) = default;

 private:
  ScanResult(Kind k, std::size_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::size_t value_;
};

// Owns the resolution of R/I and extends it on demand; extension is
// serialized, computed levels are read-only afterwards.
class ExtCalculator {
 public:
  explicit ExtCalculator(Ideal ideal);

  const Ideal& ideal() const noexcept { return ideal_; }
  std::size_t max_length() const noexcept { return ideal_.ring()->nvars() + 2; }
  // Resolution with at least `length` differentials (clamped to the cap).
  // The returned snapshot is immutable.
  std::shared_ptr<const FreeResolution> resolution(std::size_t length);
  PresentedModule ext(std::size_t i, const PresentedModule& m);

 private:
  Ideal ideal_;
  std::mutex mutex_;
  std::shared_ptr<const FreeResolution> res_;
};

struct ExtScanOptions {
  // Largest i inspected; clamped to nvars + 1.
  std::size_t bound = 0;
  // On the infinite branch, additionally confirm Ext^i in S for i <= bound.
  bool verify_infinite = false;
};

ScanResult ext_scan(ExtCalculator& calc, const PresentedModule& m, const SerreClass& s, const ExtScanOptions& opts);
ScanResult ext_scan(const Ideal& ideal, const PresentedModule& m, const SerreClass& s, std::size_t bound,
                    bool verify_infinite = false);

}  // namespace sdepth
