#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "socle/macaulay.hpp"

namespace socle {

/// Finite O-sequence (1, h_1, ..., h_e) with strictly positive entries;
/// trailing zeros of the input are trimmed before validation.
class HVector {
 public:
  static HVector validate(std::vector<Int> entries);  // throws std::invalid_argument
  static std::optional<HVector> try_validate(std::vector<Int> entries,
                                             std::string* diagnostic = nullptr);

  const std::vector<Int>& entries() const { return entries_; }
  int top_degree() const { return static_cast<int>(entries_.size()) - 1; }
  const Int& operator[](int d) const;
  Int entry_or_zero(int d) const;

  /// h_1 as a machine integer; requires e >= 1 and a representable value.
  int codimension() const;

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  explicit HVector(std::vector<Int> entries) : entries_(std::move(entries)) {}
  std::vector<Int> entries_;
};

/// (0, s_1, ..., s_e) with non-negative entries, s_e > 0 and e >= 1.
class SocleVector {
 public:
  static SocleVector validate(std::vector<Int> entries);
  static std::optional<SocleVector> try_validate(std::vector<Int> entries,
                                                 std::string* diagnostic = nullptr);

  const std::vector<Int>& entries() const { return entries_; }
  int top_degree() const { return static_cast<int>(entries_.size()) - 1; }
  const Int& operator[](int d) const;
  Int entry_or_zero(int d) const;

  bool is_level() const;       // only s_e nonzero
  bool is_gorenstein() const;  // level with s_e = 1

  friend bool operator==(const SocleVector&, const SocleVector&) = default;

 private:
  explicit SocleVector(std::vector<Int> entries) : entries_(std::move(entries)) {}
  std::vector<Int> entries_;
};

HVector validate_h(const std::vector<Int>& seq);
SocleVector validate_s(const std::vector<Int>& seq);

/// Entrywise-minimum h-vector over all artinian algebras with socle-vector s.
HVector min_h_for_socle(const SocleVector& s);

/// Entrywise-maximum socle-vector over all artinian algebras with h-vector h.
/// Rejects e = 0: socle conventions (s_0 = 0, s_e > 0) are contradictory there.
SocleVector max_socle_for_h(const HVector& h);

/// Degree-1 entry of min_h_for_socle(s).
Int min_codimension(const SocleVector& s);

/// Largest t with h_t = C(r - 1 + t, t); t = 1 always qualifies.
int generic_index(const HVector& h);

bool entrywise_leq(const std::vector<Int>& a, const std::vector<Int>& b);

std::string to_string(const HVector& h);
std::string to_string(const SocleVector& s);
std::ostream& operator<<(std::ostream& os, const HVector& h);
std::ostream& operator<<(std::ostream& os, const SocleVector& s);

}  // namespace socle
