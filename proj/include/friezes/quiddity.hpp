#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "friezes/bigint.hpp"
#include "friezes/sequence.hpp"

namespace friezes {

/// Finitely presented quiddity sequence (a_i) of an infinite frieze: an
/// eventually periodic sequence of integers >= 1.
class QuiddityDescriptor {
 public:
  /// Throws PreconditionError for an empty period and InvalidQuiddity for any
  /// listed value below 1.
  QuiddityDescriptor(std::vector<std::int64_t> left_period, std::vector<std::int64_t> core,
                     std::vector<std::int64_t> right_period, std::int64_t core_start);

  explicit QuiddityDescriptor(EventuallyPeriodic seq);

  /// The constant sequence a_i = c.
  static QuiddityDescriptor constant(std::int64_t c);

  /// Purely periodic sequence whose value at index `phase` is period[0].
  static QuiddityDescriptor periodic(std::vector<std::int64_t> period, std::int64_t phase = 0);

  std::int64_t at(std::int64_t i) const { return seq_.at(i); }

  const std::vector<std::int64_t>& left_period() const { return seq_.left_period; }
  const std::vector<std::int64_t>& core() const { return seq_.core; }
  const std::vector<std::int64_t>& right_period() const { return seq_.right_period; }
  std::int64_t core_start() const { return seq_.core_start; }
  std::int64_t core_end() const { return seq_.core_end(); }

  const EventuallyPeriodic& sequence() const { return seq_; }

  /// Structural equality of the presentation (not pointwise equality).
  bool operator==(const QuiddityDescriptor&) const = default;

 private:
  void check() const;

  EventuallyPeriodic seq_;
};

std::int64_t value_at(const QuiddityDescriptor& q, std::int64_t i);

/// value_at(shift(q, n), i) == value_at(q, i - n).
QuiddityDescriptor shift(const QuiddityDescriptor& q, std::int64_t n);

/// Pointwise comparison on lo..hi.
bool agree_on(const QuiddityDescriptor& p, const QuiddityDescriptor& q, std::int64_t lo,
              std::int64_t hi);

struct FriezeWitness {
  std::int64_t i = 0;
  std::int64_t j = 0;
  BigInt value;
};

struct ValidationReport {
  enum class Status { ValidToDepth, Invalid };

  Status status = Status::ValidToDepth;
  std::optional<FriezeWitness> witness;
  int depth = 0;

  bool valid() const { return status == Status::ValidToDepth; }
};

inline constexpr int kDefaultValidationDepth = 64;

/// Checks t(i,j) >= 1 for every i < j with j - i <= depth, over enough
/// indices to cover the core and one full period of each tail.  The first
/// nonpositive entry in (band, then row) order is reported as the witness.
ValidationReport validate(const QuiddityDescriptor& q, int depth = kDefaultValidationDepth);

}  // namespace friezes
