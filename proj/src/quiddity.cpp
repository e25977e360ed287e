#include "friezes/quiddity.hpp"

#include <string>

#include "friezes/errors.hpp"

namespace friezes {

QuiddityDescriptor::QuiddityDescriptor(std::vector<std::int64_t> left_period,
                                       std::vector<std::int64_t> core,
                                       std::vector<std::int64_t> right_period,
                                       std::int64_t core_start)
    : seq_{std::move(left_period), std::move(core), std::move(right_period), core_start} {
  check();
}

QuiddityDescriptor::QuiddityDescriptor(EventuallyPeriodic seq) : seq_(std::move(seq)) { check(); }

void QuiddityDescriptor::check() const {
  if (seq_.left_period.empty() || seq_.right_period.empty()) {
    throw PreconditionError("quiddity descriptor periods must be nonempty");
  }
  auto check_values = [](const std::vector<std::int64_t>& v, const char* field) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] < 1) {
        throw InvalidQuiddity(std::string(field) + "[" + std::to_string(k) +
                              "] = " + std::to_string(v[k]) + " is below 1");
      }
    }
  };
  check_values(seq_.left_period, "left_period");
  check_values(seq_.core, "core");
  check_values(seq_.right_period, "right_period");
}

QuiddityDescriptor QuiddityDescriptor::constant(std::int64_t c) { return {{c}, {}, {c}, 0}; }

QuiddityDescriptor QuiddityDescriptor::periodic(std::vector<std::int64_t> period,
                                                std::int64_t phase) {
  if (period.empty()) throw PreconditionError("period must be nonempty");
  return {period, {}, period, phase};
}

std::int64_t value_at(const QuiddityDescriptor& q, std::int64_t i) { return q.at(i); }

QuiddityDescriptor shift(const QuiddityDescriptor& q, std::int64_t n) {
  EventuallyPeriodic s = q.sequence();
  s.core_start = checked_add(s.core_start, n);
  return QuiddityDescriptor(std::move(s));
}

bool agree_on(const QuiddityDescriptor& p, const QuiddityDescriptor& q, std::int64_t lo,
              std::int64_t hi) {
  for (std::int64_t i = lo; i <= hi; ++i) {
    if (p.at(i) != q.at(i)) return false;
  }
  return true;
}

ValidationReport validate(const QuiddityDescriptor& q, int depth) {
  if (depth < 2) throw PreconditionError("validation depth must be at least 2");

  const auto left_len = static_cast<std::int64_t>(q.left_period().size());
  const auto right_len = static_cast<std::int64_t>(q.right_period().size());
  const std::int64_t lo = q.core_start() - depth - left_len;
  const std::int64_t hi = q.core_end() + right_len;

  // rows[r][b] = t(lo + r, lo + r + b) for b = 0..depth
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t i = lo; i <= hi; ++i) {
    std::vector<BigInt> row(static_cast<std::size_t>(depth) + 1);
    row[0] = 0;
    row[1] = 1;
    for (int b = 1; b < depth; ++b) {
      row[b + 1] = row[b] * q.at(i + b) - row[b - 1];
    }
    rows.push_back(std::move(row));
  }

  ValidationReport report;
  report.depth = depth;
  for (int b = 2; b <= depth; ++b) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][b] <= 0) {
        const std::int64_t i = lo + static_cast<std::int64_t>(r);
        report.status = ValidationReport::Status::Invalid;
        report.witness = FriezeWitness{i, i + b, rows[r][b]};
        return report;
      }
    }
  }
  return report;
}

}  // namespace friezes
