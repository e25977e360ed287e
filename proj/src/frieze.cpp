#include "friezes/frieze.hpp"

#include <iterator>
#include <string>

#include "friezes/errors.hpp"

namespace friezes {

BigInt FriezeView::entry(std::int64_t i, std::int64_t j) const {
  if (i == j) return 0;
  if (i > j) return -forward(j, i);
  return forward(i, j);
}

std::size_t FriezeView::cache_size() const {
  std::scoped_lock lock(mu_);
  return memo_.size();
}

BigInt FriezeView::forward(std::int64_t i, std::int64_t j) const {
  std::scoped_lock lock(mu_);
  auto it = memo_.lower_bound({i, j});
  if (it != memo_.end() && it->first == std::pair{i, j}) return it->second;

  // Rows are always cached as a contiguous prefix (i, i+1), ..., (i, k).
  std::int64_t k = i + 1;
  BigInt cur = 1;
  BigInt prev = 0;
  if (it != memo_.begin()) {
    auto last = std::prev(it);
    if (last->first.first == i) {
      k = last->first.second;
      cur = last->second;
      prev = (k - 1 == i) ? BigInt(0) : memo_.at({i, k - 1});
    }
  }
  memo_.emplace(std::pair{i, i + 1}, BigInt(1));
  while (k < j) {
    BigInt next = cur * q_.at(k) - prev;
    prev = std::move(cur);
    cur = std::move(next);
    ++k;
    memo_.emplace(std::pair{i, k}, cur);
  }
  return cur;
}

BigInt continuant(const std::vector<std::int64_t>& values) {
  BigInt after_next = 1;  // continuant of the empty suffix past the end
  BigInt next = 1;
  if (values.empty()) return 1;
  next = values.back();
  for (std::size_t k = values.size() - 1; k-- > 0;) {
    BigInt cur = next * values[k] - after_next;
    after_next = std::move(next);
    next = std::move(cur);
  }
  return next;
}

BigInt continuant(const FriezeView& t, std::int64_t p, std::int64_t q) {
  if (q < p + 2) {
    throw PreconditionError("continuant requires q >= p + 2 (got p=" + std::to_string(p) +
                            ", q=" + std::to_string(q) + ")");
  }
  return continuant(t.quiddity().sequence().window(p + 1, q - 1));
}

BigInt entry_from_fg(const BigInt& f_p, const BigInt& f_q, const BigInt& g_p, const BigInt& g_q) {
  return f_p * g_q - f_q * g_p;
}

bool ptolemy_holds(const FriezeView& t, std::int64_t i, std::int64_t j, std::int64_t p,
                   std::int64_t q) {
  return t.entry(i, p) * t.entry(j, q) == t.entry(i, j) * t.entry(p, q) + t.entry(i, q) * t.entry(j, p);
}

BigInt reconstruct_entry(const BigInt& t_ij, const BigInt& t_ip, const BigInt& t_jq,
                         const BigInt& t_iq, const BigInt& t_jp) {
  if (t_ij == 0) throw PreconditionError("reconstruction needs t(i,j) != 0");
  const BigInt num = t_ip * t_jq - t_iq * t_jp;
  if (num % t_ij != 0) {
    throw InexactDivision(num.str() + " is not divisible by " + t_ij.str());
  }
  return num / t_ij;
}

BigInt reconstruct_entry(const FriezeView& t, std::int64_t i, std::int64_t j, std::int64_t p,
                         std::int64_t q) {
  if (i == j) throw PreconditionError("reconstruction needs distinct rows i != j");
  return reconstruct_entry(t.entry(i, j), t.entry(i, p), t.entry(j, q), t.entry(i, q),
                           t.entry(j, p));
}

BigInt c_coeff(const FriezeView& t, std::int64_t i, std::int64_t j, std::int64_t k) {
  return t.entry(i, k) * t.entry(j, k + 1) - t.entry(i, k + 1) * t.entry(j, k);
}

BigInt d_coeff(const FriezeView& t, std::int64_t i, std::int64_t j, std::int64_t k) {
  return t.entry(k, i) * t.entry(k + 1, j) - t.entry(k, j) * t.entry(k + 1, i);
}

QuiddityFragment quiddity_from_f(const RowFragment& f, std::int64_t a_minus1) {
  if (a_minus1 < 1) throw InvalidQuiddity("a_{-1} must be at least 1");
  const auto n = static_cast<std::int64_t>(f.values.size());
  auto at = [&](std::int64_t s) -> const BigInt& {
    return f.values[static_cast<std::size_t>(s - f.start)];
  };
  auto in = [&](std::int64_t s) { return s >= f.start && s < f.start + n; };

  const std::pair<std::int64_t, int> anchors[] = {{-2, -1}, {-1, 0}, {0, 1}};
  for (auto [s, expected] : anchors) {
    if (in(s) && at(s) != expected) {
      throw InvalidQuiddity("f_" + std::to_string(s) + " must equal " + std::to_string(expected));
    }
  }

  QuiddityFragment out;
  if (n < 3) return out;
  out.start = f.start + 1;
  for (std::int64_t s = f.start + 1; s < f.start + n - 1; ++s) {
    if (s == -1) {
      out.values.push_back(a_minus1);
      continue;
    }
    const BigInt& fs = at(s);
    const BigInt sum = at(s - 1) + at(s + 1);
    if (fs == 0 || sum % fs != 0) {
      throw InvalidQuiddity("f_" + std::to_string(s) + " = " + fs.str() + " does not divide f_" +
                            std::to_string(s - 1) + " + f_" + std::to_string(s + 1) + " = " +
                            sum.str());
    }
    const BigInt a = sum / fs;
    if (a < 1) {
      throw InvalidQuiddity("recovered a_" + std::to_string(s) + " = " + a.str() + " is below 1");
    }
    out.values.push_back(to_int64(a));
  }
  return out;
}

EnoughOnesReport has_enough_ones(const FriezeView& t, std::int64_t lo, std::int64_t hi, int depth,
                                 BridgingCertificate certificate) {
  if (lo > hi) throw PreconditionError("has_enough_ones needs lo <= hi");
  if (depth < 0) throw PreconditionError("has_enough_ones needs depth >= 0");

  // ones[i'] = columns j' > i' with t(i', j') = 1 inside the search box.
  std::map<std::int64_t, std::vector<std::int64_t>> ones;
  for (std::int64_t ip = lo - depth; ip <= hi; ++ip) {
    for (std::int64_t jp = std::max(ip + 1, lo); jp <= hi + depth; ++jp) {
      if (t.entry(ip, jp) == 1) ones[ip].push_back(jp);
    }
  }
  auto covered = [&](std::int64_t i, std::int64_t j) {
    for (std::int64_t ip = i - depth; ip <= i; ++ip) {
      auto it = ones.find(ip);
      if (it == ones.end()) continue;
      for (std::int64_t jp : it->second) {
        if (jp >= j && jp <= j + depth) return true;
      }
    }
    return false;
  };

  EnoughOnesReport report;
  report.window_covered = true;
  for (std::int64_t band = 0; band <= hi - lo && report.window_covered; ++band) {
    for (std::int64_t i = lo; i + band <= hi; ++i) {
      if (!covered(i, i + band)) {
        report.window_covered = false;
        report.uncovered = std::pair{i, i + band};
        break;
      }
    }
  }

  switch (certificate) {
    case BridgingCertificate::Bridging:
      report.verdict = EnoughOnes::No;
      break;
    case BridgingCertificate::NoBridging:
      report.verdict = report.window_covered ? EnoughOnes::Yes : EnoughOnes::UnknownAtDepth;
      break;
    case BridgingCertificate::None:
      report.verdict = EnoughOnes::UnknownAtDepth;
      break;
  }
  return report;
}

}  // namespace friezes
