#include "friezes/synthesis.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "friezes/errors.hpp"

namespace friezes {

namespace {

bool any_of_value(const std::vector<std::int64_t>& v, std::int64_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

bool any_above(const std::vector<std::int64_t>& v, std::int64_t x) {
  return std::any_of(v.begin(), v.end(), [x](std::int64_t y) { return y > x; });
}

void require_nonzero_tails(const EventuallyPeriodic& r) {
  if (!any_above(r.left_period, 0) || !any_above(r.right_period, 0)) {
    throw InvalidQuiddity("residual sequence vanishes on a whole tail; not a quiddity sequence");
  }
}

// Bound on the distance from any index to its nearest nonzero neighbour.
std::int64_t search_bound(const EventuallyPeriodic& r) {
  return static_cast<std::int64_t>(r.left_period.size() + r.right_period.size() + r.core.size()) + 2;
}

std::int64_t nearest_nonzero(const EventuallyPeriodic& r, std::int64_t i, int dir,
                             std::int64_t bound) {
  for (std::int64_t step = 1; step <= bound; ++step) {
    const std::int64_t j = i + dir * step;
    if (r.at(j) != 0) return j;
  }
  throw Error("no nonzero residual near index " + std::to_string(i));
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
  return out.str();
}

std::vector<std::int64_t> nonzero(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out;
  std::copy_if(v.begin(), v.end(), std::back_inserter(out), [](std::int64_t x) { return x != 0; });
  return out;
}

// Sum of d_w over w in [from, to).
std::int64_t d_sum(const EventuallyPeriodic& r, std::int64_t from, std::int64_t to) {
  std::int64_t s = 0;
  for (std::int64_t w = from; w < to; ++w) {
    const std::int64_t v = r.at(w);
    if (v > 2) s = checked_add(s, v - 2);
  }
  return s;
}

}  // namespace

SynthesisState initial_state(const QuiddityDescriptor& q, std::int64_t region_lo,
                             std::int64_t region_hi) {
  if (region_hi < region_lo) throw PreconditionError("empty region");
  SynthesisState s;
  s.residual = q.sequence();
  s.residual.normalize();
  s.region_lo = region_lo;
  s.region_hi = region_hi;
  return s;
}

bool has_ones(const EventuallyPeriodic& r) {
  return any_of_value(r.left_period, 1) || any_of_value(r.core, 1) ||
         any_of_value(r.right_period, 1);
}

SynthesisState step_a_pass(const SynthesisState& s) {
  const EventuallyPeriodic& r = s.residual;
  require_nonzero_tails(r);
  const std::int64_t bound = search_bound(r);
  const auto lp = static_cast<std::int64_t>(r.left_period.size());
  const auto rp = static_cast<std::int64_t>(r.right_period.size());
  const std::int64_t cs = r.core_start;
  const std::int64_t ce = r.core_end();

  PassRecord record;
  record.k = s.k;
  record.ones_unbounded = any_of_value(r.left_period, 1) || any_of_value(r.right_period, 1);

  // Two ones with only zeros between them would need crossing arcs.
  auto check_one = [&](std::int64_t i) {
    const std::int64_t next = nearest_nonzero(r, i, +1, bound);
    if (r.at(next) == 1) {
      throw InvalidQuiddity("residual ones at " + std::to_string(i) + " and " +
                            std::to_string(next) + " are adjacent after pass " +
                            std::to_string(s.k) + "; not a quiddity sequence");
    }
  };

  auto updated = [&](std::int64_t i) -> std::int64_t {
    const std::int64_t v = r.at(i);
    if (v == 0 || v == 1) return 0;
    const int dec = (r.at(nearest_nonzero(r, i, -1, bound)) == 1 ? 1 : 0) +
                    (r.at(nearest_nonzero(r, i, +1, bound)) == 1 ? 1 : 0);
    if (dec == 2) record.double_decrement = true;
    return v - dec;
  };

  const std::int64_t scan_lo = std::min(s.region_lo - bound, cs - 2 * lp);
  const std::int64_t scan_hi = std::max(s.region_hi + bound, ce + 2 * rp);
  for (std::int64_t i = scan_lo; i <= scan_hi; ++i) {
    if (r.at(i) != 1) continue;
    check_one(i);
    record.ones.push_back(i);
    const std::int64_t lo = nearest_nonzero(r, i, -1, bound);
    const std::int64_t hi = nearest_nonzero(r, i, +1, bound);
    const bool meets = (lo >= s.region_lo && lo <= s.region_hi) ||
                       (hi >= s.region_lo && hi <= s.region_hi);
    if (meets) record.arcs.push_back(Arc::peripheral(lo, hi));
  }

  SynthesisState next = s;
  EventuallyPeriodic& out = next.residual;
  out.left_period.clear();
  out.core.clear();
  out.right_period.clear();
  for (std::int64_t i = cs - 2 * lp; i < cs - lp; ++i) out.left_period.push_back(updated(i));
  for (std::int64_t i = cs - lp; i < ce + rp; ++i) out.core.push_back(updated(i));
  for (std::int64_t i = ce + rp; i < ce + 2 * rp; ++i) out.right_period.push_back(updated(i));
  out.core_start = cs - lp;
  out.normalize();

  next.arcs.insert(next.arcs.end(), record.arcs.begin(), record.arcs.end());
  next.trace.push_back(std::move(record));
  next.k = s.k + 1;
  return next;
}

std::string compressed_key(const EventuallyPeriodic& residual) {
  EventuallyPeriodic c;
  c.left_period = nonzero(residual.left_period);
  c.core = nonzero(residual.core);
  c.right_period = nonzero(residual.right_period);
  c.core_start = 0;
  c.normalize();

  const auto lp = static_cast<std::int64_t>(c.left_period.size());
  const auto rp = static_cast<std::int64_t>(c.right_period.size());
  const std::int64_t cs = c.core_start;

  // Leftmost index from which the sequence is rp-periodic.
  std::int64_t right_start = c.core_end();
  while (right_start > cs - (lp + rp) && c.at(right_start - 1) == c.at(right_start - 1 + rp)) {
    --right_start;
  }
  if (right_start <= cs - (lp + rp)) {
    // Purely periodic: use the least rotation of the period.
    std::vector<std::int64_t> period = c.window(0, rp - 1);
    std::vector<std::int64_t> best = period;
    for (std::int64_t k = 1; k < rp; ++k) {
      std::rotate(period.begin(), period.begin() + 1, period.end());
      best = std::min(best, period);
    }
    return "P:" + join(best);
  }
  // Rightmost index up to which the sequence is lp-periodic, below right_start.
  std::int64_t left_end = cs - 1;
  while (left_end + 1 < right_start && c.at(left_end + 1) == c.at(left_end + 1 - lp)) ++left_end;
  return "L:" + join(c.window(left_end - lp + 1, left_end)) +
         "|C:" + join(c.window(left_end + 1, right_start - 1)) +
         "|R:" + join(c.window(right_start, right_start + rp - 1));
}

std::string to_string(StepAVerdict v) {
  switch (v) {
    case StepAVerdict::Terminated:
      return "Terminated";
    case StepAVerdict::NonterminatingDetected:
      return "NonterminatingDetected";
    case StepAVerdict::CapReached:
      return "CapReached";
  }
  return {};
}

StepAResult run_step_a(const QuiddityDescriptor& q, std::int64_t region_lo, std::int64_t region_hi,
                       int cap) {
  if (cap < 1) throw PreconditionError("pass cap must be at least 1");
  StepAResult result;
  result.state = initial_state(q, region_lo, region_hi);
  std::map<std::string, std::int64_t> seen;

  for (;;) {
    SynthesisState& s = result.state;
    if (!has_ones(s.residual)) {
      result.verdict = StepAVerdict::Terminated;
      return result;
    }
    if (!result.recurrence_at) {
      auto [it, fresh] = seen.emplace(compressed_key(s.residual), s.k);
      if (!fresh) result.recurrence_at = s.k;
    }
    if (result.recurrence_at) {
      const std::vector<std::int64_t> local = s.residual.window(region_lo, region_hi);
      if (std::all_of(local.begin(), local.end(), [](std::int64_t v) { return v == 0; })) {
        result.verdict = StepAVerdict::NonterminatingDetected;
        return result;
      }
    }
    if (s.k >= cap) {
      result.verdict = StepAVerdict::CapReached;
      return result;
    }
    s = step_a_pass(s);
  }
}

std::optional<std::int64_t> default_anchor(const EventuallyPeriodic& residual, std::int64_t lo,
                                           std::int64_t hi) {
  const std::int64_t mid = lo + (hi - lo) / 2;
  const auto lp = static_cast<std::int64_t>(residual.left_period.size());
  const auto rp = static_cast<std::int64_t>(residual.right_period.size());
  const std::int64_t right_limit = std::max(mid, residual.core_end()) + rp;
  for (std::int64_t v = mid; v <= right_limit; ++v) {
    if (residual.at(v) > 2) return v;
  }
  const std::int64_t left_limit = std::min(mid, residual.core_start) - lp;
  for (std::int64_t v = mid - 1; v >= left_limit; --v) {
    if (residual.at(v) > 2) return v;
  }
  return std::nullopt;
}

M2Class m2_class(bool a_terminated, bool b1_terminated, bool b2_terminated,
                 std::optional<std::int64_t> n) {
  if (!a_terminated) return M2Class::empty();
  if (b1_terminated && b2_terminated) {
    if (!n || *n < 1) throw PreconditionError("finite M2 needs N >= 1");
    return M2Class::finite(*n);
  }
  if (n) throw PreconditionError("N is finite only when both halves of Step B terminate");
  if (b1_terminated) return M2Class::nat_left();
  if (b2_terminated) return M2Class::nat_right();
  return M2Class::bi_infinite();
}

StepBResult step_b(const EventuallyPeriodic& residual, std::int64_t region_lo,
                   std::int64_t region_hi, std::optional<std::int64_t> anchor) {
  if (has_ones(residual)) throw PreconditionError("Step B needs a residual without ones");
  require_nonzero_tails(residual);
  StepBResult out;
  out.b1_terminates = !any_above(residual.right_period, 2);
  out.b2_terminates = !any_above(residual.left_period, 2);
  const bool big = any_above(residual.left_period, 2) || any_above(residual.core, 2) ||
                   any_above(residual.right_period, 2);

  // u_first(v) = offset + S(v), S(v) the signed sum of d_w between origin and v.
  std::int64_t origin = std::min(residual.core_start, region_lo);
  std::int64_t offset = 1;
  if (!big) {
    out.n = 1;
  } else {
    out.anchor = anchor ? anchor : default_anchor(residual, region_lo, region_hi);
    if (anchor && residual.at(*anchor) <= 2) {
      throw PreconditionError("anchor " + std::to_string(*anchor) + " has residual <= 2");
    }
    if (out.b1_terminates && out.b2_terminates) {
      out.n = 1 + d_sum(residual, residual.core_start, residual.core_end());
    } else if (out.b1_terminates) {
      origin = std::max(residual.core_end(), region_hi + 1);
      offset = 0;
    } else if (out.b2_terminates) {
      offset = 0;
    } else {
      origin = *out.anchor;
    }
  }
  out.m2 = m2_class(true, out.b1_terminates, out.b2_terminates, out.n);

  std::int64_t s = region_lo >= origin ? d_sum(residual, origin, region_lo)
                                       : -d_sum(residual, region_lo, origin);
  for (std::int64_t v = region_lo; v <= region_hi; ++v) {
    const std::int64_t r = residual.at(v);
    if (r >= 2) {
      const std::int64_t first = offset + s;
      for (std::int64_t t = 0; t <= r - 2; ++t) out.arcs.push_back(Arc::bridging(first + t, v));
      s += r - 2;
    }
  }
  return out;
}

SynthesisOutcome psi(const QuiddityDescriptor& q, std::int64_t lo, std::int64_t hi,
                     const PsiOptions& options) {
  if (hi < lo) throw PreconditionError("empty window");
  if (options.validate_depth > 0) {
    const ValidationReport report = validate(q, options.validate_depth);
    if (!report.valid()) {
      const FriezeWitness& w = *report.witness;
      throw InvalidQuiddity("t(" + std::to_string(w.i) + "," + std::to_string(w.j) +
                            ") = " + to_string(w.value) + " is not positive");
    }
  }
  const std::int64_t width = hi - lo + 1;
  std::vector<std::int64_t> margins;
  if (options.margin) {
    if (*options.margin < 0) throw PreconditionError("negative margin");
    margins.push_back(*options.margin);
  } else {
    margins = {2 * width, 4 * width, 8 * width};
  }

  SynthesisOutcome outcome;
  for (std::int64_t margin : margins) {
    const std::int64_t rlo = lo - margin;
    const std::int64_t rhi = hi + margin;
    StepAResult a = run_step_a(q, rlo, rhi, options.cap);
    outcome = SynthesisOutcome{};
    outcome.step_a = a.verdict;
    outcome.passes = a.state.k;
    outcome.trace = a.state.trace;
    if (a.verdict == StepAVerdict::CapReached) return outcome;

    std::vector<Arc> arcs = a.state.arcs;
    if (a.verdict == StepAVerdict::Terminated) {
      StepBResult b = step_b(a.state.residual, rlo, rhi, options.anchor);
      arcs.insert(arcs.end(), b.arcs.begin(), b.arcs.end());
      outcome.b1_terminates = b.b1_terminates;
      outcome.b2_terminates = b.b2_terminates;
      outcome.n = b.n;
      outcome.anchor = b.anchor;
      outcome.m2 = b.m2;
    } else {
      outcome.m2 = M2Class::empty();
    }
    outcome.triangulation.emplace(lo, hi, margin, outcome.m2, std::move(arcs));

    const StripTriangulation& t = *outcome.triangulation;
    const bool peripheral_cut =
        std::any_of(t.arcs().begin(), t.arcs().end(), [&](const Arc& arc) {
          return arc.kind() == ArcKind::Peripheral && arc.a.index <= lo - 1 &&
                 arc.b.index >= hi + 1 && t.in_region(arc.a.index) && t.in_region(arc.b.index);
        });
    outcome.margin_certified = peripheral_cut || has_bridging_pair_around(t, lo - 1, hi + 1);
    if (outcome.margin_certified) break;
  }
  return outcome;
}

BridgingCertificate bridging_certificate(const SynthesisOutcome& outcome) {
  if (!outcome.triangulation) return BridgingCertificate::None;
  return outcome.m2.kind == M2Class::Kind::Empty ? BridgingCertificate::NoBridging
                                                 : BridgingCertificate::Bridging;
}

}  // namespace friezes
