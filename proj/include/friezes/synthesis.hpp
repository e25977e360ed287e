#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "friezes/quiddity.hpp"
#include "friezes/sequence.hpp"
#include "friezes/strip.hpp"

namespace friezes {

/// Record of one Step A pass.
struct PassRecord {
  std::int64_t k = 0;
  /// Z_k restricted to the scanned range; `ones_unbounded` is set when a
  /// periodic tail contains ones as well.
  std::vector<std::int64_t> ones;
  bool ones_unbounded = false;
  /// Peripheral arcs added by the pass that meet the region.
  std::vector<Arc> arcs;
  /// Set when some vertex lost 2 because both nonzero neighbours were in Z_k.
  bool double_decrement = false;
};

/// Working state of the synthesis: residual a^(k) (zeros allowed), pass
/// counter and the peripheral arcs meeting [region_lo, region_hi].
struct SynthesisState {
  EventuallyPeriodic residual;
  std::int64_t k = 0;
  std::int64_t region_lo = 0;
  std::int64_t region_hi = 0;
  std::vector<Arc> arcs;
  std::vector<PassRecord> trace;
};

SynthesisState initial_state(const QuiddityDescriptor& q, std::int64_t region_lo,
                             std::int64_t region_hi);

/// True when some residual value equals 1.
bool has_ones(const EventuallyPeriodic& residual);

/// One simultaneous pass of Step A.  Throws InvalidQuiddity when the input
/// cannot be a quiddity sequence (two ones adjacent after skipping zeros, or a
/// tail with no nonzero value left).
SynthesisState step_a_pass(const SynthesisState& s);

/// The residual with zeros deleted, in a form that is equal for two residuals
/// exactly when their nonzero subsequences agree up to index shift.  Step A
/// acts on this subsequence only, so a repeated key means Step A cycles.
std::string compressed_key(const EventuallyPeriodic& residual);

enum class StepAVerdict { Terminated, NonterminatingDetected, CapReached };

std::string to_string(StepAVerdict v);

struct StepAResult {
  SynthesisState state;
  StepAVerdict verdict = StepAVerdict::CapReached;
  /// Pass at which the compressed residual first repeated an earlier one.
  std::optional<std::int64_t> recurrence_at;
};

inline constexpr int kDefaultPassCap = 1000;

/// Runs passes until Z_k is empty or the compressed residual recurs.  In the
/// recurring case passes continue until every residual in the region is 0 so
/// that all arcs meeting the region are collected; if `cap` passes do not
/// suffice the verdict is CapReached.
StepAResult run_step_a(const QuiddityDescriptor& q, std::int64_t region_lo, std::int64_t region_hi,
                       int cap = kDefaultPassCap);

struct StepBResult {
  std::vector<Arc> arcs;  ///< bridging arcs with lower endpoint in the region
  bool b1_terminates = true;
  bool b2_terminates = true;
  std::optional<std::int64_t> n;       ///< N = 1 + sum d_i when finite
  std::optional<std::int64_t> anchor;  ///< i_0, when N > 1
  M2Class m2;
};

/// Default i_0: the smallest index >= (lo + hi) / 2 with residual > 2, or the
/// largest one below it when there is none to the right.
std::optional<std::int64_t> default_anchor(const EventuallyPeriodic& residual, std::int64_t lo,
                                           std::int64_t hi);

/// Step B on a residual without ones.  Upper points are labelled 1..N when
/// finite, ..,-1,0 for NatLeft, 0,1,.. for NatRight, and so that the first
/// upper point joined to i_0 is 1 for BiInfinite.
StepBResult step_b(const EventuallyPeriodic& residual, std::int64_t region_lo,
                   std::int64_t region_hi, std::optional<std::int64_t> anchor = std::nullopt);

/// The Step C table.  Throws PreconditionError for N < 1 in the finite row.
M2Class m2_class(bool a_terminated, bool b1_terminated, bool b2_terminated,
                 std::optional<std::int64_t> n);

struct PsiOptions {
  int cap = kDefaultPassCap;
  /// Fixed margin; when unset it starts at twice the window width and doubles
  /// up to eight times the width until the cut around the window is certified.
  std::optional<std::int64_t> margin;
  std::optional<std::int64_t> anchor;
  /// Validation depth run before synthesis; 0 skips it.
  int validate_depth = kDefaultValidationDepth;
};

struct SynthesisOutcome {
  std::optional<StripTriangulation> triangulation;  ///< absent on CapReached
  StepAVerdict step_a = StepAVerdict::CapReached;
  std::int64_t passes = 0;
  bool b1_terminates = false;
  bool b2_terminates = false;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> anchor;
  M2Class m2;
  /// A peripheral arc with both ends in the region, or a bridging pair, passes
  /// over lo - 1 and hi + 1: every window pair then has a cut in the region.
  bool margin_certified = false;
  std::vector<PassRecord> trace;
};

/// The whole algorithm on the window [lo, hi].  Throws InvalidQuiddity when
/// validation or Step A rejects the input.
SynthesisOutcome psi(const QuiddityDescriptor& q, std::int64_t lo, std::int64_t hi,
                     const PsiOptions& options = {});

/// Certificate for has_enough_ones() derived from a synthesis outcome.
BridgingCertificate bridging_certificate(const SynthesisOutcome& outcome);

}  // namespace friezes
