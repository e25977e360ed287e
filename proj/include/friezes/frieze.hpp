#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "friezes/bigint.hpp"
#include "friezes/quiddity.hpp"

namespace friezes {

/// Lazy view of the infinite frieze t with a given quiddity sequence.
///
/// Entries are produced by the row recurrence
///   t(p, q+1) = a_q t(p, q) - t(p, q-1),  t(p, p) = 0,  t(p, p+1) = 1,
/// extended to i > j by antisymmetry.  Computed rows are memoized under the
/// normalized key (min, max); the cache is guarded so a view may be shared
/// across threads.
class FriezeView {
 public:
  explicit FriezeView(QuiddityDescriptor q) : q_(std::move(q)) {}

  FriezeView(const FriezeView& other) : q_(other.q_) {}
  FriezeView& operator=(const FriezeView& other) {
    if (this != &other) {
      std::scoped_lock lock(mu_);
      q_ = other.q_;
      memo_.clear();
    }
    return *this;
  }

  const QuiddityDescriptor& quiddity() const { return q_; }

  /// a_i = t(i-1, i+1).
  std::int64_t a(std::int64_t i) const { return q_.at(i); }

  BigInt entry(std::int64_t i, std::int64_t j) const;

  /// f_i = t(-1, i) and g_i = t(0, i).
  BigInt f(std::int64_t i) const { return entry(-1, i); }
  BigInt g(std::int64_t i) const { return entry(0, i); }

  std::size_t cache_size() const;

 private:
  BigInt forward(std::int64_t i, std::int64_t j) const;

  QuiddityDescriptor q_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::int64_t, std::int64_t>, BigInt> memo_;
};

inline BigInt entry(const FriezeView& t, std::int64_t i, std::int64_t j) { return t.entry(i, j); }

/// Tridiagonal determinant in a_{p+1}, ..., a_{q-1}, expanded along the first
/// row (so it runs right-to-left, independently of the row recurrence used by
/// entry()).  Requires q >= p + 2.
BigInt continuant(const FriezeView& t, std::int64_t p, std::int64_t q);

/// Tridiagonal determinant of an explicit list (empty list gives 1).
BigInt continuant(const std::vector<std::int64_t>& values);

/// det [[f_p, f_q], [g_p, g_q]].
BigInt entry_from_fg(const BigInt& f_p, const BigInt& f_q, const BigInt& g_p, const BigInt& g_q);

/// t(i,p) t(j,q) == t(i,j) t(p,q) + t(i,q) t(j,p).
bool ptolemy_holds(const FriezeView& t, std::int64_t i, std::int64_t j, std::int64_t p,
                   std::int64_t q);

/// (t(i,p) t(j,q) - t(i,q) t(j,p)) / t(i,j), i.e. t(p,q) rebuilt from rows i
/// and j.  Throws PreconditionError when i == j and InexactDivision when the
/// quotient is not an integer.
BigInt reconstruct_entry(const FriezeView& t, std::int64_t i, std::int64_t j, std::int64_t p,
                         std::int64_t q);

/// Same reconstruction from explicit row values.
BigInt reconstruct_entry(const BigInt& t_ij, const BigInt& t_ip, const BigInt& t_jq,
                         const BigInt& t_iq, const BigInt& t_jp);

/// c_ij evaluated at column k: det [[t(i,k), t(i,k+1)], [t(j,k), t(j,k+1)]].
BigInt c_coeff(const FriezeView& t, std::int64_t i, std::int64_t j, std::int64_t k);

/// d_ij evaluated at row k: det [[t(k,i), t(k,j)], [t(k+1,i), t(k+1,j)]].
BigInt d_coeff(const FriezeView& t, std::int64_t i, std::int64_t j, std::int64_t k);

/// A contiguous piece of a quiddity sequence: values[k] = a_{start + k}.
struct QuiddityFragment {
  std::int64_t start = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(std::int64_t i) const { return values.at(static_cast<std::size_t>(i - start)); }
  std::int64_t end() const { return start + static_cast<std::int64_t>(values.size()); }
};

/// A contiguous piece of the row f_s = t(-1, s): values[k] = f_{start + k}.
struct RowFragment {
  std::int64_t start = 0;
  std::vector<BigInt> values;
};

/// Recovers a_s = (f_{s-1} + f_{s+1}) / f_s on the interior of the fragment,
/// with a_{-1} supplied separately (the f-row alone does not determine it).
/// Throws InvalidQuiddity if f_{-2}, f_{-1}, f_0 are not -1, 0, 1 where present,
/// if some f_s does not divide f_{s-1} + f_{s+1}, or if a quotient is below 1.
QuiddityFragment quiddity_from_f(const RowFragment& f, std::int64_t a_minus1);

enum class EnoughOnes { Yes, No, UnknownAtDepth };

/// What the synthesis of a triangulation has established about bridging arcs.
enum class BridgingCertificate {
  None,        ///< no synthesis result available
  NoBridging,  ///< synthesis produced M2 = empty
  Bridging,    ///< synthesis produced bridging arcs
};

struct EnoughOnesReport {
  EnoughOnes verdict = EnoughOnes::UnknownAtDepth;
  /// Every window pair (i, j) has some t(i', j') = 1 with i-depth <= i' <= i <= j <= j' <= j+depth.
  bool window_covered = false;
  /// First window pair (in band-then-row order) without a covering one.
  std::optional<std::pair<std::int64_t, std::int64_t>> uncovered;
};

/// Depth-bounded search for covering ones over the window pairs lo <= i <= j <= hi.
/// A definite answer requires a certificate: NoBridging plus a covered window
/// gives Yes; Bridging gives No.  Everything else is UnknownAtDepth.
EnoughOnesReport has_enough_ones(const FriezeView& t, std::int64_t lo, std::int64_t hi, int depth,
                                 BridgingCertificate certificate = BridgingCertificate::None);

}  // namespace friezes
