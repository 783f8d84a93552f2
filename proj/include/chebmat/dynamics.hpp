#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebmat/cheb.hpp"
#include "chebmat/diagrams.hpp"
#include "chebmat/int_matrix.hpp"

namespace chebmat {

// Finite witness that (f_k(X)) is periodic: f_{period-1}(X) = 0 and
// f_period(X) = I, so f_k = f_{k mod period} for all k.
struct PeriodCertificate {
    long first_zero;                       // first index d >= 1 with f_d(X) = 0
    long period;                           // minimal p with f_{p-1} = 0, f_p = I
    std::vector<IntMatrix> witness_window; // f_0 .. f_period
};

// Scans f_0..f_{k_max}. Absence of a zero is a legitimate result, not an
// error. The certificate's window may extend past k_max (the reduction
// lemma guarantees the period exists once a zero is seen).
std::optional<PeriodCertificate> detect_period(const IntMatrix& x, long k_max);

enum class GrowthKind {
    uniform,   // Z = 2I
    reversal,  // Z = 2I^0 (hence X Z = 2 X^0)
    general,   // X Z = Z X = 2X
};

std::string growth_kind_name(GrowthKind kind);

// Finite witness that (f_k(X)) grows linearly: f_q = f_{q-2} + Z with a Z
// that reduces every f_m, m >= 2q, to the base table.
struct GrowthCertificate {
    long q;
    GrowthKind kind;
    IntMatrix z;
    std::vector<IntMatrix> base_table;  // f_{-1} .. f_{2q-1}; base_table[t] = f_{t-1}
    bool promotion_exhausted = false;   // promote_certificate found no uniform step
};

// Minimal q <= k_max whose difference matrix satisfies one of the three
// kinds, preferring uniform over reversal over general at equal q.
std::optional<GrowthCertificate> detect_growth(const IntMatrix& x, long k_max);

// Minimal q in [2, k_max] with f_q - f_{q-2} = 2I / = 2I^0.
std::optional<long> minimal_uniform_step(const IntMatrix& x, long k_max);
std::optional<long> minimal_reversal_step(const IntMatrix& x, long k_max);

// Upgrades a non-uniform certificate to the minimal uniform one at a larger
// step (doubling of a valid step is again valid, which bounds the search;
// the scan itself is exhaustive, so the result is minimal). If no uniform
// step exists within k_max the input is returned with promotion_exhausted
// set. A uniform input is returned unchanged.
GrowthCertificate promote_certificate(const IntMatrix& x, const GrowthCertificate& cert, long k_max);

// f_m(X) from the certificate alone: base-table lookup for m < 2q, the
// reduction formula r f_{q+u} - (r-1) f_u (with the row-reversed variant for
// reversal certificates) beyond. Only uniform and reversal kinds support
// this; general certificates must be promoted first.
IntMatrix extrapolate(const IntMatrix& x, const GrowthCertificate& cert, long m);

struct ReductionWindowReport {
    std::vector<std::pair<long, bool>> checks;  // (t, pass) for 1 <= t <= q-1
    bool all_pass = true;
};

// Re-derives the window identities f_{q+t} = f_{q-2-t} + 2 f_t (+ parity
// correction through Z), or their row-reversed variant, against a fresh
// evaluation. Failures are reported, not thrown.
ReductionWindowReport verify_reduction_window(const IntMatrix& x, const GrowthCertificate& cert);

struct WildEvidence {
    long k;          // index whose entries exceed the linear envelope
    Int max_entry;   // max |entry| of f_k
    Int envelope;    // k * (1 + max entry of f_0..f_3) * n
};

struct Classification {
    enum class Verdict { Finite, Tame, Wild };
    Verdict verdict;
    std::optional<PeriodCertificate> period;
    std::optional<GrowthCertificate> growth;
    std::optional<WildEvidence> wild;
    std::optional<FamilyMatch> family;
};

// Default scan budget: covers the largest growth step of the tabulated
// families with margin.
long default_scan_bound(int n);

// The finite / tame / wild trichotomy for a symmetric nonnegative connected
// matrix. k_max = 0 uses default_scan_bound. Throws validation_error on bad
// input, not_found_error if no verdict can be certified within the budget.
Classification classify(const IntMatrix& x, long k_max = 0);

// Exact rational LDL^t test: is 2I - X positive semidefinite? Cross-check
// only (spectral radius <= 2 iff PSD for symmetric X).
bool psd_two_i_minus(const IntMatrix& x);

}  // namespace chebmat
