#include "chebmat/dynamics.hpp"

#include <algorithm>
#include <utility>

namespace chebmat {

namespace {

IntMatrix two_identity(int n) { return IntMatrix::identity(n).scaled(2); }
IntMatrix two_antidiagonal(int n) { return IntMatrix::antidiagonal_identity(n).scaled(2); }

std::vector<IntMatrix> collect_base_table(ChebContext& ctx, long q) {
    std::vector<IntMatrix> table;
    table.reserve(static_cast<size_t>(2 * q) + 1);
    for (long k = -1; k <= 2 * q - 1; ++k) table.push_back(ctx.eval(k));
    return table;
}

std::optional<GrowthKind> kind_of(const IntMatrix& x, const IntMatrix& z) {
    const int n = x.dim();
    if (z == two_identity(n)) return GrowthKind::uniform;
    if (z == two_antidiagonal(n)) return GrowthKind::reversal;
    IntMatrix twice = x.scaled(2);
    if (x * z == twice && z * x == twice) return GrowthKind::general;
    return std::nullopt;
}

}  // namespace

std::string growth_kind_name(GrowthKind kind) {
    switch (kind) {
        case GrowthKind::uniform: return "uniform";
        case GrowthKind::reversal: return "reversal";
        case GrowthKind::general: return "general";
    }
    return "?";
}

std::optional<PeriodCertificate> detect_period(const IntMatrix& x, long k_max) {
    if (k_max < 2) throw range_error("detect_period requires k_max >= 2");
    ChebContext ctx(x);
    long d = -1;
    for (long k = 1; k <= k_max; ++k) {
        if (ctx.eval(k).is_zero()) {
            d = k;
            break;
        }
    }
    if (d < 0) return std::nullopt;

    // The window identity f_{d+k} + f_{d-k} = 0 is forced by the zero; check
    // it anyway, it is cheap and certifies the cache.
    for (long k = 0; k <= d + 1; ++k) {
        if (!(ctx.eval(d + k) + ctx.eval(d - k)).is_zero())
            throw error("periodic window identity failed at offset " + std::to_string(k));
    }

    long period = -1;
    for (long p = 2; p <= 2 * d + 2; ++p) {
        if (ctx.eval(p - 1).is_zero() && ctx.eval(p).is_identity()) {
            period = p;
            break;
        }
    }
    if (period < 0) throw error("no period <= 2d+2 despite zero at " + std::to_string(d));

    PeriodCertificate cert{d, period, {}};
    cert.witness_window.reserve(static_cast<size_t>(period) + 1);
    for (long k = 0; k <= period; ++k) cert.witness_window.push_back(ctx.eval(k));
    return cert;
}

std::optional<GrowthCertificate> detect_growth(const IntMatrix& x, long k_max) {
    if (k_max < 4) throw range_error("detect_growth requires k_max >= 4");
    ChebContext ctx(x);
    for (long q = 2; q <= k_max; ++q) {
        IntMatrix z = ctx.eval(q) - ctx.eval(q - 2);
        if (auto kind = kind_of(x, z))
            return GrowthCertificate{q, *kind, std::move(z), collect_base_table(ctx, q), false};
    }
    return std::nullopt;
}

std::optional<long> minimal_uniform_step(const IntMatrix& x, long k_max) {
    ChebContext ctx(x);
    IntMatrix target = two_identity(x.dim());
    for (long q = 2; q <= k_max; ++q)
        if (ctx.eval(q) - ctx.eval(q - 2) == target) return q;
    return std::nullopt;
}

std::optional<long> minimal_reversal_step(const IntMatrix& x, long k_max) {
    ChebContext ctx(x);
    IntMatrix target = two_antidiagonal(x.dim());
    for (long q = 2; q <= k_max; ++q)
        if (ctx.eval(q) - ctx.eval(q - 2) == target) return q;
    return std::nullopt;
}

GrowthCertificate promote_certificate(const IntMatrix& x, const GrowthCertificate& cert, long k_max) {
    if (cert.kind == GrowthKind::uniform) return cert;

    ChebContext ctx(x);
    IntMatrix two_i = two_identity(x.dim());

    // Doubling a valid step stays valid, so the first uniform hit among
    // 2q, 4q, ... bounds the exhaustive scan.
    long bound = k_max;
    for (long qq = 2 * cert.q; qq <= k_max; qq *= 2) {
        if (ctx.eval(qq) - ctx.eval(qq - 2) == two_i) {
            bound = qq;
            break;
        }
    }
    std::optional<long> best_reversal;
    for (long q = cert.q + 1; q <= bound; ++q) {
        IntMatrix z = ctx.eval(q) - ctx.eval(q - 2);
        if (z == two_i)
            return GrowthCertificate{q, GrowthKind::uniform, std::move(z), collect_base_table(ctx, q),
                                     false};
        if (!best_reversal && cert.kind == GrowthKind::general &&
            z == two_antidiagonal(x.dim()))
            best_reversal = q;
    }
    if (best_reversal) {
        long q = *best_reversal;
        GrowthCertificate out{q, GrowthKind::reversal, two_antidiagonal(x.dim()),
                              collect_base_table(ctx, q), true};
        return out;
    }
    GrowthCertificate unchanged = cert;
    unchanged.promotion_exhausted = true;
    return unchanged;
}

IntMatrix extrapolate(const IntMatrix& x, const GrowthCertificate& cert, long m) {
    if (cert.kind == GrowthKind::general)
        throw unsupported_error(
            "general-kind certificates do not extrapolate; promote_certificate first");
    if (m < -1) throw range_error("extrapolation index must be >= -1, got " + std::to_string(m));
    (void)x;
    const long q = cert.q;
    auto base = [&](long t) -> const IntMatrix& {
        return cert.base_table[static_cast<size_t>(t + 1)];
    };
    if (m <= 2 * q - 1) return base(m);

    const long r = (m + 1) / q;
    const long u = m - r * q;  // -1 <= u <= q-2
    if (cert.kind == GrowthKind::uniform) return base(q + u).scaled(r) - base(u).scaled(r - 1);
    // reversal: parity-split form through the row reversal
    if (r % 2 == 0) return base(q + u).row_reverse().scaled(r) - base(u).scaled(r - 1);
    return base(q + u).scaled(r) - base(u).row_reverse().scaled(r - 1);
}

ReductionWindowReport verify_reduction_window(const IntMatrix& x, const GrowthCertificate& cert) {
    ReductionWindowReport report;
    ChebContext ctx(x);
    const long q = cert.q;
    const IntMatrix two_i_minus_z = two_identity(x.dim()) - cert.z;
    for (long t = 1; t <= q - 1; ++t) {
        IntMatrix expected = ctx.eval(q - 2 - t);
        if (cert.kind == GrowthKind::reversal) {
            expected = expected + ctx.eval(t).row_reverse().scaled(2);
        } else {
            expected = expected + ctx.eval(t).scaled(2);
            if (t % 2 == 0) {
                // the (-1)^{t/2+1} (2I - Z) parity correction
                if ((t / 2 + 1) % 2 == 0)
                    expected = expected + two_i_minus_z;
                else
                    expected = expected - two_i_minus_z;
            }
        }
        bool pass = (ctx.eval(q + t) == expected);
        report.checks.emplace_back(t, pass);
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

long default_scan_bound(int n) { return std::max<long>(16L * n + 64, 200); }

Classification classify(const IntMatrix& x, long k_max) {
    const int n = x.dim();
    if (!x.is_symmetric()) throw validation_error("classify requires a symmetric matrix");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sgn(x.at(i, j)) < 0) throw validation_error("classify requires nonnegative entries");
    if (!is_connected(x)) throw validation_error("classify requires a connected (indecomposable) matrix");

    const long bound = k_max > 0 ? k_max : default_scan_bound(n);
    Classification out{Classification::Verdict::Wild, {}, {}, {}, {}};
    out.family = identify_family(x);

    if (auto period = detect_period(x, bound)) {
        out.verdict = Classification::Verdict::Finite;
        out.period = std::move(period);
        return out;
    }
    if (auto growth = detect_growth(x, bound)) {
        out.verdict = Classification::Verdict::Tame;
        out.growth = std::move(growth);
        return out;
    }

    // Superlinear growth evidence: some f_k outgrows the linear envelope
    // k * (1 + max entry of f_0..f_3) * n.
    ChebContext ctx(x);
    Int m0 = 0;
    for (long k = 0; k <= 3; ++k) m0 = std::max(m0, ctx.eval(k).max_abs_entry());
    for (long k = 1; k <= bound; ++k) {
        Int envelope = Int(k) * (1 + m0) * n;
        Int biggest = ctx.eval(k).max_abs_entry();
        if (biggest > envelope) {
            out.verdict = Classification::Verdict::Wild;
            out.wild = WildEvidence{k, biggest, envelope};
            return out;
        }
    }
    throw not_found_error("no verdict certified within scan bound " + std::to_string(bound) +
                          "; raise k_max");
}

bool psd_two_i_minus(const IntMatrix& x) {
    const int n = x.dim();
    if (!x.is_symmetric()) throw validation_error("PSD test requires a symmetric matrix");
    // Exact LDL^t on A = 2I - X over the rationals. PSD iff every pivot is
    // >= 0, where a zero pivot requires its whole remaining row to vanish.
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i][j] = mpq_class((i == j ? 2 : 0) - x.at(i, j));
        }
    for (int k = 0; k < n; ++k) {
        mpq_class pivot = a[k][k];
        if (pivot < 0) return false;
        if (pivot == 0) {
            for (int j = k + 1; j < n; ++j)
                if (a[k][j] != 0) return false;
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            if (a[k][i] == 0) continue;
            mpq_class factor = a[k][i] / pivot;
            for (int j = i; j < n; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    return true;
}

}  // namespace chebmat
