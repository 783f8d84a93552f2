#include "chebmat/resolutions.hpp"

#include <numeric>
#include <utility>

#include "chebmat/cheb.hpp"

namespace chebmat {

IntMatrix ext_matrix(const DiagramSpec& spec) { return spec.adjacency; }

IntMatrix b_matrix(const IntMatrix& e) {
    const int n = e.dim();
    IntMatrix b(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b.set(i, j, e.at(i, j));
        b.set(i, n + i, -1);
        b.set(n + i, i, 1);
    }
    return b;
}

BPowerBlocks b_power_blocks(const IntMatrix& e, long k) {
    if (k < 0) throw range_error("b_power_blocks requires k >= 0, got " + std::to_string(k));
    ChebContext ctx(e);
    // f_{-2} = -I by running the recurrence backwards; it only shows up at k = 0.
    IntMatrix fk2 = (k >= 2) ? ctx.eval(k - 2) : (k == 1 ? IntMatrix::zero(e.dim())
                                                         : -IntMatrix::identity(e.dim()));
    return BPowerBlocks{ctx.eval(k), -ctx.eval(k - 1), ctx.eval(k - 1), -fk2};
}

IntMatrix b_power_reassembled(const BPowerBlocks& blocks) {
    const int n = blocks.top_left.dim();
    IntMatrix out(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.set(i, j, blocks.top_left.at(i, j));
            out.set(i, n + j, blocks.top_right.at(i, j));
            out.set(n + i, j, blocks.bottom_left.at(i, j));
            out.set(n + i, n + j, blocks.bottom_right.at(i, j));
        }
    return out;
}

std::array<std::vector<Int>, 3> projective_layers(const IntMatrix& e, const std::vector<Int>& alpha) {
    const int n = e.dim();
    if (static_cast<int>(alpha.size()) != n)
        throw dimension_error("alpha has length " + std::to_string(alpha.size()) + ", expected " +
                              std::to_string(n));
    for (const Int& v : alpha)
        if (sgn(v) < 0) throw validation_error("alpha must be nonnegative");
    std::vector<Int> mid(n);
    for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int j = 0; j < n; ++j) acc += e.at(i, j) * alpha[j];
        mid[i] = acc;
    }
    return {alpha, mid, alpha};
}

ResolutionTrace syzygy_trace(const IntMatrix& e, int i, long steps) {
    const int n = e.dim();
    if (i < 1 || i > n)
        throw range_error("simple index must be in [1, " + std::to_string(n) + "], got " +
                          std::to_string(i));
    if (steps < 0) throw range_error("steps must be >= 0");

    ResolutionTrace trace{e, i, {}, {}};
    std::vector<Int> alpha(n), beta(n);
    alpha[i - 1] = 1;

    TraceStep step0;
    step0.k = 0;
    step0.d = {alpha, beta};
    step0.projectives = alpha;
    trace.steps.push_back(step0);

    for (long k = 1; k <= steps; ++k) {
        // d <- B d: alpha' = E alpha - beta, beta' = alpha.
        std::vector<Int> alpha_next(n);
        for (int r = 0; r < n; ++r) {
            Int acc = 0;
            for (int c = 0; c < n; ++c) acc += e.at(r, c) * alpha[c];
            alpha_next[r] = acc - beta[r];
        }
        std::vector<Int> beta_next = alpha;

        bool head_zero = true;
        for (const Int& v : alpha_next) {
            if (sgn(v) < 0)
                throw model_violation_error(
                    "negative head multiplicity at step " + std::to_string(k) +
                    "; the matrix is not the Ext-matrix of a radical-cube-zero symmetric algebra");
            if (sgn(v) != 0) head_zero = false;
        }

        TraceStep step;
        step.k = k;
        if (head_zero) {
            // Omega^k is contained in the socle: its true dimension vector is
            // (tail, 0). A unit tail is the simple S_j.
            int nonzero = 0, where = -1;
            for (int c = 0; c < n; ++c)
                if (sgn(beta_next[c]) != 0) {
                    ++nonzero;
                    where = c;
                }
            alpha = beta_next;
            beta.assign(n, 0);
            step.d = {alpha, beta};
            step.projectives = alpha;
            if (nonzero == 1 && beta_next[where] == 1) {
                step.simple_hit = where + 1;
            } else {
                step.semisimple_reset = true;
                trace.warnings.push_back("step " + std::to_string(k) +
                                         ": semisimple but non-simple syzygy");
            }
        } else {
            alpha = std::move(alpha_next);
            beta = std::move(beta_next);
            step.d = {alpha, beta};
            step.projectives = alpha;
        }
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

std::vector<Int> resolution_terms(const IntMatrix& e, int i, long k) {
    if (k < 0) throw range_error("resolution term index must be >= 0");
    ResolutionTrace trace = syzygy_trace(e, i, k);
    return trace.steps.back().projectives;
}

std::optional<long> resolution_period(const IntMatrix& e, long k_max) {
    const int n = e.dim();
    const long bound = k_max > 0 ? k_max : std::max<long>(4L * n + 16, 64);

    std::vector<long> hit_step(n, -1);
    std::vector<int> hit_target(n, -1);
    for (int i = 1; i <= n; ++i) {
        ResolutionTrace trace = syzygy_trace(e, i, bound);
        for (const TraceStep& s : trace.steps) {
            if (s.simple_hit) {
                hit_step[i - 1] = s.k;
                hit_target[i - 1] = *s.simple_hit;
                break;
            }
        }
        if (hit_step[i - 1] < 0) return std::nullopt;
    }

    // Return time of S_i: walk the first-hit map until it comes back.
    long period = 1;
    for (int i = 1; i <= n; ++i) {
        long total = 0;
        int cur = i;
        for (int hops = 0; hops <= n; ++hops) {
            total += hit_step[cur - 1];
            cur = hit_target[cur - 1];
            if (cur == i) break;
            if (hops == n) return std::nullopt;  // first-hit map not a permutation
        }
        period = std::lcm(period, total);
    }
    return period;
}

namespace {

long tabulated_growth_step(const DiagramSpec& spec) {
    switch (spec.family) {
        case DiagramFamily::ATilde: return spec.index + 1;
        case DiagramFamily::DTilde:
            return spec.index % 2 == 0 ? 2 * spec.index - 4 : 8 * spec.index - 16;
        case DiagramFamily::LTilde: return spec.index;
        case DiagramFamily::DLTilde: return 8 * spec.index - 4;
        case DiagramFamily::E6Tilde: return 12;
        case DiagramFamily::E7Tilde: return 72;
        case DiagramFamily::E8Tilde: return 60;
        default: return 0;
    }
}

}  // namespace

GrowthFactorResult growth_factor(const DiagramSpec& spec) {
    if (!family_is_extended(spec.family))
        throw unsupported_error("growth factor is defined for extended families only, got " +
                                family_name(spec.family));
    const IntMatrix& x = spec.adjacency;
    const long bound = default_scan_bound(x.dim());

    auto cert = detect_growth(x, bound);
    if (!cert) throw not_found_error("no growth certificate within bound " + std::to_string(bound));
    GrowthFactorResult out;
    if (cert->kind == GrowthKind::general) {
        *cert = promote_certificate(x, *cert, bound);
        if (cert->kind == GrowthKind::general)
            out.warnings.push_back("no uniform step within scan bound; factor is provisional");
    }
    out.q = cert->q;
    out.kind = cert->kind;
    out.paper_q = tabulated_growth_step(spec);

    // Does the tabulated step satisfy the difference identity of this kind?
    {
        ChebContext ctx(x);
        IntMatrix diff = ctx.eval(out.paper_q) - ctx.eval(out.paper_q - 2);
        IntMatrix target = cert->kind == GrowthKind::reversal
                               ? IntMatrix::antidiagonal_identity(x.dim()).scaled(2)
                               : IntMatrix::identity(x.dim()).scaled(2);
        out.paper_step_valid = (diff == target);
    }
    if (out.q != out.paper_q) {
        out.warnings.push_back("certified step q=" + std::to_string(out.q) +
                               " differs from tabulated q=" + std::to_string(out.paper_q) +
                               (out.paper_step_valid ? " (tabulated step is valid but not minimal)"
                                                     : " (tabulated step fails its difference identity)"));
    }
    if (spec.family == DiagramFamily::LTilde)
        out.warnings.push_back(
            "reversal certificate: resolution terms beyond the base window use the row-reversed "
            "combination of earlier terms");
    return out;
}

}  // namespace chebmat
