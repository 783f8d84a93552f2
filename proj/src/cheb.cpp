#include "chebmat/cheb.hpp"

#include <utility>

namespace chebmat {

ChebContext::ChebContext(IntMatrix base) : base_(std::move(base)) {
    const int n = base_.dim();
    cache_.push_back(IntMatrix::zero(n));      // f_{-1}
    cache_.push_back(IntMatrix::identity(n));  // f_0
    cache_.push_back(base_);                   // f_1
}

const IntMatrix& ChebContext::eval(long k) {
    if (k < -1) throw range_error("Chebyshev index must be >= -1, got " + std::to_string(k));
    while (cached_max() < k) {
        const IntMatrix& prev = cache_[cache_.size() - 1];
        const IntMatrix& prev2 = cache_[cache_.size() - 2];
        cache_.push_back(base_ * prev - prev2);
    }
    return cache_[static_cast<size_t>(k + 1)];
}

std::vector<IntMatrix> ChebContext::seq(long k_max) {
    if (k_max < 0) throw range_error("sequence bound must be >= 0, got " + std::to_string(k_max));
    eval(k_max);
    std::vector<IntMatrix> out;
    out.reserve(static_cast<size_t>(k_max) + 1);
    for (long k = 0; k <= k_max; ++k) out.push_back(cache_[static_cast<size_t>(k + 1)]);
    return out;
}

IntMatrix cheb_eval(const IntMatrix& x, long k) {
    ChebContext ctx(x);
    return ctx.eval(k);
}

}  // namespace chebmat
