#pragma once

#include <deque>
#include <vector>

#include "chebmat/int_matrix.hpp"

namespace chebmat {

// Evaluation cache for the second-kind Chebyshev sequence
//   f_{-1} = 0,  f_0 = I,  f_1 = X,  f_{k+1} = X f_k - f_{k-1}
// with a fixed base matrix X substituted for the indeterminate.
//
// Single-writer cache: reads of already-computed entries are safe from any
// thread, but extension (eval with a larger k) must be confined to one
// owner at a time. References returned by eval stay valid for the lifetime
// of the context.
class ChebContext {
public:
    explicit ChebContext(IntMatrix base);

    // f_k(X) for k >= -1, extending the cache as needed. Idempotent.
    const IntMatrix& eval(long k);

    // [f_0(X), ..., f_{k_max}(X)], k_max >= 0.
    std::vector<IntMatrix> seq(long k_max);

    const IntMatrix& base() const { return base_; }

    // Highest index computed so far.
    long cached_max() const { return static_cast<long>(cache_.size()) - 2; }

private:
    IntMatrix base_;
    std::deque<IntMatrix> cache_;  // cache_[k + 1] = f_k
};

// One-shot evaluation without keeping a cache around.
IntMatrix cheb_eval(const IntMatrix& x, long k);

}  // namespace chebmat
