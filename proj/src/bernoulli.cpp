#include "ptk/bernoulli.hpp"

#include "ptk/padic_series.hpp"

namespace ptk {

const Rat& BernoulliTable::get(int n) {
    if (n < 0) throw domain_error("bernoulli: negative index");
    if (b_.empty()) b_.push_back(Rat(1));
    while (static_cast<int>(b_.size()) <= n) {
        long long m = static_cast<long long>(b_.size());
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        Rat s = 0;
        for (long long k = 0; k < m; ++k)
            s += Rat(binomial_int(m + 1, k)) * b_[static_cast<size_t>(k)];
        b_.push_back(-s / Rat(m + 1));
    }
    return b_[static_cast<size_t>(n)];
}

} // namespace ptk
