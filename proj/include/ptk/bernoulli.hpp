#ifndef PTK_BERNOULLI_HPP
#define PTK_BERNOULLI_HPP

#include <vector>

#include "ptk/padic.hpp"

namespace ptk {

// Exact Bernoulli numbers (B_1 = -1/2), computed by the defining recurrence
// and cached per instance.
class BernoulliTable {
  public:
    const Rat& get(int n);

  private:
    std::vector<Rat> b_;
};

} // namespace ptk

#endif
