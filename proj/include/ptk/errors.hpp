#ifndef PTK_ERRORS_HPP
#define PTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptk {

// Domain errors: the requested value does not exist (bad prime, log of zero,
// point not on the curve, unsupported residue disk, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Precision errors: the value exists but cannot be pinned down at the
// precision carried by the inputs (division by a value indistinguishable
// from zero, precision collapse below the floor).
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resource errors: an enumeration or search budget was exhausted before the
// computation could be decided.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ptk

#endif
