#pragma once

#include <stdexcept>
#include <string>

namespace lestab {

// Error taxonomy shared by the whole library:
//   domain_error        invalid input object (bad weights, constraint not met)
//   parameter_error     scalar parameter outside its admissible range
//   shape_error         mismatched vector lengths
//   unsupported_regime  certificate requested outside a proved (family, q, alpha) range
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : error {
    using error::error;
};

struct parameter_error : error {
    using error::error;
};

struct shape_error : error {
    using error::error;
};

struct unsupported_regime : error {
    using error::error;
};

} // namespace lestab
