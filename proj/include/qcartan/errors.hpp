#ifndef QCARTAN_ERRORS_HPP
#define QCARTAN_ERRORS_HPP

#include <stdexcept>

namespace qcartan
{

// Raised when an internal identity that must hold by construction fails
// (non-exact division, a non-integral A_j(d), an LLT column that never
// reaches q*Z[q] form). Never expected on correct inputs.
class consistency_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace qcartan

#endif
