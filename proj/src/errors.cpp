#include "oscinfo/errors.hpp"

namespace oscinfo {

NumericError::NumericError(const std::string& what, double achieved)
    : std::runtime_error(what), achieved_(achieved) {}

}  // namespace oscinfo
