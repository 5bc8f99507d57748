#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "corekit/hooks.hpp"

namespace corekit {

// Hook tables serialize as an array of row arrays.
std::string hook_table_to_json(const HookTable& t);
HookTable hook_table_from_json(const std::string& text);

// Big-integer sets serialize as arrays of decimal strings.
std::string integer_set_to_json(const std::vector<mpz_class>& values);
std::vector<mpz_class> integer_set_from_json(const std::string& text);

}  // namespace corekit
