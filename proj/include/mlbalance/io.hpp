#pragma once

#include <string>

namespace mlbalance {

// Decimal rendering used by every table writer: 12 significant digits,
// '.' decimal separator, no locale dependence.
std::string format_value(double x);

}  // namespace mlbalance
