#include "mlbalance/io.hpp"

#include <cstdio>

namespace mlbalance {

std::string format_value(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace mlbalance
