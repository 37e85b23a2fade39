#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace unavoidable {

/// Exact nonnegative integer for the tower constants. Subtraction is never
/// used on these quantities, so the signed backend is only a carrier.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace unavoidable
