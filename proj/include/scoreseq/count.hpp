#ifndef SCORESEQ_COUNT_HPP
#define SCORESEQ_COUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace scoreseq {

// Arbitrary-precision nonnegative integer; every counting result uses it.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

} // namespace scoreseq

#endif
