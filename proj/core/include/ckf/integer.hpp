#ifndef CKF_INTEGER_HPP_
#define CKF_INTEGER_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace ckf {

// Arbitrary precision; every count in this library is exact.
using Integer = boost::multiprecision::cpp_int;

} // namespace ckf

#endif
