#ifndef CKF_TESTS_SUPPORT_HPP_
#define CKF_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ckf/catalog.hpp"

#ifndef CKF_TEST_DATA_DIR
#error "CKF_TEST_DATA_DIR must point at the shipped data directory"
#endif

namespace ckf::testing {

inline std::string data_dir() { return CKF_TEST_DATA_DIR; }

inline const Catalog& shipped() {
  static const Catalog c = load_catalog_path(data_dir());
  return c;
}

// Number of sub-multisets of `parts` summing to `target`, by enumerating
// all 2^k index subsets.
inline std::uint64_t subset_sum_count(const std::vector<int>& parts, long target) {
  const std::size_t k = parts.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    long s = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (std::uint64_t{1} << j)) s += parts[j];
    if (s == target) ++count;
  }
  return count;
}

} // namespace ckf::testing

#endif
