#include "ballseq/count.hpp"

#include <algorithm>
#include <cctype>

namespace ballseq {

Count::Count(const std::string& decimal) {
  if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(), [](unsigned char ch) {
        return std::isdigit(ch) != 0;
      })) {
    throw std::invalid_argument("not a decimal count: '" + decimal + "'");
  }
  value_ = SignedCount(decimal);
}

Count power(std::uint64_t base, std::uint64_t exp) {
  if (exp == 0) return Count(1U);
  return Count(boost::multiprecision::pow(SignedCount(base), static_cast<unsigned>(exp)));
}

}  // namespace ballseq
