/// @file probability.cpp
#include "rbdkit/probability.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "rbdkit/error.hpp"

namespace rbdkit {
namespace {

double checked(double x, const char* what) {
  if (std::isnan(x) || x < -Probability::kTolerance ||
      x > 1.0 + Probability::kTolerance) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    throw ValidationError(std::string(what) + " " +
                          std::string(buf, res.ptr) + " is outside [0, 1]");
  }
  if (x < 0.0) return 0.0;
  if (x > 1.0) return 1.0;
  return x;
}

}  // namespace

double decimal_complement(double x) {
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;

  // x = D * 10^-places, D an integer whose digits come from the shortest
  // scientific representation "d.ddde-XX".
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x,
                           std::chars_format::scientific);
  std::string repr(buf, res.ptr);
  auto e_pos = repr.find('e');
  std::string mantissa = repr.substr(0, e_pos);
  int exponent = std::stoi(repr.substr(e_pos + 1));
  std::string digits;
  for (char c : mantissa)
    if (c != '.') digits += c;
  // x < 1 so exponent < 0 and places > 0.
  int places = static_cast<int>(digits.size()) - 1 - exponent;
  std::string padded(places - digits.size(), '0');
  padded += digits;

  // 10^places - D, computed as (nines complement of D) + 1.
  std::string result(padded.size(), '0');
  for (std::size_t i = 0; i < padded.size(); ++i)
    result[i] = static_cast<char>('9' - (padded[i] - '0'));
  for (std::size_t i = result.size(); i-- > 0;) {
    if (result[i] == '9') {
      result[i] = '0';
    } else {
      ++result[i];
      break;
    }
  }
  result += "e-" + std::to_string(places);

  double out = 0.0;
  std::from_chars(result.data(), result.data() + result.size(), out);
  return out;
}

Probability::Probability(double value)
    : value_(checked(value, "probability")),
      complement_(decimal_complement(value_)) {}

Probability Probability::from_complement(double complement) {
  return ~Probability(complement);
}

Probability Probability::from_parts(double value, double complement) {
  Probability p;
  p.value_ = checked(value, "probability");
  p.complement_ = checked(complement, "complement");
  // An exact zero on either side is a certainty; rounding on the other side
  // must not contradict it.
  if (p.complement_ == 0.0) p.value_ = 1.0;
  else if (p.value_ == 0.0) p.complement_ = 1.0;
  return p;
}

}  // namespace rbdkit
