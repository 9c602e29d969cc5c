#include "hitlab/rational.hpp"

#include "hitlab/error.hpp"

namespace hitlab {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::InvalidParams, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_fraction(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

double to_double(const BigRational& q) { return q.get_d(); }

}  // namespace hitlab
