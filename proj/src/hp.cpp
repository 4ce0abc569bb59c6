#include "cvsim/hp/complex.hpp"

#include <stdexcept>

namespace cvsim::hp {

namespace {

// position of the sign splitting real and imaginary parts (skips exponent signs)
size_t split_pos(const std::string& body) {
  for (size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') return i;
  }
  throw std::invalid_argument("hp::Complex: malformed \"" + body + "\"");
}

}  // namespace

Complex complex_from_string(const std::string& s) {
  size_t at = s.rfind('@');
  if (at == std::string::npos || s.empty() || s.back() == '@')
    throw std::invalid_argument("hp::Complex: missing precision annotation in \"" + s + "\"");
  Precision bits = std::stol(s.substr(at + 1));
  std::string body = s.substr(0, at);
  if (body.empty() || body.back() != 'i')
    throw std::invalid_argument("hp::Complex: missing imaginary unit in \"" + s + "\"");
  body.pop_back();
  size_t pos = split_pos(body);
  Real re(body.substr(0, pos), bits);
  Real im(body.substr(pos), bits);
  return Complex(re, im);
}

}  // namespace cvsim::hp
