#include "weilcert/rational.hpp"

#include <cctype>

#include "weilcert/errors.hpp"

namespace weilcert {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  return Rat(mpq_class(1) / q_);
}

Rat Rat::pow(long e) const {
  Rat base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
  return Rat(n, d);
}

Rat Rat::from_string(std::string_view text) {
  // int [ "/" posint ]
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t end = digits(i);
  if (end == i) throw ParseError("expected integer", i);
  mpz_class num(std::string(text.substr(0, end)).c_str() + (text[0] == '+' ? 1 : 0), 10);
  if (end == text.size()) return Rat(num, 1);
  if (text[end] != '/') throw ParseError("unexpected character", end);
  std::size_t dstart = end + 1;
  std::size_t dend = digits(dstart);
  if (dend == dstart) throw ParseError("expected positive denominator", dstart);
  if (dend != text.size()) throw ParseError("unexpected character", dend);
  mpz_class den(std::string(text.substr(dstart, dend - dstart)), 10);
  if (den == 0) throw ParseError("zero denominator", dstart);
  return Rat(num, den);
}

}  // namespace weilcert
