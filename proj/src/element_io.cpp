#include "weilcert/element_io.hpp"

#include <cctype>

#include "weilcert/errors.hpp"

namespace weilcert {

namespace {

class QuadParser {
 public:
  QuadParser(std::string_view text, long d) : text_(text), d_(d) {}

  Quad parse() {
    if (text_.empty()) throw ParseError("empty element", 0);
    Rat a = rat(true);
    if (pos_ == text_.size()) return Quad::rational(a, d_);
    char op = text_[pos_];
    if (op != '+' && op != '-') unexpected();
    ++pos_;
    Rat b = rat(false);
    expect('*');
    if (pos_ >= text_.size()) throw ParseError("expected 's'", pos_);
    if (text_[pos_] != 's') {
      if (std::isalpha(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(std::string("out-of-field symbol '") + text_[pos_] + "'", pos_);
      unexpected();
    }
    ++pos_;
    if (pos_ != text_.size()) unexpected();
    return Quad(a, op == '-' ? -b : b, d_);
  }

 private:
  [[noreturn]] void unexpected() const {
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(std::string("out-of-field symbol '") + text_[pos_] + "'", pos_);
    throw ParseError("unexpected character", pos_);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::size_t digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) {
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) unexpected();
      throw ParseError("expected integer", start);
    }
    return start;
  }

  Rat rat(bool allow_sign) {
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t start = digits();
    mpz_class num(std::string(text_.substr(start, pos_ - start)), 10);
    mpz_class den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = digits();
      den = mpz_class(std::string(text_.substr(dstart, pos_ - dstart)), 10);
      if (den == 0) throw ParseError("zero denominator", dstart);
    }
    return Rat(negative ? mpz_class(-num) : num, den);
  }

  std::string_view text_;
  long d_;
  std::size_t pos_ = 0;
};

}  // namespace

Quad parse_quad(std::string_view text, long d) { return QuadParser(text, d).parse(); }

TowerElt parse_element(std::string_view text, const FieldRef& field) {
  return TowerElt(field, parse_quad(text, field->d()));
}

nlohmann::json tower_to_json(const TowerElt& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Quad& c : x.coeffs()) arr.push_back(c.to_string());
  return arr;
}

TowerElt tower_from_json(const nlohmann::json& j, const FieldRef& field) {
  if (!j.is_array()) throw ParseError("tower element must be a JSON array", 0);
  std::vector<Quad> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_quad(c.get<std::string>(), field->d()));
  if (coeffs.size() != static_cast<std::size_t>(field->degree()))
    throw ParseError("tower element has wrong length", coeffs.size());
  return TowerElt(field, std::move(coeffs));
}

nlohmann::json element_to_json(const TowerElt& x) {
  if (x.in_quadratic_subfield()) return x.coeffs()[0].to_string();
  return tower_to_json(x);
}

TowerElt element_from_json(const nlohmann::json& j, const FieldRef& field) {
  if (j.is_string()) return parse_element(j.get<std::string>(), field);
  return tower_from_json(j, field);
}

}  // namespace weilcert
