#include "kfib/rational.hpp"

#include <cctype>
#include <cstddef>

#include "kfib/errors.hpp"

namespace kfib {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  if (body.empty()) throw usage_error("empty rational literal: '" + text + "'");

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw usage_error("malformed rational literal: '" + text + "'");
    }
    Integer d{den};
    if (d == 0) throw usage_error("zero denominator in '" + text + "'");
    value = Rational(Integer(num)) / Rational(d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    const std::string whole = body.substr(0, dot);
    const std::string frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw usage_error("malformed decimal literal: '" + text + "'");
    }
    Integer scale{1};
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer digits{(whole.empty() ? std::string{"0"} : whole) + frac};
    value = Rational(digits) / Rational(scale);
  } else {
    if (!all_digits(body)) {
      throw usage_error("malformed rational literal: '" + text + "'");
    }
    value = Rational(Integer(body));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  const Integer num_root = sqrt(num);
  const Integer den_root = sqrt(den);
  if (num_root * num_root != num || den_root * den_root != den) {
    return std::nullopt;
  }
  return Rational(num_root) / Rational(den_root);
}

}  // namespace kfib
