#include "trapgame/rational.hpp"

#include <cctype>

namespace trapgame {

std::string rat_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses an optionally signed integer or decimal literal into an exact
// rational. Returns false on malformed input.
bool parse_decimal(const std::string& s, Rat& out) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body.erase(0, 1);
  }
  auto dot = body.find('.');
  std::string ipart = dot == std::string::npos ? body : body.substr(0, dot);
  std::string fpart = dot == std::string::npos ? "" : body.substr(dot + 1);
  if (ipart.empty() && fpart.empty()) return false;
  if (!ipart.empty() && !all_digits(ipart)) return false;
  if (!fpart.empty() && !all_digits(fpart)) return false;
  Int num = ipart.empty() ? Int(0) : Int(ipart);
  Int den = 1;
  for (char c : fpart) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  out = Rat(num, den);
  if (neg) out = -out;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  Rat result;
  if (slash == std::string::npos) {
    if (!parse_decimal(text, result)) {
      throw std::invalid_argument("not a rational literal: '" + text + "'");
    }
    return result;
  }
  Rat num, den;
  if (!parse_decimal(text.substr(0, slash), num) ||
      !parse_decimal(text.substr(slash + 1), den) || den == 0) {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
  return num / den;
}

}  // namespace trapgame
