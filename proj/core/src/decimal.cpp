#include "netclass/decimal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace netclass {

namespace {

constexpr int kMaxSignificant = 18;

struct RawDecimal {
  bool negative = false;
  std::string digits;  // integer and fraction digits concatenated
  int frac_len = 0;
};

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

RawDecimal split_token(const std::string& token) {
  RawDecimal raw;
  std::string body = token;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    raw.negative = body[0] == '-';
    body.erase(body.begin());
  }
  auto dot = body.find('.');
  std::string int_part = dot == std::string::npos ? body : body.substr(0, dot);
  std::string frac_part = dot == std::string::npos ? "" : body.substr(dot + 1);
  if (!all_digits(int_part) || (dot != std::string::npos && !all_digits(frac_part))) {
    throw InputError("malformed number '" + token + "'");
  }
  raw.digits = int_part + frac_part;
  raw.frac_len = static_cast<int>(frac_part.size());
  auto first = raw.digits.find_first_not_of('0');
  int significant =
      first == std::string::npos ? 0 : static_cast<int>(raw.digits.size() - first);
  if (significant > kMaxSignificant) {
    throw InputError("number '" + token + "' exceeds 18 significant digits");
  }
  return raw;
}

}  // namespace

ScaledDecimals parse_decimals(const std::vector<std::string>& tokens) {
  std::vector<RawDecimal> raw;
  raw.reserve(tokens.size());
  int max_frac = 0;
  for (const std::string& t : tokens) {
    raw.push_back(split_token(t));
    max_frac = std::max(max_frac, raw.back().frac_len);
  }
  ScaledDecimals out;
  out.scale = 1;
  for (int i = 0; i < max_frac; ++i) out.scale *= 10;
  constexpr long long kLimit = 1000000000000000000LL;  // 1e18
  out.values.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    long long v = 0;
    for (char c : raw[i].digits) v = v * 10 + (c - '0');
    for (int k = raw[i].frac_len; k < max_frac; ++k) {
      if (v >= kLimit / 10 + 1) {
        throw InputError("number '" + tokens[i] + "' out of range at shared scale");
      }
      v *= 10;
    }
    if (v >= kLimit) {
      throw InputError("number '" + tokens[i] + "' out of range at shared scale");
    }
    out.values.push_back(raw[i].negative ? -v : v);
  }
  return out;
}

long long parse_integer_token(const std::string& token) {
  std::string body = token;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.erase(body.begin());
  }
  if (!all_digits(body) || body.size() > 18) {
    throw InputError("malformed integer '" + token + "'");
  }
  long long v = 0;
  for (char c : body) v = v * 10 + (c - '0');
  return negative ? -v : v;
}

std::string decimal_to_string(Cost value, long long scale) {
  if (scale < 1) throw InternalError("decimal scale must be positive");
  int frac_len = 0;
  long long s = scale;
  while (s > 1) {
    if (s % 10 != 0) throw InternalError("decimal scale must be a power of ten");
    s /= 10;
    ++frac_len;
  }
  bool negative = value < 0;
  unsigned long long mag =
      negative ? -static_cast<unsigned long long>(value) : static_cast<unsigned long long>(value);
  unsigned long long uscale = static_cast<unsigned long long>(scale);
  std::string out = std::to_string(mag / uscale);
  if (frac_len > 0) {
    std::string frac = std::to_string(mag % uscale);
    out += '.';
    out += std::string(frac_len - frac.size(), '0');
    out += frac;
  }
  return negative ? "-" + out : out;
}

}  // namespace netclass
