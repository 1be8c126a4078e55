#include "qpd/angle.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <vector>

namespace qpd {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Angle Angle::pi_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("angle: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  Angle a;
  a.symbolic_ = true;
  a.num_ = g == 0 ? 0 : num / g;
  a.den_ = g == 0 ? 1 : den / g;
  if (a.num_ == 0) a.den_ = 1;
  return a;
}

Angle Angle::from_radians(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("angle: non-finite value");
  if (value == 0.0) return pi_fraction(0);
  Angle a;
  a.symbolic_ = false;
  a.value_ = value;
  return a;
}

Angle Angle::parse(std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) throw std::invalid_argument("angle: empty string");

  static const std::regex kSymbolic(R"(^([+-]?)(\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?$)",
                                    std::regex::icase);
  std::smatch m;
  if (std::regex_match(s, m, kSymbolic)) {
    std::int64_t num = m[2].length() > 0 ? std::stoll(m[2].str()) : 1;
    const std::int64_t den = m[3].matched ? std::stoll(m[3].str()) : 1;
    if (m[1].str() == "-") num = -num;
    return pi_fraction(num, den);
  }

  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("angle: cannot parse '" + s +
                                "' (expected e.g. 0, pi, -pi/2, 3pi/4, 0.25)");
  }
  return from_radians(value);
}

double Angle::radians() const {
  if (!symbolic_) return value_;
  return static_cast<double>(num_) * kPi / static_cast<double>(den_);
}

std::string Angle::str() const {
  if (!symbolic_) return format_double(value_);
  if (num_ == 0) return "0";
  std::string out;
  if (num_ < 0) out += '-';
  const std::int64_t mag = num_ < 0 ? -num_ : num_;
  if (mag != 1) out += std::to_string(mag);
  out += "pi";
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

bool operator==(const Angle& a, const Angle& b) {
  if (a.symbolic_ && b.symbolic_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.radians() == b.radians();
}

std::array<Angle, 3> parse_angle_triple(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3) {
    throw std::invalid_argument("expected three comma-separated angles 'theta,alpha,beta', got '" +
                                std::string(text) + "'");
  }
  return {Angle::parse(parts[0]), Angle::parse(parts[1]), Angle::parse(parts[2])};
}

std::array<Angle, 2> parse_angle_pair(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 2) {
    throw std::invalid_argument("expected two comma-separated angles, got '" +
                                std::string(text) + "'");
  }
  return {Angle::parse(parts[0]), Angle::parse(parts[1])};
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

}  // namespace qpd
