#include "kkm/rational.hpp"

#include "kkm/errors.hpp"

#include <cctype>

namespace kkm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);

  bool negative = false;
  if (!trimmed.empty() && (trimmed.front() == '-' || trimmed.front() == '+')) {
    negative = trimmed.front() == '-';
    trimmed.remove_prefix(1);
  }
  auto slash = trimmed.find('/');
  auto num_text = trimmed.substr(0, slash);
  auto den_text = slash == std::string_view::npos ? std::string_view("1") : trimmed.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw InvalidInput("not an exact rational: '" + std::string(text) + "'");
  }
  boost::multiprecision::mpz_int num{std::string(num_text)};
  boost::multiprecision::mpz_int den{std::string(den_text)};
  if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  Rational value(num, den);  // canonicalized by the backend
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) { return value.str(); }

int sign(const Rational& value) { return value.sign(); }

RationalPoint RationalPoint::operator-(const RationalPoint& other) const {
  std::vector<Rational> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] - other.coords_[i];
  return RationalPoint(std::move(out));
}

RationalPoint RationalPoint::operator+(const RationalPoint& other) const {
  std::vector<Rational> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] + other.coords_[i];
  return RationalPoint(std::move(out));
}

RationalPoint RationalPoint::operator*(const Rational& factor) const {
  std::vector<Rational> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = coords_[i] * factor;
  return RationalPoint(std::move(out));
}

RationalPoint parse_point(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coords.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RationalPoint(std::move(coords));
}

std::string format_point(const RationalPoint& point) {
  std::string out;
  for (std::size_t i = 0; i < point.dim(); ++i) {
    if (i) out += ',';
    out += format_rational(point[i]);
  }
  return out;
}

RationalPoint combine(std::span<const RationalPoint> points, std::span<const Rational> weights) {
  if (points.empty()) return {};
  std::vector<Rational> out(points.front().dim());
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (weights[k] == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += weights[k] * points[k][i];
  }
  return RationalPoint(std::move(out));
}

Rational dot(const RationalPoint& a, const RationalPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational determinant(std::vector<std::vector<Rational>> rows) {
  const std::size_t n = rows.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[col][c];
    }
  }
  return det;
}

}  // namespace kkm
