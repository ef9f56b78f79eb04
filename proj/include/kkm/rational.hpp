#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kkm {

using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "p" or a signed variant. Decimals are rejected; the result
/// is canonical (lowest terms, positive denominator).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

int sign(const Rational& value);

/// A point of d-space with exact rational coordinates.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalPoint(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  RationalPoint operator-(const RationalPoint& other) const;
  RationalPoint operator+(const RationalPoint& other) const;
  RationalPoint operator*(const Rational& factor) const;

  bool operator==(const RationalPoint& other) const { return coords_ == other.coords_; }
  bool operator<(const RationalPoint& other) const { return coords_ < other.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Parses a comma-separated coordinate list such as "3/10,3/10".
RationalPoint parse_point(std::string_view text);
std::string format_point(const RationalPoint& point);

/// Affine combination sum_i weights[i] * points[i].
RationalPoint combine(std::span<const RationalPoint> points, std::span<const Rational> weights);

Rational dot(const RationalPoint& a, const RationalPoint& b);

/// Determinant of a small square matrix given as rows (exact elimination).
Rational determinant(std::vector<std::vector<Rational>> rows);

}  // namespace kkm
