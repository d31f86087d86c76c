#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "errors.hpp"

// Finite-alphabet probability and channel algebra. Everything in here is an
// immutable value type; all operations are pure.
//
// Conventions used throughout the library:
//   - channel matrices are column-stochastic: columns are indexed by input
//     symbols, rows by output symbols, entry(y, x) = w(y|x)
//   - product alphabets are ordered lexicographically with the first factor
//     as the major index
//   - information quantities are in bits (log base 2), with 0*log(0) = 0

namespace avck {

inline constexpr double kStochTol = 1e-12;  // stochasticity validation
inline constexpr double kOptTol = 1e-9;     // optimization-level assertions

/// A probability distribution on a finite alphabet.
class ProbVector {
 public:
  ProbVector() = default;

  /// Validates nonnegativity and normalization (sum within 1e-12 of one).
  explicit ProbVector(std::vector<double> entries);

  /// Point mass on `index` in an alphabet of the given size.
  static ProbVector dirac(std::size_t index, std::size_t size);

  /// Uniform distribution on an alphabet of the given size.
  static ProbVector uniform(std::size_t size);

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  std::vector<double> entries_;
};

/// A column-stochastic transition matrix w(y|x) between finite alphabets.
class Channel {
 public:
  Channel() = default;

  /// `matrix` is row-major with dimensions output_size x input_size.
  /// Validates entries in [0,1] and unit column sums (tolerance 1e-12).
  Channel(std::size_t input_size, std::size_t output_size, std::vector<double> matrix);

  std::size_t input_size() const { return input_size_; }
  std::size_t output_size() const { return output_size_; }

  /// w(y|x)
  double operator()(std::size_t y, std::size_t x) const {
    return matrix_[y * input_size_ + x];
  }

  /// The column w(.|x) as a distribution over outputs.
  ProbVector column(std::size_t x) const;

  /// Pushforward of an input distribution: (W p)(y) = sum_x w(y|x) p(x).
  ProbVector apply(const ProbVector& p) const;

  bool operator==(const Channel& other) const = default;

 private:
  std::size_t input_size_ = 0;
  std::size_t output_size_ = 0;
  std::vector<double> matrix_;  // row-major, output-major
};

/// A real 2x2 linear map whose columns sum to one. Entries may be negative,
/// so this is generally not a channel; it preserves affine combinations of
/// the two basis weights.
struct LinearMap2 {
  // row-major: {a00, a01, a10, a11}
  std::array<double, 4> m;

  double operator()(std::size_t r, std::size_t c) const { return m[r * 2 + c]; }
};

/// Binary symmetric channel with w(0|0) = w(1|1) = w (crossover 1-w).
Channel make_bsc(double w);

/// The 2x2 bit-flip channel.
Channel make_flip();

/// The identity channel on an alphabet of `size` symbols.
Channel make_identity(std::size_t size);

/// Serial composition: apply `b` first, then `a` (matrix product a*b).
Channel compose(const Channel& a, const Channel& b);

/// Parallel composition (Kronecker product). Input and output alphabets are
/// the Cartesian products with the first factor as the major index.
Channel tensor(const Channel& a, const Channel& b);

/// Mutual information I(p; W) in bits of the joint law p(x) w(y|x).
double mutual_information(const ProbVector& p, const Channel& w);

/// Shannon entropy in bits.
double entropy(const ProbVector& p);

/// The map V^-1 F V where V has columns (w1, 1-w1), (w2, 1-w2) and F is the
/// bit flip: the change of state weights induced by flipping both channel
/// outputs. Requires w1 != w2 (V must be invertible).
LinearMap2 flip_conjugation(double w1, double w2);

}  // namespace avck
