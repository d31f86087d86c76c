#include "channel.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace avck {

namespace {

double xlog2x(double x) {
  return x > 0.0 ? x * std::log2(x) : 0.0;
}

}  // namespace

ProbVector::ProbVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw domain_error("ProbVector: empty alphabet");
  double sum = 0.0;
  for (double v : entries_) {
    if (!(v >= 0.0)) throw domain_error("ProbVector: negative entry " + std::to_string(v));
    sum += v;
  }
  if (std::abs(sum - 1.0) > kStochTol)
    throw domain_error("ProbVector: entries sum to " + std::to_string(sum));
}

ProbVector ProbVector::dirac(std::size_t index, std::size_t size) {
  if (index >= size) throw domain_error("ProbVector::dirac: index out of range");
  std::vector<double> v(size, 0.0);
  v[index] = 1.0;
  return ProbVector(std::move(v));
}

ProbVector ProbVector::uniform(std::size_t size) {
  if (size == 0) throw domain_error("ProbVector::uniform: empty alphabet");
  return ProbVector(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

Channel::Channel(std::size_t input_size, std::size_t output_size, std::vector<double> matrix)
    : input_size_(input_size), output_size_(output_size), matrix_(std::move(matrix)) {
  if (input_size_ == 0 || output_size_ == 0)
    throw domain_error("Channel: empty alphabet");
  if (matrix_.size() != input_size_ * output_size_)
    throw domain_error("Channel: matrix size does not match alphabets");
  for (std::size_t x = 0; x < input_size_; ++x) {
    double col = 0.0;
    for (std::size_t y = 0; y < output_size_; ++y) {
      double v = (*this)(y, x);
      if (!(v >= 0.0 && v <= 1.0))
        throw domain_error("Channel: entry outside [0,1]: " + std::to_string(v));
      col += v;
    }
    if (std::abs(col - 1.0) > kStochTol)
      throw domain_error("Channel: column " + std::to_string(x) + " sums to " +
                         std::to_string(col));
  }
}

ProbVector Channel::column(std::size_t x) const {
  if (x >= input_size_) throw domain_error("Channel::column: input out of range");
  std::vector<double> v(output_size_);
  for (std::size_t y = 0; y < output_size_; ++y) v[y] = (*this)(y, x);
  return ProbVector(std::move(v));
}

ProbVector Channel::apply(const ProbVector& p) const {
  if (p.size() != input_size_)
    throw domain_error("Channel::apply: distribution/input dimension mismatch");
  std::vector<double> out(output_size_, 0.0);
  for (std::size_t x = 0; x < input_size_; ++x) {
    double px = p[x];
    if (px == 0.0) continue;
    for (std::size_t y = 0; y < output_size_; ++y) out[y] += px * (*this)(y, x);
  }
  // clamp away accumulation dust so the result re-validates
  for (double& v : out) {
    if (v < 0.0) v = 0.0;
  }
  double sum = std::accumulate(out.begin(), out.end(), 0.0);
  for (double& v : out) v /= sum;
  return ProbVector(std::move(out));
}

Channel make_bsc(double w) {
  if (!(w >= 0.0 && w <= 1.0))
    throw domain_error("make_bsc: parameter outside [0,1]: " + std::to_string(w));
  return Channel(2, 2, {w, 1.0 - w, 1.0 - w, w});
}

Channel make_flip() { return make_bsc(0.0); }

Channel make_identity(std::size_t size) {
  std::vector<double> m(size * size, 0.0);
  for (std::size_t i = 0; i < size; ++i) m[i * size + i] = 1.0;
  return Channel(size, size, std::move(m));
}

Channel compose(const Channel& a, const Channel& b) {
  if (a.input_size() != b.output_size())
    throw domain_error("compose: inner dimensions do not match");
  std::size_t in = b.input_size(), out = a.output_size(), mid = a.input_size();
  std::vector<double> m(in * out, 0.0);
  for (std::size_t y = 0; y < out; ++y)
    for (std::size_t x = 0; x < in; ++x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < mid; ++k) acc += a(y, k) * b(k, x);
      m[y * in + x] = std::min(1.0, std::max(0.0, acc));
    }
  return Channel(in, out, std::move(m));
}

Channel tensor(const Channel& a, const Channel& b) {
  std::size_t in = a.input_size() * b.input_size();
  std::size_t out = a.output_size() * b.output_size();
  std::vector<double> m(in * out);
  for (std::size_t ya = 0; ya < a.output_size(); ++ya)
    for (std::size_t yb = 0; yb < b.output_size(); ++yb)
      for (std::size_t xa = 0; xa < a.input_size(); ++xa)
        for (std::size_t xb = 0; xb < b.input_size(); ++xb) {
          std::size_t y = ya * b.output_size() + yb;
          std::size_t x = xa * b.input_size() + xb;
          m[y * in + x] = a(ya, xa) * b(yb, xb);
        }
  return Channel(in, out, std::move(m));
}

double mutual_information(const ProbVector& p, const Channel& w) {
  if (p.size() != w.input_size())
    throw domain_error("mutual_information: distribution/input dimension mismatch");
  std::size_t nx = w.input_size(), ny = w.output_size();
  std::vector<double> out(ny, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) out[y] += p[x] * w(y, x);
  double info = 0.0;
  for (std::size_t x = 0; x < nx; ++x) {
    if (p[x] == 0.0) continue;
    for (std::size_t y = 0; y < ny; ++y) {
      double wyx = w(y, x);
      if (wyx > 0.0) info += p[x] * wyx * std::log2(wyx / out[y]);
    }
  }
  return info > 0.0 ? info : 0.0;
}

double entropy(const ProbVector& p) {
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) h -= xlog2x(p[i]);
  return h;
}

LinearMap2 flip_conjugation(double w1, double w2) {
  double det = w1 - w2;
  if (det == 0.0)
    throw domain_error("flip_conjugation: equal parameters, state basis is singular");
  return LinearMap2{{(1.0 - w1 - w2) / det, (1.0 - 2.0 * w2) / det,
                     (-1.0 + 2.0 * w1) / det, (-1.0 + w1 + w2) / det}};
}

}  // namespace avck
