#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace zosc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input data (zero tables, grids).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not meet its error budget.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Neumaier's variant of Kahan summation.
template <class T>
class BasicCompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  BasicCompensatedSum& operator+=(T x) {
    add(x);
    return *this;
  }
  BasicCompensatedSum& operator+=(const BasicCompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
    return *this;
  }
  [[nodiscard]] T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

using CompensatedSum = BasicCompensatedSum<double>;

class CompensatedComplexSum {
 public:
  void add(cplx z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  CompensatedComplexSum& operator+=(cplx z) {
    add(z);
    return *this;
  }
  CompensatedComplexSum& operator+=(const CompensatedComplexSum& other) {
    re_ += other.re_;
    im_ += other.im_;
    return *this;
  }
  [[nodiscard]] cplx value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// Worker count used by the parallel loops of the library. 0 selects the
/// hardware concurrency. Results never depend on this value.
void set_thread_count(unsigned n);
[[nodiscard]] unsigned thread_count();

}  // namespace zosc
