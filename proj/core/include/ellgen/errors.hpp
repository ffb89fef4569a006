#pragma once

#include <stdexcept>
#include <string>

namespace ellgen {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exact division left a nonzero remainder at q-order `order()`.
///
/// For the Kummer pipeline this means the dividend is not a multiple of
/// psi^2 at the computed order, which would contradict the weak Jacobi
/// form divisibility of the Hecke image.
class NonExactDivision : public Error {
 public:
  explicit NonExactDivision(int order)
      : Error("non-exact division at q-order " + std::to_string(order)),
        order_(order) {}
  int order() const noexcept { return order_; }

 private:
  int order_;
};

class NegativePowers : public Error {
 public:
  using Error::Error;
};

class NotUnit : public Error {
 public:
  using Error::Error;
};

class NonzeroConstant : public Error {
 public:
  using Error::Error;
};

class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

class InsufficientOrder : public Error {
 public:
  InsufficientOrder(int have, int need)
      : Error("series known to q-order " + std::to_string(have) + ", need " +
              std::to_string(need)),
        have_(have),
        need_(need) {}
  int have() const noexcept { return have_; }
  int need() const noexcept { return need_; }

 private:
  int have_;
  int need_;
};

class ZeroC1Sq : public Error {
 public:
  ZeroC1Sq() : Error("surface has c1^2 = 0; the Hilbert route needs c1^2 != 0") {}
};

class NegativePowersRemain : public Error {
 public:
  using Error::Error;
};

}  // namespace ellgen
