#pragma once

#include <stdexcept>
#include <string>

namespace contests {

struct NoRootInUnit : std::runtime_error {
  explicit NoRootInUnit(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedOrder : std::runtime_error {
  explicit UnsupportedOrder(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidKernel : std::runtime_error {
  explicit InvalidKernel(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRange : std::runtime_error {
  explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NoFixedPoint : std::runtime_error {
  explicit NoFixedPoint(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace contests
