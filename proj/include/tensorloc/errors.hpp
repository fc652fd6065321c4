#pragma once

#include <stdexcept>
#include <string>

namespace tensorloc {

struct TensorlocError : std::runtime_error {
  explicit TensorlocError(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedTable : TensorlocError {
  explicit MalformedTable(const std::string& msg) : TensorlocError(msg) {}
};

struct NotComposable : TensorlocError {
  explicit NotComposable(const std::string& msg) : TensorlocError(msg) {}
};

struct NonCommutingSquare : TensorlocError {
  explicit NonCommutingSquare(const std::string& msg) : TensorlocError(msg) {}
};

struct TypeMismatch : TensorlocError {
  explicit TypeMismatch(const std::string& msg) : TensorlocError(msg) {}
};

struct MissingInverse : TensorlocError {
  explicit MissingInverse(const std::string& msg) : TensorlocError(msg) {}
};

struct NotLeq : TensorlocError {
  explicit NotLeq(const std::string& msg) : TensorlocError(msg) {}
};

struct IllTypedStrength : TensorlocError {
  explicit IllTypedStrength(const std::string& msg) : TensorlocError(msg) {}
};

struct InvalidClosure : TensorlocError {
  explicit InvalidClosure(const std::string& msg) : TensorlocError(msg) {}
};

struct NonConfluentAt : TensorlocError {
  explicit NonConfluentAt(const std::string& msg) : TensorlocError(msg) {}
};

struct SizeLimit : TensorlocError {
  explicit SizeLimit(const std::string& msg) : TensorlocError(msg) {}
};

}  // namespace tensorloc
