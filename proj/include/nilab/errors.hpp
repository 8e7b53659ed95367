#pragma once

#include <stdexcept>
#include <string>

namespace nilab {

// Every failure raised by the library derives from nilab::error so callers can
// catch the whole family while tests still tell the kinds apart.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class shape_error : public error {
public:
  using error::error;
};

// Caller broke a documented precondition.
class contract_error : public error {
public:
  using error::error;
};

// Samples disagree with a polynomial of the declared degree.
class degree_mismatch_error : public error {
public:
  using error::error;
};

class unsupported_error : public error {
public:
  using error::error;
};

class partition_error : public error {
public:
  using error::error;
};

class graduation_error : public error {
public:
  using error::error;
};

// A relation that holds as a theorem failed: this is always a bug.
class identity_error : public error {
public:
  using error::error;
};

class internal_error : public error {
public:
  using error::error;
};

// The centre of the centralizer is not spanned by the gradients at e.
class hypothesis_error : public error {
public:
  using error::error;
};

} // namespace nilab
