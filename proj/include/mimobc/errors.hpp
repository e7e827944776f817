// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_ERRORS_HPP
#define MIMOBC_ERRORS_HPP

#include <stdexcept>

namespace mimobc
{

// Invalid antenna/user counts or mismatched matrix shapes.
class DimensionError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Parameter outside the region where a formula is defined.
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// A documented precondition on an input was not met (e.g. non-orthonormal basis).
class ContractViolation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

class NumericalError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Selected channel directions are numerically linearly dependent.
class RankDeficientError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

// Exhaustive search requested on an instance that is too large.
class SizeGuardError : public std::length_error
{
public:
  using std::length_error::length_error;
};

class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace mimobc

#endif  // MIMOBC_ERRORS_HPP
