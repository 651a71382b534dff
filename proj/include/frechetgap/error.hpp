#pragma once

#include <stdexcept>
#include <string>

namespace frechetgap {

/// Malformed user input: ragged curves, bad ranges, unknown values.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke a documented precondition between library components,
/// e.g. asked a contracted graph about a range outside its view.
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal invariant failed. Indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Range/view agreement checks in contracted deciders are O(1) but sit on the
// hot path; they follow assert() unless forced either way.
#ifndef FRECHETGAP_CONTRACT_CHECKS
#ifdef NDEBUG
#define FRECHETGAP_CONTRACT_CHECKS 0
#else
#define FRECHETGAP_CONTRACT_CHECKS 1
#endif
#endif

inline constexpr bool kContractChecks = FRECHETGAP_CONTRACT_CHECKS != 0;

}  // namespace frechetgap
