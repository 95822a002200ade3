#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace homleib {

// Structured mathematical failures.  The CLI maps these to exit code 1;
// anything file- or syntax-related (ParseError below) maps to exit code 2.
enum class ErrCode {
  DimensionMismatch,      // vector/matrix sizes disagree
  DegenerateHBasis,       // supplied H basis dependent or wrong length
  MissingH,               // operation needs an H basis and none was given
  NotAbelian,             // [H,H] != 0
  NotPhiStable,           // phi(H) != H
  NotSplit,               // weight spaces do not fill the algebra
  HNotMaximal,            // zero-weight space strictly contains span(H)
  JNotLeftCentral,        // [L,J] != 0: input is not Hom-Leibniz
  NotAutomorphism,        // twist map is singular or not multiplicative
  NotRegular,             // twist does not commute with phi
  RootNotInLambda,        // queried functional is not a root
  ClassMismatch,          // roots lie on different sides of the J split
  HypothesisMissing,      // a required standing hypothesis fails
  NotAClass,              // root set is not a connection class
  NotAnIdeal,             // subspace fails the ideal test
  NotSeparable,           // no separating element exists
  InternalInconsistency,  // a theorem-level invariant failed (library bug or bad input)
};

std::string err_code_name(ErrCode c);

class MathError : public std::runtime_error {
 public:
  MathError(ErrCode code, const std::string& what_arg)
      : std::runtime_error(err_code_name(code) + ": " + what_arg), code_(code) {}

  ErrCode code() const { return code_; }

 private:
  ErrCode code_;
};

// I/O and syntax failures while reading algebra/matrix files.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Malformed, IndexOutOfRange, NonRational };

  ParseError(Kind kind, const std::string& where, const std::string& what_arg)
      : std::runtime_error(where.empty() ? what_arg : where + ": " + what_arg),
        kind_(kind),
        where_(where) {}

  Kind kind() const { return kind_; }
  const std::string& where() const { return where_; }

 private:
  Kind kind_;
  std::string where_;
};

}  // namespace homleib
