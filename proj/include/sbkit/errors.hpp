// errors.hpp — failure taxonomy shared by every module.  Each condition gets
// its own type so callers can catch precisely; code() is the stable name used
// in command-line diagnostics.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sbkit/rational.hpp"

namespace sbkit {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Input violated a stated construction invariant; `invariant` names it
// (e.g. "symmetry", "unit mass").
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : Error("ValidationError", invariant + ": " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// Malformed serialized input; `path` points at the offending element
// ("left.rows[2][0]").
class ParseError : public Error {
 public:
  ParseError(std::string path, std::string reason)
      : Error("ParseError", path + ": " + reason),
        path_(std::move(path)),
        reason_(std::move(reason)) {}

  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

// A checked internal consistency condition failed; reaching one of these is a
// bug in this library, never a property of the input.
class InternalContradiction : public Error {
 public:
  explicit InternalContradiction(const std::string& detail)
      : Error("InternalContradiction", detail) {}
};

class InternalNoConvergence : public Error {
 public:
  explicit InternalNoConvergence(const std::string& detail)
      : Error("InternalNoConvergence", detail) {}
};

// ---- operator module ----

class NotPositive : public Error {
 public:
  explicit NotPositive(const std::string& detail)
      : Error("NotPositive", detail) {}
};

class NotAProjection : public Error {
 public:
  explicit NotAProjection(const std::string& detail)
      : Error("NotAProjection", detail) {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t left, std::size_t right)
      : Error("DimensionMismatch", std::to_string(left) + " vs " + std::to_string(right)),
        left_(left),
        right_(right) {}

  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

class PartitionDoesNotCoverSpectrum : public Error {
 public:
  explicit PartitionDoesNotCoverSpectrum(const std::string& detail)
      : Error("PartitionDoesNotCoverSpectrum", detail) {}
};

// Some spectral cell holds subspaces of different dimension on the two sides,
// so no cell-by-cell matching exists.
class CellRankMismatch : public Error {
 public:
  CellRankMismatch(std::size_t cell, std::size_t rank_left, std::size_t rank_right)
      : Error("CellRankMismatch",
              "cell " + std::to_string(cell) + ": rank " + std::to_string(rank_left) +
                  " vs " + std::to_string(rank_right)),
        cell_(cell),
        rank_left_(rank_left),
        rank_right_(rank_right) {}

  std::size_t cell() const { return cell_; }
  std::size_t rank_left() const { return rank_left_; }
  std::size_t rank_right() const { return rank_right_; }

 private:
  std::size_t cell_;
  std::size_t rank_left_;
  std::size_t rank_right_;
};

// ---- measure-algebra module ----

class BadTotalMass : public Error {
 public:
  explicit BadTotalMass(const std::string& detail) : Error("BadTotalMass", detail) {}
};

class AtomMismatch : public Error {
 public:
  explicit AtomMismatch(const std::string& detail) : Error("AtomMismatch", detail) {}
};

// ---- automorphism module ----

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& detail) : Error("ShapeMismatch", detail) {}
};

// Requested tower coverage is unattainable; carries the best relative
// coverage any base achieves.
class TowerDeficit : public Error {
 public:
  explicit TowerDeficit(Rat best_coverage)
      : Error("TowerDeficit", "best coverage " + to_fraction_string(best_coverage)),
        best_coverage_(std::move(best_coverage)) {}

  const Rat& best_coverage() const { return best_coverage_; }

 private:
  Rat best_coverage_;
};

class BadSchedule : public Error {
 public:
  explicit BadSchedule(const std::string& detail) : Error("BadSchedule", detail) {}
};

// ---- catalog module ----

class NotAPreorder : public Error {
 public:
  explicit NotAPreorder(const std::string& detail) : Error("NotAPreorder", detail) {}
};

class NotAPartialOrder : public Error {
 public:
  explicit NotAPartialOrder(const std::string& detail)
      : Error("NotAPartialOrder", detail) {}
};

class CatalogMismatch : public Error {
 public:
  explicit CatalogMismatch(const std::string& detail)
      : Error("CatalogMismatch", detail) {}
};

}  // namespace sbkit
