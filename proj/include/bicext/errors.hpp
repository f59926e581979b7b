#pragma once

#include <stdexcept>
#include <string>

#include "bicext/element.hpp"
#include "bicext/family.hpp"

namespace bicext {

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidFamily : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

class NotOmegaClosed : public InvalidFamily {
public:
  explicit NotOmegaClosed(ClosureWitness witness);
  const ClosureWitness& witness() const noexcept { return witness_; }

private:
  ClosureWitness witness_;
};

class ElementOutsideDomain : public AlgebraError {
public:
  ElementOutsideDomain(const Element& x, const OmegaClosedFamily& fam);
  const Element& element() const noexcept { return element_; }

private:
  Element element_;
};

class InvalidSymbol : public AlgebraError {
public:
  InvalidSymbol(char symbol, std::size_t position);
  char symbol() const noexcept { return symbol_; }
  std::size_t position() const noexcept { return position_; }

private:
  char symbol_;
  std::size_t position_;
};

class InvalidParameters : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

class FamilyMismatch : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

class NotClosedUnderRestriction : public AlgebraError {
public:
  NotClosedUnderRestriction(const Element& generator, const Element& image);
  const Element& witness() const noexcept { return witness_; }
  const Element& image() const noexcept { return image_; }

private:
  Element witness_;
  Element image_;
};

class BoundsTooSmall : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

} // namespace bicext
