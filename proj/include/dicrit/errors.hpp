// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_ERRORS_HPP
#define DICRIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dicrit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- input / construction errors ----------------------------------------

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct NonIntegerExponentError : ParseError {
    explicit NonIntegerExponentError(std::size_t pos)
        : ParseError("exponent must be a nonnegative integer", pos) {}
};

struct TDegreeTooHighError : Error {
    TDegreeTooHighError() : Error("input must be affine in T (degree <= 1)") {}
};

struct NotSpecialError : Error {
    using Error::Error;
};

struct UnitNumeratorError : Error {
    UnitNumeratorError() : Error("numerator is a unit at the origin: the pencil has no base point") {}
};

// ---- transform errors -----------------------------------------------------

struct ZeroRootError : Error {
    ZeroRootError() : Error("toric-Newton translation with root 0: edge support is not reduced") {}
};

struct NotAbsorbableError : Error {
    using Error::Error;
};

// ---- resolution errors ----------------------------------------------------

struct DepthExceededError : Error {
    explicit DepthExceededError(int depth)
        : Error("resolution exceeded max depth " + std::to_string(depth)) {}
};

struct NodeBudgetExceededError : Error {
    explicit NodeBudgetExceededError(int nodes)
        : Error("resolution exceeded node budget " + std::to_string(nodes)) {}
};

struct IrrationalBranchError : Error {
    using Error::Error;
};

struct ResidualPresentError : Error {
    ResidualPresentError() : Error("tree has unresolved non-rational branches; identity cannot be certified") {}
};

// ---- algebra errors -------------------------------------------------------

struct InseparableError : Error {
    InseparableError() : Error("derivative vanishes identically: critical values are undetermined") {}
};

struct InseparablePresentError : Error {
    InseparablePresentError() : Error("an inseparable dicritical is present; flags are undetermined") {}
};

// ---- Hensel errors --------------------------------------------------------

struct NotCoprimeError : Error {
    NotCoprimeError() : Error("quasi-homogeneous factors are not coprime") {}
};

struct WeightMismatchError : Error {
    using Error::Error;
};

struct PrecisionTooLowError : Error {
    using Error::Error;
};

// ---- infinity / family errors --------------------------------------------

struct NonSplitTopFormError : Error {
    explicit NonSplitTopFormError(const std::string& factor)
        : Error("top form has a non-split factor over the ground field: " + factor) {}
};

struct CharacteristicObstructionError : Error {
    CharacteristicObstructionError()
        : Error("family construction divides by small integers; positive characteristic is not supported") {}
};

}  // namespace dicrit

#endif
