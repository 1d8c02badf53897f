#pragma once

#include <stdexcept>
#include <string>

namespace homeo {

/// A parameter tuple violates the invariants of its map family.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A point lies outside the closed unit disc or ball.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A disc whose closure is not inside the open unit disc.
class InvalidDisc : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The disc-swap planner could not find a pad width satisfying every containment.
class InfeasibleParameters : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed sampling request (empty set, bad region).
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace homeo
