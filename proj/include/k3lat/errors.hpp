#ifndef K3LAT_ERRORS_HPP
#define K3LAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace k3lat {

// Violated precondition; the message names the precondition that failed.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Class-group operations require a fundamental discriminant; kept distinct
// from invalid_input so front ends can explain the fix.
class not_fundamental : public invalid_input {
public:
    explicit not_fundamental(const std::string& what) : invalid_input(what) {}
};

// SNF and friends on rank-deficient input.
class singular_input : public invalid_input {
public:
    explicit singular_input(const std::string& what) : invalid_input(what) {}
};

// A bounded search or a bounded decision procedure ran out of room.
// Raised explicitly; never downgraded to a wrong answer.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// An identity that is a proved theorem failed on concrete data.  Signals a
// bug in this library (or a genuinely false claim), never bad user input.
class theorem_violation : public std::logic_error {
public:
    explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace k3lat

#endif
