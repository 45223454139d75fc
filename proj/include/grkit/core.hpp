#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grkit {

// Index of a group element in its multiplication table. 0 is always the identity.
using Elt = int;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search ran out of its configured budget. Deliberately not a
// claim about the answer: a coset enumeration that blows its row budget says
// "budget exceeded", never "infinite".
class budget_error : public error {
public:
    using error::error;
};

// Malformed input text. position() is a byte offset into the source string.
class parse_error : public error {
public:
    parse_error(std::size_t pos, const std::string& what)
        : error(what + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace grkit
