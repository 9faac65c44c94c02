#ifndef ADDLAB_ARITH_HPP
#define ADDLAB_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace addlab {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z_d, always kept in [0, d).
using Residue = std::int64_t;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// Raised when two independent computations that must agree do not.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class UnlabeledEdgeError : public Error {
public:
    using Error::Error;
};

class OddWalkOddModulusError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

namespace mod {

inline Residue reduce(std::int64_t x, std::int64_t d) {
    auto r = x % d;
    return r < 0 ? r + d : r;
}

inline Residue reduce(const BigInt& x, std::int64_t d) {
    BigInt r = x % d;
    if (r < 0) r += d;
    return static_cast<Residue>(r);
}

inline Residue add(Residue a, Residue b, std::int64_t d) {
    return static_cast<Residue>((static_cast<__int128>(a) + b) % d);
}

inline Residue sub(Residue a, Residue b, std::int64_t d) {
    return add(a, d - b, d);
}

inline Residue mul(std::int64_t a, std::int64_t b, std::int64_t d) {
    auto r = static_cast<__int128>(a) * b % d;
    return static_cast<Residue>(r < 0 ? r + d : r);
}

inline Residue neg(Residue a, std::int64_t d) { return a == 0 ? 0 : d - a; }

}  // namespace mod
}  // namespace addlab

#endif  // ADDLAB_ARITH_HPP
