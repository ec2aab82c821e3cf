#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealinterp {

// Exit-code classes shared by the library and the CLI.
enum class ErrorClass : int {
    validation = 1,
    mathematical = 2,
    consistency = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), class_(cls) {}

    ErrorClass error_class() const noexcept { return class_; }
    int exit_code() const noexcept { return static_cast<int>(class_); }

private:
    ErrorClass class_;
};

/// Malformed or inadmissible input (bad lower set, ladder, table, schema, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorClass::validation, what) {}
};

/// A well-formed problem hits a mathematical obstruction (singular system,
/// colliding points, division by zero).
class MathError : public Error {
public:
    explicit MathError(const std::string& what) : Error(ErrorClass::mathematical, what) {}
};

class DivisionByZero : public MathError {
public:
    DivisionByZero() : MathError("division by zero") {}
};

class SingularGramError : public MathError {
public:
    SingularGramError(std::size_t rank, std::size_t size)
        : MathError("gram-singular: rank " + std::to_string(rank) + " < " + std::to_string(size)),
          rank_(rank),
          size_(size) {}

    std::size_t rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return size_; }

private:
    std::size_t rank_;
    std::size_t size_;
};

class CollisionError : public MathError {
public:
    CollisionError(std::size_t first, std::size_t second, const std::string& h)
        : MathError("collision: points " + std::to_string(first) + " and " + std::to_string(second) +
                    " coincide at h = " + h),
          first_(first),
          second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// An identity that must hold by construction was violated. Always a bug.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(ErrorClass::consistency, what) {}
};

class NotDivisible : public ConsistencyError {
public:
    explicit NotDivisible(const std::string& what) : ConsistencyError("not divisible: " + what) {}
};

}  // namespace idealinterp
