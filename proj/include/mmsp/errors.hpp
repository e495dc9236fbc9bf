#pragma once

#include <stdexcept>
#include <string>

namespace mmsp {

// Trial energy above the s->0 binding threshold (c = xi3 < 0).
class NegativeCError : public std::runtime_error {
public:
    explicit NegativeCError(const std::string& msg) : std::runtime_error(msg) {}
};

// Supercritical potential: the square-root radicand 1/4 - delta + gamma - eta - beta
// is negative (quantum fall-to-center).
class SupercriticalError : public std::runtime_error {
public:
    explicit SupercriticalError(const std::string& msg) : std::runtime_error(msg) {}
};

class NegativeDiscriminantError : public SupercriticalError {
public:
    explicit NegativeDiscriminantError(const std::string& msg) : SupercriticalError(msg) {}
};

// No sign change of lambda - lambda_n in the admissible energy window.
class NoBoundStateError : public std::runtime_error {
public:
    explicit NoBoundStateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Finite-difference oracle found no eigenvalue below the continuum edge.
class NoBoundLevelsError : public std::runtime_error {
public:
    explicit NoBoundLevelsError(const std::string& msg) : std::runtime_error(msg) {}
};

class ZeroNormError : public std::runtime_error {
public:
    explicit ZeroNormError(const std::string& msg) : std::runtime_error(msg) {}
};

// Wavefunction requested for a record that is not a valid bound state.
class InvalidStateError : public std::runtime_error {
public:
    explicit InvalidStateError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mmsp
