#pragma once

#include <stdexcept>
#include <string>

namespace pulsetrain {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Delta = Omega = 0: the dressed basis does not exist.
class DegenerateDressing : public Error {
public:
    using Error::Error;
};

/// Omega = 0: N+- is undefined (bare states).
class ZeroRabi : public Error {
public:
    using Error::Error;
};

class ZeroDipole : public Error {
public:
    using Error::Error;
};

/// Resonant denominators of the lossless model.
enum class Pole {
    rayleigh,     // omega_p - omega
    lower_rabi,   // omega_p - omega + Omega'
    upper_rabi,   // omega_p - omega - Omega'
};

const char* to_string(Pole pole) noexcept;

class ResonancePole : public Error {
public:
    ResonancePole(Pole pole, double denominator, double guard);

    Pole pole() const noexcept { return pole_; }
    double denominator() const noexcept { return denominator_; }
    double guard() const noexcept { return guard_; }

private:
    Pole pole_;
    double denominator_;
    double guard_;
};

class CausalityViolation : public Error {
public:
    using Error::Error;
};

class ShallowModulation : public Error {
public:
    using Error::Error;
};

class UnderSampled : public Error {
public:
    using Error::Error;
};

class NonCommensurate : public Error {
public:
    using Error::Error;
};

class StepTooCoarse : public Error {
public:
    using Error::Error;
};

class GridTooCoarse : public Error {
public:
    using Error::Error;
};

}  // namespace pulsetrain
