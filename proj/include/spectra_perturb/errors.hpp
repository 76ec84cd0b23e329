#ifndef SPECTRA_PERTURB_ERRORS_HPP
#define SPECTRA_PERTURB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spectra_perturb {

/// Operand shapes are incompatible (non-square, mismatched sizes, ...).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A NaN or infinity was offered where only finite values are admitted.
class NonFiniteError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inputs do not satisfy the hypotheses an evaluation requires (e.g. a
/// non-normal unperturbed matrix).
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed matrix or report input (bad JSON, wrong entry count, ...).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The shifted QR iteration exhausted its sweep budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A quantity that is non-negative in exact arithmetic came out clearly
/// negative, i.e. well beyond round-off.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spectra_perturb

#endif  // SPECTRA_PERTURB_ERRORS_HPP
