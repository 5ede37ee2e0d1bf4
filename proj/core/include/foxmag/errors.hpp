#pragma once

#include <stdexcept>
#include <string>

namespace foxmag {

/// Input text does not match one of the word grammars.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The endomorphism does not fix the abelianized coordinates required by the
/// chosen specialization, so it has no Magnus matrix under that spec.
struct PhiIncompatibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The automorphism does not send every generator to a conjugate of a
/// generator (Artin condition 1).
struct NotConjugatingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The braid closure has more than one component, so there is no Alexander
/// polynomial of a knot to compute.
struct ClosureNotKnotError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact polynomial division left a remainder. This signals a broken
/// internal invariant, not bad user input.
struct ExactDivisionError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace foxmag
