#pragma once

#include <stdexcept>
#include <string>

namespace deflab {

// Base for all conditions this library reports by throwing. Anything else
// escaping the API (std::bad_alloc aside) is a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vertex index fell outside [0, n).
struct IndexOutOfRange : Error {
    using Error::Error;
};

// An edge (v, v) was supplied; simple graphs only.
struct SelfLoop : Error {
    using Error::Error;
};

// A graph6 string failed to parse (bad char, truncated or trailing bytes).
struct MalformedGraph6 : Error {
    using Error::Error;
};

// A family spec's kind/params are outside the documented ranges,
// or other malformed caller input.
struct BadParams : Error {
    using Error::Error;
};

// Input exceeds a documented hard cap for an exact/exponential routine.
struct TooLarge : Error {
    using Error::Error;
};

// A stated hypothesis of a lemma-driven routine fails; the message names
// the violated hypothesis.
struct PreconditionViolated : Error {
    using Error::Error;
};

// A query would need to scan an infinite family on the side where only
// finitely many members can be checked.
struct OpenEndedUnsupported : Error {
    using Error::Error;
};

// A routine requiring a connected input was handed a disconnected graph.
struct Disconnected : Error {
    using Error::Error;
};

}  // namespace deflab
