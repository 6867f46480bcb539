#pragma once

#include <stdexcept>
#include <string>

namespace triherm {

// Recoverable problems with the input data (bad field, singular element,
// resource cap, ...).  The CLI maps these to exit code 65.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDiscriminant : DataError {
    ZeroDiscriminant() : DataError("cubic has zero discriminant") {}
};

struct BadCharacteristic : DataError {
    explicit BadCharacteristic(const std::string& what) : DataError(what) {}
};

struct NonUnit : DataError {
    NonUnit() : DataError("element has zero norm, cannot invert") {}
};

struct SplitAlgebra : DataError {
    SplitAlgebra()
        : DataError("operation requires an irreducible cubic (field case)") {}
};

struct IrrationalRoot : DataError {
    IrrationalRoot()
        : DataError("double root of the binary form is not rational over the base") {}
};

struct DescentFailure : DataError {
    DescentFailure()
        : DataError("value expected in a subring does not lie in it") {}
};

struct CapExceeded : DataError {
    explicit CapExceeded(const std::string& what) : DataError(what) {}
};

struct NonMaximalOrder : DataError {
    explicit NonMaximalOrder(const std::string& what) : DataError(what) {}
};

struct MalformedLaurent : DataError {
    explicit MalformedLaurent(const std::string& what) : DataError(what) {}
};

// Broken internal invariant: a quantity that is forced to vanish by the
// mathematics failed to do so.  Always checked, never compiled out.
// The CLI maps these to exit code 70.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require_internal(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

}  // namespace triherm
