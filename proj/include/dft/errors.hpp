#ifndef DFT_ERRORS_HPP
#define DFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dft {

enum class ErrorTag {
    DEGENERATE_INPUT,
    NOT_A_MODEL,
    INTERNAL_INCONSISTENCY,
    WILD_PRIME,
    SEARCH_TOO_LARGE,
    SINGULAR_POINT,
    UNSUPPORTED_RAMIFICATION,
    NOT_REGULAR,
    BAD_PERMUTATION,
    VALUATION_MISMATCH,
    NOT_APPLICABLE,
    BAD_ROOT,
};

inline const char* tag_name(ErrorTag t) {
    switch (t) {
        case ErrorTag::DEGENERATE_INPUT: return "DEGENERATE_INPUT";
        case ErrorTag::NOT_A_MODEL: return "NOT_A_MODEL";
        case ErrorTag::INTERNAL_INCONSISTENCY: return "INTERNAL_INCONSISTENCY";
        case ErrorTag::WILD_PRIME: return "WILD_PRIME";
        case ErrorTag::SEARCH_TOO_LARGE: return "SEARCH_TOO_LARGE";
        case ErrorTag::SINGULAR_POINT: return "SINGULAR_POINT";
        case ErrorTag::UNSUPPORTED_RAMIFICATION: return "UNSUPPORTED_RAMIFICATION";
        case ErrorTag::NOT_REGULAR: return "NOT_REGULAR";
        case ErrorTag::BAD_PERMUTATION: return "BAD_PERMUTATION";
        case ErrorTag::VALUATION_MISMATCH: return "VALUATION_MISMATCH";
        case ErrorTag::NOT_APPLICABLE: return "NOT_APPLICABLE";
        case ErrorTag::BAD_ROOT: return "BAD_ROOT";
    }
    return "UNKNOWN";
}

/// Domain-level failure carrying a machine-readable tag.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorTag tag, const std::string& what)
        : std::runtime_error(std::string(tag_name(tag)) + ": " + what), tag_(tag) {}

    ErrorTag tag() const { return tag_; }

private:
    ErrorTag tag_;
};

}  // namespace dft

#endif
