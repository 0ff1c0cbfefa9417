#ifndef FITCQ_COMMON_HPP
#define FITCQ_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fitcq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaMismatchError : Error { using Error::Error; };
struct ArityMismatchError : Error { using Error::Error; };
struct WellDefinednessError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct FrontierNotExistsError : Error { using Error::Error; };
struct NotCAcyclicError : Error { using Error::Error; };
struct CapTooSmallError : Error { using Error::Error; };
struct NonBinarySchemaError : Error { using Error::Error; };
struct NotATreeError : Error { using Error::Error; };
struct InvalidParameterError : Error { using Error::Error; };
struct DocumentError : Error { using Error::Error; };

/// Node budget shared by every search launched from one public entry point.
/// Exceeding it throws instead of hanging on the (NP-hard and worse) inputs
/// this library deals in.
class Budget {
public:
    explicit Budget(std::uint64_t limit) : limit_(limit) {}

    void tick(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExceededError("search budget of " + std::to_string(limit_) +
                                      " nodes exceeded");
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

struct Options {
    std::uint64_t budget = 10'000'000;
    /// Bound (number of values) used when a constructed duality is
    /// re-validated against brute-force enumeration.
    int duality_check_bound = 3;
};

inline const Options& default_options() {
    static const Options opts{};
    return opts;
}

} // namespace fitcq

#endif
