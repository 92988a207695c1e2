#pragma once

#include <stdexcept>
#include <string>

namespace twosat {

struct RingMismatch : std::invalid_argument {
    explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct BadConstantTerm : std::invalid_argument {
    explicit BadConstantTerm(const std::string& what) : std::invalid_argument(what) {}
};

struct NonIntegerCount : std::logic_error {
    explicit NonIntegerCount(const std::string& what) : std::logic_error(what) {}
};

struct OrderExceeded : std::out_of_range {
    explicit OrderExceeded(const std::string& what) : std::out_of_range(what) {}
};

struct PoleAtMinusOne : std::domain_error {
    PoleAtMinusOne() : std::domain_error("evaluation at w = -1 hits the (1+w) pole") {}
};

struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct InfeasibleExact : std::invalid_argument {
    explicit InfeasibleExact(const std::string& what) : std::invalid_argument(what) {}
};

struct PrecisionCeiling : std::runtime_error {
    explicit PrecisionCeiling(const std::string& what) : std::runtime_error(what) {}
};

struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twosat
