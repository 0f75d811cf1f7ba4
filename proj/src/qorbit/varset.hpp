#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qorbit/errors.hpp"

namespace qorbit {

/// Ordered set of variable names. The order is fixed for the lifetime of
/// every expression built over it; expressions over different VarSets never mix.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t a = 0; a < names_.size(); ++a)
            for (size_t b = a + 1; b < names_.size(); ++b)
                if (names_[a] == names_[b])
                    throw usage_error("VarSet: duplicate variable '" + names_[a] + "'");
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<size_t> find(std::string_view n) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return i;
        return std::nullopt;
    }

    size_t index(std::string_view n) const {
        if (auto i = find(n)) return *i;
        throw usage_error("unknown variable '" + std::string(n) + "'");
    }

    friend bool operator==(const VarSet&, const VarSet&) = default;
};

} // namespace qorbit
