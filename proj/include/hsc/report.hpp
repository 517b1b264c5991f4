#pragma once

#include <string>
#include <vector>

#include "hsc/linmap.hpp"

namespace hsc {

struct CheckEntry {
    std::string name;
    bool pass;
    std::string detail;  // on failure, a witness (basis index or context)
};

// Checkers return reports rather than raising: diagnosis is the product.
struct CheckReport {
    std::vector<CheckEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail = "") {
        entries.push_back({std::move(name), pass, std::move(detail)});
    }

    // Records lhs == rhs under `name`, with the first differing basis index
    // as the failure witness.
    void expect_equal(const std::string& name, const LinearMap& lhs, const LinearMap& rhs);

    void merge(const std::string& prefix, const CheckReport& other) {
        for (const auto& e : other.entries) entries.push_back({prefix + e.name, e.pass, e.detail});
    }

    std::string str() const;
};

}  // namespace hsc
