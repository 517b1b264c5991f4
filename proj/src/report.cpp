#include "hsc/report.hpp"

#include <sstream>

namespace hsc {

void CheckReport::expect_equal(const std::string& name, const LinearMap& lhs, const LinearMap& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        add(name, false,
            "shape mismatch: " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
        return;
    }
    if (lhs.field() != rhs.field()) {
        add(name, false, "field mismatch");
        return;
    }
    if (lhs == rhs) {
        add(name, true);
        return;
    }
    for (int j = 0; j < lhs.cols(); ++j) {
        if (lhs.column(j) != rhs.column(j)) {
            add(name, false, "composites differ at basis index " + std::to_string(j));
            return;
        }
    }
    add(name, false, "entries differ");  // unreachable
}

std::string CheckReport::str() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.pass ? "PASS" : "FAIL") << "  " << e.name;
        if (!e.detail.empty()) os << "  (" << e.detail << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace hsc
