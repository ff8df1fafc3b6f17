#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gysin {

/// Ordered list of variable names. The ordering is fixed for the lifetime of
/// a computation; the canonical term order of every polynomial on the table
/// depends on it. Conventional layouts put u-variables first, then
/// w-variables, then the deformation parameter q.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("VarTable: duplicate variable " + names_[i]);
    }

    /// u1..u<nu>, then w1..w<nw>.
    static std::shared_ptr<const VarTable> uw(int nu, int nw, bool with_q = false) {
        std::vector<std::string> names;
        for (int i = 1; i <= nu; ++i) names.push_back("u" + std::to_string(i));
        for (int i = 1; i <= nw; ++i) names.push_back("w" + std::to_string(i));
        if (with_q) names.push_back("q");
        return std::make_shared<const VarTable>(std::move(names));
    }

    /// z1..z<nz>, then v1..v<nv>.
    static std::shared_ptr<const VarTable> zv(int nz, int nv) {
        std::vector<std::string> names;
        for (int i = 1; i <= nz; ++i) names.push_back("z" + std::to_string(i));
        for (int i = 1; i <= nv; ++i) names.push_back("v" + std::to_string(i));
        return std::make_shared<const VarTable>(std::move(names));
    }

    static std::shared_ptr<const VarTable> of(std::vector<std::string> names) {
        return std::make_shared<const VarTable>(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    std::size_t index_of(std::string_view name) const {
        auto i = find(name);
        if (!i) throw std::invalid_argument("VarTable: unknown variable " + std::string(name));
        return *i;
    }

    /// Table indices of the family <prefix>1, <prefix>2, ... in suffix order.
    /// The family ends at the first missing suffix.
    std::vector<std::size_t> family(std::string_view prefix) const {
        std::vector<std::size_t> out;
        for (int k = 1;; ++k) {
            auto i = find(std::string(prefix) + std::to_string(k));
            if (!i) break;
            out.push_back(*i);
        }
        return out;
    }

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace gysin
