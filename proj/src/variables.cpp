#include "ptel/variables.hpp"

#include <cctype>

#include "ptel/errors.hpp"
#include "ptel/mpoly.hpp"

namespace ptel {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return s != "Dt";
}

}  // namespace

Variables::Variables(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("at least the variable t is required");
    if (int(names_.size()) > kMaxVars)
        throw InputError("at most " + std::to_string(kMaxVars - 1) + " parameters x_i are supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_identifier(names_[i])) throw InputError("invalid variable name '" + names_[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j]) throw InputError("duplicate variable name '" + names_[i] + "'");
    }
}

Variables Variables::standard(int n) {
    std::vector<std::string> names{"t"};
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return Variables(std::move(names));
}

std::optional<int> Variables::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return int(i);
    return std::nullopt;
}

}  // namespace ptel
