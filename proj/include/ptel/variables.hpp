#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptel {

/// Ordered variable names for a session: names()[0] is the integration
/// parameter t, names()[i] is the parameter x_i.
class Variables {
public:
    /// Throws InputError on duplicate or invalid names or too many variables.
    explicit Variables(std::vector<std::string> names);
    /// t, x1, ..., xn.
    static Variables standard(int n);

    int count() const { return int(names_.size()); }
    /// Number of x variables.
    int n() const { return int(names_.size()) - 1; }
    const std::string& name(int i) const { return names_.at(std::size_t(i)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(std::string_view name) const;

private:
    std::vector<std::string> names_;
};

}  // namespace ptel
