#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ep::rep {

/// How a matrix on the natural module W induces a matrix on V:
/// `natural`, `wedge<m>` (exterior power), or `tensor(tag,...)`.
class ModuleTag {
public:
    enum class Kind { Natural, Wedge, Tensor };

    static ModuleTag natural();
    static ModuleTag wedge(unsigned m);
    static ModuleTag tensor(std::vector<ModuleTag> parts);

    Kind kind() const { return kind_; }
    unsigned wedge_power() const { return m_; }
    const std::vector<ModuleTag>& parts() const { return parts_; }

    /// Dimension of the induced module for natural dimension k.
    std::size_t induced_dim(std::size_t k) const;

    std::string to_string() const;
    static ModuleTag parse(std::string_view text);

    bool operator==(const ModuleTag& other) const;

private:
    ModuleTag() = default;
    Kind kind_ = Kind::Natural;
    unsigned m_ = 0;
    std::vector<ModuleTag> parts_;
};

} // namespace ep::rep
