#include "ep/rep/module_tag.hpp"

#include "ep/errors.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ep::rep {

namespace {

std::size_t binomial(std::size_t n, std::size_t m) {
    if (m > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < m; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

ModuleTag ModuleTag::natural() {
    return ModuleTag{};
}

ModuleTag ModuleTag::wedge(unsigned m) {
    if (m < 2)
        throw std::invalid_argument("ModuleTag::wedge: power must be >= 2");
    ModuleTag t;
    t.kind_ = Kind::Wedge;
    t.m_ = m;
    return t;
}

ModuleTag ModuleTag::tensor(std::vector<ModuleTag> parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("ModuleTag::tensor: need >= 2 parts");
    ModuleTag t;
    t.kind_ = Kind::Tensor;
    t.parts_ = std::move(parts);
    return t;
}

std::size_t ModuleTag::induced_dim(std::size_t k) const {
    switch (kind_) {
    case Kind::Natural:
        return k;
    case Kind::Wedge: {
        if (m_ > k)
            throw std::invalid_argument("ModuleTag: wedge power exceeds dimension");
        return binomial(k, m_);
    }
    case Kind::Tensor: {
        std::size_t d = 1;
        for (const auto& p : parts_)
            d *= p.induced_dim(k);
        return d;
    }
    }
    return 0;
}

std::string ModuleTag::to_string() const {
    switch (kind_) {
    case Kind::Natural:
        return "natural";
    case Kind::Wedge:
        return "wedge" + std::to_string(m_);
    case Kind::Tensor: {
        std::ostringstream os;
        os << "tensor(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                os << ',';
            os << parts_[i].to_string();
        }
        os << ')';
        return os.str();
    }
    }
    return {};
}

namespace {

ModuleTag parse_impl(std::string_view& s);

std::string_view take_token(std::string_view& s) {
    std::size_t i = 0;
    while (i < s.size() && s[i] != ',' && s[i] != '(' && s[i] != ')')
        ++i;
    auto tok = s.substr(0, i);
    s.remove_prefix(i);
    return tok;
}

ModuleTag parse_impl(std::string_view& s) {
    auto tok = take_token(s);
    if (tok == "natural")
        return ModuleTag::natural();
    if (tok.starts_with("wedge")) {
        unsigned m = 0;
        auto digits = tok.substr(5);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw parse_error("ModuleTag: bad wedge power in '" + std::string(tok) + "'");
        return ModuleTag::wedge(m);
    }
    if (tok == "tensor") {
        if (s.empty() || s.front() != '(')
            throw parse_error("ModuleTag: expected '(' after tensor");
        s.remove_prefix(1);
        std::vector<ModuleTag> parts;
        while (true) {
            parts.push_back(parse_impl(s));
            if (s.empty())
                throw parse_error("ModuleTag: unterminated tensor(...)");
            char c = s.front();
            s.remove_prefix(1);
            if (c == ')')
                break;
            if (c != ',')
                throw parse_error("ModuleTag: expected ',' or ')' in tensor(...)");
        }
        return ModuleTag::tensor(std::move(parts));
    }
    throw parse_error("ModuleTag: unknown tag '" + std::string(tok) + "'");
}

} // namespace

ModuleTag ModuleTag::parse(std::string_view text) {
    std::string_view s = text;
    ModuleTag t = parse_impl(s);
    if (!s.empty())
        throw parse_error("ModuleTag: trailing characters in '" + std::string(text) + "'");
    return t;
}

bool ModuleTag::operator==(const ModuleTag& other) const {
    if (kind_ != other.kind_ || m_ != other.m_)
        return false;
    return parts_ == other.parts_;
}

} // namespace ep::rep
