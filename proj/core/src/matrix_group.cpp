#include "ep/grp/matrix_group.hpp"

#include "ep/errors.hpp"

#include <fstream>
#include <sstream>

namespace ep::grp {

void MatrixGroup::validate() const {
    if (dim == 0)
        throw data_error("MatrixGroup: dimension must be positive");
    for (const auto& g : generators) {
        if (g.rows() != dim || g.cols() != dim)
            throw data_error("MatrixGroup: generator size mismatch");
        if (!g.is_invertible())
            throw data_error("MatrixGroup: non-invertible generator");
    }
}

MatrixGroup parse_group(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw parse_error("group file: missing header");
    std::istringstream hs(header);
    std::string tag;
    std::size_t k = 0, ngens = 0;
    if (!(hs >> tag) || tag != "GF2GROUP" || !(hs >> k >> ngens))
        throw parse_error("group file: expected 'GF2GROUP <k> <ngens> ...'");
    MatrixGroup g;
    g.dim = k;
    std::string kv;
    while (hs >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw parse_error("group file: bad header field '" + kv + "'");
        auto key = kv.substr(0, eq);
        auto value = kv.substr(eq + 1);
        if (key == "order") {
            try {
                g.order = Nat(value);
            } catch (const std::exception&) {
                throw parse_error("group file: bad order '" + value + "'");
            }
        } else if (key == "name") {
            g.name = value;
        } else {
            throw parse_error("group file: unknown header field '" + key + "'");
        }
    }
    for (std::size_t i = 0; i < ngens; ++i)
        g.generators.push_back(gf2::BitMatrix::parse_text(in));
    g.validate();
    return g;
}

MatrixGroup parse_group_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open group file: " + path.string());
    return parse_group(in);
}

std::string write_group(const MatrixGroup& g) {
    std::ostringstream os;
    os << "GF2GROUP " << g.dim << ' ' << g.generators.size();
    if (g.order)
        os << " order=" << *g.order;
    if (!g.name.empty())
        os << " name=" << g.name;
    os << '\n';
    for (const auto& m : g.generators)
        os << m.to_text();
    return os.str();
}

} // namespace ep::grp
