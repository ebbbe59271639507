#include "tifs/ray_io.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tifs/graph_io.hpp"

namespace tifs {

std::vector<Vector> parse_rays(std::string_view text) {
    std::vector<Vector> out;
    std::size_t pos = 0;
    int line_no = 0;
    Eigen::Index dim = -1;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#') {
            std::istringstream is(line);
            std::vector<double> comps;
            double x;
            while (is >> x) comps.push_back(x);
            if (!is.eof())
                throw parse_error("ray line " + std::to_string(line_no) + " has a non-numeric component", pos);
            if (!comps.empty()) {
                if (dim == -1) dim = static_cast<Eigen::Index>(comps.size());
                if (static_cast<Eigen::Index>(comps.size()) != dim)
                    throw parse_error("ray line " + std::to_string(line_no) + " has " +
                                          std::to_string(comps.size()) + " components, expected " +
                                          std::to_string(dim),
                                      pos);
                Vector v(dim);
                for (Eigen::Index i = 0; i < dim; ++i) v[i] = comps[static_cast<std::size_t>(i)];
                out.push_back(std::move(v));
            }
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    if (out.empty()) throw parse_error("no rays in input", 0);
    return out;
}

std::string format_rays(const std::vector<Vector>& rays) {
    std::ostringstream os;
    os << std::setprecision(17);
    for (const Vector& r : rays) {
        for (Eigen::Index i = 0; i < r.size(); ++i) {
            if (i) os << ' ';
            os << r[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string realization_to_json(const Realization& r) {
    nlohmann::json j;
    j["d"] = r.d;
    j["epsilon"] = r.epsilon;
    j["tolerance"] = r.tolerance;
    auto vectors = nlohmann::json::array();
    for (const Vector& v : r.vectors) {
        auto row = nlohmann::json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v[i]);
        vectors.push_back(std::move(row));
    }
    j["vectors"] = std::move(vectors);
    return j.dump();
}

Realization realization_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid realization json: ") + e.what(), e.byte);
    }
    Realization r;
    if (!j.contains("d") || !j.contains("vectors"))
        throw parse_error("realization json requires fields 'd' and 'vectors'", 0);
    r.d = j["d"].get<int>();
    r.epsilon = j.value("epsilon", 0.0);
    r.tolerance = j.value("tolerance", 1e-12);
    for (const auto& row : j["vectors"]) {
        Vector v(static_cast<Eigen::Index>(row.size()));
        Eigen::Index i = 0;
        for (const auto& x : row) v[i++] = x.get<double>();
        if (v.size() != r.d) throw parse_error("realization vector does not match dimension d", 0);
        r.vectors.push_back(std::move(v));
    }
    return r;
}

}  // namespace tifs
