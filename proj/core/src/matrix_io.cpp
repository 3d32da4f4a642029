#include "corrwit/matrix_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace corrwit {

namespace {

using nlohmann::json;

std::vector<std::vector<double>> parse_part(const json& j, const std::string& key, int dim,
                                            const std::string& source) {
    if (!j.contains(key)) {
        throw std::invalid_argument(source + ": matrix file missing field \"" + key + "\"");
    }
    const json& rows = j.at(key);
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
        throw std::invalid_argument(source + ": field \"" + key + "\" must be a " +
                                    std::to_string(dim) + "x" + std::to_string(dim) + " array");
    }
    std::vector<std::vector<double>> out;
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw std::invalid_argument(source + ": field \"" + key + "\" row has wrong length");
        }
        std::vector<double> vals;
        for (const json& v : row) {
            if (!v.is_number()) {
                throw std::invalid_argument(source + ": field \"" + key +
                                            "\" contains a non-numeric entry");
            }
            vals.push_back(v.get<double>());
        }
        out.push_back(std::move(vals));
    }
    return out;
}

} // namespace

ComplexMatrix read_matrix(std::istream& in, const std::string& source_name) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(source_name + ": not valid JSON (" + e.what() + ")");
    }
    if (!j.contains("dim") || !j.at("dim").is_number_integer()) {
        throw std::invalid_argument(source_name + ": matrix file missing integer field \"dim\"");
    }
    const int dim = j.at("dim").get<int>();
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument(source_name + ": matrix dim must be 2 or 4, got " +
                                    std::to_string(dim));
    }
    const auto re = parse_part(j, "re", dim, source_name);
    const auto im = parse_part(j, "im", dim, source_name);
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) m(i, k) = cplx(re[i][k], im[i][k]);
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    return read_matrix(in, path);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (int j = 0; j < m.dim(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    json j{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
    out << j.dump(2) << "\n";
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open matrix file for writing: " + path);
    write_matrix(out, m);
}

} // namespace corrwit
