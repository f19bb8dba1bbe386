#include "hera/io.hpp"

#include <fstream>
#include <sstream>

namespace hera {

void write_matrix(std::ostream& os, const FieldMatrix& m) {
    os << "# field " << m.spec()->tag() << "\n";
    os << m.rows() << "," << m.cols() << "\n";
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m.enc_at(i, j);
        }
        os << "\n";
    }
}

void write_matrix_file(const std::string& path, const FieldMatrix& m) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open for writing: " + path);
    write_matrix(f, m);
}

namespace {

std::vector<uint64_t> split_numbers(const std::string& line, const std::string& context) {
    std::vector<uint64_t> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            unsigned long long v = std::stoull(item, &pos);
            while (pos < item.size() && std::isspace((unsigned char)item[pos])) ++pos;
            if (pos != item.size()) throw std::invalid_argument("trailing");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad number '" + item + "' in " + context);
        }
    }
    return out;
}

bool next_data_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

FieldMatrix read_matrix(std::istream& is, const Field& field) {
    std::string line;
    if (!next_data_line(is, line)) throw ParseError("empty matrix file");
    auto dims = split_numbers(line, "matrix header");
    if (dims.size() != 2 || dims[0] == 0 || dims[1] == 0)
        throw ParseError("matrix header must be 'rows,cols'");
    size_t rows = dims[0], cols = dims[1];
    FieldMatrix m(field, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!next_data_line(is, line)) throw ParseError("matrix file truncated");
        auto vals = split_numbers(line, "matrix row");
        if (vals.size() != cols) throw ParseError("matrix row has wrong length");
        for (size_t j = 0; j < cols; ++j) {
            if (vals[j] >= field->order()) throw ParseError("matrix entry out of field range");
            m.set_enc(i, j, uint32_t(vals[j]));
        }
    }
    return m;
}

FieldMatrix read_matrix_file(const std::string& path, const Field& field) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open: " + path);
    return read_matrix(f, field);
}

std::vector<size_t> parse_index_list(const std::string& csv) {
    auto nums = split_numbers(csv, "point index list");
    return {nums.begin(), nums.end()};
}

SchemeConfig parse_scheme_config(std::istream& is) {
    SchemeConfig cfg;
    std::string line;
    while (next_data_line(is, line)) {
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config line without '=': " + line);
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        if (key == "points") {
            cfg.points = parse_index_list(val);
            continue;
        }
        auto nums = split_numbers(val, "config value for " + key);
        if (nums.size() != 1) throw ParseError("config value for " + key + " must be one number");
        uint64_t v = nums[0];
        if (key == "q") cfg.q = uint32_t(v);
        else if (key == "L") cfg.L = size_t(v);
        else if (key == "T") cfg.T = size_t(v);
        else if (key == "a") cfg.a = size_t(v);
        else if (key == "b") cfg.b = size_t(v);
        else if (key == "c") cfg.c = size_t(v);
        else if (key == "seed") cfg.seed = v;
        else throw ParseError("unknown config key: " + key);
    }
    return cfg;
}

SchemeConfig read_scheme_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open: " + path);
    return parse_scheme_config(f);
}

} // namespace hera
