#include "zerorect/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zerorect/error.hpp"

namespace zr {

using nlohmann::json;

std::string family_to_json(const SetFamily& F) {
    json j;
    j["n"] = F.n;
    json sets = json::array();
    for (const auto& s : F.sets) {
        json one = json::array();
        for (int e : s.elements()) one.push_back(e + 1); // 1-based in files
        sets.push_back(std::move(one));
    }
    j["sets"] = std::move(sets);
    return j.dump();
}

SetFamily family_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Err::BadInput, std::string("family JSON parse: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("sets"))
        throw Error(Err::BadInput, "family JSON needs \"n\" and \"sets\"");
    SetFamily F(j["n"].get<int>());
    if (F.n < 0) throw Error(Err::BadInput, "negative universe");
    for (const auto& arr : j["sets"]) {
        BitSet s(F.n);
        for (const auto& e : arr) {
            int v = e.get<int>();
            if (v < 1 || v > F.n)
                throw Error(Err::BadInput, "element " + std::to_string(v) + " outside 1.." +
                                               std::to_string(F.n));
            s.set(v - 1);
        }
        F.sets.push_back(s);
    }
    return F;
}

SetFamily load_family(const std::string& path) { return family_from_json(read_file(path)); }

void save_family(const SetFamily& F, const std::string& path) {
    write_file_atomic(path, family_to_json(F));
}

template <class T, class Fmt>
static std::string matrix_csv_impl(const Matrix<T>& M, Fmt fmt) {
    std::string out;
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            if (j) out += ',';
            out += fmt(M(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_to_csv(const MatrixD& M) {
    return matrix_csv_impl(M, [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    });
}

std::string matrix_to_csv(const MatrixQ& M) {
    return matrix_csv_impl(M, [](const Rat& v) { return format_rat(v); });
}

static std::vector<std::vector<std::string>> parse_csv_cells(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            // trim spaces
            size_t a = cell.find_first_not_of(" \t");
            size_t b = cell.find_last_not_of(" \t");
            cells.push_back(a == std::string::npos ? "" : cell.substr(a, b - a + 1));
        }
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw Error(Err::BadInput, "empty matrix CSV");
    size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw Error(Err::BadInput, "ragged matrix CSV");
    return rows;
}

MatrixD matrix_d_from_csv(const std::string& text) {
    auto cells = parse_csv_cells(text);
    MatrixD M(int(cells.size()), int(cells[0].size()));
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = 0; j < cells[i].size(); ++j) {
            try {
                size_t pos = 0;
                // fractions are understood in float mode too
                auto slash = cells[i][j].find('/');
                if (slash != std::string::npos) {
                    M(int(i), int(j)) = to_double(parse_rat(cells[i][j]));
                } else {
                    M(int(i), int(j)) = std::stod(cells[i][j], &pos);
                }
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                throw Error(Err::BadInput, "bad matrix entry: " + cells[i][j]);
            }
        }
    return M;
}

MatrixQ matrix_q_from_csv(const std::string& text) {
    auto cells = parse_csv_cells(text);
    MatrixQ M(int(cells.size()), int(cells[0].size()));
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = 0; j < cells[i].size(); ++j) M(int(i), int(j)) = parse_rat(cells[i][j]);
    return M;
}

MatrixD load_matrix_d(const std::string& path) { return matrix_d_from_csv(read_file(path)); }
MatrixQ load_matrix_q(const std::string& path) { return matrix_q_from_csv(read_file(path)); }

void save_matrix(const MatrixD& M, const std::string& path) {
    write_file_atomic(path, matrix_to_csv(M));
}
void save_matrix(const MatrixQ& M, const std::string& path) {
    write_file_atomic(path, matrix_to_csv(M));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Err::BadInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Err::BadInput, "cannot write " + tmp);
        out << content;
        out.flush();
        if (!out) throw Error(Err::BadInput, "write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error(Err::BadInput, "rename failed for " + path);
}

} // namespace zr
