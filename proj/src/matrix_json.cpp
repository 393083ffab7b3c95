#include "prym/matrix_json.hpp"

#include "prym/errors.hpp"

#include <fstream>
#include <sstream>

namespace prym {

namespace {

Integer entry_value(const Json& e, std::size_t i, std::size_t j) {
    std::string where = "entry (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    if (e.is_number_integer() || e.is_number_unsigned()) {
        if (e.is_number_unsigned()) return Integer(std::to_string(e.get<std::uint64_t>()));
        return Integer(std::to_string(e.get<std::int64_t>()));
    }
    if (e.is_number_float())
        throw MalformedInput(0, where + " is not an exact integer; use a decimal "
                                "string for values outside 64 bits");
    if (e.is_string()) {
        const std::string& s = e.get_ref<const std::string&>();
        std::size_t start = s.size() > 0 && s[0] == '-' ? 1 : 0;
        bool ok = s.size() > start;
        for (std::size_t p = start; p < s.size(); ++p)
            if (s[p] < '0' || s[p] > '9') ok = false;
        if (!ok) throw MalformedInput(0, where + " is not a decimal integer string");
        return Integer(s);
    }
    throw MalformedInput(0, where + " must be an integer or a decimal string");
}

} // namespace

IntMat matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw MalformedInput(0, "matrix object needs rows, cols, entries");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw MalformedInput(0, "rows and cols must be nonnegative integers");
    std::size_t rows = j["rows"].get<std::size_t>();
    std::size_t cols = j["cols"].get<std::size_t>();
    const Json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw MalformedInput(0, "entries must be an array of " + std::to_string(rows) +
                                    " rows");
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw MalformedInput(0, "row " + std::to_string(i) + " must hold " +
                                        std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry_value(row[c], i, c);
    }
    return m;
}

IntMat parse_matrix(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw MalformedInput(e.byte, "JSON parse failure: " + std::string(e.what()));
    }
    return matrix_from_json(j);
}

IntMat load_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput(0, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

Json matrix_to_json(const IntMat& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(i, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

} // namespace prym
