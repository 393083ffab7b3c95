#include "prym/report.hpp"

namespace prym {

Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

std::string half_coord(const Integer& num) {
    if (mpz_even_p(num.get_mpz_t())) {
        Integer half = num / 2;
        return half.get_str();
    }
    return num.get_str() + "/2";
}

Json half_vec_json(const HalfVec& v) {
    Json a = Json::array();
    for (const Integer& c : v.num) a.push_back(half_coord(c));
    return a;
}

Json f2_mat_json(const F2Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json bits_json(const std::vector<std::uint8_t>& bits) {
    Json a = Json::array();
    for (std::uint8_t b : bits) a.push_back(int(b));
    return a;
}

Json error_report(const Error& e) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["error"] = {{"name", e.name()}, {"detail", e.what()}};
    return j;
}

std::string dump_report(Json payload) {
    payload["schema_version"] = kSchemaVersion;
    return payload.dump(2) + "\n";
}

} // namespace prym
