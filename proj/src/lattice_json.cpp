#include "ruled/lattice_json.hpp"

#include "ruled/errors.hpp"

#include <limits>

namespace ruled {

Json int_to_json(const Int& v) {
    if (mpz_fits_slong_p(v.get_mpz_t()) && sizeof(long) >= 8)
        return Json(static_cast<int64_t>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return Int(std::to_string(j.get<uint64_t>()), 10);
        return Int(std::to_string(j.get<int64_t>()), 10);
    }
    if (j.is_string())
        return parse_int(j.get<std::string>());
    throw ParseError("expected an exact integer, got " + j.dump());
}

Json rat_to_json(const Rat& v) {
    if (is_integer(v))
        return int_to_json(v.get_num());
    return Json(v.get_str());
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rat(int_from_json(j));
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    throw ParseError("expected an exact rational, got " + j.dump());
}

Json to_json(const ManifoldModel& m) {
    Json j;
    j["kind"] = m.is_rational() ? "rational" : "ruled";
    j["ell"] = m.ell();
    j["genus"] = m.genus();
    return j;
}

namespace {

unsigned small_unsigned(const Json& j, const char* key, unsigned fallback, bool required) {
    if (!j.contains(key)) {
        if (required)
            throw ParseError(std::string("missing key '") + key + "'");
        return fallback;
    }
    Int v = int_from_json(j.at(key));
    if (v < 0 || v > 1000)
        throw ValidationError(std::string("'") + key + "' out of range: " + v.get_str());
    return static_cast<unsigned>(v.get_ui());
}

} // namespace

ManifoldModel model_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("model must be an object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("model needs a string 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    unsigned ell = small_unsigned(j, "ell", 0, true);
    unsigned genus = small_unsigned(j, "genus", 0, false);
    if (kind == "rational") {
        if (genus != 0)
            throw ValidationError("rational model has genus 0");
        return ManifoldModel::rational(ell);
    }
    if (kind == "ruled")
        return ManifoldModel::ruled(ell, genus);
    throw ValidationError("unknown model kind '" + kind + "'");
}

Json to_json(const HomologyClass& c) {
    Json j;
    j["model"] = to_json(c.model());
    Json arr = Json::array();
    for (const auto& x : c.coeffs())
        arr.push_back(int_to_json(x));
    j["coeffs"] = arr;
    return j;
}

HomologyClass class_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("model") || !j.contains("coeffs"))
        throw ParseError("class needs 'model' and 'coeffs'");
    ManifoldModel m = model_from_json(j.at("model"));
    const Json& arr = j.at("coeffs");
    if (!arr.is_array())
        throw ParseError("'coeffs' must be an array");
    std::vector<Int> c;
    for (const auto& x : arr)
        c.push_back(int_from_json(x));
    return HomologyClass(m, std::move(c));
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k)
            row.push_back(int_to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix must be a non-empty array of rows");
    size_t n = j.size();
    size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
    IntMatrix m(n, cols);
    for (size_t i = 0; i < n; ++i) {
        if (!j.at(i).is_array() || j.at(i).size() != cols)
            throw ParseError("matrix rows must be arrays of equal length");
        for (size_t k = 0; k < cols; ++k)
            m(i, k) = int_from_json(j.at(i).at(k));
    }
    return m;
}

} // namespace ruled
