#include "triconic/io.hpp"

#include "triconic/error.hpp"

#include <fstream>
#include <sstream>

namespace triconic {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorKind::Parse, "arrangement file: " + what); }

Rational rational_entry(const json &j, const std::string &where) {
    if (!j.is_string())
        bad(where + " must be a rational string");
    return parse_rational(j.get<std::string>());
}

} // namespace

FieldElem field_elem_from_json(const json &j, const FieldContext &ctx) {
    if (j.is_string())
        return FieldElem(parse_rational(j.get<std::string>()));
    if (!j.is_object() || j.size() != 2 || !j.contains("r") || !j.contains("s"))
        bad("entry must be a rational string or {\"r\": ..., \"s\": ...}");
    return FieldElem(ctx, rational_entry(j["r"], "r"), rational_entry(j["s"], "s"));
}

json field_elem_to_json(const FieldElem &x) {
    if (x.is_rational())
        return format_rational(x.r());
    return {{"r", format_rational(x.r())}, {"s", format_rational(x.s())}};
}

Arrangement arrangement_from_json(const json &doc) {
    if (!doc.is_object())
        bad("top level must be an object");
    if (!doc.contains("field") || !doc["field"].is_object() || !doc["field"].contains("D") ||
        !doc["field"]["D"].is_number_integer())
        bad("missing integer field.D");
    long d = doc["field"]["D"].get<long>();
    FieldContext ctx(d); // Validation error when D is not square-free
    if (!doc.contains("conics") || !doc["conics"].is_array())
        bad("missing conics array");
    const json &rows = doc["conics"];
    if (rows.size() != 3)
        throw Error(ErrorKind::Validation, "expected exactly 3 conics, got " + std::to_string(rows.size()));
    std::array<Conic::Coefficients, 3> coeffs;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 6)
            bad("conic " + std::to_string(i + 1) + " must have 6 coefficients");
        for (std::size_t k = 0; k < 6; ++k)
            coeffs[i][k] = field_elem_from_json(rows[i][k], ctx);
    }
    return make_arrangement(coeffs, ctx);
}

Arrangement read_arrangement_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot read " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    }
    return arrangement_from_json(doc);
}

json arrangement_to_json(const Arrangement &arr) {
    json conics = json::array();
    for (const auto &q : arr.conics()) {
        json row = json::array();
        for (const auto &c : q.coeffs())
            row.push_back(field_elem_to_json(c));
        conics.push_back(row);
    }
    return {{"field", {{"D", arr.context().discriminant()}}}, {"conics", conics}};
}

FieldElem parse_field_elem(std::string_view text, const FieldContext &ctx) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        return FieldElem(parse_rational(text));
    return FieldElem(ctx, parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1)));
}

ParamSet parse_params(std::string_view text, const FieldContext &ctx) {
    ParamSet out;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorKind::Parse, "parameter '" + item + "' is not name=value");
        std::string name = item.substr(0, eq);
        if (out.count(name))
            throw Error(ErrorKind::Parse, "parameter '" + name + "' given twice");
        out.emplace(name, parse_field_elem(std::string_view(item).substr(eq + 1), ctx));
    }
    return out;
}

} // namespace triconic
