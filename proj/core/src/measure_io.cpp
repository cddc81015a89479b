#include "cxorder/measure_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cxorder/error.hpp"

namespace cxorder {

namespace {

using nlohmann::json;

Rational field(const json& atom, const char* key, std::size_t index) {
    const std::string where = "atom " + std::to_string(index) + " field '" + key + "'";
    if (!atom.contains(key)) throw ParseError(0, where + " is missing");
    const json& v = atom.at(key);
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Rational::parse(std::to_string(v.get<std::uint64_t>()))
                                      : Rational(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(e.position(), where + ": malformed fraction '" + v.get<std::string>() + "'");
        }
    }
    throw ParseError(0, where + " must be a fraction string or an integer");
}

} // namespace

DiscreteMeasure measure_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
    }
    if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array())
        throw ParseError(0, "expected an object with an \"atoms\" array");
    std::vector<Atom> atoms;
    std::size_t i = 0;
    for (const json& a : doc["atoms"]) {
        if (!a.is_object()) throw ParseError(0, "atom " + std::to_string(i) + " is not an object");
        atoms.push_back({field(a, "x", i), field(a, "w", i)});
        ++i;
    }
    return make_measure(std::move(atoms));
}

std::string measure_to_json(const DiscreteMeasure& m) {
    json atoms = json::array();
    for (const Atom& a : m.atoms()) atoms.push_back({{"x", a.x.str()}, {"w", a.w.str()}});
    return json{{"atoms", atoms}}.dump(2) + "\n";
}

DiscreteMeasure read_measure(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return measure_from_json(buf.str());
}

void write_measure(const std::filesystem::path& path, const DiscreteMeasure& m) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
    out << measure_to_json(m);
}

} // namespace cxorder
