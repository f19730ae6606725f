#include "sixcube/problem_io.hpp"

#include <json.hpp>

#include <sstream>

namespace sixcube {

using json = nlohmann::json;

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string& text, const std::string& field) {
    const std::string t = strip(text);
    if (t.empty()) throw ParseError(field, "empty integer");
    try {
        return Integer(t);
    } catch (const std::invalid_argument&) {
        throw ParseError(field, "'" + t + "' is not an integer");
    }
}

Integer json_integer(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) return parse_integer(v.get<std::string>(), field);
    throw ParseError(field, "expected an integer (number or string)");
}

Rational json_rational(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rational(Integer(v.get<long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>(), field);
    throw ParseError(field, "expected a rational (\"p/q\" string or integer)");
}

std::vector<Integer> integer_array(const json& obj, const std::string& field, std::size_t want) {
    if (!obj.contains(field)) throw ParseError(field, "missing");
    const json& arr = obj.at(field);
    if (!arr.is_array()) throw ParseError(field, "expected an array");
    if (arr.size() != want)
        throw ParseError(field, "expected " + std::to_string(want) + " entries, got " +
                                    std::to_string(arr.size()));
    std::vector<Integer> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string name = field + "[" + std::to_string(i) + "]";
        Integer value = json_integer(arr[i], name);
        if (sgn(value) == 0) throw ParseError(name, "must be nonzero");
        out.push_back(std::move(value));
    }
    return out;
}

std::vector<Rational> rational_array(const json& obj, const std::string& field,
                                     std::size_t want) {
    if (!obj.contains(field)) throw ParseError(field, "missing");
    const json& arr = obj.at(field);
    if (!arr.is_array()) throw ParseError(field, "expected an array");
    if (arr.size() != want)
        throw ParseError(field, "expected " + std::to_string(want) + " entries, got " +
                                    std::to_string(arr.size()));
    std::vector<Rational> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(json_rational(arr[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

json rational_to_json(const Rational& r) {
    return r.is_integer() ? json(r.numerator().get_str()) : json(r.to_string());
}

}  // namespace

Rational parse_rational(const std::string& text, const std::string& field) {
    const std::string t = strip(text);
    const auto slash = t.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(t, field));
    const Integer num = parse_integer(t.substr(0, slash), field);
    const Integer den = parse_integer(t.substr(slash + 1), field);
    if (sgn(den) == 0) throw ParseError(field, "zero denominator");
    return Rational(num, den);
}

RationalSolution parse_solution(const std::string& text, const EquationFamily& fam) {
    std::vector<std::string> groups;
    std::string current;
    for (char c : text) {
        if (c == ';') {
            groups.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    groups.push_back(current);
    if (groups.size() != 4)
        throw ParseError("solution", "expected 4 ';'-separated groups x;y;X;Y, got " +
                                         std::to_string(groups.size()));
    auto split = [&](const std::string& group, std::size_t want,
                     const std::string& name) {
        std::vector<Rational> out;
        std::stringstream ss(group);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_rational(item, name));
        if (out.size() != want)
            throw ParseError(name, "expected " + std::to_string(want) + " entries, got " +
                                       std::to_string(out.size()));
        return out;
    };
    RationalSolution sol;
    sol.x = split(groups[0], fam.n(), "solution.x");
    sol.y = split(groups[1], fam.m(), "solution.y");
    sol.X = split(groups[2], fam.n(), "solution.X");
    sol.Y = split(groups[3], fam.m(), "solution.Y");
    return sol;
}

Problem parse_problem(const std::string& json_text) {
    json obj;
    try {
        obj = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError("json", e.what());
    }
    if (!obj.is_object()) throw ParseError("json", "top level must be an object");

    Problem p;
    for (const char* field : {"n", "m", "a", "b", "sign", "B", "C", "D", "h"})
        if (!obj.contains(field)) throw ParseError(field, "missing");

    if (!obj["n"].is_number_integer() || obj["n"].get<long>() < 1)
        throw ParseError("n", "expected a positive integer");
    if (!obj["m"].is_number_integer() || obj["m"].get<long>() < 1)
        throw ParseError("m", "expected a positive integer");
    const auto n = obj["n"].get<std::size_t>();
    const auto m = obj["m"].get<std::size_t>();

    p.family.a = integer_array(obj, "a", n);
    p.family.b = integer_array(obj, "b", m);

    const std::string sign = obj["sign"].is_string() ? obj["sign"].get<std::string>() : "";
    if (sign == "plus")
        p.family.sign = Sign::Plus;
    else if (sign == "minus")
        p.family.sign = Sign::Minus;
    else
        throw ParseError("sign", "expected \"plus\" or \"minus\"");

    p.par.B = rational_array(obj, "B", m);
    p.par.C = rational_array(obj, "C", m);
    p.par.D = rational_array(obj, "D", n);
    p.par.h = json_rational(obj["h"], "h");
    if (p.par.h.is_zero()) throw ParseError("h", "must be nonzero");

    if (obj.contains("generators")) {
        const json& gens = obj["generators"];
        if (!gens.is_array()) throw ParseError("generators", "expected an array");
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::string name = "generators[" + std::to_string(i) + "]";
            const json& g = gens[i];
            if (g.is_string() && g.get<std::string>() == "infinity") {
                p.generators.push_back(CurvePoint::infinity());
            } else if (g.is_array() && g.size() == 2) {
                p.generators.push_back(CurvePoint::affine(json_rational(g[0], name + "[0]"),
                                                          json_rational(g[1], name + "[1]")));
            } else {
                throw ParseError(name, "expected [x, y] or \"infinity\"");
            }
        }
    }

    if (obj.contains("nmax")) {
        if (!obj["nmax"].is_number_integer() || obj["nmax"].get<long>() < 1)
            throw ParseError("nmax", "expected a positive integer");
        p.nmax = obj["nmax"].get<long>();
    }

    p.family.validate();
    return p;
}

std::string serialize_problem(const Problem& p) {
    json obj;
    obj["n"] = p.family.n();
    obj["m"] = p.family.m();
    json a = json::array(), b = json::array();
    for (const auto& e : p.family.a) a.push_back(e.get_str());
    for (const auto& e : p.family.b) b.push_back(e.get_str());
    obj["a"] = std::move(a);
    obj["b"] = std::move(b);
    obj["sign"] = p.family.sign == Sign::Plus ? "plus" : "minus";
    for (const auto& [name, vec] :
         {std::pair{"B", &p.par.B}, {"C", &p.par.C}, {"D", &p.par.D}}) {
        json arr = json::array();
        for (const auto& e : *vec) arr.push_back(rational_to_json(e));
        obj[name] = std::move(arr);
    }
    obj["h"] = rational_to_json(p.par.h);
    if (!p.generators.empty()) {
        json gens = json::array();
        for (const auto& g : p.generators) {
            if (g.is_infinity())
                gens.push_back("infinity");
            else
                gens.push_back(json::array({rational_to_json(g.x()), rational_to_json(g.y())}));
        }
        obj["generators"] = std::move(gens);
    }
    obj["nmax"] = p.nmax;
    return obj.dump(2);
}

}  // namespace sixcube
