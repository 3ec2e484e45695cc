#include "sl2p/ingest.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sl2p {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        throw ingest_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": parse error: " +
                           e.what());
    }
}

[[noreturn]] void fail(const std::string& source, const std::string& what) {
    throw ingest_error(source + ": " + what);
}

Integer as_integer(const json& j, const std::string& source, const std::string& field) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    fail(source, "field '" + field + "' must be an integer");
}

Rational as_rational(const json& j, const std::string& source, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    fail(source, "field '" + field + "' must be a rational written as \"num/den\"");
}

long double as_real(const json& j, const std::string& source, const std::string& field) {
    if (j.is_number()) return j.get<long double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.find('/') != std::string::npos) {
            Rational q = as_rational(j, source, field);
            return static_cast<long double>(q.get_d());
        }
        try {
            std::size_t pos = 0;
            long double v = std::stold(s, &pos);
            if (pos == s.size()) return v;
        } catch (const std::exception&) {
        }
    }
    fail(source, "field '" + field + "' must be a decimal or rational string");
}

long prime_key(const std::string& key, const std::string& source, const std::string& field) {
    try {
        std::size_t pos = 0;
        long p = std::stol(key, &pos);
        if (pos == key.size() && is_prime(p)) return p;
    } catch (const std::exception&) {
    }
    fail(source, "field '" + field + "' has a key that is not a prime: '" + key + "'");
}

std::map<long, int> read_signs(const json& doc, const std::string& source) {
    std::map<long, int> out;
    if (!doc.contains("atkin_lehner")) return out;
    const json& al = doc.at("atkin_lehner");
    if (!al.is_object()) fail(source, "field 'atkin_lehner' must be an object");
    for (auto& [key, val] : al.items()) {
        if (!val.is_number_integer()) fail(source, "atkin_lehner values must be +1 or -1");
        out[prime_key(key, source, "atkin_lehner")] = val.get<int>();
    }
    return out;
}

void reject_unknown(const json& doc, std::initializer_list<const char*> known, const std::string& source) {
    for (auto& [key, val] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) fail(source, "unknown field '" + key + "'");
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ingest_error(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IngestResult ingest_newform_text(const std::string& text, const std::string& source) {
    json doc = parse_json(text, source);
    if (!doc.is_object()) fail(source, "top level must be an object");
    reject_unknown(doc, {"level", "weight", "atkin_lehner", "ap", "c_fund", "D"}, source);
    if (!doc.contains("level")) fail(source, "missing field 'level'");
    if (!doc.contains("weight")) fail(source, "missing field 'weight'");
    IngestResult r;
    NewformData& nf = r.newform;
    nf.level = as_integer(doc.at("level"), source, "level");
    Integer w = as_integer(doc.at("weight"), source, "weight");
    if (w < 2 || w > 1000) fail(source, "field 'weight' out of range");
    nf.weight = static_cast<int>(w.get_si());
    nf.atkinLehner = read_signs(doc, source);
    if (doc.contains("ap")) {
        const json& ap = doc.at("ap");
        if (!ap.is_object()) fail(source, "field 'ap' must be an object");
        for (auto& [key, val] : ap.items()) nf.heckeEigen[prime_key(key, source, "ap")] = as_rational(val, source, "ap");
    }
    try {
        nf.validate();
    } catch (const domain_error& e) {
        fail(source, std::string("validation: ") + e.what());
    }
    if (doc.contains("c_fund")) {
        HalfIntegralData h;
        h.parent = nf;
        const json& cf = doc.at("c_fund");
        if (!cf.is_object()) fail(source, "field 'c_fund' must be an object");
        for (auto& [key, val] : cf.items()) {
            Integer d;
            try {
                d = Integer(key);
            } catch (const std::invalid_argument&) {
                fail(source, "c_fund key '" + key + "' is not an integer");
            }
            h.cFund[d] = as_rational(val, source, "c_fund");
        }
        h.D = doc.contains("D") ? as_integer(doc.at("D"), source, "D") : choose_discriminant(nf);
        try {
            h.validate();
        } catch (const domain_error& e) {
            fail(source, std::string("validation: ") + e.what());
        }
        r.halfIntegral = std::move(h);
    }
    return r;
}

IngestResult ingest_newform(const std::string& path) { return ingest_newform_text(read_file(path), path); }

CentralValueInput ingest_central_value_text(const std::string& text, const std::string& source) {
    json doc = parse_json(text, source);
    if (!doc.is_object()) fail(source, "top level must be an object");
    reject_unknown(doc, {"Nf", "Ng", "k", "ell", "peterson_f", "peterson_h", "peterson_g", "pairing_sq", "atkin_lehner"},
                   source);
    for (const char* f : {"Nf", "Ng", "k", "ell", "peterson_f", "peterson_h", "peterson_g", "pairing_sq"})
        if (!doc.contains(f)) fail(source, std::string("missing field '") + f + "'");
    CentralValueInput in;
    in.Nf = as_integer(doc.at("Nf"), source, "Nf");
    in.Ng = as_integer(doc.at("Ng"), source, "Ng");
    in.k = static_cast<int>(as_integer(doc.at("k"), source, "k").get_si());
    in.ell = static_cast<int>(as_integer(doc.at("ell"), source, "ell").get_si());
    in.petersonF = as_real(doc.at("peterson_f"), source, "peterson_f");
    in.petersonH = as_real(doc.at("peterson_h"), source, "peterson_h");
    in.petersonG = as_real(doc.at("peterson_g"), source, "peterson_g");
    in.pairingSq = as_real(doc.at("pairing_sq"), source, "pairing_sq");
    in.atkinLehner = read_signs(doc, source);
    return in;
}

CentralValueInput ingest_central_value(const std::string& path) {
    return ingest_central_value_text(read_file(path), path);
}

}  // namespace sl2p
