#include "ep/engine/registry.hpp"

#include "ep/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace ep::engine {

using nlohmann::json;

std::string CaseRecord::route_string(Route r) {
    switch (r) {
    case Route::Corollary:
        return "corollary";
    case Route::FValue:
        return "fvalue";
    case Route::Refined:
        return "refined";
    case Route::OutOfScopeS4:
        return "out-of-scope-s4";
    }
    return {};
}

CaseRecord::Route CaseRecord::parse_route(const std::string& s) {
    if (s == "corollary")
        return Route::Corollary;
    if (s == "fvalue")
        return Route::FValue;
    if (s == "refined")
        return Route::Refined;
    if (s == "out-of-scope-s4")
        return Route::OutOfScopeS4;
    throw parse_error("registry: unknown route '" + s + "'");
}

namespace {

Nat parse_nat(const json& j, const char* what) {
    if (!j.is_string())
        throw parse_error(std::string("registry: ") + what + " must be a decimal string");
    try {
        return Nat(j.get<std::string>());
    } catch (const std::exception&) {
        throw parse_error(std::string("registry: bad decimal in ") + what);
    }
}

weights::SpinExponentVector::Kind parse_kind(const std::string& s) {
    if (s == "B")
        return weights::SpinExponentVector::Kind::B;
    if (s == "Deven")
        return weights::SpinExponentVector::Kind::DEven;
    if (s == "Dodd")
        return weights::SpinExponentVector::Kind::DOdd;
    throw parse_error("registry: unknown spin kind '" + s + "'");
}

std::string kind_string(weights::SpinExponentVector::Kind k) {
    switch (k) {
    case weights::SpinExponentVector::Kind::B:
        return "B";
    case weights::SpinExponentVector::Kind::DEven:
        return "Deven";
    case weights::SpinExponentVector::Kind::DOdd:
        return "Dodd";
    }
    return {};
}

} // namespace

std::vector<CaseRecord> parse_registry(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw parse_error(std::string("registry: ") + e.what());
    }
    std::vector<CaseRecord> out;
    try {
        for (const auto& jr : j.at("cases")) {
            CaseRecord r;
            r.table_row = jr.at("table_row").get<std::string>();
            r.socle = jr.at("socle").get<std::string>();
            r.module = jr.at("module").get<std::string>();
            r.d = jr.at("d").get<std::size_t>();
            r.route = CaseRecord::parse_route(jr.at("route").get<std::string>());
            if (jr.contains("alpha"))
                r.alpha = parse_nat(jr.at("alpha"), "alpha");
            if (jr.contains("parts"))
                for (const auto& jp : jr.at("parts"))
                    r.parts.emplace_back(jp.at("cap_dim").get<std::size_t>(),
                                         parse_nat(jp.at("count"), "parts.count"));
            if (jr.contains("expected")) {
                const auto& je = jr.at("expected");
                if (je.contains("sum"))
                    r.expected_sum = parse_nat(je.at("sum"), "expected.sum");
                if (je.contains("f"))
                    r.expected_f = parse_nat(je.at("f"), "expected.f");
                if (je.contains("f_extension"))
                    r.expected_f_extension = parse_nat(je.at("f_extension"), "expected.f_extension");
            }
            if (jr.contains("dataset"))
                r.dataset = jr.at("dataset").get<std::string>();
            if (jr.contains("wedge_k"))
                r.wedge_k = jr.at("wedge_k").get<unsigned>();
            if (jr.contains("spin_witnesses"))
                for (const auto& jw : jr.at("spin_witnesses")) {
                    SpinWitness w;
                    w.vector.kind = parse_kind(jw.at("kind").get<std::string>());
                    w.vector.r = jw.at("r").get<unsigned>();
                    for (const auto& jt : jw.at("t"))
                        w.vector.t.push_back(jt.get<unsigned>());
                    w.expected_dim = jw.at("dim").get<unsigned>();
                    r.spin_witnesses.push_back(std::move(w));
                }
            if (jr.contains("notes"))
                r.notes = jr.at("notes").get<std::string>();
            out.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("registry: ") + e.what());
    }
    return out;
}

std::vector<CaseRecord> parse_registry_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open registry file: " + path.string());
    return parse_registry(in);
}

std::string write_registry(const std::vector<CaseRecord>& records) {
    json j;
    j["cases"] = json::array();
    for (const auto& r : records) {
        json jr;
        jr["table_row"] = r.table_row;
        jr["socle"] = r.socle;
        jr["module"] = r.module;
        jr["d"] = r.d;
        jr["route"] = CaseRecord::route_string(r.route);
        if (r.alpha)
            jr["alpha"] = r.alpha->str();
        if (!r.parts.empty()) {
            jr["parts"] = json::array();
            for (const auto& [cap, count] : r.parts)
                jr["parts"].push_back({{"cap_dim", cap}, {"count", count.str()}});
        }
        json je = json::object();
        if (r.expected_sum)
            je["sum"] = r.expected_sum->str();
        if (r.expected_f)
            je["f"] = r.expected_f->str();
        if (r.expected_f_extension)
            je["f_extension"] = r.expected_f_extension->str();
        if (!je.empty())
            jr["expected"] = std::move(je);
        if (r.dataset)
            jr["dataset"] = *r.dataset;
        if (r.wedge_k)
            jr["wedge_k"] = *r.wedge_k;
        if (!r.spin_witnesses.empty()) {
            jr["spin_witnesses"] = json::array();
            for (const auto& w : r.spin_witnesses) {
                json jw;
                jw["kind"] = kind_string(w.vector.kind);
                jw["r"] = w.vector.r;
                jw["t"] = w.vector.t;
                jw["dim"] = w.expected_dim;
                jr["spin_witnesses"].push_back(std::move(jw));
            }
        }
        if (!r.notes.empty())
            jr["notes"] = r.notes;
        j["cases"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

} // namespace ep::engine
