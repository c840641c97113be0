#include "ep/engine/dataset_io.hpp"

#include "ep/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace ep::engine {

using nlohmann::json;

namespace {

Nat parse_nat(const json& j, const char* what) {
    if (!j.is_string())
        throw parse_error(std::string("dataset: ") + what + " must be a decimal string");
    try {
        return Nat(j.get<std::string>());
    } catch (const std::exception&) {
        throw parse_error(std::string("dataset: bad decimal in ") + what);
    }
}

} // namespace

MaximalDataset parse_dataset(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw parse_error(std::string("dataset: ") + e.what());
    }
    MaximalDataset ds;
    try {
        ds.group = j.at("group").get<std::string>();
        ds.order = parse_nat(j.at("order"), "order");
        ds.complete = j.at("complete").get<bool>();
        if (j.contains("missing_bound"))
            ds.missing_bound = parse_nat(j.at("missing_bound"), "missing_bound");
        for (const auto& jc : j.at("classes")) {
            MaximalClassRecord cls;
            cls.label = jc.at("label").get<std::string>();
            cls.class_size = parse_nat(jc.at("class_size"), "class_size");
            cls.module_tag = rep::ModuleTag::parse(jc.at("module_tag").get<std::string>());
            for (const auto& jg : jc.at("gens"))
                cls.generators.push_back(gf2::BitMatrix::parse_text(jg.get<std::string>()));
            ds.classes.push_back(std::move(cls));
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("dataset: ") + e.what());
    }
    return ds;
}

MaximalDataset parse_dataset_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open dataset file: " + path.string());
    return parse_dataset(in);
}

std::string write_dataset(const MaximalDataset& dataset) {
    json j;
    j["group"] = dataset.group;
    j["order"] = dataset.order.str();
    j["complete"] = dataset.complete;
    if (dataset.missing_bound)
        j["missing_bound"] = dataset.missing_bound->str();
    j["classes"] = json::array();
    for (const auto& cls : dataset.classes) {
        json jc;
        jc["label"] = cls.label;
        jc["class_size"] = cls.class_size.str();
        jc["module_tag"] = cls.module_tag.to_string();
        jc["gens"] = json::array();
        for (const auto& g : cls.generators)
            jc["gens"].push_back(g.to_text());
        j["classes"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

} // namespace ep::engine
